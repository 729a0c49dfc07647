// Copyright 2026 The Scenewright Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace scenewright {

// Knobs for one generation run. Defaults reproduce the showroom fixtures.
struct GenerationConfig {
  // Entity the scene is about. Empty picks the fact base's sole entity;
  // with several entities an explicit target is required.
  std::string target_entity;

  // Topics in presentation order; topics not listed follow, name-ascending.
  std::vector<std::string> topic_priority;

  double emphasis_threshold = 0.6;      // facts at/above get a subdialogue
  double opinion_threshold = 0.5;       // |valence| at/above earns an opinion
  double indirectness_threshold = 0.5;  // informer trait gate for implicit opinions
  double dominance_threshold = 0.5;     // trait gate for stage-marking acts
  int max_style_markers = 8;            // total metadiscourse acts per scene

  bool enable_emphasis = true;
  bool enable_association = true;
  bool enable_style_markers = true;
  bool include_greeting = false;
  bool include_closing = false;

  bool operator==(const GenerationConfig&) const = default;
};

// Throws an input error when a threshold is out of range, max_style_markers
// is negative, or topic_priority repeats an entry.
void validate_config(const GenerationConfig& cfg);

}  // namespace scenewright
