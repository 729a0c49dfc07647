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

// Surface realization, strictly after planning. Each act maps to a template
// keyed on (type, polarity, context flag); the flag fires for acts that react
// to, or directly follow, an inserted confirmation subdialogue, which is what
// lets the same abstract act realize as a short agreement or a full
// restatement depending on the surrounding structure.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scenewright/knowledge.hpp"
#include "scenewright/scene.hpp"

namespace scenewright {

// Template file: flat JSON object, keys "type.polarity" with an optional
// ".follows_subdialogue" suffix, values with {speaker} {entity} {attribute}
// {value} {unit} {property} placeholders.
class TemplateSet {
 public:
  static TemplateSet parse(std::string_view text);

  static std::string key_for(ActType type, Polarity polarity,
                             bool follows_subdialogue);

  // Exact entry, or nullptr.
  const std::string* find(ActType type, Polarity polarity,
                          bool follows_subdialogue) const;
  // Falls back to the default entry when no follows_subdialogue form exists.
  const std::string* lookup(ActType type, Polarity polarity,
                            bool follows_subdialogue) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

  bool operator==(const TemplateSet&) const = default;

 private:
  std::map<std::string, std::string> entries_;
};

struct ScriptEntry {
  ActId act_id;
  std::string speaker;  // persona display name
  std::string surface;

  bool operator==(const ScriptEntry&) const = default;
};

struct RealizedScript {
  std::vector<ScriptEntry> entries;  // in linearization order
  ScenePlan source_plan;

  bool operator==(const RealizedScript&) const = default;
};

// Renders every act in linear order. Requires a violation-free plan and a
// template for each reachable key; every placeholder must resolve.
RealizedScript realize(const ScenePlan& plan,
                       const std::vector<Persona>& personas,
                       const FactBase& fb, const TemplateSet& templates);

// One "{speaker}: {surface}" line per entry, byte-deterministic.
std::string render_transcript(const RealizedScript& script);

}  // namespace scenewright
