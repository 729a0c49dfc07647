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

// Step I: distribute the selected content among the dialogue participants
// and decide who gets to voice an opinion about what.

#include <optional>
#include <string>
#include <vector>

#include "scenewright/config.hpp"
#include "scenewright/knowledge.hpp"

namespace scenewright {

enum class OpinionMode { None, Explicit, Implicit };

std::string to_string(OpinionMode m);

struct AssignedItem {
  std::string fact_id;
  std::string informer;  // always != elicitor
  std::string elicitor;
  std::optional<std::string> opinion_holder;
  OpinionMode opinion_mode = OpinionMode::None;
  // Set by the association transform for implicit opinions: the fact whose
  // inform act carries the opinion instead of an explicit evaluation.
  std::optional<std::string> evidence_fact;

  bool operator==(const AssignedItem&) const = default;
};

// Partition of the content selection: every selected fact id appears in
// exactly one item.
struct Assignment {
  std::vector<AssignedItem> items;

  bool operator==(const Assignment&) const = default;
};

// For each fact: informer = argmax of informer_weight * (1 + topic interest),
// elicitor = argmax of elicitor_weight * (1 + topic interest) over the rest.
// Ties break toward the ascending persona id. Errors with < 2 personas.
Assignment distribute(const ContentSelection& selection, const FactBase& fb,
                      const std::vector<Persona>& personas,
                      const GenerationConfig& cfg);

// Facts with |valence| >= cfg.opinion_threshold get an opinion voiced by the
// elicitor (the participant who did not raise the content). The opinion is
// implicit when association is enabled, the informer's indirectness is at or
// above cfg.indirectness_threshold, and usable evidence exists; explicit
// otherwise.
Assignment assign_opinions(Assignment assignment, const FactBase& fb,
                           const std::vector<Persona>& personas,
                           const GenerationConfig& cfg);

}  // namespace scenewright
