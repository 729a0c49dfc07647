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

// Step III and the association/style strategies: plan transforms that add
// emphasis subdialogues, replace explicit opinions with associated evidence,
// and mark topic shifts with metadiscourse. All three are idempotent on
// their own output under the same config.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scenewright/config.hpp"
#include "scenewright/distributor.hpp"
#include "scenewright/knowledge.hpp"
#include "scenewright/scene.hpp"

namespace scenewright {

// Lowest-id fact of the subject's entity (other than the subject itself)
// matched by an implication rule whose implied valence has the same sign as
// the subject's valence. Shared by assign_opinions and apply_association.
std::optional<std::string> find_evidence_fact(const FactBase& fb,
                                              const Fact& subject);

// After every inform act whose fact is emphasized at/above the threshold,
// inserts an echo_question by the inform's addressee plus a confirm by the
// informer, re-stating the same proposition. One subdialogue per inform, no
// nesting; informs already carrying an echo are left alone.
std::pair<ScenePlan, std::vector<InsertionRecord>> emphasize(
    const ScenePlan& plan, const FactBase& fb, const GenerationConfig& cfg);

// Rewrites implicit-opinion items: attaches the evidence fact whose inform
// act will carry the opinion, or downgrades the item to explicit when no
// rule matches.
Assignment apply_association(Assignment assignment, const FactBase& fb,
                             const std::vector<Persona>& personas);

// Inserts one stage-marking metadiscourse act at each topic boundary in the
// linearized plan, spoken by the highest-dominance participant, while some
// participant's dominance reaches the threshold. The cap counts all
// metadiscourse acts in the plan, so re-running is a no-op.
std::pair<ScenePlan, std::vector<InsertionRecord>> apply_style_markers(
    const ScenePlan& plan, const FactBase& fb,
    const std::vector<Persona>& personas, const GenerationConfig& cfg);

}  // namespace scenewright
