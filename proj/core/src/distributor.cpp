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

#include "scenewright/distributor.hpp"

#include <cmath>
#include <cstddef>

#include "scenewright/errors.hpp"
#include "scenewright/strategies.hpp"

namespace scenewright {

std::string to_string(OpinionMode m) {
  switch (m) {
    case OpinionMode::None: return "none";
    case OpinionMode::Explicit: return "explicit";
    case OpinionMode::Implicit: return "implicit";
  }
  return "none";
}

namespace {

// Argmax over the roster, skipping `exclude`; ties go to the smaller id.
const Persona* pick_best(const std::vector<Persona>& personas,
                         const std::string& topic, bool informer,
                         const Persona* exclude) {
  const Persona* best = nullptr;
  double best_score = -1.0;
  for (const auto& p : personas) {
    if (exclude != nullptr && p.id == exclude->id) continue;
    const double weight = informer ? p.informer_weight : p.elicitor_weight;
    const double score = weight * (1.0 + p.interest_in(topic));
    if (best == nullptr || score > best_score ||
        (score == best_score && p.id < best->id)) {
      best = &p;
      best_score = score;
    }
  }
  return best;
}

}  // namespace

Assignment distribute(const ContentSelection& selection, const FactBase& fb,
                      const std::vector<Persona>& personas,
                      const GenerationConfig&) {
  const std::string stage = "distributor.distribute";
  if (personas.size() < 2) {
    throw input_error(stage, "too-few-personas", "",
                      "distribution needs at least 2 personas, got " +
                          std::to_string(personas.size()));
  }

  Assignment assignment;
  assignment.items.reserve(selection.fact_ids.size());
  for (const auto& fact_id : selection.fact_ids) {
    const Fact* fact = fb.find_fact(fact_id);
    if (fact == nullptr) {
      throw input_error(stage, "dangling-reference", fact_id,
                        "selected fact is not in the fact base");
    }
    AssignedItem item;
    item.fact_id = fact_id;
    const Persona* informer = pick_best(personas, fact->topic, true, nullptr);
    const Persona* elicitor = pick_best(personas, fact->topic, false, informer);
    item.informer = informer->id;
    item.elicitor = elicitor->id;
    assignment.items.push_back(std::move(item));
  }
  return assignment;
}

Assignment assign_opinions(Assignment assignment, const FactBase& fb,
                           const std::vector<Persona>& personas,
                           const GenerationConfig& cfg) {
  const std::string stage = "distributor.assign_opinions";
  for (auto& item : assignment.items) {
    const Fact* fact = fb.find_fact(item.fact_id);
    if (fact == nullptr) {
      throw input_error(stage, "dangling-reference", item.fact_id,
                        "assigned fact is not in the fact base");
    }
    if (std::abs(fact->valence) < cfg.opinion_threshold) {
      item.opinion_holder.reset();
      item.opinion_mode = OpinionMode::None;
      item.evidence_fact.reset();
      continue;
    }
    // The participant who did not raise the content voices the opinion.
    item.opinion_holder = item.elicitor;
    const Persona* informer = find_persona(personas, item.informer);
    if (informer == nullptr) {
      throw input_error(stage, "dangling-reference", item.informer,
                        "informer is not in the persona roster");
    }
    const bool indirect = cfg.enable_association &&
                          informer->indirectness >= cfg.indirectness_threshold &&
                          find_evidence_fact(fb, *fact).has_value();
    item.opinion_mode = indirect ? OpinionMode::Implicit : OpinionMode::Explicit;
    if (!indirect) item.evidence_fact.reset();
  }
  return assignment;
}

}  // namespace scenewright
