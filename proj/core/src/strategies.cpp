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

#include "scenewright/strategies.hpp"

#include <algorithm>

#include "scenewright/errors.hpp"
#include "scenewright/sequencer.hpp"

namespace scenewright {

namespace {

bool same_sign(double a, double b) {
  return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0) || (a == 0.0 && b == 0.0);
}

bool has_echo_reacting_to(const ScenePlan& plan, const ActId& inform_id) {
  return std::any_of(plan.acts.begin(), plan.acts.end(), [&](const auto& entry) {
    return entry.second.type == ActType::EchoQuestion &&
           entry.second.reacts_to.count(inform_id) != 0;
  });
}

}  // namespace

std::optional<std::string> find_evidence_fact(const FactBase& fb,
                                              const Fact& subject) {
  std::vector<const Fact*> candidates;
  for (const auto& f : fb.facts) {
    if (f.entity == subject.entity && f.id != subject.id) candidates.push_back(&f);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Fact* a, const Fact* b) { return a->id < b->id; });
  for (const Fact* candidate : candidates) {
    for (const auto& rule : fb.implications) {
      if (rule.matches(*candidate) &&
          same_sign(rule.implies.valence, subject.valence)) {
        return candidate->id;
      }
    }
  }
  return std::nullopt;
}

std::pair<ScenePlan, std::vector<InsertionRecord>> emphasize(
    const ScenePlan& plan, const FactBase& fb, const GenerationConfig& cfg) {
  if (!cfg.enable_emphasis) return {plan, {}};

  ScenePlan result = plan;
  std::vector<InsertionRecord> records;
  ActIdAllocator ids = ActIdAllocator::resume_from(plan);

  for (const ActId& act_id : linearize(plan)) {
    const DialogueAct& inform = plan.acts.at(act_id);
    if (inform.type != ActType::Inform) continue;
    const Fact* fact = fb.find_fact(inform.content.proposition);
    if (fact == nullptr || fact->emphasis < cfg.emphasis_threshold) continue;
    if (has_echo_reacting_to(result, act_id)) continue;

    DialogueAct echo;
    echo.id = ids.next_inserted();
    echo.type = ActType::EchoQuestion;
    echo.speaker = *inform.addressees.begin();
    echo.addressees = {inform.speaker};
    echo.content = {inform.content.proposition, Polarity::ReQuery};
    echo.emotion = emotion_for_valence(fact->valence);
    // The splice adds the anchor inform to echo.reacts_to.

    DialogueAct confirm;
    confirm.id = ids.next_inserted();
    confirm.type = ActType::Confirm;
    confirm.speaker = inform.speaker;
    confirm.addressees = {echo.speaker};
    confirm.content = {inform.content.proposition, Polarity::Agree};
    confirm.reacts_to = {echo.id};
    confirm.emotion = emotion_for_valence(fact->valence);

    records.push_back({act_id, {echo.id, confirm.id}, InsertionReason::Emphasis});
    result = insert_subsequence(std::move(result), act_id,
                                {std::move(echo), std::move(confirm)});
  }
  return {std::move(result), std::move(records)};
}

Assignment apply_association(Assignment assignment, const FactBase& fb,
                             const std::vector<Persona>&) {
  const std::string stage = "strategies.apply_association";
  for (auto& item : assignment.items) {
    if (item.opinion_mode != OpinionMode::Implicit) continue;
    const Fact* fact = fb.find_fact(item.fact_id);
    if (fact == nullptr) {
      throw input_error(stage, "dangling-reference", item.fact_id,
                        "assigned fact is not in the fact base");
    }
    if (auto evidence = find_evidence_fact(fb, *fact)) {
      item.evidence_fact = std::move(evidence);
    } else {
      item.opinion_mode = OpinionMode::Explicit;
      item.evidence_fact.reset();
    }
  }
  return assignment;
}

std::pair<ScenePlan, std::vector<InsertionRecord>> apply_style_markers(
    const ScenePlan& plan, const FactBase& fb,
    const std::vector<Persona>& personas, const GenerationConfig& cfg) {
  if (!cfg.enable_style_markers) return {plan, {}};

  const Persona* speaker = nullptr;
  for (const auto& p : personas) {
    if (std::find(plan.participants.begin(), plan.participants.end(), p.id) ==
        plan.participants.end()) {
      continue;
    }
    if (speaker == nullptr || p.dominance > speaker->dominance ||
        (p.dominance == speaker->dominance && p.id < speaker->id)) {
      speaker = &p;
    }
  }
  if (speaker == nullptr || speaker->dominance < cfg.dominance_threshold) {
    return {plan, {}};
  }

  const std::vector<ActId> order = linearize(plan);

  // Each exchange opens with a question carrying its fact; a topic boundary
  // sits between two questions of different topics. Opinion informs can cite
  // evidence from another topic, so they must not count as shifts. An
  // existing metadiscourse act already marks the boundary it precedes.
  struct Boundary {
    std::size_t anchor_pos;  // act the marker is spliced after
  };
  std::vector<Boundary> boundaries;
  const std::string* current_topic = nullptr;
  bool marked = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const DialogueAct& act = plan.acts.at(order[i]);
    if (act.type == ActType::Metadiscourse) {
      marked = true;
      continue;
    }
    if (act.type != ActType::Question) continue;
    const Fact* fact = fb.find_fact(act.content.proposition);
    if (fact == nullptr) continue;
    if (current_topic != nullptr && fact->topic != *current_topic && !marked) {
      boundaries.push_back({i - 1});
    }
    current_topic = &fact->topic;
    marked = false;
  }

  int existing = 0;
  for (const auto& [id, act] : plan.acts) {
    if (act.type == ActType::Metadiscourse) ++existing;
  }

  ScenePlan result = plan;
  std::vector<InsertionRecord> records;
  ActIdAllocator ids = ActIdAllocator::resume_from(plan);
  for (const Boundary& boundary : boundaries) {
    if (existing >= cfg.max_style_markers) break;
    DialogueAct marker;
    marker.id = ids.next_inserted();
    marker.type = ActType::Metadiscourse;
    marker.speaker = speaker->id;
    for (const auto& pid : plan.participants) {
      if (pid != speaker->id) marker.addressees.insert(pid);
    }
    marker.content = {std::string(kMarkerTopicShift), Polarity::Assert};

    const ActId& anchor = order[boundary.anchor_pos];
    records.push_back({anchor, {marker.id}, InsertionReason::Style});
    result = insert_subsequence(std::move(result), anchor, {std::move(marker)});
    ++existing;
  }
  return {std::move(result), std::move(records)};
}

}  // namespace scenewright
