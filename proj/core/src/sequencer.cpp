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

#include "scenewright/sequencer.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "scenewright/errors.hpp"

namespace scenewright {

namespace {

// "x12" -> 12; nullopt unless the id is the prefix plus a plain positive int.
std::optional<int> numbered_id(const ActId& id, char prefix) {
  if (id.size() < 2 || id[0] != prefix || id[1] == '0') return std::nullopt;
  int value = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (id[i] < '0' || id[i] > '9') return std::nullopt;
    if (value > 100000000) return std::nullopt;
    value = value * 10 + (id[i] - '0');
  }
  return value;
}

const Persona& persona_or_throw(const std::vector<Persona>& personas,
                                const std::string& id, const std::string& stage) {
  const Persona* p = find_persona(personas, id);
  if (p == nullptr) {
    throw input_error(stage, "dangling-reference", id,
                      "persona is not in the roster");
  }
  return *p;
}

// The greeting and closing both fall to the strongest informer.
const Persona& pick_host(const std::vector<Persona>& personas) {
  const Persona* best = &personas.front();
  for (const auto& p : personas) {
    if (p.informer_weight > best->informer_weight ||
        (p.informer_weight == best->informer_weight && p.id < best->id)) {
      best = &p;
    }
  }
  return *best;
}

DialogueAct make_marker_act(ActId id, ActType type, const Persona& host,
                            const std::vector<Persona>& personas,
                            std::string_view proposition) {
  DialogueAct act;
  act.id = std::move(id);
  act.type = type;
  act.speaker = host.id;
  for (const auto& p : personas) {
    if (p.id != host.id) act.addressees.insert(p.id);
  }
  act.content.proposition = std::string(proposition);
  act.content.polarity = Polarity::Assert;
  return act;
}

}  // namespace

ActIdAllocator ActIdAllocator::resume_from(const ScenePlan& plan) {
  ActIdAllocator ids;
  for (const auto& [id, act] : plan.acts) {
    if (const auto n = numbered_id(id, 'x')) {
      ids.next_x_ = std::max(ids.next_x_, *n + 1);
    } else if (const auto n = numbered_id(id, 'y')) {
      ids.next_y_ = std::max(ids.next_y_, *n + 1);
    }
  }
  return ids;
}

EmotionSpec emotion_for_valence(double valence) {
  EmotionState state;
  if (valence > 0.0) {
    state.label = EmotionLabel::Enthusiasm;
  } else if (valence < 0.0) {
    state.label = EmotionLabel::Disappointment;
  }
  state.intensity = std::abs(valence);
  return {state, state};
}

std::pair<DialogueAct, DialogueAct> emit_question_answer_pair(
    const AssignedItem& item, const Fact& fact, ActIdAllocator& ids) {
  DialogueAct question;
  question.id = ids.next_main();
  question.type = ActType::Question;
  question.speaker = item.elicitor;
  question.addressees = {item.informer};
  question.content = {fact.id, Polarity::Query};

  DialogueAct inform;
  inform.id = ids.next_main();
  inform.type = ActType::Inform;
  inform.speaker = item.informer;
  inform.addressees = {item.elicitor};
  inform.content = {fact.id, Polarity::Assert};
  inform.reacts_to = {question.id};
  inform.emotion = emotion_for_valence(fact.valence);

  return {std::move(question), std::move(inform)};
}

ScenePlan plan_sequence(const Assignment& assignment, const FactBase& fb,
                        const std::vector<Persona>& personas,
                        const GenerationConfig& cfg) {
  const std::string stage = "sequencer.plan_sequence";
  if (personas.size() < 2) {
    throw input_error(stage, "too-few-personas", "",
                      "sequencing needs at least 2 personas, got " +
                          std::to_string(personas.size()));
  }

  struct Keyed {
    std::size_t priority;
    std::string topic;
    const AssignedItem* item;
    const Fact* fact;
  };
  auto priority_rank = [&](const std::string& topic) {
    for (std::size_t i = 0; i < cfg.topic_priority.size(); ++i) {
      if (cfg.topic_priority[i] == topic) return i;
    }
    return cfg.topic_priority.size();
  };

  std::vector<Keyed> keyed;
  keyed.reserve(assignment.items.size());
  for (const auto& item : assignment.items) {
    const Fact* fact = fb.find_fact(item.fact_id);
    if (fact == nullptr) {
      throw input_error(stage, "dangling-reference", item.fact_id,
                        "assigned fact is not in the fact base");
    }
    persona_or_throw(personas, item.informer, stage);
    persona_or_throw(personas, item.elicitor, stage);
    if (item.opinion_holder) persona_or_throw(personas, *item.opinion_holder, stage);
    if (item.informer == item.elicitor) {
      throw input_error(stage, "self-dialogue", item.fact_id,
                        "informer and elicitor must differ");
    }
    keyed.push_back({priority_rank(fact->topic), fact->topic, &item, fact});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.priority, a.topic) < std::tie(b.priority, b.topic);
  });

  ScenePlan plan;
  for (const auto& p : personas) plan.participants.push_back(p.id);

  ActIdAllocator ids;
  std::vector<DialogueAct> chain;

  if (cfg.include_greeting) {
    chain.push_back(make_marker_act(ids.next_main(), ActType::Greet,
                                    pick_host(personas), personas, kMarkerGreeting));
  }

  for (const auto& k : keyed) {
    auto [question, inform] = emit_question_answer_pair(*k.item, *k.fact, ids);
    const ActId inform_id = inform.id;
    chain.push_back(std::move(question));
    chain.push_back(std::move(inform));

    if (k.item->opinion_mode == OpinionMode::None) continue;
    const std::string holder = k.item->opinion_holder.value_or(k.item->elicitor);
    const bool associated =
        k.item->opinion_mode == OpinionMode::Implicit && k.item->evidence_fact;
    DialogueAct opinion;
    opinion.id = ids.next_main();
    opinion.speaker = holder;
    opinion.addressees = {k.item->informer};
    opinion.reacts_to = {inform_id};
    if (associated) {
      const Fact* evidence = fb.find_fact(*k.item->evidence_fact);
      if (evidence == nullptr) {
        throw input_error(stage, "dangling-reference", *k.item->evidence_fact,
                          "evidence fact is not in the fact base");
      }
      // The opinion stays unspoken: the holder volunteers suggestive evidence.
      opinion.type = ActType::Inform;
      opinion.content = {evidence->id, Polarity::Assert};
    } else {
      opinion.type = ActType::Evaluate;
      opinion.content = {k.fact->id, Polarity::Assert};
      opinion.emotion = emotion_for_valence(k.fact->valence);
    }
    chain.push_back(std::move(opinion));
  }

  if (cfg.include_closing) {
    chain.push_back(make_marker_act(ids.next_main(), ActType::Close,
                                    pick_host(personas), personas, kMarkerClosing));
  }

  std::optional<ActId> prev;
  for (auto& act : chain) {
    const ActId id = act.id;
    plan = add_act(std::move(plan), std::move(act), prev);
    prev = id;
  }
  return plan;
}

}  // namespace scenewright
