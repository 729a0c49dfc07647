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

#include "scenewright/scene.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <vector>

#include "scenewright/errors.hpp"

namespace scenewright {

using nlohmann::json;

std::string to_string(ActType t) {
  switch (t) {
    case ActType::Greet: return "greet";
    case ActType::Question: return "question";
    case ActType::Inform: return "inform";
    case ActType::EchoQuestion: return "echo_question";
    case ActType::Confirm: return "confirm";
    case ActType::Evaluate: return "evaluate";
    case ActType::Metadiscourse: return "metadiscourse";
    case ActType::Close: return "close";
  }
  return "inform";
}

std::optional<ActType> act_type_from_string(std::string_view s) {
  if (s == "greet") return ActType::Greet;
  if (s == "question") return ActType::Question;
  if (s == "inform") return ActType::Inform;
  if (s == "echo_question") return ActType::EchoQuestion;
  if (s == "confirm") return ActType::Confirm;
  if (s == "evaluate") return ActType::Evaluate;
  if (s == "metadiscourse") return ActType::Metadiscourse;
  if (s == "close") return ActType::Close;
  return std::nullopt;
}

std::string to_string(Polarity p) {
  switch (p) {
    case Polarity::Assert: return "assert";
    case Polarity::Query: return "query";
    case Polarity::ReQuery: return "re-query";
    case Polarity::Agree: return "agree";
  }
  return "assert";
}

std::optional<Polarity> polarity_from_string(std::string_view s) {
  if (s == "assert") return Polarity::Assert;
  if (s == "query") return Polarity::Query;
  if (s == "re-query") return Polarity::ReQuery;
  if (s == "agree") return Polarity::Agree;
  return std::nullopt;
}

std::string to_string(EmotionLabel l) {
  switch (l) {
    case EmotionLabel::Neutral: return "neutral";
    case EmotionLabel::Enthusiasm: return "enthusiasm";
    case EmotionLabel::Disappointment: return "disappointment";
  }
  return "neutral";
}

std::optional<EmotionLabel> emotion_label_from_string(std::string_view s) {
  if (s == "neutral") return EmotionLabel::Neutral;
  if (s == "enthusiasm") return EmotionLabel::Enthusiasm;
  if (s == "disappointment") return EmotionLabel::Disappointment;
  return std::nullopt;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::ConstraintCycle: return "constraint_cycle";
    case ViolationKind::DanglingReference: return "dangling_reference";
    case ViolationKind::ReactsForward: return "reacts_forward";
    case ViolationKind::SpeakerIsAddressee: return "speaker_is_addressee";
    case ViolationKind::UnansweredQuestion: return "unanswered_question";
  }
  return "dangling_reference";
}

std::string to_string(InsertionReason r) {
  switch (r) {
    case InsertionReason::Emphasis: return "emphasis";
    case InsertionReason::Style: return "style";
  }
  return "emphasis";
}

bool is_discourse_marker(std::string_view proposition) {
  return proposition == kMarkerGreeting || proposition == kMarkerClosing ||
         proposition == kMarkerTopicShift;
}

const DialogueAct* ScenePlan::find_act(const ActId& id) const {
  auto it = acts.find(id);
  return it == acts.end() ? nullptr : &it->second;
}

namespace {

using Edge = std::pair<ActId, ActId>;

// Successor adjacency with sorted neighbours; shared by the graph walks.
std::map<ActId, std::set<ActId>> adjacency(const ScenePlan& plan) {
  std::map<ActId, std::set<ActId>> adj;
  for (const auto& [id, act] : plan.acts) adj[id];
  for (const auto& [before, after] : plan.constraints) adj[before].insert(after);
  return adj;
}

// First back edge met by a DFS that visits nodes and neighbours in id order.
// Only meaningful when a cycle exists.
std::optional<Edge> find_cycle_edge(const ScenePlan& plan) {
  const auto adj = adjacency(plan);
  enum class Color { White, Gray, Black };
  std::map<ActId, Color> color;
  for (const auto& [id, ignored] : adj) color[id] = Color::White;

  struct Frame {
    ActId node;
    std::set<ActId>::const_iterator next;
  };
  for (const auto& [start, ignored] : adj) {
    if (color[start] != Color::White) continue;
    std::vector<Frame> stack;
    color[start] = Color::Gray;
    stack.push_back({start, adj.at(start).begin()});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.next == adj.at(frame.node).end()) {
        color[frame.node] = Color::Black;
        stack.pop_back();
        continue;
      }
      const ActId neighbour = *frame.next++;
      if (color[neighbour] == Color::Gray) {
        return Edge{frame.node, neighbour};
      }
      if (color[neighbour] == Color::White) {
        color[neighbour] = Color::Gray;
        stack.push_back({neighbour, adj.at(neighbour).begin()});
      }
    }
  }
  return std::nullopt;
}

// Transitive successor sets for every act. Assumes the graph is acyclic.
std::map<ActId, std::set<ActId>> successor_closure(const ScenePlan& plan) {
  const auto adj = adjacency(plan);
  std::map<ActId, std::set<ActId>> closure;
  // Process in reverse topological order so each node's closure is final
  // before its predecessors consume it.
  const std::vector<ActId> order = linearize(plan);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::set<ActId>& out = closure[*it];
    for (const ActId& succ : adj.at(*it)) {
      out.insert(succ);
      const auto& sub = closure[succ];
      out.insert(sub.begin(), sub.end());
    }
  }
  return closure;
}

json emotion_to_json(const EmotionState& e) {
  return {{"label", to_string(e.label)}, {"intensity", e.intensity}};
}

EmotionState emotion_from_json(const json& node, const std::string& stage,
                               const std::string& id) {
  if (!node.is_object()) {
    throw input_error(stage, "malformed-document", id, "emotion state must be an object");
  }
  for (const auto& [key, value] : node.items()) {
    if (key != "label" && key != "intensity") {
      throw input_error(stage, "unknown-field", id, "unknown field '" + key + "'");
    }
  }
  auto label_it = node.find("label");
  auto intensity_it = node.find("intensity");
  if (label_it == node.end() || !label_it->is_string() ||
      intensity_it == node.end() || !intensity_it->is_number()) {
    throw input_error(stage, "malformed-document", id,
                      "emotion state needs a string 'label' and numeric 'intensity'");
  }
  EmotionState e;
  auto label = emotion_label_from_string(label_it->get<std::string>());
  if (!label) {
    throw input_error(stage, "unknown-label", id,
                      "unknown emotion label '" + label_it->get<std::string>() + "'");
  }
  e.label = *label;
  e.intensity = intensity_it->get<double>();
  if (!(e.intensity >= 0.0 && e.intensity <= 1.0)) {
    throw input_error(stage, "out-of-range", id, "intensity must be within [0, 1]");
  }
  return e;
}

json scene_to_json(const ScenePlan& plan) {
  json doc;
  doc["participants"] = plan.participants;
  json acts = json::array();
  for (const auto& [id, act] : plan.acts) {
    json node;
    node["id"] = act.id;
    node["type"] = to_string(act.type);
    node["speaker"] = act.speaker;
    node["addressees"] = act.addressees;
    node["content"] = {{"proposition", act.content.proposition},
                       {"polarity", to_string(act.content.polarity)}};
    node["reacts_to"] = act.reacts_to;
    node["emotion"] = {{"felt", emotion_to_json(act.emotion.felt)},
                       {"expressed", emotion_to_json(act.emotion.expressed)}};
    acts.push_back(std::move(node));
  }
  doc["acts"] = std::move(acts);
  json constraints = json::array();
  for (const auto& [before, after] : plan.constraints) {
    constraints.push_back(json::array({before, after}));
  }
  doc["temporal_constraints"] = std::move(constraints);
  return doc;
}

}  // namespace

ScenePlan add_act(ScenePlan plan, DialogueAct act,
                  const std::optional<ActId>& after) {
  const std::string stage = "scene.add_act";
  if (plan.has_act(act.id)) {
    throw plan_error(stage, "duplicate-id", act.id, "act id already present");
  }
  if (after) {
    if (!plan.has_act(*after)) {
      throw plan_error(stage, "unknown-anchor", *after, "anchor act does not exist");
    }
    plan.constraints.insert({*after, act.id});
  }
  plan.acts.emplace(act.id, std::move(act));
  return plan;
}

ScenePlan insert_subsequence(ScenePlan plan, const ActId& anchor,
                             const std::vector<DialogueAct>& acts) {
  const std::string stage = "scene.insert_subsequence";
  if (!plan.has_act(anchor)) {
    throw plan_error(stage, "unknown-anchor", anchor, "anchor act does not exist");
  }
  if (acts.empty()) return plan;
  for (const auto& act : acts) {
    if (plan.has_act(act.id)) {
      throw plan_error(stage, "duplicate-id", act.id, "inserted id already present");
    }
  }
  for (std::size_t i = 1; i < acts.size(); ++i) {
    if (acts[i].id == acts[0].id ||
        std::any_of(acts.begin(), acts.begin() + static_cast<long>(i),
                    [&](const DialogueAct& a) { return a.id == acts[i].id; })) {
      throw plan_error(stage, "duplicate-id", acts[i].id,
                       "inserted ids must be distinct");
    }
  }

  const ActId tail = acts.back().id;
  // Everything that had to follow the anchor now follows the spliced chain.
  std::set<Edge> rerouted;
  for (const auto& edge : plan.constraints) {
    if (edge.first == anchor) {
      rerouted.insert({tail, edge.second});
    } else {
      rerouted.insert(edge);
    }
  }
  plan.constraints = std::move(rerouted);

  ActId prev = anchor;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    DialogueAct act = acts[i];
    if (i == 0) act.reacts_to.insert(anchor);
    plan.constraints.insert({prev, act.id});
    prev = act.id;
    plan.acts.emplace(act.id, std::move(act));
  }
  return plan;
}

ScenePlan remove_act(ScenePlan plan, const ActId& id) {
  const std::string stage = "scene.remove_act";
  if (!plan.has_act(id)) {
    throw plan_error(stage, "unknown-act", id, "act does not exist");
  }
  std::set<ActId> preds;
  std::set<ActId> succs;
  std::set<Edge> kept;
  for (const auto& edge : plan.constraints) {
    if (edge.first == id) {
      succs.insert(edge.second);
    } else if (edge.second == id) {
      preds.insert(edge.first);
    } else {
      kept.insert(edge);
    }
  }
  for (const auto& p : preds) {
    for (const auto& s : succs) {
      if (p != s) kept.insert({p, s});
    }
  }
  plan.constraints = std::move(kept);
  plan.acts.erase(id);
  for (auto& [ignored, act] : plan.acts) act.reacts_to.erase(id);
  return plan;
}

std::vector<ActId> linearize(const ScenePlan& plan) {
  const std::string stage = "scene.linearize";
  for (const auto& [before, after] : plan.constraints) {
    if (!plan.has_act(before)) {
      throw plan_error(stage, "dangling-reference", before,
                       "constraint endpoint is not an act");
    }
    if (!plan.has_act(after)) {
      throw plan_error(stage, "dangling-reference", after,
                       "constraint endpoint is not an act");
    }
  }

  std::map<ActId, int> indegree;
  for (const auto& [id, act] : plan.acts) indegree[id] = 0;
  for (const auto& [before, after] : plan.constraints) ++indegree[after];

  std::set<ActId> ready;
  for (const auto& [id, deg] : indegree) {
    if (deg == 0) ready.insert(id);
  }
  const auto adj = adjacency(plan);

  std::vector<ActId> order;
  order.reserve(plan.acts.size());
  while (!ready.empty()) {
    const ActId id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (const ActId& succ : adj.at(id)) {
      if (--indegree[succ] == 0) ready.insert(succ);
    }
  }
  if (order.size() != plan.acts.size()) {
    const auto edge = find_cycle_edge(plan);
    const std::string label =
        edge ? edge->first + "->" + edge->second : std::string("?");
    throw plan_error(stage, "cycle", label, "temporal constraints form a cycle");
  }
  return order;
}

ValidationReport validate_plan(const ScenePlan& plan) {
  ValidationReport report;
  bool structure_ok = true;

  for (const auto& [before, after] : plan.constraints) {
    for (const ActId& endpoint : {before, after}) {
      if (!plan.has_act(endpoint)) {
        report.violations.push_back(
            {ViolationKind::DanglingReference, before + "->" + after,
             "constraint endpoint '" + endpoint + "' is not an act"});
        structure_ok = false;
      }
    }
  }
  for (const auto& [id, act] : plan.acts) {
    for (const ActId& target : act.reacts_to) {
      if (!plan.has_act(target)) {
        report.violations.push_back(
            {ViolationKind::DanglingReference, id,
             "reacts_to target '" + target + "' is not an act"});
        structure_ok = false;
      }
    }
  }

  if (structure_ok) {
    if (const auto edge = find_cycle_edge(plan)) {
      report.violations.push_back({ViolationKind::ConstraintCycle,
                                   edge->first + "->" + edge->second,
                                   "temporal constraints form a cycle"});
      structure_ok = false;
    }
  }

  for (const auto& [id, act] : plan.acts) {
    if (act.addressees.count(act.speaker) != 0) {
      report.violations.push_back({ViolationKind::SpeakerIsAddressee, id,
                                   "speaker '" + act.speaker + "' addresses itself"});
    }
  }

  // Order-sensitive checks need a well-formed acyclic graph underneath.
  if (!structure_ok) return report;

  const auto closure = successor_closure(plan);
  for (const auto& [id, act] : plan.acts) {
    for (const ActId& target : act.reacts_to) {
      if (closure.at(target).count(id) == 0) {
        report.violations.push_back(
            {ViolationKind::ReactsForward, id,
             "reacts_to target '" + target + "' is not strictly before the act"});
      }
    }
  }

  for (const auto& [qid, question] : plan.acts) {
    if (question.type != ActType::Question && question.type != ActType::EchoQuestion) {
      continue;
    }
    const bool answered =
        std::any_of(plan.acts.begin(), plan.acts.end(), [&](const auto& entry) {
          const DialogueAct& answer = entry.second;
          return answer.reacts_to.count(qid) != 0 &&
                 question.addressees.count(answer.speaker) != 0 &&
                 closure.at(qid).count(answer.id) != 0;
        });
    if (!answered) {
      report.violations.push_back({ViolationKind::UnansweredQuestion, qid,
                                   "no addressee reacts to the question"});
    }
  }

  return report;
}

std::string serialize_scene(const ScenePlan& plan) {
  return scene_to_json(plan).dump(2) + "\n";
}

std::string serialize_scene_document(const ScenePlan& plan,
                                     const std::vector<InsertionRecord>& records) {
  json doc = scene_to_json(plan);
  json provenance = json::array();
  for (const auto& record : records) {
    provenance.push_back({{"anchor", record.anchor},
                          {"inserted", record.inserted},
                          {"reason", to_string(record.reason)}});
  }
  doc["provenance"] = std::move(provenance);
  return doc.dump(2) + "\n";
}

ScenePlan parse_scene(std::string_view text) {
  const std::string stage = "scene.parse_scene";
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw input_error(stage, "malformed-document", "", "not valid JSON");
  }
  if (!doc.is_object()) {
    throw input_error(stage, "malformed-document", "", "scene document must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "participants" && key != "acts" && key != "temporal_constraints" &&
        key != "provenance") {
      throw input_error(stage, "unknown-field", key, "unknown field '" + key + "'");
    }
  }
  if (!doc.contains("participants") || !doc.at("participants").is_array()) {
    throw input_error(stage, "malformed-document", "",
                      "'participants' must be an array of persona ids");
  }
  if (!doc.contains("acts") || !doc.at("acts").is_array()) {
    throw input_error(stage, "malformed-document", "", "'acts' must be an array");
  }

  ScenePlan plan;
  std::set<std::string> roster;
  for (const auto& node : doc.at("participants")) {
    if (!node.is_string()) {
      throw input_error(stage, "malformed-document", "", "participant ids must be strings");
    }
    const std::string id = node.get<std::string>();
    if (!roster.insert(id).second) {
      throw input_error(stage, "duplicate-id", id, "duplicate participant");
    }
    plan.participants.push_back(id);
  }

  for (const auto& node : doc.at("acts")) {
    if (!node.is_object()) {
      throw input_error(stage, "malformed-document", "", "act must be an object");
    }
    auto id_it = node.find("id");
    if (id_it == node.end() || !id_it->is_string()) {
      throw input_error(stage, "malformed-document", "", "act needs a string 'id'");
    }
    DialogueAct act;
    act.id = id_it->get<std::string>();
    for (const auto& [key, value] : node.items()) {
      if (key != "id" && key != "type" && key != "speaker" && key != "addressees" &&
          key != "content" && key != "reacts_to" && key != "emotion") {
        throw input_error(stage, "unknown-field", act.id, "unknown field '" + key + "'");
      }
    }

    auto type_it = node.find("type");
    if (type_it == node.end() || !type_it->is_string()) {
      throw input_error(stage, "malformed-document", act.id, "act needs a string 'type'");
    }
    auto type = act_type_from_string(type_it->get<std::string>());
    if (!type) {
      throw input_error(stage, "unknown-type", act.id,
                        "unknown act type '" + type_it->get<std::string>() + "'");
    }
    act.type = *type;

    auto speaker_it = node.find("speaker");
    if (speaker_it == node.end() || !speaker_it->is_string()) {
      throw input_error(stage, "malformed-document", act.id,
                        "act needs a string 'speaker'");
    }
    act.speaker = speaker_it->get<std::string>();
    if (roster.count(act.speaker) == 0) {
      throw input_error(stage, "dangling-reference", act.id,
                        "speaker '" + act.speaker + "' is not a participant");
    }

    auto addr_it = node.find("addressees");
    if (addr_it == node.end() || !addr_it->is_array()) {
      throw input_error(stage, "malformed-document", act.id,
                        "act needs an 'addressees' array");
    }
    for (const auto& a : *addr_it) {
      if (!a.is_string()) {
        throw input_error(stage, "malformed-document", act.id,
                          "addressees must be strings");
      }
      const std::string addressee = a.get<std::string>();
      if (roster.count(addressee) == 0) {
        throw input_error(stage, "dangling-reference", act.id,
                          "addressee '" + addressee + "' is not a participant");
      }
      act.addressees.insert(addressee);
    }
    if (act.addressees.empty()) {
      throw input_error(stage, "malformed-document", act.id,
                        "act needs at least one addressee");
    }

    auto content_it = node.find("content");
    if (content_it == node.end() || !content_it->is_object()) {
      throw input_error(stage, "malformed-document", act.id,
                        "act needs a 'content' object");
    }
    for (const auto& [key, value] : content_it->items()) {
      if (key != "proposition" && key != "polarity") {
        throw input_error(stage, "unknown-field", act.id, "unknown field '" + key + "'");
      }
    }
    auto prop_it = content_it->find("proposition");
    auto pol_it = content_it->find("polarity");
    if (prop_it == content_it->end() || !prop_it->is_string() ||
        pol_it == content_it->end() || !pol_it->is_string()) {
      throw input_error(stage, "malformed-document", act.id,
                        "content needs string 'proposition' and 'polarity'");
    }
    act.content.proposition = prop_it->get<std::string>();
    auto polarity = polarity_from_string(pol_it->get<std::string>());
    if (!polarity) {
      throw input_error(stage, "unknown-polarity", act.id,
                        "unknown polarity '" + pol_it->get<std::string>() + "'");
    }
    act.content.polarity = *polarity;

    if (auto reacts_it = node.find("reacts_to"); reacts_it != node.end()) {
      if (!reacts_it->is_array()) {
        throw input_error(stage, "malformed-document", act.id,
                          "'reacts_to' must be an array");
      }
      for (const auto& r : *reacts_it) {
        if (!r.is_string()) {
          throw input_error(stage, "malformed-document", act.id,
                            "reacts_to targets must be strings");
        }
        act.reacts_to.insert(r.get<std::string>());
      }
    }

    if (auto emotion_it = node.find("emotion"); emotion_it != node.end()) {
      if (!emotion_it->is_object()) {
        throw input_error(stage, "malformed-document", act.id,
                          "'emotion' must be an object");
      }
      for (const auto& [key, value] : emotion_it->items()) {
        if (key != "felt" && key != "expressed") {
          throw input_error(stage, "unknown-field", act.id, "unknown field '" + key + "'");
        }
      }
      if (!emotion_it->contains("felt") || !emotion_it->contains("expressed")) {
        throw input_error(stage, "malformed-document", act.id,
                          "'emotion' needs 'felt' and 'expressed'");
      }
      act.emotion.felt = emotion_from_json(emotion_it->at("felt"), stage, act.id);
      act.emotion.expressed =
          emotion_from_json(emotion_it->at("expressed"), stage, act.id);
    }

    if (plan.has_act(act.id)) {
      throw input_error(stage, "duplicate-id", act.id, "duplicate act id");
    }
    plan.acts.emplace(act.id, std::move(act));
  }

  if (doc.contains("temporal_constraints")) {
    const json& constraints = doc.at("temporal_constraints");
    if (!constraints.is_array()) {
      throw input_error(stage, "malformed-document", "",
                        "'temporal_constraints' must be an array");
    }
    for (const auto& pair : constraints) {
      if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_string() ||
          !pair.at(1).is_string()) {
        throw input_error(stage, "malformed-document", "",
                          "each constraint must be a [before, after] pair");
      }
      const std::string before = pair.at(0).get<std::string>();
      const std::string after = pair.at(1).get<std::string>();
      for (const std::string& endpoint : {before, after}) {
        if (!plan.has_act(endpoint)) {
          throw input_error(stage, "dangling-reference", endpoint,
                            "constraint endpoint is not an act");
        }
      }
      plan.constraints.insert({before, after});
    }
  }

  for (const auto& [id, act] : plan.acts) {
    for (const ActId& target : act.reacts_to) {
      if (!plan.has_act(target)) {
        throw input_error(stage, "dangling-reference", id,
                          "reacts_to target '" + target + "' is not an act");
      }
    }
  }

  return plan;
}

std::vector<InsertionRecord> parse_provenance(std::string_view text) {
  const std::string stage = "scene.parse_provenance";
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw input_error(stage, "malformed-document", "", "not a JSON object");
  }
  std::set<std::string> act_ids;
  if (doc.contains("acts") && doc.at("acts").is_array()) {
    for (const auto& node : doc.at("acts")) {
      if (node.is_object() && node.contains("id") && node.at("id").is_string()) {
        act_ids.insert(node.at("id").get<std::string>());
      }
    }
  }

  std::vector<InsertionRecord> records;
  if (!doc.contains("provenance")) return records;
  const json& provenance = doc.at("provenance");
  if (!provenance.is_array()) {
    throw input_error(stage, "malformed-document", "", "'provenance' must be an array");
  }
  for (const auto& node : provenance) {
    if (!node.is_object()) {
      throw input_error(stage, "malformed-document", "", "record must be an object");
    }
    for (const auto& [key, value] : node.items()) {
      if (key != "anchor" && key != "inserted" && key != "reason") {
        throw input_error(stage, "unknown-field", key, "unknown field '" + key + "'");
      }
    }
    InsertionRecord record;
    if (!node.contains("anchor") || !node.at("anchor").is_string() ||
        !node.contains("inserted") || !node.at("inserted").is_array() ||
        !node.contains("reason") || !node.at("reason").is_string()) {
      throw input_error(stage, "malformed-document", "",
                        "record needs 'anchor', 'inserted', and 'reason'");
    }
    record.anchor = node.at("anchor").get<std::string>();
    if (act_ids.count(record.anchor) == 0) {
      throw input_error(stage, "dangling-reference", record.anchor,
                        "anchor is not an act in the document");
    }
    for (const auto& id : node.at("inserted")) {
      if (!id.is_string()) {
        throw input_error(stage, "malformed-document", record.anchor,
                          "inserted ids must be strings");
      }
      const std::string inserted = id.get<std::string>();
      if (act_ids.count(inserted) == 0) {
        throw input_error(stage, "dangling-reference", inserted,
                          "inserted id is not an act in the document");
      }
      record.inserted.push_back(inserted);
    }
    const std::string reason = node.at("reason").get<std::string>();
    if (reason == "emphasis") {
      record.reason = InsertionReason::Emphasis;
    } else if (reason == "style") {
      record.reason = InsertionReason::Style;
    } else {
      throw input_error(stage, "unknown-reason", record.anchor,
                        "unknown insertion reason '" + reason + "'");
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace scenewright
