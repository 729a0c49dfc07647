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

// The dialogue-act intermediate representation. A scene plan is a set of
// typed acts plus a separately stored partial temporal order; transforms
// return new plans (plans are immutable values), and linearization resolves
// the remaining underspecification deterministically.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scenewright {

using ActId = std::string;

enum class ActType {
  Greet,
  Question,
  Inform,
  EchoQuestion,  // opens an emphasis subdialogue ("As much as 180mph?")
  Confirm,
  Evaluate,
  Metadiscourse,
  Close,
};

enum class Polarity { Assert, Query, ReQuery, Agree };

enum class EmotionLabel { Neutral, Enthusiasm, Disappointment };

std::string to_string(ActType t);
std::string to_string(Polarity p);
std::string to_string(EmotionLabel l);
std::optional<ActType> act_type_from_string(std::string_view s);
std::optional<Polarity> polarity_from_string(std::string_view s);
std::optional<EmotionLabel> emotion_label_from_string(std::string_view s);

// Propositions that are neither fact ids nor property names.
inline constexpr std::string_view kMarkerGreeting = "greeting";
inline constexpr std::string_view kMarkerClosing = "closing";
inline constexpr std::string_view kMarkerTopicShift = "topic_shift";
bool is_discourse_marker(std::string_view proposition);

struct SemanticContent {
  std::string proposition;  // fact id, property name, or discourse marker
  Polarity polarity = Polarity::Assert;

  bool operator==(const SemanticContent&) const = default;
};

struct EmotionState {
  EmotionLabel label = EmotionLabel::Neutral;
  double intensity = 0.0;  // [0, 1]

  bool operator==(const EmotionState&) const = default;
};

struct EmotionSpec {
  EmotionState felt;
  EmotionState expressed;

  bool operator==(const EmotionSpec&) const = default;
};

struct DialogueAct {
  ActId id;
  ActType type = ActType::Inform;
  std::string speaker;             // persona id, never in addressees
  std::set<std::string> addressees;  // non-empty
  SemanticContent content;
  std::set<ActId> reacts_to;
  EmotionSpec emotion;

  bool operator==(const DialogueAct&) const = default;
};

struct ScenePlan {
  std::vector<std::string> participants;
  std::map<ActId, DialogueAct> acts;
  // (before, after) pairs; the graph must stay acyclic.
  std::set<std::pair<ActId, ActId>> constraints;

  bool has_act(const ActId& id) const { return acts.count(id) != 0; }
  const DialogueAct* find_act(const ActId& id) const;

  bool operator==(const ScenePlan&) const = default;
};

enum class ViolationKind {
  ConstraintCycle,
  DanglingReference,    // constraint or reacts_to names a missing act
  ReactsForward,        // reacts_to target not strictly before the act
  SpeakerIsAddressee,
  UnansweredQuestion,   // question/echo_question with no reacting answer
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string subject;  // act id or "a->b" edge
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

enum class InsertionReason { Emphasis, Style };

std::string to_string(InsertionReason r);

// Provenance of one transform insertion, emitted into the scene document.
struct InsertionRecord {
  ActId anchor;
  std::vector<ActId> inserted;
  InsertionReason reason = InsertionReason::Emphasis;

  bool operator==(const InsertionRecord&) const = default;
};

// Adds one act; with `after` also adds the constraint (after, act.id).
// Errors: duplicate id, unknown anchor.
ScenePlan add_act(ScenePlan plan, DialogueAct act,
                  const std::optional<ActId>& after = std::nullopt);

// Splices a chained subsequence in directly after `anchor`: every existing
// constraint (anchor, z) is re-routed through the new chain's tail, and the
// first new act gains anchor in its reacts_to. Empty input is the identity.
ScenePlan insert_subsequence(ScenePlan plan, const ActId& anchor,
                             const std::vector<DialogueAct>& acts);

// Removes one act, bridging each predecessor to each successor and dropping
// the act from all reacts_to sets. Inverse of insertion for spliced chains.
ScenePlan remove_act(ScenePlan plan, const ActId& id);

// The unique topological order that always picks the lexicographically
// smallest ready act id. Errors on a cycle, naming one cycle edge.
std::vector<ActId> linearize(const ScenePlan& plan);

// Violations are data, not failures: checks acyclicity, backwards-pointing
// reacts_to, speaker not among addressees, and question adjacency closure.
ValidationReport validate_plan(const ScenePlan& plan);

// Scene description document (JSON). Canonical form lists acts sorted by id
// and constraints sorted pairwise; parse(serialize) is the identity, and
// serialize(parse) is the identity on canonical documents.
std::string serialize_scene(const ScenePlan& plan);
// Same document with a `provenance` array recording transform insertions.
std::string serialize_scene_document(const ScenePlan& plan,
                                     const std::vector<InsertionRecord>& records);
ScenePlan parse_scene(std::string_view text);
std::vector<InsertionRecord> parse_provenance(std::string_view text);

}  // namespace scenewright
