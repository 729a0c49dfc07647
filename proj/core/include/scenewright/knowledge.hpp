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

// The domain side of generation: the fact base being talked about and the
// persona roster doing the talking. Everything here is immutable after
// parsing and safe to share across threads.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scenewright/config.hpp"

namespace scenewright {

// A fact value or rule threshold: integer, real, or string.
using Value = std::variant<std::int64_t, double, std::string>;

bool value_is_numeric(const Value& v);
double value_as_number(const Value& v);  // integers widen to double
// "180", "4.5", or the string itself; doubles with integral value drop the point.
std::string format_value(const Value& v);

struct Entity {
  std::string id;
  std::string name;
  std::string cls;  // serialized as "class"

  bool operator==(const Entity&) const = default;
};

struct Fact {
  std::string id;
  std::string entity;     // Entity.id
  std::string attribute;
  Value value;
  std::optional<std::string> unit;
  double valence = 0.0;   // audience-perceived goodness, [-1, +1]
  double emphasis = 0.0;  // author's desired highlighting, [0, 1]
  std::string topic;

  bool operator==(const Fact&) const = default;
};

enum class PredicateOp { eq, ge, le };

std::string to_string(PredicateOp op);
std::optional<PredicateOp> predicate_op_from_string(std::string_view s);

struct RulePremise {
  std::string attribute;
  PredicateOp op = PredicateOp::eq;
  Value threshold;

  bool operator==(const RulePremise&) const = default;
};

struct RuleEffect {
  std::string property;
  double valence = 0.0;  // [-1, +1]

  bool operator==(const RuleEffect&) const = default;
};

// Evidence -> property: e.g. top_speed >= 150 implies "sporty" (+1), or the
// actor-action case as attribute did_action eq "kill_jim" implies "bad" (-1).
struct ImplicationRule {
  std::string id;
  RulePremise premise;
  RuleEffect implies;

  // True when the premise holds of the fact. eq compares numbers or strings;
  // ge/le apply to numeric values only.
  bool matches(const Fact& fact) const;

  bool operator==(const ImplicationRule&) const = default;
};

struct FactBase {
  std::vector<Entity> entities;
  std::vector<Fact> facts;
  std::vector<ImplicationRule> implications;

  const Entity* find_entity(std::string_view id) const;
  const Fact* find_fact(std::string_view id) const;

  bool operator==(const FactBase&) const = default;
};

struct Attitude {
  std::string target;  // entity id or property name
  double valence = 0.0;

  bool operator==(const Attitude&) const = default;
};

struct Persona {
  std::string id;
  std::string name;  // display string used in transcripts
  double informer_weight = 0.0;
  double elicitor_weight = 0.0;
  std::map<std::string, double> interests;  // topic -> weight [0,1]
  double extroversion = 0.0;
  double agreeableness = 0.0;
  double dominance = 0.0;
  double indirectness = 0.0;
  std::vector<Attitude> attitudes;

  double interest_in(std::string_view topic) const;

  bool operator==(const Persona&) const = default;
};

const Persona* find_persona(const std::vector<Persona>& personas,
                            std::string_view id);

// Fact ids about one entity, in presentation order.
struct ContentSelection {
  std::vector<std::string> fact_ids;

  bool operator==(const ContentSelection&) const = default;
};

// Parses and validates a fact base document (JSON). Unknown fields are
// rejected. Errors name the offending id.
FactBase parse_fact_base(std::string_view text);
std::string serialize_fact_base(const FactBase& fb);

// Parses and validates the persona roster. The >= 2 personas requirement is
// checked downstream by the distributor, not here.
std::vector<Persona> parse_personas(std::string_view text);
std::string serialize_personas(const std::vector<Persona>& personas);

// Facts about cfg.target_entity whose topic interests at least one persona
// (weight > 0), ordered by (topic priority rank, topic, fact id). Errors on
// an unknown target or when nothing matches.
ContentSelection select_content(const FactBase& fb,
                                const std::vector<Persona>& personas,
                                const GenerationConfig& cfg);

}  // namespace scenewright
