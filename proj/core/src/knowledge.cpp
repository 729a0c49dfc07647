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

#include "scenewright/knowledge.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <utility>

#include "scenewright/errors.hpp"

namespace scenewright {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const std::string& stage) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw input_error(stage, "malformed-document", "", "not valid JSON");
  }
  return doc;
}

void require_object(const json& node, const std::string& stage,
                    const std::string& id, const std::string& what) {
  if (!node.is_object()) {
    throw input_error(stage, "malformed-document", id, what + " must be an object");
  }
}

// Strict mode: unknown fields are typos.
void check_keys(const json& obj, const std::string& stage,
                const std::string& id,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw input_error(stage, "unknown-field", id.empty() ? key : id,
                        "unknown field '" + key + "'");
    }
  }
}

std::string get_string(const json& obj, const char* field,
                       const std::string& stage, const std::string& id) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw input_error(stage, "malformed-document", id,
                      std::string("missing or non-string field '") + field + "'");
  }
  return it->get<std::string>();
}

double get_number(const json& obj, const char* field, const std::string& stage,
                  const std::string& id) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_number()) {
    throw input_error(stage, "malformed-document", id,
                      std::string("missing or non-numeric field '") + field + "'");
  }
  return it->get<double>();
}

void check_range(double v, double lo, double hi, const char* field,
                 const std::string& stage, const std::string& id) {
  if (!(v >= lo && v <= hi)) {
    throw input_error(stage, "out-of-range", id,
                      std::string(field) + " must be within [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

Value parse_value(const json& node, const std::string& stage,
                  const std::string& id, const char* field) {
  if (node.is_number_integer()) return node.get<std::int64_t>();
  if (node.is_number_float()) return node.get<double>();
  if (node.is_string()) return node.get<std::string>();
  throw input_error(stage, "malformed-document", id,
                    std::string("field '") + field + "' must be a scalar or string");
}

json value_to_json(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

}  // namespace

bool value_is_numeric(const Value& v) {
  return !std::holds_alternative<std::string>(v);
}

double value_as_number(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

std::string format_value(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  double d = std::get<double>(v);
  if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e15) {
    return std::to_string(static_cast<long long>(d));
  }
  // Shortest representation that round-trips, same as the serializer's.
  return json(d).dump();
}

std::string to_string(PredicateOp op) {
  switch (op) {
    case PredicateOp::eq: return "eq";
    case PredicateOp::ge: return "ge";
    case PredicateOp::le: return "le";
  }
  return "eq";
}

std::optional<PredicateOp> predicate_op_from_string(std::string_view s) {
  if (s == "eq") return PredicateOp::eq;
  if (s == "ge") return PredicateOp::ge;
  if (s == "le") return PredicateOp::le;
  return std::nullopt;
}

bool ImplicationRule::matches(const Fact& fact) const {
  if (fact.attribute != premise.attribute) return false;
  const bool both_numeric =
      value_is_numeric(fact.value) && value_is_numeric(premise.threshold);
  switch (premise.op) {
    case PredicateOp::eq:
      if (both_numeric) {
        return value_as_number(fact.value) == value_as_number(premise.threshold);
      }
      return fact.value.index() == 2 && premise.threshold.index() == 2 &&
             std::get<std::string>(fact.value) ==
                 std::get<std::string>(premise.threshold);
    case PredicateOp::ge:
      return both_numeric &&
             value_as_number(fact.value) >= value_as_number(premise.threshold);
    case PredicateOp::le:
      return both_numeric &&
             value_as_number(fact.value) <= value_as_number(premise.threshold);
  }
  return false;
}

const Entity* FactBase::find_entity(std::string_view id) const {
  for (const auto& e : entities) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const Fact* FactBase::find_fact(std::string_view id) const {
  for (const auto& f : facts) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

double Persona::interest_in(std::string_view topic) const {
  auto it = interests.find(std::string(topic));
  return it == interests.end() ? 0.0 : it->second;
}

const Persona* find_persona(const std::vector<Persona>& personas,
                            std::string_view id) {
  for (const auto& p : personas) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

FactBase parse_fact_base(std::string_view text) {
  const std::string stage = "knowledge.parse_fact_base";
  json doc = parse_json(text, stage);
  require_object(doc, stage, "", "fact base document");
  check_keys(doc, stage, "", {"entities", "facts", "implications"});

  FactBase fb;
  std::set<std::string> seen;

  const json entities = doc.value("entities", json::array());
  if (!entities.is_array()) {
    throw input_error(stage, "malformed-document", "", "'entities' must be an array");
  }
  for (const auto& node : entities) {
    require_object(node, stage, "", "entity");
    Entity e;
    e.id = get_string(node, "id", stage, "");
    check_keys(node, stage, e.id, {"id", "name", "class"});
    e.name = get_string(node, "name", stage, e.id);
    e.cls = get_string(node, "class", stage, e.id);
    if (!seen.insert(e.id).second) {
      throw input_error(stage, "duplicate-id", e.id, "duplicate entity id");
    }
    fb.entities.push_back(std::move(e));
  }

  seen.clear();
  std::set<std::pair<std::string, std::string>> entity_attrs;
  const json facts = doc.value("facts", json::array());
  if (!facts.is_array()) {
    throw input_error(stage, "malformed-document", "", "'facts' must be an array");
  }
  for (const auto& node : facts) {
    require_object(node, stage, "", "fact");
    Fact f;
    f.id = get_string(node, "id", stage, "");
    check_keys(node, stage, f.id,
               {"id", "entity", "attribute", "value", "unit", "valence",
                "emphasis", "topic"});
    f.entity = get_string(node, "entity", stage, f.id);
    f.attribute = get_string(node, "attribute", stage, f.id);
    if (!node.contains("value")) {
      throw input_error(stage, "malformed-document", f.id, "missing field 'value'");
    }
    f.value = parse_value(node.at("value"), stage, f.id, "value");
    if (node.contains("unit")) {
      f.unit = get_string(node, "unit", stage, f.id);
    }
    f.valence = get_number(node, "valence", stage, f.id);
    f.emphasis = get_number(node, "emphasis", stage, f.id);
    f.topic = get_string(node, "topic", stage, f.id);
    check_range(f.valence, -1.0, 1.0, "valence", stage, f.id);
    check_range(f.emphasis, 0.0, 1.0, "emphasis", stage, f.id);
    if (!seen.insert(f.id).second) {
      throw input_error(stage, "duplicate-id", f.id, "duplicate fact id");
    }
    if (fb.find_entity(f.entity) == nullptr) {
      throw input_error(stage, "dangling-reference", f.id,
                        "fact references unknown entity '" + f.entity + "'");
    }
    if (!entity_attrs.insert({f.entity, f.attribute}).second) {
      throw input_error(stage, "duplicate-attribute", f.id,
                        "entity '" + f.entity + "' already has a fact for attribute '" +
                            f.attribute + "'");
    }
    fb.facts.push_back(std::move(f));
  }

  seen.clear();
  const json rules = doc.value("implications", json::array());
  if (!rules.is_array()) {
    throw input_error(stage, "malformed-document", "", "'implications' must be an array");
  }
  for (const auto& node : rules) {
    require_object(node, stage, "", "implication rule");
    ImplicationRule r;
    r.id = get_string(node, "id", stage, "");
    check_keys(node, stage, r.id, {"id", "premise", "implies"});
    if (!node.contains("premise") || !node.contains("implies")) {
      throw input_error(stage, "malformed-document", r.id,
                        "rule needs 'premise' and 'implies'");
    }
    const json& premise = node.at("premise");
    require_object(premise, stage, r.id, "premise");
    check_keys(premise, stage, r.id, {"attribute", "op", "threshold"});
    r.premise.attribute = get_string(premise, "attribute", stage, r.id);
    const std::string op = get_string(premise, "op", stage, r.id);
    auto parsed_op = predicate_op_from_string(op);
    if (!parsed_op) {
      throw input_error(stage, "unknown-op", r.id,
                        "op must be one of eq/ge/le, got '" + op + "'");
    }
    r.premise.op = *parsed_op;
    if (!premise.contains("threshold")) {
      throw input_error(stage, "malformed-document", r.id, "missing field 'threshold'");
    }
    r.premise.threshold = parse_value(premise.at("threshold"), stage, r.id, "threshold");

    const json& implies = node.at("implies");
    require_object(implies, stage, r.id, "implies");
    check_keys(implies, stage, r.id, {"property", "valence"});
    r.implies.property = get_string(implies, "property", stage, r.id);
    r.implies.valence = get_number(implies, "valence", stage, r.id);
    check_range(r.implies.valence, -1.0, 1.0, "valence", stage, r.id);

    if (!seen.insert(r.id).second) {
      throw input_error(stage, "duplicate-id", r.id, "duplicate rule id");
    }
    const bool attribute_known =
        std::any_of(fb.facts.begin(), fb.facts.end(), [&](const Fact& f) {
          return f.attribute == r.premise.attribute;
        });
    if (!attribute_known) {
      throw input_error(stage, "dangling-reference", r.id,
                        "premise attribute '" + r.premise.attribute +
                            "' appears on no fact");
    }
    fb.implications.push_back(std::move(r));
  }

  return fb;
}

std::string serialize_fact_base(const FactBase& fb) {
  json doc;
  doc["entities"] = json::array();
  for (const auto& e : fb.entities) {
    doc["entities"].push_back({{"id", e.id}, {"name", e.name}, {"class", e.cls}});
  }
  doc["facts"] = json::array();
  for (const auto& f : fb.facts) {
    json node{{"id", f.id},       {"entity", f.entity},
              {"attribute", f.attribute}, {"value", value_to_json(f.value)},
              {"valence", f.valence},     {"emphasis", f.emphasis},
              {"topic", f.topic}};
    if (f.unit) node["unit"] = *f.unit;
    doc["facts"].push_back(std::move(node));
  }
  doc["implications"] = json::array();
  for (const auto& r : fb.implications) {
    doc["implications"].push_back(
        {{"id", r.id},
         {"premise",
          {{"attribute", r.premise.attribute},
           {"op", to_string(r.premise.op)},
           {"threshold", value_to_json(r.premise.threshold)}}},
         {"implies",
          {{"property", r.implies.property}, {"valence", r.implies.valence}}}});
  }
  return doc.dump(2) + "\n";
}

std::vector<Persona> parse_personas(std::string_view text) {
  const std::string stage = "knowledge.parse_personas";
  json doc = parse_json(text, stage);
  require_object(doc, stage, "", "persona document");
  check_keys(doc, stage, "", {"personas"});
  const json list = doc.value("personas", json::array());
  if (!list.is_array()) {
    throw input_error(stage, "malformed-document", "", "'personas' must be an array");
  }

  std::vector<Persona> personas;
  std::set<std::string> seen;
  for (const auto& node : list) {
    require_object(node, stage, "", "persona");
    Persona p;
    p.id = get_string(node, "id", stage, "");
    check_keys(node, stage, p.id,
               {"id", "name", "role", "interests", "traits", "attitudes"});
    p.name = get_string(node, "name", stage, p.id);

    if (!node.contains("role")) {
      throw input_error(stage, "malformed-document", p.id, "missing field 'role'");
    }
    const json& role = node.at("role");
    require_object(role, stage, p.id, "role");
    check_keys(role, stage, p.id, {"informer_weight", "elicitor_weight"});
    p.informer_weight = get_number(role, "informer_weight", stage, p.id);
    p.elicitor_weight = get_number(role, "elicitor_weight", stage, p.id);
    check_range(p.informer_weight, 0.0, 1.0, "informer_weight", stage, p.id);
    check_range(p.elicitor_weight, 0.0, 1.0, "elicitor_weight", stage, p.id);
    if (!(p.informer_weight + p.elicitor_weight > 0.0)) {
      throw input_error(stage, "out-of-range", p.id,
                        "informer_weight + elicitor_weight must be positive");
    }

    const json interests = node.value("interests", json::object());
    require_object(interests, stage, p.id, "interests");
    for (const auto& [topic, weight] : interests.items()) {
      if (!weight.is_number()) {
        throw input_error(stage, "malformed-document", p.id,
                          "interest '" + topic + "' must be numeric");
      }
      const double w = weight.get<double>();
      check_range(w, 0.0, 1.0, "interest", stage, p.id);
      p.interests[topic] = w;
    }

    if (!node.contains("traits")) {
      throw input_error(stage, "malformed-document", p.id, "missing field 'traits'");
    }
    const json& traits = node.at("traits");
    require_object(traits, stage, p.id, "traits");
    check_keys(traits, stage, p.id,
               {"extroversion", "agreeableness", "dominance", "indirectness"});
    p.extroversion = get_number(traits, "extroversion", stage, p.id);
    p.agreeableness = get_number(traits, "agreeableness", stage, p.id);
    p.dominance = get_number(traits, "dominance", stage, p.id);
    p.indirectness = get_number(traits, "indirectness", stage, p.id);
    check_range(p.extroversion, 0.0, 1.0, "extroversion", stage, p.id);
    check_range(p.agreeableness, 0.0, 1.0, "agreeableness", stage, p.id);
    check_range(p.dominance, 0.0, 1.0, "dominance", stage, p.id);
    check_range(p.indirectness, 0.0, 1.0, "indirectness", stage, p.id);

    const json attitudes = node.value("attitudes", json::array());
    if (!attitudes.is_array()) {
      throw input_error(stage, "malformed-document", p.id, "'attitudes' must be an array");
    }
    for (const auto& att : attitudes) {
      require_object(att, stage, p.id, "attitude");
      check_keys(att, stage, p.id, {"target", "valence"});
      Attitude a;
      a.target = get_string(att, "target", stage, p.id);
      a.valence = get_number(att, "valence", stage, p.id);
      check_range(a.valence, -1.0, 1.0, "valence", stage, p.id);
      p.attitudes.push_back(std::move(a));
    }

    if (!seen.insert(p.id).second) {
      throw input_error(stage, "duplicate-id", p.id, "duplicate persona id");
    }
    personas.push_back(std::move(p));
  }
  return personas;
}

std::string serialize_personas(const std::vector<Persona>& personas) {
  json list = json::array();
  for (const auto& p : personas) {
    json node;
    node["id"] = p.id;
    node["name"] = p.name;
    node["role"] = {{"informer_weight", p.informer_weight},
                    {"elicitor_weight", p.elicitor_weight}};
    node["interests"] = json::object();
    for (const auto& [topic, w] : p.interests) node["interests"][topic] = w;
    node["traits"] = {{"extroversion", p.extroversion},
                      {"agreeableness", p.agreeableness},
                      {"dominance", p.dominance},
                      {"indirectness", p.indirectness}};
    node["attitudes"] = json::array();
    for (const auto& a : p.attitudes) {
      node["attitudes"].push_back({{"target", a.target}, {"valence", a.valence}});
    }
    list.push_back(std::move(node));
  }
  json doc;
  doc["personas"] = std::move(list);
  return doc.dump(2) + "\n";
}

ContentSelection select_content(const FactBase& fb,
                                const std::vector<Persona>& personas,
                                const GenerationConfig& cfg) {
  const std::string stage = "knowledge.select_content";
  std::string target = cfg.target_entity;
  if (target.empty()) {
    if (fb.entities.size() == 1) {
      target = fb.entities.front().id;
    } else {
      throw input_error(stage, "ambiguous-target", "",
                        "no target entity given and the fact base has " +
                            std::to_string(fb.entities.size()) + " entities");
    }
  }
  if (fb.find_entity(target) == nullptr) {
    throw input_error(stage, "unknown-entity", target, "target entity not in fact base");
  }

  auto priority_rank = [&](const std::string& topic) {
    for (std::size_t i = 0; i < cfg.topic_priority.size(); ++i) {
      if (cfg.topic_priority[i] == topic) return i;
    }
    return cfg.topic_priority.size();
  };

  std::vector<const Fact*> picked;
  for (const auto& f : fb.facts) {
    if (f.entity != target) continue;
    const bool interesting =
        std::any_of(personas.begin(), personas.end(), [&](const Persona& p) {
          return p.interest_in(f.topic) > 0.0;
        });
    if (interesting) picked.push_back(&f);
  }
  std::sort(picked.begin(), picked.end(), [&](const Fact* a, const Fact* b) {
    return std::tuple(priority_rank(a->topic), a->topic, a->id) <
           std::tuple(priority_rank(b->topic), b->topic, b->id);
  });

  if (picked.empty()) {
    throw input_error(stage, "empty-selection", target,
                      "no fact about the target matches any persona interest");
  }

  ContentSelection selection;
  for (const Fact* f : picked) selection.fact_ids.push_back(f->id);
  return selection;
}

void validate_config(const GenerationConfig& cfg) {
  const std::string stage = "config.validate";
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(cfg.emphasis_threshold) || !in_unit(cfg.opinion_threshold) ||
      !in_unit(cfg.indirectness_threshold) || !in_unit(cfg.dominance_threshold)) {
    throw input_error(stage, "out-of-range", "", "thresholds must lie within [0, 1]");
  }
  if (cfg.max_style_markers < 0) {
    throw input_error(stage, "out-of-range", "", "max_style_markers must be >= 0");
  }
  std::set<std::string> topics;
  for (const auto& t : cfg.topic_priority) {
    if (!topics.insert(t).second) {
      throw input_error(stage, "duplicate-id", t, "topic_priority repeats a topic");
    }
  }
}

}  // namespace scenewright
