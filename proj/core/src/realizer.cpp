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

#include "scenewright/realizer.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <vector>

#include "scenewright/errors.hpp"

namespace scenewright {

using nlohmann::json;

namespace {

std::vector<std::string> split_dots(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = s.find('.', start);
    if (dot == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, dot - start));
    start = dot + 1;
  }
}

}  // namespace

TemplateSet TemplateSet::parse(std::string_view text) {
  const std::string stage = "realizer.parse_templates";
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw input_error(stage, "malformed-document", "", "not valid JSON");
  }
  if (!doc.is_object()) {
    throw input_error(stage, "malformed-document", "",
                      "template document must be a flat object");
  }
  TemplateSet set;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) {
      throw input_error(stage, "malformed-document", key,
                        "template value must be a string");
    }
    const auto parts = split_dots(key);
    const bool arity_ok = parts.size() == 2 ||
                          (parts.size() == 3 && parts[2] == "follows_subdialogue");
    if (!arity_ok || !act_type_from_string(parts[0]) ||
        !polarity_from_string(parts[1])) {
      throw input_error(stage, "unknown-key", key,
                        "keys look like type.polarity[.follows_subdialogue]");
    }
    set.entries_[key] = value.get<std::string>();
  }
  return set;
}

std::string TemplateSet::key_for(ActType type, Polarity polarity,
                                 bool follows_subdialogue) {
  std::string key = to_string(type) + "." + to_string(polarity);
  if (follows_subdialogue) key += ".follows_subdialogue";
  return key;
}

const std::string* TemplateSet::find(ActType type, Polarity polarity,
                                     bool follows_subdialogue) const {
  auto it = entries_.find(key_for(type, polarity, follows_subdialogue));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* TemplateSet::lookup(ActType type, Polarity polarity,
                                       bool follows_subdialogue) const {
  if (follows_subdialogue) {
    if (const std::string* exact = find(type, polarity, true)) return exact;
  }
  return find(type, polarity, false);
}

namespace {

// The placeholder vocabulary one act can resolve, given its proposition.
std::map<std::string, std::string> placeholder_values(
    const DialogueAct& act, const std::vector<Persona>& personas,
    const FactBase& fb, const std::optional<std::string>& next_topic) {
  const std::string stage = "realizer.realize";
  std::map<std::string, std::string> values;

  const Persona* speaker = find_persona(personas, act.speaker);
  if (speaker == nullptr) {
    throw realize_error(stage, "dangling-reference", act.id,
                        "speaker '" + act.speaker + "' is not in the roster");
  }
  values["speaker"] = speaker->name;

  const std::string& prop = act.content.proposition;
  if (const Fact* fact = fb.find_fact(prop)) {
    const Entity* entity = fb.find_entity(fact->entity);
    if (entity == nullptr) {
      throw realize_error(stage, "dangling-reference", act.id,
                          "fact '" + fact->id + "' names an unknown entity");
    }
    values["entity"] = entity->name;
    values["attribute"] = fact->attribute;
    values["value"] = format_value(fact->value);
    values["unit"] = fact->unit.value_or("");
  } else if (prop == kMarkerTopicShift) {
    if (next_topic) values["property"] = *next_topic;
  } else if (!is_discourse_marker(prop)) {
    values["property"] = prop;
  }
  return values;
}

std::string fill_template(const std::string& tmpl,
                          const std::map<std::string, std::string>& values,
                          const ActId& act_id) {
  const std::string stage = "realizer.realize";
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    const std::size_t open = tmpl.find('{', pos);
    if (open == std::string::npos) {
      out.append(tmpl, pos, std::string::npos);
      break;
    }
    out.append(tmpl, pos, open - pos);
    const std::size_t close = tmpl.find('}', open);
    if (close == std::string::npos) {
      throw realize_error(stage, "unresolved-placeholder", act_id,
                          "unterminated '{' in template");
    }
    const std::string name = tmpl.substr(open + 1, close - open - 1);
    auto it = values.find(name);
    if (it == values.end()) {
      throw realize_error(stage, "unresolved-placeholder", act_id,
                          "placeholder '{" + name + "}' has no value here");
    }
    out += it->second;
    pos = close + 1;
  }
  return out;
}

}  // namespace

RealizedScript realize(const ScenePlan& plan,
                       const std::vector<Persona>& personas,
                       const FactBase& fb, const TemplateSet& templates) {
  const std::string stage = "realizer.realize";
  const ValidationReport report = validate_plan(plan);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    throw plan_error(stage, "invalid-plan", first.subject,
                     to_string(first.kind) + ": " + first.detail);
  }
  const std::vector<ActId> order = linearize(plan);

  // An inserted subdialogue closes with the confirm that answers its echo
  // question; acts reacting to the subdialogue (or coming right after it)
  // realize through the context-flagged template when one exists.
  std::set<ActId> echoes;
  std::set<ActId> closes;
  for (const auto& [id, act] : plan.acts) {
    if (act.type == ActType::EchoQuestion) echoes.insert(id);
  }
  for (const auto& [id, act] : plan.acts) {
    if (act.type != ActType::Confirm) continue;
    for (const ActId& target : act.reacts_to) {
      if (echoes.count(target) != 0) {
        closes.insert(id);
        break;
      }
    }
  }

  // Topic each position would shift to, for metadiscourse acts.
  std::vector<std::optional<std::string>> next_topic(order.size());
  std::optional<std::string> upcoming;
  for (std::size_t i = order.size(); i-- > 0;) {
    const DialogueAct& act = plan.acts.at(order[i]);
    next_topic[i] = upcoming;
    if (const Fact* fact = fb.find_fact(act.content.proposition)) {
      upcoming = fact->topic;
      next_topic[i] = upcoming;
    }
  }

  RealizedScript script;
  script.source_plan = plan;
  script.entries.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const DialogueAct& act = plan.acts.at(order[i]);
    bool follows = i > 0 && closes.count(order[i - 1]) != 0;
    for (const ActId& target : act.reacts_to) {
      if (echoes.count(target) != 0 || closes.count(target) != 0) follows = true;
    }

    const std::string* tmpl =
        templates.lookup(act.type, act.content.polarity, follows);
    if (tmpl == nullptr) {
      throw realize_error(stage, "missing-template",
                          TemplateSet::key_for(act.type, act.content.polarity, false),
                          "no template covers act '" + act.id + "'");
    }
    const auto values = placeholder_values(act, personas, fb, next_topic[i]);
    ScriptEntry entry;
    entry.act_id = act.id;
    entry.speaker = values.at("speaker");
    entry.surface = fill_template(*tmpl, values, act.id);
    script.entries.push_back(std::move(entry));
  }
  return script;
}

std::string render_transcript(const RealizedScript& script) {
  std::string out;
  for (const auto& entry : script.entries) {
    out += entry.speaker;
    out += ": ";
    out += entry.surface;
    out += "\n";
  }
  return out;
}

}  // namespace scenewright
