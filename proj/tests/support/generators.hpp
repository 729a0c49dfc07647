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

// Seeded pseudo-random builders for the property suites. Values come from
// small grids (tenths) so threshold comparisons stay exact.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scenewright/scene.hpp"

namespace scenewright::test {

class Rng {
 public:
  explicit Rng(unsigned seed) : engine_(seed) {}

  int below(int n) {  // [0, n)
    return std::uniform_int_distribution<int>(0, n - 1)(engine_);
  }
  int between(int lo, int hi) {  // [lo, hi]
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  double tenth(int lo, int hi) {  // {lo/10, ..., hi/10}
    return between(lo, hi) / 10.0;
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
  }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(below(static_cast<int>(items.size())))];
  }
  std::mt19937& engine() { return engine_; }

 private:
  std::mt19937 engine_;
};

// Random DAG of up to max_acts acts with shuffled id labels, so the
// lexicographic and topological orders disagree often. Two participants.
inline ScenePlan random_dag_plan(Rng& rng, int max_acts = 8) {
  const int n = rng.between(1, max_acts);
  std::vector<std::string> labels = {"a",  "b",  "c",  "d",  "e",  "f",
                                     "g",  "h",  "x1", "x2", "x3", "y1",
                                     "y2", "q7", "m0", "zz"};
  std::shuffle(labels.begin(), labels.end(), rng.engine());
  labels.resize(static_cast<std::size_t>(n));

  ScenePlan plan;
  plan.participants = {"p1", "p2"};
  for (int i = 0; i < n; ++i) {
    DialogueAct act;
    act.id = labels[static_cast<std::size_t>(i)];
    act.type = ActType::Inform;
    act.speaker = i % 2 == 0 ? "p1" : "p2";
    act.addressees = {i % 2 == 0 ? "p2" : "p1"};
    act.content = {"note", Polarity::Assert};
    plan.acts.emplace(act.id, std::move(act));
  }
  // Edges only run forward along the hidden label order, keeping it acyclic.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.chance(0.3)) {
        plan.constraints.insert({labels[static_cast<std::size_t>(i)],
                                 labels[static_cast<std::size_t>(j)]});
      }
    }
  }
  return plan;
}

// Fact base document over one entity, 1-5 facts across up to 3 topics, with
// 0-2 implication rules keyed to existing attributes.
inline std::string random_facts_doc(Rng& rng) {
  nlohmann::json doc;
  doc["entities"] = nlohmann::json::array(
      {{{"id", "e1"}, {"name", "item"}, {"class", "thing"}}});
  const int fact_count = rng.between(1, 5);
  const std::vector<std::string> topics = {"alpha", "beta", "gamma"};
  nlohmann::json facts = nlohmann::json::array();
  std::vector<std::string> attributes;
  for (int i = 1; i <= fact_count; ++i) {
    nlohmann::json fact;
    fact["id"] = "f" + std::to_string(i);
    fact["entity"] = "e1";
    fact["attribute"] = "attr" + std::to_string(i);
    attributes.push_back(fact["attribute"].get<std::string>());
    switch (rng.below(3)) {
      case 0: fact["value"] = rng.between(0, 400); break;
      case 1: fact["value"] = rng.tenth(0, 90); break;
      default: fact["value"] = "v" + std::to_string(rng.below(5)); break;
    }
    if (rng.chance(0.5)) fact["unit"] = "u";
    fact["valence"] = rng.tenth(-10, 10);
    fact["emphasis"] = rng.tenth(0, 10);
    // The first fact stays on "alpha", where every persona holds interest,
    // so the selection is never empty.
    fact["topic"] = i == 1 ? topics[0] : topics[static_cast<std::size_t>(rng.below(3))];
    facts.push_back(std::move(fact));
  }
  doc["facts"] = std::move(facts);
  nlohmann::json rules = nlohmann::json::array();
  const int rule_count = rng.below(3);
  for (int i = 1; i <= rule_count; ++i) {
    nlohmann::json rule;
    rule["id"] = "r" + std::to_string(i);
    rule["premise"] = {{"attribute", rng.pick(attributes)},
                       {"op", rng.chance(0.5) ? "ge" : "le"},
                       {"threshold", rng.between(0, 400)}};
    rule["implies"] = {{"property", "prop" + std::to_string(i)},
                       {"valence", rng.chance(0.5) ? 1.0 : -1.0}};
    rules.push_back(std::move(rule));
  }
  doc["implications"] = std::move(rules);
  return doc.dump();
}

// Roster of 2-4 personas. Every persona keeps interest in "alpha" positive
// and a positive role weight, so content selection never comes up empty.
inline std::string random_personas_doc(Rng& rng) {
  const int persona_count = rng.between(2, 4);
  nlohmann::json list = nlohmann::json::array();
  for (int i = 1; i <= persona_count; ++i) {
    nlohmann::json p;
    p["id"] = "p" + std::to_string(i);
    p["name"] = "P" + std::to_string(i);
    double informer = rng.tenth(0, 10);
    double elicitor = rng.tenth(0, 10);
    if (informer == 0.0 && elicitor == 0.0) elicitor = 1.0;
    p["role"] = {{"informer_weight", informer}, {"elicitor_weight", elicitor}};
    nlohmann::json interests;
    interests["alpha"] = rng.tenth(1, 10);
    if (rng.chance(0.7)) interests["beta"] = rng.tenth(0, 10);
    if (rng.chance(0.4)) interests["gamma"] = rng.tenth(0, 10);
    p["interests"] = std::move(interests);
    p["traits"] = {{"extroversion", rng.tenth(0, 10)},
                   {"agreeableness", rng.tenth(0, 10)},
                   {"dominance", rng.tenth(0, 10)},
                   {"indirectness", rng.tenth(0, 10)}};
    p["attitudes"] = nlohmann::json::array();
    list.push_back(std::move(p));
  }
  nlohmann::json doc;
  doc["personas"] = std::move(list);
  return doc.dump();
}

// Covers every act type the pipeline can emit; placeholders all resolve for
// pipeline-built plans.
inline std::string generic_templates_doc() {
  return R"({
    "greet.assert": "Hello.",
    "question.query": "What about the {attribute}?",
    "inform.assert": "The {attribute} is {value}{unit}.",
    "echo_question.re-query": "Really, {value}{unit}?",
    "confirm.agree": "Correct, the {attribute} is {value}{unit}.",
    "confirm.agree.follows_subdialogue": "Yes, truly {value}{unit}.",
    "evaluate.assert": "Interesting.",
    "metadiscourse.assert": "Now, about the {property}.",
    "close.assert": "Goodbye."
  })";
}

}  // namespace scenewright::test
