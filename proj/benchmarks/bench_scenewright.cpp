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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "scenewright/pipeline.hpp"
#include "scenewright/scene.hpp"
#include "scenewright/strategies.hpp"

namespace {

using namespace scenewright;

// A chained plan of `pairs` question/answer exchanges, the shape the
// sequencer emits before any transform runs.
ScenePlan make_chain_plan(int pairs) {
  ScenePlan plan;
  plan.participants = {"buyer", "seller"};
  std::string prev;
  for (int i = 0; i < pairs; ++i) {
    DialogueAct question;
    question.id = "x" + std::to_string(2 * i + 1);
    question.type = ActType::Question;
    question.speaker = "buyer";
    question.addressees = {"seller"};
    question.content = {"f" + std::to_string(i), Polarity::Query};

    DialogueAct inform;
    inform.id = "x" + std::to_string(2 * i + 2);
    inform.type = ActType::Inform;
    inform.speaker = "seller";
    inform.addressees = {"buyer"};
    inform.content = {"f" + std::to_string(i), Polarity::Assert};
    inform.reacts_to = {question.id};

    const std::string question_id = question.id;
    const std::string inform_id = inform.id;
    plan = add_act(std::move(plan), std::move(question),
                   prev.empty() ? std::optional<ActId>{} : prev);
    plan = add_act(std::move(plan), std::move(inform), question_id);
    prev = inform_id;
  }
  return plan;
}

const char* kFactsDoc = R"({
  "entities": [{"id": "car1", "name": "car", "class": "sports_car"}],
  "facts": [
    {"id": "f_top_speed", "entity": "car1", "attribute": "top_speed",
     "value": 180, "unit": "mph", "valence": 1.0, "emphasis": 0.9,
     "topic": "performance"}
  ],
  "implications": [
    {"id": "r_sporty",
     "premise": {"attribute": "top_speed", "op": "ge", "threshold": 150},
     "implies": {"property": "sporty", "valence": 1.0}}
  ]
})";

const char* kPersonasDoc = R"({
  "personas": [
    {"id": "buyer", "name": "B",
     "role": {"informer_weight": 0.0, "elicitor_weight": 1.0},
     "interests": {"performance": 1.0},
     "traits": {"extroversion": 0.6, "agreeableness": 0.7,
                "dominance": 0.2, "indirectness": 0.2},
     "attitudes": []},
    {"id": "seller", "name": "S",
     "role": {"informer_weight": 1.0, "elicitor_weight": 0.2},
     "interests": {"performance": 0.8},
     "traits": {"extroversion": 0.8, "agreeableness": 0.8,
                "dominance": 0.4, "indirectness": 0.1},
     "attitudes": [{"target": "car1", "valence": 1.0}]}
  ]
})";

const char* kTemplatesDoc = R"({
  "question.query": "How fast is this {entity}?",
  "inform.assert": "Its top speed is {value}{unit}.",
  "echo_question.re-query": "As much as {value}{unit}?",
  "confirm.agree": "That's right, its {attribute} is {value} {unit}.",
  "confirm.agree.follows_subdialogue": "Yes, no less than {value} {unit}.",
  "evaluate.assert": "Wow, that's great."
})";

void BM_Linearize(benchmark::State& state) {
  const ScenePlan plan = make_chain_plan(static_cast<int>(state.range(0)));
  for (auto ignored : state) {
    benchmark::DoNotOptimize(linearize(plan));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Linearize)->Arg(4)->Arg(32)->Arg(256)->Complexity();

void BM_InsertSubsequence(benchmark::State& state) {
  const ScenePlan plan = make_chain_plan(static_cast<int>(state.range(0)));
  const ActId anchor = "x2";
  for (auto ignored : state) {
    DialogueAct echo;
    echo.id = "y1";
    echo.type = ActType::EchoQuestion;
    echo.speaker = "buyer";
    echo.addressees = {"seller"};
    echo.content = {"f0", Polarity::ReQuery};

    DialogueAct confirm;
    confirm.id = "y2";
    confirm.type = ActType::Confirm;
    confirm.speaker = "seller";
    confirm.addressees = {"buyer"};
    confirm.content = {"f0", Polarity::Agree};
    confirm.reacts_to = {echo.id};

    benchmark::DoNotOptimize(
        insert_subsequence(plan, anchor, {std::move(echo), std::move(confirm)}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InsertSubsequence)->Arg(4)->Arg(32)->Arg(256)->Complexity();

void BM_SerializeScene(benchmark::State& state) {
  const ScenePlan plan = make_chain_plan(static_cast<int>(state.range(0)));
  for (auto ignored : state) {
    benchmark::DoNotOptimize(serialize_scene(plan));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SerializeScene)->Arg(4)->Arg(32)->Arg(256)->Complexity();

void BM_FullPipeline(benchmark::State& state) {
  const std::string facts = kFactsDoc;
  const std::string personas = kPersonasDoc;
  const std::string templates = kTemplatesDoc;
  const GenerationConfig cfg;
  for (auto ignored : state) {
    benchmark::DoNotOptimize(generate_scene(facts, personas, templates, cfg));
  }
}
BENCHMARK(BM_FullPipeline);

}  // namespace

BENCHMARK_MAIN();
