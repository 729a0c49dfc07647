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

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "scenewright/errors.hpp"
#include "scenewright/sequencer.hpp"
#include "scenewright/strategies.hpp"
#include "test_util.hpp"

using namespace scenewright;
using scenewright::test::error_of;
using scenewright::test::load_fixture;

namespace {

// The showroom plan after emphasis: x1 x2 y1 y2 x3.
ScenePlan echoed_showroom_plan(const FactBase& fb,
                               const std::vector<Persona>& personas) {
  AssignedItem item;
  item.fact_id = "f_top_speed";
  item.informer = "seller";
  item.elicitor = "buyer";
  item.opinion_holder = "buyer";
  item.opinion_mode = OpinionMode::Explicit;
  GenerationConfig cfg;
  const ScenePlan base = plan_sequence(Assignment{{item}}, fb, personas, cfg);
  return emphasize(base, fb, cfg).first;
}

}  // namespace

TEST_CASE("template keys parse strictly and look up with fallback") {
  const TemplateSet set = TemplateSet::parse(R"({
    "confirm.agree": "Full restatement.",
    "confirm.agree.follows_subdialogue": "Short nod.",
    "inform.assert": "Plain answer."
  })");

  CHECK(TemplateSet::key_for(ActType::Confirm, Polarity::Agree, true) ==
        "confirm.agree.follows_subdialogue");
  CHECK(TemplateSet::key_for(ActType::Inform, Polarity::Assert, false) ==
        "inform.assert");

  REQUIRE(set.find(ActType::Confirm, Polarity::Agree, true) != nullptr);
  CHECK(*set.find(ActType::Confirm, Polarity::Agree, true) == "Short nod.");
  CHECK(set.find(ActType::Inform, Polarity::Assert, true) == nullptr);

  // lookup honors the exact context form, then falls back to the base form.
  CHECK(*set.lookup(ActType::Confirm, Polarity::Agree, true) == "Short nod.");
  CHECK(*set.lookup(ActType::Confirm, Polarity::Agree, false) ==
        "Full restatement.");
  CHECK(*set.lookup(ActType::Inform, Polarity::Assert, true) == "Plain answer.");
  CHECK(set.lookup(ActType::Evaluate, Polarity::Assert, false) == nullptr);

  SUBCASE("rejects malformed documents and unknown keys") {
    auto err = error_of([] { TemplateSet::parse("not json"); });
    REQUIRE(err);
    CHECK(err->code() == "malformed-document");

    err = error_of([] { TemplateSet::parse(R"(["inform.assert"])"); });
    REQUIRE(err);
    CHECK(err->code() == "malformed-document");

    err = error_of([] { TemplateSet::parse(R"({"inform.assert": 7})"); });
    REQUIRE(err);
    CHECK(err->code() == "malformed-document");
    CHECK(err->id() == "inform.assert");

    for (const char* key :
         {"inform", "shout.assert", "inform.maybe", "inform.assert.extra",
          "inform.assert.follows_subdialogue.more"}) {
      const std::string doc = std::string("{\"") + key + "\": \"x\"}";
      err = error_of([&] { TemplateSet::parse(doc); });
      REQUIRE(err);
      CHECK(err->code() == "unknown-key");
      CHECK(err->id() == key);
    }
  }
}

TEST_CASE("the showroom script realizes word for word") {
  const FactBase fb = parse_fact_base(load_fixture("showroom_facts.json"));
  const auto personas = parse_personas(load_fixture("showroom_personas.json"));
  const TemplateSet templates =
      TemplateSet::parse(load_fixture("showroom_templates.json"));
  const ScenePlan plan = echoed_showroom_plan(fb, personas);

  const RealizedScript script = realize(plan, personas, fb, templates);
  REQUIRE(script.entries.size() == 5);
  CHECK(script.source_plan == plan);

  const std::vector<ScriptEntry> expected = {
      {"x1", "B", "How fast is this car?"},
      {"x2", "S", "Its top speed is 180mph."},
      {"y1", "B", "As much as 180mph?"},
      {"y2", "S", "Yes, no less than 180 mph."},
      {"x3", "B", "Wow, that's great."},
  };
  CHECK(script.entries == expected);

  CHECK(render_transcript(script) ==
        "B: How fast is this car?\n"
        "S: Its top speed is 180mph.\n"
        "B: As much as 180mph?\n"
        "S: Yes, no less than 180 mph.\n"
        "B: Wow, that's great.\n");

  SUBCASE("without the subdialogue the same confirm speaks in full") {
    ScenePlan bare = remove_act(plan, "y1");
    // y2 now stands on its own answer, not an echo.
    bare.acts.at("y2").reacts_to = {"x2"};
    const RealizedScript flat = realize(bare, personas, fb, templates);
    REQUIRE(flat.entries.size() == 4);
    CHECK(flat.entries[2].act_id == "y2");
    CHECK(flat.entries[2].surface == "That's right, its top_speed is 180 mph.");
  }

  SUBCASE("an empty script renders an empty transcript") {
    CHECK(render_transcript(RealizedScript{}) == "");
  }
}

TEST_CASE("realization fails loudly rather than improvising") {
  const FactBase fb = parse_fact_base(load_fixture("showroom_facts.json"));
  const auto personas = parse_personas(load_fixture("showroom_personas.json"));
  const ScenePlan plan = echoed_showroom_plan(fb, personas);

  SUBCASE("a missing template names the base key") {
    const TemplateSet gapless = TemplateSet::parse(R"({
      "question.query": "How fast?",
      "inform.assert": "Fast.",
      "echo_question.re-query": "Really?",
      "confirm.agree": "Yes."
    })");
    const auto err =
        error_of([&] { realize(plan, personas, fb, gapless); });
    REQUIRE(err);
    CHECK(err->code() == "missing-template");
    CHECK(err->id() == "evaluate.assert");
    CHECK(err->exit_code() == 4);
  }

  SUBCASE("an unknown placeholder names the act") {
    const TemplateSet odd = TemplateSet::parse(R"({
      "question.query": "How fast is this {entity}?",
      "inform.assert": "Its {bogus} is {value}.",
      "echo_question.re-query": "Really?",
      "confirm.agree": "Yes.",
      "evaluate.assert": "Great."
    })");
    const auto err = error_of([&] { realize(plan, personas, fb, odd); });
    REQUIRE(err);
    CHECK(err->code() == "unresolved-placeholder");
    CHECK(err->id() == "x2");
  }

  SUBCASE("an unterminated brace is an error, not text") {
    const TemplateSet torn = TemplateSet::parse(R"({
      "question.query": "How fast is this {",
      "inform.assert": "Fast.",
      "echo_question.re-query": "Really?",
      "confirm.agree": "Yes.",
      "evaluate.assert": "Great."
    })");
    const auto err = error_of([&] { realize(plan, personas, fb, torn); });
    REQUIRE(err);
    CHECK(err->code() == "unresolved-placeholder");
    CHECK(err->id() == "x1");
  }

  SUBCASE("a plan with violations is rejected up front") {
    ScenePlan broken = plan;
    broken.acts.at("x1").addressees = {"buyer"};  // speaker talks to itself
    const auto err = error_of([&] {
      realize(broken, personas, fb,
              TemplateSet::parse(load_fixture("showroom_templates.json")));
    });
    REQUIRE(err);
    CHECK(err->code() == "invalid-plan");
    CHECK(err->exit_code() == 3);
  }

  SUBCASE("an unknown speaker is caught even in a well-formed plan") {
    ScenePlan strange = plan;
    DialogueAct aside;
    aside.id = "x9";
    aside.type = ActType::Inform;
    aside.speaker = "stagehand";
    aside.addressees = {"buyer"};
    aside.content = {"f_top_speed", Polarity::Assert};
    strange = add_act(std::move(strange), aside, "x3");
    strange.participants.push_back("stagehand");
    const auto err = error_of([&] {
      realize(strange, personas, fb,
              TemplateSet::parse(load_fixture("showroom_templates.json")));
    });
    REQUIRE(err);
    CHECK(err->code() == "dangling-reference");
    CHECK(err->id() == "x9");
  }
}

TEST_CASE("a stage marker announces the topic it turns to") {
  FactBase fb;
  fb.entities.push_back({"e1", "gadget", "device"});
  Fact speed;
  speed.id = "f_a1";
  speed.entity = "e1";
  speed.attribute = "speed";
  speed.value = std::int64_t{200};
  speed.topic = "alpha";
  Fact price = speed;
  price.id = "f_b1";
  price.attribute = "price";
  price.value = std::int64_t{900};
  price.topic = "beta";
  fb.facts = {speed, price};

  Persona b;
  b.id = "b";
  b.name = "Bo";
  b.elicitor_weight = 1.0;
  Persona s;
  s.id = "s";
  s.name = "Sam";
  s.informer_weight = 1.0;
  s.dominance = 0.9;
  const std::vector<Persona> personas = {b, s};

  AssignedItem first;
  first.fact_id = "f_a1";
  first.informer = "s";
  first.elicitor = "b";
  AssignedItem second = first;
  second.fact_id = "f_b1";
  GenerationConfig cfg;
  const ScenePlan base =
      plan_sequence(Assignment{{first, second}}, fb, personas, cfg);
  const ScenePlan plan = apply_style_markers(base, fb, personas, cfg).first;
  REQUIRE(linearize(plan) == std::vector<ActId>{"x1", "x2", "y1", "x3", "x4"});

  const TemplateSet templates = TemplateSet::parse(R"({
    "question.query": "What about the {attribute}?",
    "inform.assert": "The {attribute} is {value}.",
    "metadiscourse.assert": "Now to the {property}."
  })");
  const RealizedScript script = realize(plan, personas, fb, templates);
  CHECK(script.entries[2] == ScriptEntry{"y1", "Sam", "Now to the beta."});
  CHECK(render_transcript(script) ==
        "Bo: What about the speed?\n"
        "Sam: The speed is 200.\n"
        "Sam: Now to the beta.\n"
        "Bo: What about the price?\n"
        "Sam: The price is 900.\n");
}
