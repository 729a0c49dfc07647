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

#include <doctest.h>

#include <string>
#include <vector>

#include "scenewright/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace scenewright;
using scenewright::test::error_of;

namespace {

DialogueAct make_act(ActId id, ActType type, std::string speaker,
                     std::string addressee, std::string prop, Polarity polarity) {
  DialogueAct act;
  act.id = std::move(id);
  act.type = type;
  act.speaker = std::move(speaker);
  act.addressees = {std::move(addressee)};
  act.content = {std::move(prop), polarity};
  return act;
}

// The three-act question/inform/evaluate chain the emphasis transform
// operates on: x1 -> x2 -> x3 with reactions x2->x1, x3->x2.
ScenePlan three_act_chain() {
  ScenePlan plan;
  plan.participants = {"buyer", "seller"};
  plan = add_act(plan, make_act("x1", ActType::Question, "buyer", "seller",
                                "f_top_speed", Polarity::Query));
  DialogueAct inform = make_act("x2", ActType::Inform, "seller", "buyer",
                                "f_top_speed", Polarity::Assert);
  inform.reacts_to = {"x1"};
  plan = add_act(plan, inform, ActId{"x1"});
  DialogueAct evaluate = make_act("x3", ActType::Evaluate, "buyer", "seller",
                                  "f_top_speed", Polarity::Assert);
  evaluate.reacts_to = {"x2"};
  plan = add_act(plan, evaluate, ActId{"x2"});
  return plan;
}

std::vector<DialogueAct> echo_confirm_pair(const std::string& echo_id,
                                           const std::string& confirm_id) {
  DialogueAct echo = make_act(echo_id, ActType::EchoQuestion, "buyer", "seller",
                              "f_top_speed", Polarity::ReQuery);
  DialogueAct confirm = make_act(confirm_id, ActType::Confirm, "seller", "buyer",
                                 "f_top_speed", Polarity::Agree);
  confirm.reacts_to = {echo_id};
  return {echo, confirm};
}

}  // namespace

TEST_CASE("add_act wires the optional ordering constraint") {
  ScenePlan plan = three_act_chain();
  CHECK(plan.constraints ==
        std::set<std::pair<ActId, ActId>>{{"x1", "x2"}, {"x2", "x3"}});
  CHECK(plan.find_act("x2") != nullptr);
  CHECK(plan.find_act("x9") == nullptr);

  auto err = error_of([&] {
    add_act(plan, make_act("x1", ActType::Inform, "buyer", "seller", "f",
                           Polarity::Assert));
  });
  REQUIRE(err);
  CHECK(err->category() == ErrorCategory::plan);
  CHECK(err->code() == "duplicate-id");

  err = error_of([&] {
    add_act(plan,
            make_act("x4", ActType::Inform, "buyer", "seller", "f", Polarity::Assert),
            ActId{"zz"});
  });
  REQUIRE(err);
  CHECK(err->code() == "unknown-anchor");
  CHECK(err->id() == "zz");
}

TEST_CASE("insert_subsequence splices a chain directly after its anchor") {
  const ScenePlan plan = three_act_chain();
  const ScenePlan spliced = insert_subsequence(plan, "x2", echo_confirm_pair("y1", "y2"));

  CHECK(linearize(spliced) == std::vector<ActId>{"x1", "x2", "y1", "y2", "x3"});
  CHECK(spliced.constraints == std::set<std::pair<ActId, ActId>>{
                                   {"x1", "x2"}, {"x2", "y1"}, {"y1", "y2"}, {"y2", "x3"}});
  // The splice makes the first inserted act the anchor's reaction.
  CHECK(spliced.acts.at("y1").reacts_to == std::set<ActId>{"x2"});
  CHECK(spliced.acts.at("y2").reacts_to == std::set<ActId>{"y1"});
  // Untouched acts stay identical.
  CHECK(spliced.acts.at("x3") == plan.acts.at("x3"));

  SUBCASE("an empty chain is the identity") {
    CHECK(insert_subsequence(plan, "x2", {}) == plan);
  }

  SUBCASE("a second splice at the same anchor lands before the first") {
    const ScenePlan twice = insert_subsequence(spliced, "x2", echo_confirm_pair("y3", "y4"));
    CHECK(linearize(twice) ==
          std::vector<ActId>{"x1", "x2", "y3", "y4", "y1", "y2", "x3"});
  }

  SUBCASE("a splice at the prior chain's tail lands after it") {
    const ScenePlan twice = insert_subsequence(spliced, "y2", echo_confirm_pair("y3", "y4"));
    CHECK(linearize(twice) ==
          std::vector<ActId>{"x1", "x2", "y1", "y2", "y3", "y4", "x3"});
  }

  SUBCASE("unknown anchor fails even with nothing to insert") {
    const auto err = error_of([&] { insert_subsequence(plan, "zz", {}); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-anchor");
  }

  SUBCASE("inserted ids must be fresh") {
    const auto err =
        error_of([&] { insert_subsequence(plan, "x2", echo_confirm_pair("x3", "y2")); });
    REQUIRE(err);
    CHECK(err->code() == "duplicate-id");
    CHECK(err->id() == "x3");
  }

  SUBCASE("inserted ids must be distinct") {
    const auto err =
        error_of([&] { insert_subsequence(plan, "x2", echo_confirm_pair("y1", "y1")); });
    REQUIRE(err);
    CHECK(err->code() == "duplicate-id");
  }
}

TEST_CASE("remove_act bridges around the removed act and scrubs reactions") {
  const ScenePlan plan = three_act_chain();
  const ScenePlan spliced = insert_subsequence(plan, "x2", echo_confirm_pair("y1", "y2"));

  SUBCASE("removing the inserted chain restores the original plan exactly") {
    ScenePlan restored = remove_act(spliced, "y1");
    restored = remove_act(restored, "y2");
    CHECK(restored == plan);
  }

  SUBCASE("removal in reverse order restores it too") {
    ScenePlan restored = remove_act(spliced, "y2");
    restored = remove_act(restored, "y1");
    CHECK(restored == plan);
  }

  SUBCASE("a middle removal bridges predecessor to successor") {
    const ScenePlan shorter = remove_act(plan, "x2");
    CHECK(shorter.constraints == std::set<std::pair<ActId, ActId>>{{"x1", "x3"}});
    // x3 no longer reacts to anything: its target is gone.
    CHECK(shorter.acts.at("x3").reacts_to.empty());
  }

  SUBCASE("unknown act") {
    const auto err = error_of([&] { remove_act(plan, "zz"); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-act");
  }
}

TEST_CASE("linearize picks the smallest ready id and rejects bad graphs") {
  SUBCASE("unconstrained acts come out in id order") {
    ScenePlan plan;
    plan.participants = {"p1", "p2"};
    for (const char* id : {"b", "a", "x10", "x2"}) {
      plan = add_act(plan, make_act(id, ActType::Inform, "p1", "p2", "f",
                                    Polarity::Assert));
    }
    // Plain string order: "x10" sorts before "x2".
    CHECK(linearize(plan) == std::vector<ActId>{"a", "b", "x10", "x2"});
  }

  SUBCASE("constraints outrank id order") {
    ScenePlan plan;
    plan.participants = {"p1", "p2"};
    for (const char* id : {"a", "b", "c"}) {
      plan = add_act(plan, make_act(id, ActType::Inform, "p1", "p2", "f",
                                    Polarity::Assert));
    }
    plan.constraints = {{"c", "a"}};
    CHECK(linearize(plan) == std::vector<ActId>{"b", "c", "a"});
  }

  SUBCASE("a cycle is a plan error naming one edge") {
    ScenePlan plan = three_act_chain();
    plan.constraints.insert({"x3", "x1"});
    const auto err = error_of([&] { linearize(plan); });
    REQUIRE(err);
    CHECK(err->category() == ErrorCategory::plan);
    CHECK(err->code() == "cycle");
    CHECK(err->id() == "x3->x1");
  }

  SUBCASE("a dangling constraint endpoint is a plan error") {
    ScenePlan plan = three_act_chain();
    plan.constraints.insert({"x3", "zz"});
    const auto err = error_of([&] { linearize(plan); });
    REQUIRE(err);
    CHECK(err->code() == "dangling-reference");
    CHECK(err->id() == "zz");
  }

  SUBCASE("random plans agree with the brute-force oracle") {
    scenewright::test::Rng rng(2026);
    for (int i = 0; i < 150; ++i) {
      const ScenePlan plan = scenewright::test::random_dag_plan(rng);
      const auto expected = scenewright::test::oracle_smallest_order(plan);
      REQUIRE(expected.has_value());
      CHECK(linearize(plan) == *expected);
    }
  }
}

TEST_CASE("validate_plan reports every violation kind") {
  SUBCASE("a well-formed chain is clean") {
    const ScenePlan plan =
        insert_subsequence(three_act_chain(), "x2", echo_confirm_pair("y1", "y2"));
    CHECK(validate_plan(plan).ok());
  }

  SUBCASE("constraint cycle") {
    ScenePlan plan = three_act_chain();
    plan.constraints.insert({"x3", "x1"});
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::ConstraintCycle);
  }

  SUBCASE("dangling constraint and reaction references") {
    ScenePlan plan = three_act_chain();
    plan.constraints.insert({"x3", "zz"});
    auto broken = plan.acts.at("x3");
    broken.reacts_to.insert("qq");
    plan.acts["x3"] = broken;
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0].kind == ViolationKind::DanglingReference);
    CHECK(report.violations[1].kind == ViolationKind::DanglingReference);
  }

  SUBCASE("reaction pointing forward") {
    ScenePlan plan = three_act_chain();
    auto early = plan.acts.at("x1");
    early.reacts_to.insert("x2");
    plan.acts["x1"] = early;
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::ReactsForward);
    CHECK(report.violations[0].subject == "x1");
  }

  SUBCASE("parallel acts cannot react to each other") {
    ScenePlan plan;
    plan.participants = {"p1", "p2"};
    plan = add_act(plan, make_act("a", ActType::Inform, "p1", "p2", "f",
                                  Polarity::Assert));
    DialogueAct b = make_act("b", ActType::Inform, "p2", "p1", "f", Polarity::Assert);
    b.reacts_to = {"a"};
    plan = add_act(plan, b);  // no constraint between a and b
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::ReactsForward);
  }

  SUBCASE("speaker among the addressees") {
    ScenePlan plan = three_act_chain();
    auto self = plan.acts.at("x3");
    self.addressees.insert("buyer");
    plan.acts["x3"] = self;
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::SpeakerIsAddressee);
    CHECK(report.violations[0].subject == "x3");
  }

  SUBCASE("question nobody answers") {
    ScenePlan plan = three_act_chain();
    plan = add_act(plan, make_act("x4", ActType::Question, "buyer", "seller",
                                  "f_top_speed", Polarity::Query),
                   ActId{"x3"});
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::UnansweredQuestion);
    CHECK(report.violations[0].subject == "x4");
  }

  SUBCASE("an answer from a non-addressee does not count") {
    ScenePlan plan;
    plan.participants = {"p1", "p2", "p3"};
    plan = add_act(plan, make_act("q", ActType::Question, "p1", "p2", "f",
                                  Polarity::Query));
    DialogueAct reply = make_act("r", ActType::Inform, "p3", "p1", "f",
                                 Polarity::Assert);
    reply.reacts_to = {"q"};
    plan = add_act(plan, reply, ActId{"q"});
    const ValidationReport report = validate_plan(plan);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::UnansweredQuestion);
    CHECK(report.violations[0].subject == "q");
  }
}

TEST_CASE("scene documents round trip through serialize and parse") {
  const ScenePlan plan =
      insert_subsequence(three_act_chain(), "x2", echo_confirm_pair("y1", "y2"));

  SUBCASE("parse of serialize is the identity") {
    const std::string doc = serialize_scene(plan);
    CHECK(parse_scene(doc) == plan);
    CHECK(serialize_scene(parse_scene(doc)) == doc);
  }

  SUBCASE("documents with provenance parse to the same plan") {
    const std::vector<InsertionRecord> records = {
        {"x2", {"y1", "y2"}, InsertionReason::Emphasis}};
    const std::string doc = serialize_scene_document(plan, records);
    CHECK(parse_scene(doc) == plan);
    const std::vector<InsertionRecord> parsed = parse_provenance(doc);
    CHECK(parsed == records);
  }

  SUBCASE("a cyclic plan is representable") {
    ScenePlan cyclic = plan;
    cyclic.constraints.insert({"x3", "x1"});
    const ScenePlan reparsed = parse_scene(serialize_scene(cyclic));
    CHECK(reparsed == cyclic);
    CHECK_FALSE(validate_plan(reparsed).ok());
  }

  SUBCASE("emotions keep their labels and intensities") {
    ScenePlan emotional = plan;
    auto act = emotional.acts.at("x2");
    act.emotion.felt = {EmotionLabel::Enthusiasm, 1.0};
    act.emotion.expressed = {EmotionLabel::Disappointment, 0.3};
    emotional.acts["x2"] = act;
    CHECK(parse_scene(serialize_scene(emotional)) == emotional);
  }
}

TEST_CASE("scene parsing is schema strict") {
  const ScenePlan plan = three_act_chain();
  const std::string doc = serialize_scene(plan);
  auto patched = [&](const std::string& needle, const std::string& replacement) {
    std::string copy = doc;
    return copy.replace(copy.find(needle), needle.size(), replacement);
  };

  SUBCASE("unknown act type") {
    const auto err = error_of([&] { parse_scene(patched("\"question\"", "\"shout\"")); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-type");
    CHECK(err->id() == "x1");
  }
  SUBCASE("unknown polarity") {
    const auto err = error_of([&] { parse_scene(patched("\"query\"", "\"maybe\"")); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-polarity");
  }
  SUBCASE("unknown emotion label") {
    const auto err = error_of([&] { parse_scene(patched("\"neutral\"", "\"rage\"")); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-label");
  }
  SUBCASE("intensity out of range") {
    const auto err =
        error_of([&] { parse_scene(patched("\"intensity\": 0.0", "\"intensity\": 1.5")); });
    REQUIRE(err);
    CHECK(err->code() == "out-of-range");
  }
  SUBCASE("empty addressees") {
    const auto err = error_of([&] {
      parse_scene(patched("\"addressees\": [\n        \"seller\"\n      ]",
                          "\"addressees\": []"));
    });
    REQUIRE(err);
    CHECK(err->code() == "malformed-document");
  }
  SUBCASE("speaker missing from the roster") {
    const auto err =
        error_of([&] { parse_scene(patched("\"speaker\": \"buyer\"", "\"speaker\": \"ghost\"")); });
    REQUIRE(err);
    CHECK(err->code() == "dangling-reference");
  }
  SUBCASE("unknown top-level field") {
    const auto err = error_of([&] {
      parse_scene(patched("\"participants\"", "\"people\""));
    });
    REQUIRE(err);
    CHECK(err->code() == "unknown-field");
  }
  SUBCASE("constraint naming a missing act") {
    const auto err = error_of([&] {
      parse_scene(patched("[\n      \"x1\",\n      \"x2\"\n    ]",
                          "[\n      \"x1\",\n      \"zz\"\n    ]"));
    });
    REQUIRE(err);
    CHECK(err->code() == "dangling-reference");
    CHECK(err->id() == "zz");
  }
}

TEST_CASE("provenance parsing validates records") {
  const ScenePlan plan =
      insert_subsequence(three_act_chain(), "x2", echo_confirm_pair("y1", "y2"));
  const std::string doc = serialize_scene_document(
      plan, {{"x2", {"y1", "y2"}, InsertionReason::Emphasis}});

  SUBCASE("a plain scene document has no records") {
    CHECK(parse_provenance(serialize_scene(plan)).empty());
  }
  SUBCASE("unknown reason") {
    std::string broken = doc;
    broken.replace(broken.find("\"emphasis\""), 10, "\"whimsy\"");
    const auto err = error_of([&] { parse_provenance(broken); });
    REQUIRE(err);
    CHECK(err->code() == "unknown-reason");
  }
  SUBCASE("anchor must be an act of the document") {
    std::string broken = doc;
    broken.replace(broken.find("\"anchor\": \"x2\""), 14, "\"anchor\": \"zz\"");
    const auto err = error_of([&] { parse_provenance(broken); });
    REQUIRE(err);
    CHECK(err->code() == "dangling-reference");
    CHECK(err->id() == "zz");
  }
}
