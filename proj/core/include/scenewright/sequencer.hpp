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

// Step II: expand the assignment into a totally ordered plan of
// question/answer adjacency pairs with optional opinion, greeting, and
// closing acts. Underspecification enters only through later transforms.

#include <string>
#include <utility>
#include <vector>

#include "scenewright/config.hpp"
#include "scenewright/distributor.hpp"
#include "scenewright/knowledge.hpp"
#include "scenewright/scene.hpp"

namespace scenewright {

// Allocates x1..xn for main-sequence acts and y1..ym for inserted acts,
// numbered globally in insertion order.
class ActIdAllocator {
 public:
  ActId next_main() { return "x" + std::to_string(next_x_++); }
  ActId next_inserted() { return "y" + std::to_string(next_y_++); }

  // Continues numbering past any x<k>/y<k> ids already in the plan.
  static ActIdAllocator resume_from(const ScenePlan& plan);

 private:
  int next_x_ = 1;
  int next_y_ = 1;
};

// Felt = expressed emotion for a fact valence: enthusiasm above zero,
// disappointment below, neutral at zero; intensity is |valence|.
EmotionSpec emotion_for_valence(double valence);

// One adjacency pair: a question by the elicitor and the reacting inform by
// the informer. The inform's expressed emotion scales with the fact valence:
// enthusiasm when positive, disappointment when negative, neutral at zero.
std::pair<DialogueAct, DialogueAct> emit_question_answer_pair(
    const AssignedItem& item, const Fact& fact, ActIdAllocator& ids);

// Expands every item, grouped by topic (cfg.topic_priority order, remaining
// topics name-ascending), into a single chain x1..xn.
ScenePlan plan_sequence(const Assignment& assignment, const FactBase& fb,
                        const std::vector<Persona>& personas,
                        const GenerationConfig& cfg);

}  // namespace scenewright
