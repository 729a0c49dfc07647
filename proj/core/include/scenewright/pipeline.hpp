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

// End-to-end orchestration: parse -> select -> distribute -> opinions ->
// association -> sequence -> emphasize -> style markers -> validate ->
// realize -> emit. Deterministic: equal inputs give byte-identical outputs.

#include <string>
#include <vector>

#include "scenewright/config.hpp"
#include "scenewright/distributor.hpp"
#include "scenewright/knowledge.hpp"
#include "scenewright/realizer.hpp"
#include "scenewright/scene.hpp"

namespace scenewright {

struct PipelineRun {
  std::string facts_path;
  std::string personas_path;
  std::string templates_path;
  std::string out_scene_path;       // optional
  std::string out_transcript_path;  // optional
  GenerationConfig config;
};

struct PipelineResult {
  FactBase facts;
  std::vector<Persona> personas;
  Assignment assignment;
  ScenePlan plan;
  std::vector<InsertionRecord> provenance;
  RealizedScript script;
  std::string scene_document;  // JSON with provenance array
  std::string transcript;
};

// Pure core of a run: all inputs as document strings.
PipelineResult generate_scene(const std::string& facts_doc,
                              const std::string& personas_doc,
                              const std::string& templates_doc,
                              const GenerationConfig& cfg);

// File-level wrapper: checks all inputs are readable before any stage runs,
// then writes the requested artifacts.
PipelineResult run_pipeline(const PipelineRun& run);

}  // namespace scenewright
