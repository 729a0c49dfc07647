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

#include "scenewright/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "scenewright/errors.hpp"
#include "scenewright/sequencer.hpp"
#include "scenewright/strategies.hpp"

namespace scenewright {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw input_error("pipeline.read_input", "unreadable-file", path,
                      "cannot open input file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw input_error("pipeline.read_input", "unreadable-file", path,
                      "read failed");
  }
  return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw input_error("pipeline.write_output", "unwritable-file", path,
                      "cannot open output file");
  }
  out << content;
  out.flush();
  if (!out) {
    throw input_error("pipeline.write_output", "unwritable-file", path,
                      "write failed");
  }
}

}  // namespace

PipelineResult generate_scene(const std::string& facts_doc,
                              const std::string& personas_doc,
                              const std::string& templates_doc,
                              const GenerationConfig& cfg) {
  validate_config(cfg);

  PipelineResult result;
  result.facts = parse_fact_base(facts_doc);
  result.personas = parse_personas(personas_doc);
  const TemplateSet templates = TemplateSet::parse(templates_doc);

  const ContentSelection selection = select_content(result.facts, result.personas, cfg);
  Assignment assignment = distribute(selection, result.facts, result.personas, cfg);
  assignment = assign_opinions(std::move(assignment), result.facts, result.personas, cfg);
  assignment = apply_association(std::move(assignment), result.facts, result.personas);
  result.assignment = assignment;

  ScenePlan plan = plan_sequence(assignment, result.facts, result.personas, cfg);
  auto [emphasized, emphasis_records] = emphasize(plan, result.facts, cfg);
  auto [styled, style_records] =
      apply_style_markers(emphasized, result.facts, result.personas, cfg);
  result.plan = std::move(styled);
  result.provenance = std::move(emphasis_records);
  result.provenance.insert(result.provenance.end(), style_records.begin(),
                           style_records.end());

  const ValidationReport report = validate_plan(result.plan);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    throw plan_error("pipeline.validate", "invalid-plan", first.subject,
                     to_string(first.kind) + ": " + first.detail);
  }

  result.script = realize(result.plan, result.personas, result.facts, templates);
  result.scene_document = serialize_scene_document(result.plan, result.provenance);
  result.transcript = render_transcript(result.script);
  return result;
}

PipelineResult run_pipeline(const PipelineRun& run) {
  const std::string facts_doc = read_file(run.facts_path);
  const std::string personas_doc = read_file(run.personas_path);
  const std::string templates_doc = read_file(run.templates_path);

  PipelineResult result =
      generate_scene(facts_doc, personas_doc, templates_doc, run.config);

  if (!run.out_scene_path.empty()) {
    write_file(run.out_scene_path, result.scene_document);
  }
  if (!run.out_transcript_path.empty()) {
    write_file(run.out_transcript_path, result.transcript);
  }
  return result;
}

}  // namespace scenewright
