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

// Command-line front end: reads a fact base, a persona roster, and a
// template set, generates one scripted scene, and prints it. Exit codes:
// 0 success, 2 input problem, 3 planning invariant broke, 4 realization gap.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

#include "scenewright/errors.hpp"
#include "scenewright/pipeline.hpp"

namespace {

void print_diagnostic(const std::string& stage, const std::string& code,
                      const std::string& id, const std::string& message) {
  nlohmann::json record;
  record["stage"] = stage;
  record["error"] = code;
  record["id"] = id;
  record["message"] = message;
  std::cerr << record.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic scripted-dialogue generator"};
  app.set_version_flag("--version", "scenewright 0.1.0");

  scenewright::PipelineRun run;
  std::string format = "text";

  app.add_option("--facts", run.facts_path, "Fact base JSON file")->required();
  app.add_option("--personas", run.personas_path, "Persona roster JSON file")
      ->required();
  app.add_option("--templates", run.templates_path, "Template set JSON file")
      ->required();
  app.add_option("--target", run.config.target_entity,
                 "Entity the scene is about (defaults to the sole entity)");
  app.add_option("--out-scene", run.out_scene_path,
                 "Write the scene description document here");
  app.add_option("--out-transcript", run.out_transcript_path,
                 "Write the rendered transcript here");
  app.add_option("--topic-priority", run.config.topic_priority,
                 "Topics in presentation order (comma separated or repeated)")
      ->delimiter(',');
  app.add_option("--emphasis-threshold", run.config.emphasis_threshold,
                 "Emphasis level that earns a confirmation subdialogue")
      ->capture_default_str();
  app.add_option("--opinion-threshold", run.config.opinion_threshold,
                 "|valence| that earns an opinion act")
      ->capture_default_str();
  app.add_option("--indirectness-threshold", run.config.indirectness_threshold,
                 "Informer indirectness gate for implicit opinions")
      ->capture_default_str();
  app.add_option("--dominance-threshold", run.config.dominance_threshold,
                 "Dominance gate for stage-marking acts")
      ->capture_default_str();
  app.add_option("--max-style-markers", run.config.max_style_markers,
                 "Cap on metadiscourse acts per scene")
      ->capture_default_str();
  app.add_flag("--no-emphasis{false}", run.config.enable_emphasis,
               "Skip the emphasis transform");
  app.add_flag("--no-association{false}", run.config.enable_association,
               "Voice every opinion explicitly");
  app.add_flag("--no-style{false}", run.config.enable_style_markers,
               "Skip stage-marking metadiscourse");
  app.add_flag("--greeting", run.config.include_greeting,
               "Open the scene with a greeting");
  app.add_flag("--closing", run.config.include_closing,
               "End the scene with a closing");
  app.add_option("--format", format, "What to print on stdout")
      ->check(CLI::IsMember({"text", "json-like"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    std::cout << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    print_diagnostic("cli.parse", "bad-arguments", "", e.what());
    return 2;
  }

  try {
    const scenewright::PipelineResult result = scenewright::run_pipeline(run);
    if (format == "json-like") {
      std::cout << result.scene_document;
    } else {
      std::cout << result.transcript;
    }
    return 0;
  } catch (const scenewright::Error& e) {
    std::cerr << e.diagnostic_record() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    print_diagnostic("cli.run", "internal-error", "", e.what());
    return 1;
  }
}
