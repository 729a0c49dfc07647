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

#include <exception>
#include <string>

namespace scenewright {

// Failure categories map one-to-one onto the CLI exit codes.
enum class ErrorCategory {
  input,    // exit 2: malformed or invalid input documents / config
  plan,     // exit 3: a planning invariant broke
  realize,  // exit 4: realization could not cover the plan
};

// Structured failure. Every error names the stage that raised it and the id
// of the offending element, so diagnostics stay machine-readable.
class Error : public std::exception {
 public:
  Error(ErrorCategory category, std::string stage, std::string code,
        std::string id, std::string message);

  ErrorCategory category() const noexcept { return category_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& code() const noexcept { return code_; }
  const std::string& id() const noexcept { return id_; }
  const std::string& message() const noexcept { return message_; }

  // 0 is reserved for success; see the CLI contract.
  int exit_code() const noexcept;

  // One-line JSON record for the error stream.
  std::string diagnostic_record() const;

  const char* what() const noexcept override { return what_.c_str(); }

 private:
  ErrorCategory category_;
  std::string stage_;
  std::string code_;
  std::string id_;
  std::string message_;
  std::string what_;
};

Error input_error(std::string stage, std::string code, std::string id,
                  std::string message);
Error plan_error(std::string stage, std::string code, std::string id,
                 std::string message);
Error realize_error(std::string stage, std::string code, std::string id,
                    std::string message);

}  // namespace scenewright
