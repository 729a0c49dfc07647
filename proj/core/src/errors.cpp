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

#include "scenewright/errors.hpp"

#include <nlohmann/json.hpp>

#include <utility>

namespace scenewright {

Error::Error(ErrorCategory category, std::string stage, std::string code,
             std::string id, std::string message)
    : category_(category),
      stage_(std::move(stage)),
      code_(std::move(code)),
      id_(std::move(id)),
      message_(std::move(message)) {
  what_ = stage_ + ": " + code_;
  if (!id_.empty()) what_ += " [" + id_ + "]";
  what_ += ": " + message_;
}

int Error::exit_code() const noexcept {
  switch (category_) {
    case ErrorCategory::input:
      return 2;
    case ErrorCategory::plan:
      return 3;
    case ErrorCategory::realize:
      return 4;
  }
  return 1;
}

std::string Error::diagnostic_record() const {
  nlohmann::json record;
  record["stage"] = stage_;
  record["error"] = code_;
  record["id"] = id_;
  record["message"] = message_;
  return record.dump();
}

Error input_error(std::string stage, std::string code, std::string id,
                  std::string message) {
  return Error(ErrorCategory::input, std::move(stage), std::move(code),
               std::move(id), std::move(message));
}

Error plan_error(std::string stage, std::string code, std::string id,
                 std::string message) {
  return Error(ErrorCategory::plan, std::move(stage), std::move(code),
               std::move(id), std::move(message));
}

Error realize_error(std::string stage, std::string code, std::string id,
                    std::string message) {
  return Error(ErrorCategory::realize, std::move(stage), std::move(code),
               std::move(id), std::move(message));
}

}  // namespace scenewright
