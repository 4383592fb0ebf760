// Copyright 2026 The dsforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace dsforge::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2, kUndecided = 3, kInternalError = 70 };

struct Options {
  std::string command;
  std::optional<std::string> mode;
  std::optional<std::size_t> limit;
  std::optional<std::vector<std::int64_t>> box;
  std::optional<std::vector<int>> weights;
  std::optional<std::vector<std::int64_t>> vector;
};

struct Outcome {
  int exit_code = kInputError;
  json report;
  /// Set when the command produced something check-solution can re-verify.
  std::optional<json> certificate;
};

/// Runs one command on an already parsed input document (null when no
/// --input was given). Input problems raise InputError.
Outcome run(const Options& opts, const json& input);

/// Full command line driver: argument parsing, file IO, report printing.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dsforge::cli
