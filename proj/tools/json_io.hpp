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

#include <string>
#include <vector>

#include <json.hpp>

#include "dsforge/solver.hpp"

namespace dsforge::cli {

using nlohmann::json;

/// Malformed input; `what()` names the JSON path of the offending value.
class InputError : public Error {
 public:
  using Error::Error;
};

Scalar scalar_from_json(const json& j, const std::string& path);
json to_json(const Scalar& s);

std::vector<std::int64_t> ints_from_json(const json& j, const std::string& path);

ClassSpec class_from_json(const json& j, const std::string& path);
json to_json(const ClassSpec& c);

DimVector dimvector_from_json(const json& j, const Weights& w, const std::string& path);
json to_json(const DimVector& d);

Matrix matrix_from_json(const json& j, const std::string& path);
json to_json(const Matrix& m);
json to_json(std::span<const Matrix> mats);

json to_json(const TypeData& t);

struct ProblemFile {
  int version = 1;
  std::string mode = "multiplicative";
  Problem problem;
  json classes;  // as given, for certificates
  json options = json::object();
};

ProblemFile problem_from_json(const json& j);

}  // namespace dsforge::cli
