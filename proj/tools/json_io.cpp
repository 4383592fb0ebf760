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

#include "json_io.hpp"

namespace dsforge::cli {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing \"" + key + "\"");
  return *it;
}

std::int64_t int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Scalar scalar_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) throw InputError(path + ": expected a scalar string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const FieldOrderError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json to_json(const Scalar& s) { return s.to_string(); }

std::vector<std::int64_t> ints_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ClassSpec class_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  std::optional<std::vector<Scalar>> row;
  if (j.contains("eigenvalues")) {
    const json& e = j["eigenvalues"];
    if (!e.is_array() || e.empty()) throw InputError(path + ".eigenvalues: expected a nonempty array");
    row.emplace();
    for (std::size_t i = 0; i < e.size(); ++i) {
      row->push_back(scalar_from_json(e[i], path + ".eigenvalues[" + std::to_string(i) + "]"));
    }
  }
  try {
    if (j.contains("jordan")) {
      const json& blocks = j["jordan"];
      if (!blocks.is_array() || blocks.empty()) throw InputError(path + ".jordan: expected a nonempty array");
      JordanForm jf;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::string bp = path + ".jordan[" + std::to_string(b) + "]";
        jf.blocks.push_back({scalar_from_json(field(blocks[b], "eigenvalue", bp), bp + ".eigenvalue"),
                             int_from_json(field(blocks[b], "size", bp), bp + ".size"),
                             blocks[b].contains("count") ? int_from_json(blocks[b]["count"], bp + ".count") : 1});
      }
      return class_from_jordan(jf, row);
    }
    if (!row) throw InputError(path + ": needs \"eigenvalues\" with \"dims\", or \"jordan\"");
    ClassSpec c{*row, ints_from_json(field(j, "dims", path), path + ".dims")};
    if (auto v = validate_class(c); !v) throw InputError(path + ": " + v.diagnostics.front());
    return c;
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
}

json to_json(const ClassSpec& c) {
  json e = json::array();
  for (const auto& x : c.type_row) e.push_back(to_json(x));
  return {{"eigenvalues", e}, {"dims", c.dims}};
}

DimVector dimvector_from_json(const json& j, const Weights& w, const std::string& path) {
  DimVector d;
  if (j.is_array()) {
    auto flat = ints_from_json(j, path);
    if (flat.size() != w.vertex_count()) {
      throw InputError(path + ": expected " + std::to_string(w.vertex_count()) + " entries");
    }
    return DimVector::from_flat(w, std::move(flat));
  }
  const auto a0 = int_from_json(field(j, "a0", path), path + ".a0");
  const json& arms = field(j, "arms", path);
  if (!arms.is_array()) throw InputError(path + ".arms: expected an array");
  std::vector<std::vector<std::int64_t>> a;
  for (std::size_t i = 0; i < arms.size(); ++i) a.push_back(ints_from_json(arms[i], path + ".arms[" + std::to_string(i) + "]"));
  d = DimVector(a0, std::move(a));
  if (!d.conforms(w)) throw InputError(path + ": arm lengths do not match the weights");
  return d;
}

json to_json(const DimVector& d) { return {{"a0", d.a0()}, {"arms", d.arms()}}; }

Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Scalar> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) throw InputError(rp + ": expected a row");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) throw InputError(rp + ": row length differs from row 0");
    for (std::size_t c = 0; c < cols; ++c) entries.push_back(scalar_from_json(j[r][c], rp + "[" + std::to_string(c) + "]"));
  }
  return Matrix(rows, cols, std::move(entries));
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(std::span<const Matrix> mats) {
  json out = json::array();
  for (const auto& m : mats) out.push_back(to_json(m));
  return out;
}

json to_json(const TypeData& t) {
  json out = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw InputError("$: expected an object");
  ProblemFile pf;
  if (j.contains("version")) {
    pf.version = static_cast<int>(int_from_json(j["version"], "$.version"));
    if (pf.version != 1) throw InputError("$.version: unsupported version " + std::to_string(pf.version));
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw InputError("$.mode: expected a string");
    pf.mode = j["mode"].get<std::string>();
    if (pf.mode != "multiplicative" && pf.mode != "additive") {
      throw InputError("$.mode: expected \"multiplicative\" or \"additive\"");
    }
  }
  const json& classes = field(j, "classes", "$");
  if (!classes.is_array() || classes.empty()) throw InputError("$.classes: expected a nonempty array");
  std::vector<ClassSpec> specs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    specs.push_back(class_from_json(classes[i], "$.classes[" + std::to_string(i) + "]"));
  }
  try {
    pf.problem = Problem::from_classes(std::move(specs));
  } catch (const DomainError& e) {
    throw InputError(std::string("$.classes: ") + e.what());
  }
  pf.classes = json::array();
  for (const auto& c : pf.problem.classes) pf.classes.push_back(to_json(c));
  if (j.contains("options")) {
    if (!j["options"].is_object()) throw InputError("$.options: expected an object");
    pf.options = j["options"];
  }
  return pf;
}

}  // namespace dsforge::cli
