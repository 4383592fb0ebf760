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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace dsforge::cli {

namespace {

const char* answer(const Verdict& v) { return v.undetermined ? "undetermined" : v.yes ? "yes" : "no"; }

int exit_for(const Verdict& v) { return v.undetermined ? kUndecided : v.yes ? kYes : kNo; }

SearchLimits limits_from(const Options& opts, const json& options) {
  SearchLimits l;
  if (options.contains("limit")) {
    if (!options["limit"].is_number_unsigned()) throw InputError("$.options.limit: expected a positive integer");
    l.max_nodes = options["limit"].get<std::size_t>();
  }
  if (opts.limit) l.max_nodes = *opts.limit;
  return l;
}

ProblemFile need_problem(const json& input) {
  if (input.is_null()) throw InputError("--input is required for this command");
  return problem_from_json(input);
}

json weights_json(const Weights& w) { return w.values(); }

json decomposition_json(const Decomposition& d, const Weights& w, const std::function<json(const DimVector&)>& bracket) {
  json out = json::array();
  for (const auto& b : d) {
    const RootClass c = classify(w, b);
    out.push_back({{"vector", to_json(b)},
                   {"bracket", bracket(b)},
                   {"kind", to_string(c.tag)},
                   {"strict", c.strict}});
  }
  return out;
}

json certificate_base(const ProblemFile& pf) {
  return {{"version", 1}, {"mode", pf.mode}, {"classes", pf.classes}};
}

Outcome additive(const Options& opts, const ProblemFile& pf, const SearchLimits& limits) {
  DecompositionMode mode = DecompositionMode::AdditiveZero;
  if (opts.mode && (*opts.mode == "integer" || *opts.mode == "additive-integer")) {
    mode = DecompositionMode::AdditiveInteger;
  } else if (opts.mode && *opts.mode != "zero" && *opts.mode != "additive-zero" && *opts.mode != "additive") {
    throw InputError("--mode: expected zero or integer");
  }
  const Problem& p = pf.problem;
  Verdict v;
  AdditiveTypeData z;
  try {
    z = p.additive_type();
    v = decide_closure_additive(p, mode, limits);
  } catch (const DomainError& e) {
    throw InputError(std::string("$.classes: ") + e.what());
  }
  Outcome o;
  o.exit_code = exit_for(v);
  auto zeta = [&](const DimVector& b) -> json { return zeta_star(z, b).get_str(); };
  o.report = {{"answer", answer(v)},
              {"clause", v.clause},
              {"alpha", to_json(p.alpha)},
              {"weights", weights_json(p.weights)},
              {"decomposition_mode", to_string(mode)},
              {"zeta_star_alpha", zeta(p.alpha)},
              {"decomposition", decomposition_json(v.decomposition, p.weights, zeta)},
              {"notes", v.notes}};
  if (v.yes) {
    json cert = certificate_base(pf);
    cert["decomposition"] = o.report["decomposition"];
    cert["decomposition_mode"] = to_string(mode);
    o.certificate = std::move(cert);
  }
  return o;
}

Outcome decide_closure(const Options& opts, const ProblemFile& pf, const SearchLimits& limits) {
  const std::string mode = opts.mode.value_or(pf.mode);
  if (mode == "additive") {
    Options o2 = opts;
    o2.mode.reset();
    return additive(o2, pf, limits);
  }
  if (mode != "multiplicative") throw InputError("--mode: expected multiplicative or additive");
  const Problem& p = pf.problem;
  const Verdict v = decide_closure_multiplicative(p, limits);
  auto bracket = [&](const DimVector& b) -> json { return xi_bracket(p.type, b).to_string(); };
  Outcome o;
  o.exit_code = exit_for(v);
  o.report = {{"answer", answer(v)},
              {"clause", v.clause},
              {"alpha", to_json(p.alpha)},
              {"weights", weights_json(p.weights)},
              {"bracket_alpha", bracket(p.alpha)},
              {"decomposition", decomposition_json(v.decomposition, p.weights, bracket)},
              {"notes", v.notes}};
  if (v.yes) {
    bool imaginary = false;
    for (const auto& b : v.decomposition) imaginary = imaginary || classify(p.weights, b).tag == RootTag::ImaginaryRoot;
    o.report["existence_only"] = !v.solution.has_value();
    if (imaginary && !v.solution) o.report["notes"].push_back("imaginary parts: existence by theorem only");
    json cert = certificate_base(pf);
    cert["decomposition"] = o.report["decomposition"];
    if (v.solution) {
      o.report["solution"] = to_json(v.solution->mats());
      cert["matrices"] = o.report["solution"];
      cert["check"] = "closure";
    }
    o.certificate = std::move(cert);
  }
  return o;
}

Outcome decide_rigid_cmd(const ProblemFile& pf, const SearchLimits& limits) {
  const Problem& p = pf.problem;
  const Verdict v = decide_rigid(p, limits);
  Outcome o;
  o.exit_code = exit_for(v);
  const RootClass c = classify(p.weights, p.alpha);
  o.report = {{"answer", answer(v)},
              {"reason", v.clause},
              {"alpha", to_json(p.alpha)},
              {"weights", weights_json(p.weights)},
              {"root", to_string(c.tag)},
              {"p", p_value(p.weights, p.alpha)},
              {"bracket_alpha", xi_bracket(p.type, p.alpha).to_string()}};
  if (!v.yes && !v.decomposition.empty()) {
    auto bracket = [&](const DimVector& b) -> json { return xi_bracket(p.type, b).to_string(); };
    o.report["decomposition"] = decomposition_json(v.decomposition, p.weights, bracket);
  }
  return o;
}

Outcome solve_rigid(const ProblemFile& pf, const SearchLimits& limits) {
  const Problem& p = pf.problem;
  const Membership m = in_S_xi(p.weights, p.type, p.alpha, limits);
  Outcome o;
  if (!m.member) {
    o.exit_code = m.undetermined ? kUndecided : kNo;
    o.report = {{"answer", m.undetermined ? "undetermined" : "no"}, {"reason", m.reason}, {"alpha", to_json(p.alpha)}};
    return o;
  }
  const RigidConstruction rc = construct_rigid(p);
  const auto check = verify_solution(rc.rep.mats(), p, CheckMode::Exact);
  json steps = json::array();
  for (const auto& v : rc.steps) steps.push_back(v.to_string());
  o.exit_code = check.ok ? kYes : kNo;
  o.report = {{"answer", check.ok ? "yes" : "no"},
              {"reason", m.reason},
              {"alpha", to_json(p.alpha)},
              {"weights", weights_json(p.weights)},
              {"matrices", to_json(rc.rep.mats())},
              {"steps", steps},
              {"convolutions", rc.convolutions},
              {"verified", check.ok}};
  json cert = certificate_base(pf);
  cert["matrices"] = o.report["matrices"];
  cert["check"] = "exact";
  o.certificate = std::move(cert);
  return o;
}

Outcome check_solution(const Options& opts, const json& input, const ProblemFile& pf) {
  const Problem& p = pf.problem;
  const bool has_mats = input.contains("matrices");
  const bool has_dec = input.contains("decomposition");
  if (!has_mats && !has_dec) throw InputError("$: needs \"matrices\" or \"decomposition\" to check");
  Outcome o;
  o.report = json::object();
  std::string first_failure;
  bool ok = true;
  if (has_mats) {
    const json& jm = input["matrices"];
    if (!jm.is_array()) throw InputError("$.matrices: expected an array of matrices");
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < jm.size(); ++i) mats.push_back(matrix_from_json(jm[i], "$.matrices[" + std::to_string(i) + "]"));
    std::string mode_name = opts.mode.value_or(input.value("check", std::string("exact")));
    if (mode_name != "exact" && mode_name != "closure") throw InputError("--mode: expected exact or closure");
    const auto check = verify_solution(mats, p, mode_name == "exact" ? CheckMode::Exact : CheckMode::Closure);
    json classes = json::array();
    for (const auto& c : check.classes) classes.push_back({{"ok", c.ok}, {"detail", c.detail}});
    o.report["check"] = mode_name;
    o.report["product_identity"] = check.product_ok;
    o.report["classes"] = classes;
    ok = check.ok;
    first_failure = check.first_failure;
  }
  if (has_dec) {
    const json& jd = input["decomposition"];
    if (!jd.is_array()) throw InputError("$.decomposition: expected an array");
    Decomposition parts;
    for (std::size_t i = 0; i < jd.size(); ++i) {
      const std::string path = "$.decomposition[" + std::to_string(i) + "]";
      const json& e = jd[i].is_object() && jd[i].contains("vector") ? jd[i]["vector"] : jd[i];
      parts.push_back(dimvector_from_json(e, p.weights, path));
    }
    DecompositionMode mode = DecompositionMode::Multiplicative;
    if (pf.mode == "additive") {
      mode = input.value("decomposition_mode", std::string("additive-zero")) == "additive-integer"
                 ? DecompositionMode::AdditiveInteger
                 : DecompositionMode::AdditiveZero;
    }
    bool dec_ok = false;
    try {
      dec_ok = verify_decomposition(p.weights, p.alpha, parts, admissibility(p, mode));
    } catch (const DomainError& e) {
      throw InputError(std::string("$.decomposition: ") + e.what());
    }
    o.report["decomposition_ok"] = dec_ok;
    if (!dec_ok && first_failure.empty()) first_failure = "decomposition does not re-verify";
    ok = ok && dec_ok;
  }
  o.exit_code = ok ? kYes : kNo;
  o.report["answer"] = ok ? "yes" : "no";
  if (!ok) o.report["first_failure"] = first_failure;
  return o;
}

struct RootInput {
  Weights w;
  DimVector v;
  std::optional<DimVector> box;
};

RootInput root_input(const Options& opts, const json& input) {
  RootInput r;
  std::optional<DimVector> from_problem;
  if (!input.is_null() && input.contains("classes")) {
    const ProblemFile pf = problem_from_json(input);
    r.w = pf.problem.weights;
    from_problem = pf.problem.alpha;
  } else if (opts.weights) {
    r.w = Weights(*opts.weights);
  } else if (!input.is_null() && input.contains("weights")) {
    auto w = ints_from_json(input["weights"], "$.weights");
    r.w = Weights(std::vector<int>(w.begin(), w.end()));
  } else {
    throw InputError("weights are required (--weights or an input file)");
  }
  for (int i = 0; i < r.w.k(); ++i) {
    if (r.w.w(i) < 1) throw InputError("weights must be positive");
  }
  if (opts.vector) {
    if (opts.vector->size() != r.w.vertex_count()) {
      throw InputError("--vector: expected " + std::to_string(r.w.vertex_count()) + " entries");
    }
    r.v = DimVector::from_flat(r.w, *opts.vector);
  } else if (from_problem) {
    r.v = *from_problem;
  } else if (!input.is_null() && input.contains("vector")) {
    r.v = dimvector_from_json(input["vector"], r.w, "$.vector");
  } else {
    throw InputError("a vector is required (--vector or an input file)");
  }
  if (opts.box) {
    if (opts.box->size() != r.w.vertex_count()) {
      throw InputError("--box: expected " + std::to_string(r.w.vertex_count()) + " entries");
    }
    r.box = DimVector::from_flat(r.w, *opts.box);
  } else if (!input.is_null() && input.contains("box")) {
    r.box = dimvector_from_json(input["box"], r.w, "$.box");
  }
  return r;
}

Outcome classify_root(const Options& opts, const json& input) {
  const RootInput in = root_input(opts, input);
  if (in.v.is_zero()) throw InputError("the zero vector is not classified");
  const RootClass c = classify(in.w, in.v);
  json descent = json::array();
  for (const auto& v : c.descent) descent.push_back(v.to_string());
  Outcome o;
  o.exit_code = c.is_root() ? kYes : kNo;
  o.report = {{"answer", c.is_root() ? "yes" : "no"},
              {"vector", to_json(in.v)},
              {"weights", weights_json(in.w)},
              {"root", to_string(c.tag)},
              {"sign", to_string(c.sign)},
              {"strict", c.strict},
              {"fundamental_region", c.in_fundamental_region},
              {"nonstrict_family", c.nonstrict_family},
              {"descent", descent},
              {"q", quadratic_form(in.w, in.v)},
              {"p", p_value(in.w, in.v)}};
  return o;
}

Outcome generic(const Options& opts, const json& input) {
  const RootInput in = root_input(opts, input);
  std::int64_t hint = 5;
  if (!input.is_null() && input.contains("options") && input["options"].contains("n_hint")) {
    hint = input["options"]["n_hint"].get<std::int64_t>();
  }
  GenericXi g;
  try {
    g = generic_xi(in.w, in.v, in.box.value_or(in.v), hint);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  json multiples = json::array();
  for (const auto& m : g.multiples) multiples.push_back(to_json(m));
  Outcome o;
  o.exit_code = kYes;
  o.report = {{"answer", "yes"},
              {"vector", to_json(in.v)},
              {"weights", weights_json(in.w)},
              {"box", to_json(g.box)},
              {"order", g.order},
              {"exponents", g.exponents},
              {"type", to_json(g.type)},
              {"points_checked", g.points_checked},
              {"multiples", multiples},
              {"verified", verify_generic(in.w, in.v, g)},
              {"note", "genericity is certified for the box only"}};
  json classes = json::array();
  bool valid = true;
  for (int i = 0; i < in.w.k(); ++i) {
    ClassSpec c{g.type.rows[static_cast<std::size_t>(i)], arm_dims(in.v, i)};
    valid = valid && validate_class(c).ok;
    classes.push_back(to_json(c));
  }
  if (valid) o.report["problem"] = {{"version", 1}, {"mode", "multiplicative"}, {"classes", classes}};
  return o;
}

}  // namespace

Outcome run(const Options& opts, const json& input) {
  const std::string& cmd = opts.command;
  if (cmd == "classify-root") return classify_root(opts, input);
  if (cmd == "generic-xi") return generic(opts, input);
  const ProblemFile pf = need_problem(input);
  const SearchLimits limits = limits_from(opts, pf.options);
  Outcome o;
  if (cmd == "decide-closure") {
    o = decide_closure(opts, pf, limits);
  } else if (cmd == "decide-rigid") {
    o = decide_rigid_cmd(pf, limits);
  } else if (cmd == "solve-rigid") {
    o = solve_rigid(pf, limits);
  } else if (cmd == "decide-additive") {
    o = additive(opts, pf, limits);
  } else if (cmd == "check-solution") {
    o = check_solution(opts, input, pf);
  } else {
    throw InputError("unknown command " + cmd);
  }
  return o;
}

namespace {

template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw InputError(std::string(flag) + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deligne-Simpson decisions and rigid solutions over cyclotomic fields"};
  app.require_subcommand(1);
  std::string input_path, mode, box, weights, vector, emit;
  std::size_t limit = 0;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"decide-closure", "decide A_1...A_k = 1 with A_i in the closures of the classes"},
      {"decide-rigid", "decide whether a rigid irreducible solution exists"},
      {"solve-rigid", "construct the rigid irreducible solution"},
      {"decide-additive", "decide A_1 + ... + A_k = 0 with A_i in the closures"},
      {"check-solution", "re-verify matrices or a decomposition"},
      {"classify-root", "classify a vector of the star graph's root system"},
      {"generic-xi", "find eigenvalues generic over a box"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input_path, "problem file (JSON)");
    sub->add_option("--mode", mode, "mode: multiplicative|additive, zero|integer, exact|closure");
    sub->add_option("--limit", limit, "search budget in nodes");
    sub->add_option("--box", box, "genericity box, comma-separated flat vector");
    sub->add_option("--weights", weights, "arm lengths w_1,...,w_k");
    sub->add_option("--vector", vector, "comma-separated flat vector a0,a11,...");
    sub->add_option("--emit-certificate", emit, "write a re-checkable certificate here");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : kInputError;
  }
  Options opts;
  for (const auto* sub : app.get_subcommands()) opts.command = sub->get_name();
  auto fail = [&](const std::string& msg) {
    json report = {{"answer", "error"}, {"error", msg}, {"command", opts.command}};
    out << report.dump(2) << "\n";
    err << "error: " << msg << "\n";
    return static_cast<int>(kInputError);
  };
  try {
    if (!mode.empty()) opts.mode = mode;
    if (limit > 0) opts.limit = limit;
    if (!box.empty()) opts.box = parse_list<std::int64_t>(box, "--box");
    if (!weights.empty()) opts.weights = parse_list<int>(weights, "--weights");
    if (!vector.empty()) opts.vector = parse_list<std::int64_t>(vector, "--vector");
    json input;
    if (!input_path.empty()) {
      std::ifstream in(input_path);
      if (!in) return fail("cannot open " + input_path);
      try {
        input = json::parse(in);
      } catch (const json::parse_error& e) {
        return fail(input_path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
      }
    }
    Outcome o = run(opts, input);
    o.report["command"] = opts.command;
    if (!emit.empty()) {
      if (!o.certificate) {
        o.report["certificate"] = nullptr;
      } else {
        std::ofstream cf(emit);
        if (!cf) return fail("cannot write " + emit);
        cf << o.certificate->dump(2) << "\n";
        o.report["certificate"] = emit;
      }
    }
    out << o.report.dump(2) << "\n";
    return o.exit_code;
  } catch (const InputError& e) {
    return fail(e.what());
  } catch (const ParseError& e) {
    return fail(e.what());
  } catch (const FieldOrderError& e) {
    return fail(e.what());
  } catch (const json::exception& e) {
    return fail(e.what());
  } catch (const DomainError& e) {
    return fail(e.what());
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace dsforge::cli
