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

#include "dsforge/solver.hpp"

#include <algorithm>
#include <map>

namespace dsforge {

Problem Problem::from_classes(std::vector<ClassSpec> classes) {
  if (classes.empty()) throw DomainError("a problem needs at least one class");
  Problem p;
  std::vector<std::vector<std::int64_t>> arms;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto v = validate_class(classes[i]);
    if (!v) throw DomainError("class " + std::to_string(i + 1) + ": " + v.diagnostics.front());
    if (classes[i].size() != classes.front().size()) {
      throw DomainError("class " + std::to_string(i + 1) + " has size " +
                        std::to_string(classes[i].size()) + ", class 1 has size " +
                        std::to_string(classes.front().size()));
    }
    p.type.rows.push_back(classes[i].type_row);
    arms.emplace_back(classes[i].dims.begin() + 1, classes[i].dims.end());
  }
  p.alpha = DimVector(classes.front().size(), std::move(arms));
  p.weights = p.type.weights();
  p.classes = std::move(classes);
  return p;
}

Problem Problem::from_type(TypeData t, DimVector alpha) {
  Problem p;
  p.weights = t.weights();
  if (!alpha.conforms(p.weights)) throw DomainError("dimension vector does not match the type");
  for (int i = 0; i < p.weights.k(); ++i) {
    p.classes.push_back({t.rows[static_cast<std::size_t>(i)], arm_dims(alpha, i)});
  }
  p.type = std::move(t);
  p.alpha = std::move(alpha);
  return p;
}

AdditiveTypeData Problem::additive_type() const {
  AdditiveTypeData out;
  for (const auto& row : type.rows) {
    auto& r = out.rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_rational()) throw DomainError("additive problems need rational eigenvalues, got " + x.to_string());
      r.push_back(x.to_rational());
    }
  }
  return out;
}

std::string to_string(DecompositionMode m) {
  switch (m) {
    case DecompositionMode::Multiplicative: return "multiplicative";
    case DecompositionMode::AdditiveZero: return "additive-zero";
    case DecompositionMode::AdditiveInteger: return "additive-integer";
  }
  return "?";
}

DecompositionSearch decompose(const Weights& w, const DimVector& alpha,
                              const std::function<bool(const ClassifiedRoot&)>& admissible,
                              const SearchLimits& limits) {
  if (!alpha.conforms(w)) throw DomainError("dimension vector does not match the weights");
  if (!alpha.is_nonnegative()) throw DomainError("decompositions need a nonnegative vector");
  std::vector<DimVector> cands;
  for (auto& cr : enumerate_positive_roots_below(w, alpha)) {
    if (admissible(cr)) cands.push_back(std::move(cr.root));
  }
  std::reverse(cands.begin(), cands.end());

  DecompositionSearch out;
  // dead[r] = smallest start index from which residual r is known to fail
  std::map<std::vector<std::int64_t>, std::size_t> dead;
  Decomposition current;
  bool stop = false;
  auto dfs = [&](auto&& self, const DimVector& residual, std::size_t start) -> bool {
    if (++out.nodes > limits.max_nodes) {
      out.limit_reached = stop = true;
      return false;
    }
    if (residual.is_zero()) {
      out.results.push_back(current);
      if (out.results.size() >= limits.max_results) out.limit_reached = stop = true;
      return true;
    }
    if (auto it = dead.find(residual.flat()); it != dead.end() && start >= it->second) return false;
    bool found = false;
    for (std::size_t i = start; i < cands.size() && !stop; ++i) {
      if (limits.proper_only && current.empty() && cands[i] == alpha) continue;
      if (!cands[i].leq(residual)) continue;
      current.push_back(cands[i]);
      found = self(self, residual - cands[i], i) || found;
      current.pop_back();
    }
    if (!found && !stop) {
      auto [it, fresh] = dead.emplace(residual.flat(), start);
      if (!fresh) it->second = std::min(it->second, start);
    }
    return found;
  };
  if (!alpha.is_zero()) dfs(dfs, alpha, 0);
  return out;
}

namespace {

std::function<bool(const ClassifiedRoot&)> bracket_one(const TypeData& t) {
  return [t](const ClassifiedRoot& cr) { return xi_bracket(t, cr.root).is_one(); };
}

}  // namespace

std::function<bool(const ClassifiedRoot&)> admissibility(const Problem& p, DecompositionMode mode) {
  switch (mode) {
    case DecompositionMode::Multiplicative:
      return bracket_one(p.type);
    case DecompositionMode::AdditiveZero: {
      auto z = p.additive_type();
      return [z](const ClassifiedRoot& cr) { return zeta_star(z, cr.root) == 0; };
    }
    case DecompositionMode::AdditiveInteger: {
      auto z = p.additive_type();
      return [z](const ClassifiedRoot& cr) {
        const Rational v = zeta_star(z, cr.root);
        return v.get_den() == 1 && (cr.cls.strict || v == 0);
      };
    }
  }
  throw DomainError("unknown decomposition mode");
}

DecompositionSearch enumerate_admissible_decompositions(const Problem& p, DecompositionMode mode,
                                                        const SearchLimits& limits) {
  return decompose(p.weights, p.alpha, admissibility(p, mode), limits);
}

bool verify_decomposition(const Weights& w, const DimVector& alpha, const Decomposition& parts,
                          const std::function<bool(const ClassifiedRoot&)>& admissible) {
  DimVector total = DimVector::zero(w);
  for (const auto& b : parts) {
    if (!b.conforms(w) || b.is_zero()) return false;
    ClassifiedRoot cr{b, classify(w, b)};
    if (!cr.cls.is_positive_root() || !admissible(cr)) return false;
    total += b;
  }
  return total == alpha;
}

namespace {

std::string join(const Decomposition& d) {
  std::string s;
  for (const auto& b : d) s += (s.empty() ? "" : " + ") + b.to_string();
  return s;
}

bool constructible(const Weights& w, const TypeData& t, const DimVector& b) {
  if (b.a0() == 0) return true;  // non-strict root: contributes no matrix block
  return in_S_xi(w, t, b).member;
}

}  // namespace

Verdict decide_closure_multiplicative(const Problem& p, const SearchLimits& limits) {
  Verdict v;
  SearchLimits first = limits;
  first.max_results = 1;
  const auto adm = admissibility(p, DecompositionMode::Multiplicative);
  const auto found = decompose(p.weights, p.alpha, adm, first);
  if (found.results.empty()) {
    if (found.limit_reached) {
      v.undetermined = true;
      v.clause = "search budget exhausted after " + std::to_string(found.nodes) + " nodes";
      return v;
    }
    v.clause = "alpha is not a sum of positive roots with bracket 1";
    const Scalar det = xi_bracket(p.type, p.alpha);
    if (!det.is_one()) v.notes.push_back("determinant condition fails: xi^[alpha] = " + det.to_string());
    return v;
  }
  v.yes = true;
  v.clause = "alpha is a sum of positive roots with bracket 1";
  v.decomposition = found.results.front();

  SearchLimits many = limits;
  many.max_results = 64;
  const auto all = decompose(p.weights, p.alpha, adm, many);
  const Decomposition* chosen = nullptr;
  for (const auto& d : all.results) {
    if (std::all_of(d.begin(), d.end(), [&](const DimVector& b) { return constructible(p.weights, p.type, b); })) {
      chosen = &d;
      break;
    }
  }
  if (!chosen) {
    v.notes.push_back("no decomposition into rigid parts among the first " + std::to_string(all.results.size()) +
                      "; existence holds but no matrices were constructed");
    return v;
  }
  std::optional<Representation> sum;
  for (const auto& b : *chosen) {
    if (b.a0() == 0) continue;
    auto part = construct_rigid(Problem::from_type(p.type, b)).rep;
    sum = sum ? Representation::direct_sum(*sum, part) : std::move(part);
  }
  if (!sum) return v;
  const auto check = verify_solution(sum->mats(), p, CheckMode::Closure);
  if (!check.ok) throw Error("internal: block-diagonal solution fails verification: " + check.first_failure);
  v.decomposition = *chosen;
  v.solution = std::move(sum);
  v.notes.push_back("matrices built as a direct sum of rigid solutions for " + join(*chosen));
  return v;
}

Verdict decide_closure_additive(const Problem& p, DecompositionMode mode, const SearchLimits& limits) {
  if (mode == DecompositionMode::Multiplicative) throw DomainError("additive decision needs an additive mode");
  Verdict v;
  SearchLimits first = limits;
  first.max_results = 1;
  const auto found = enumerate_admissible_decompositions(p, mode, first);
  const std::string cond =
      mode == DecompositionMode::AdditiveZero ? "zeta*[beta] = 0" : "zeta*[beta] integral (0 when non-strict)";
  if (found.results.empty()) {
    if (found.limit_reached) {
      v.undetermined = true;
      v.clause = "search budget exhausted after " + std::to_string(found.nodes) + " nodes";
      return v;
    }
    v.clause = "alpha is not a sum of positive roots with " + cond;
    const Rational total = zeta_star(p.additive_type(), p.alpha);
    if (total != 0) v.notes.push_back("trace condition fails: zeta*[alpha] = " + total.get_str());
    return v;
  }
  v.yes = true;
  v.clause = "alpha is a sum of positive roots with " + cond;
  v.decomposition = found.results.front();
  return v;
}

Membership in_S_xi(const Weights& w, const TypeData& t, const DimVector& a, const SearchLimits& limits) {
  Membership m;
  if (!a.conforms(w)) throw DomainError("dimension vector does not match the weights");
  if (a.is_zero()) {
    m.reason = "zero vector";
    return m;
  }
  const RootClass c = classify(w, a);
  if (c.tag == RootTag::NotRoot) {
    m.reason = "not a root";
    return m;
  }
  if (c.tag != RootTag::RealRoot) {
    m.reason = "not a real root";
    return m;
  }
  if (c.sign != RootSign::Positive) {
    m.reason = "not a positive root";
    return m;
  }
  if (!c.strict) {
    m.reason = "not strict";
    return m;
  }
  const Scalar b = xi_bracket(t, a);
  if (!b.is_one()) {
    m.reason = "xi^[alpha] = " + b.to_string() + " is not 1";
    return m;
  }
  SearchLimits l = limits;
  l.max_results = 1;
  l.proper_only = true;
  const auto found = decompose(w, a, bracket_one(t), l);
  if (!found.results.empty()) {
    m.reason = "decomposes as " + join(found.results.front());
    m.witness = found.results.front();
    return m;
  }
  if (found.limit_reached) {
    m.undetermined = true;
    m.reason = "search budget exhausted after " + std::to_string(found.nodes) + " nodes";
    return m;
  }
  m.member = true;
  m.reason = "strict real root with bracket 1 and no proper decomposition";
  return m;
}

Verdict decide_rigid(const Problem& p, const SearchLimits& limits) {
  const Membership m = in_S_xi(p.weights, p.type, p.alpha, limits);
  Verdict v;
  v.yes = m.member;
  v.undetermined = m.undetermined;
  v.clause = m.reason;
  if (m.member) v.decomposition = {p.alpha};
  if (!m.witness.empty()) v.decomposition = m.witness;
  return v;
}

namespace {

std::vector<Vertex> vertex_order(const Weights& w, VertexOrder order) {
  std::vector<Vertex> all = w.vertices();
  if (order == VertexOrder::ArmsFirst) std::rotate(all.begin(), all.begin() + 1, all.end());
  return all;
}

Representation build(const Weights& w, const TypeData& t, const DimVector& a, VertexOrder order,
                     RigidConstruction& log) {
  const std::size_t k = t.rows.size();
  if (a == DimVector::unit(w, Vertex::center())) {
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < k; ++i) mats.push_back(Matrix::scalar(1, t.rows[i].front()));
    return Representation(std::move(mats));
  }
  for (const Vertex& v : vertex_order(w, order)) {
    if (pairing_with_unit(w, a, v) <= 0) continue;
    const DimVector b = reflect(w, v, a);
    if (b.is_zero() || !b.is_strict()) continue;
    if (xi_bracket(t, DimVector::unit(w, v)).is_one()) {
      throw Error("internal: bracket at " + v.to_string() + " is 1 while reducing " + a.to_string());
    }
    log.steps.push_back(v);
    if (!v.is_center()) return build(w, rv_prime(t, v), b, order, log);
    const TypeData t2 = r0_prime(t);
    Representation below = build(w, t2, b, order, log);
    Convolution c = convolve(below, t2);
    ++log.convolutions;
    for (std::size_t i = 0; i < k; ++i) {
      if (c.type.rows[i] != t.rows[i]) throw Error("internal: r0' is not an involution on this type");
    }
    return std::move(c.rep);
  }
  throw Error("internal: no reducing vertex for " + a.to_string());
}

}  // namespace

RigidConstruction construct_rigid(const Problem& p, VertexOrder order) {
  const Membership m = in_S_xi(p.weights, p.type, p.alpha);
  if (!m.member) throw DomainError("no rigid solution: " + m.reason);
  RigidConstruction out;
  out.rep = build(p.weights, p.type, p.alpha, order, out);
  const std::size_t n = out.rep.dim();
  const auto dims = dimension_vector(out.rep.mats(), p.type);
  if (!dims || !(*dims == p.alpha)) throw Error("internal: constructed solution has the wrong dimension vector");
  if (generated_algebra_dim(out.rep.mats(), n) != n * n) {
    throw Error("internal: constructed solution is not absolutely irreducible");
  }
  if (p_value(p.weights, p.alpha) != 0) throw Error("internal: p(alpha) != 0 for a rigid solution");
  return out;
}

SolutionCheck verify_solution(std::span<const Matrix> mats, const Problem& p, CheckMode mode) {
  SolutionCheck out;
  const auto n = static_cast<std::size_t>(p.alpha.a0());
  auto fail = [&](std::string msg) {
    if (out.first_failure.empty()) out.first_failure = std::move(msg);
  };
  if (mats.size() != p.classes.size()) {
    fail("expected " + std::to_string(p.classes.size()) + " matrices, got " + std::to_string(mats.size()));
    return out;
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!mats[i].is_square() || mats[i].rows() != n) {
      fail("matrix " + std::to_string(i + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
      return out;
    }
  }
  out.product_ok = product(mats, n).is_identity();
  if (!out.product_ok) fail("product A_1...A_k is not the identity");
  bool all = out.product_ok;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    ClassCheck cc;
    if (mode == CheckMode::Exact) {
      const auto dims = matrix_dims(mats[i], p.classes[i].type_row);
      cc.ok = dims && *dims == p.classes[i].dims;
      if (!dims) {
        cc.detail = "not annihilated by its eigenvalue row";
      } else {
        std::string s;
        for (auto d : *dims) s += (s.empty() ? "" : ",") + std::to_string(d);
        cc.detail = "rank sequence (" + s + ")";
      }
    } else {
      const auto d = closure_contains(p.classes[i], mats[i]);
      cc.ok = d.contained;
      cc.detail = d.reason;
    }
    if (!cc.ok) fail("class " + std::to_string(i + 1) + ": " + cc.detail);
    all = all && cc.ok;
    out.classes.push_back(std::move(cc));
  }
  out.ok = all;
  return out;
}

ConjectureReport conjecture_condition(const Problem& p, const SearchLimits& limits) {
  ConjectureReport r;
  if (p.alpha.is_zero()) throw DomainError("conjecture condition of the zero vector");
  r.positive_root = classify(p.weights, p.alpha).is_positive_root();
  r.bracket_one = xi_bracket(p.type, p.alpha).is_one();
  r.p_alpha = p_value(p.weights, p.alpha);
  if (!r.positive_root || !r.bracket_one) return r;
  SearchLimits l = limits;
  l.proper_only = true;
  const auto found = enumerate_admissible_decompositions(p, DecompositionMode::Multiplicative, l);
  r.limit_reached = found.limit_reached;
  r.decompositions_checked = found.results.size();
  for (const auto& d : found.results) {
    std::int64_t total = 0;
    for (const auto& b : d) total += p_value(p.weights, b);
    if (r.p_alpha <= total) {
      r.violation = d;
      return r;
    }
  }
  r.holds = true;
  return r;
}

}  // namespace dsforge
