#include "schreier/tingley.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "schreier/error.hpp"
#include "schreier/families.hpp"
#include "schreier/json_io.hpp"

namespace schreier {

namespace {

const Exponent& p_one() {
  static const Exponent p = Exponent::exact(1);
  return p;
}

const Exponent& p_two() {
  static const Exponent p = Exponent::exact(2);
  return p;
}

void require_sphere(const FinVector& x, Ordinal alpha, const Exponent& p,
                    const Budget& budget, const char* name = "x") {
  if (!is_on_sphere(x, alpha, p, budget)) {
    throw Error(ErrorCode::NotOnSphere,
                std::string(name) + " is not on the unit sphere",
                {{"vector", json::encode(x)}});
  }
}

bool norm_is(const FinVector& v, const Rational& target, Ordinal alpha,
             const Exponent& p, const Budget& budget) {
  return compare_norm(norm(v, alpha, p, budget), target) == 0;
}

std::string norm_text(const NormValue& v) {
  return v.p.is_exact() ? to_string(*v.pth_power) : to_string(v.value);
}

Violation distance_violation(std::size_t a, std::size_t b, const NormValue& lhs,
                             const NormValue& rhs) {
  std::string deficit = lhs.p.is_exact()
                            ? to_string(abs(*lhs.pth_power - *rhs.pth_power))
                            : to_string(Decimal(abs(lhs.value - rhs.value)));
  return {"distance", {a, b}, std::nullopt, norm_text(lhs), norm_text(rhs),
          std::move(deficit)};
}

bool equivalent(const NormValue& a, const NormValue& b) {
  if (a.p.is_exact()) return *a.pth_power == *b.pth_power;
  return abs(a.value - b.value) <= a.p.tolerance();
}

FinVector unit(Index i, int sign = 1) { return FinVector::basis(i, Rational(sign)); }

}  // namespace

MapTable diagonal_table(const SignSeq& theta, const std::vector<FinVector>& inputs,
                        Ordinal alpha, const Exponent& p) {
  MapTable t{alpha, p, {}};
  for (const auto& x : inputs) t.pairs.emplace_back(x, apply_diagonal(theta, x));
  return t;
}

void validate_table(const MapTable& t, const Budget& budget) {
  json::Json offending = json::Json::array();
  std::set<std::string> seen;
  for (std::size_t k = 0; k < t.pairs.size(); ++k) {
    const auto& [x, y] = t.pairs[k];
    if (!seen.insert(json::encode(x).dump()).second) {
      throw Error(ErrorCode::InvalidArgument,
                  "entry " + std::to_string(k) + " repeats an earlier input",
                  {{"entry", k}});
    }
    if (!is_on_sphere(x, t.alpha, t.p, budget)) {
      offending.push_back({{"entry", k}, {"side", "input"}});
    }
    if (!is_on_sphere(y, t.alpha, t.p, budget)) {
      offending.push_back({{"entry", k}, {"side", "output"}});
    }
  }
  if (!offending.empty()) {
    throw Error(ErrorCode::NotOnSphere,
                std::to_string(offending.size()) + " table vectors are off the sphere",
                {{"entries", offending}});
  }
}

VerificationReport verify_isometry(const MapTable& t, const Budget& budget) {
  validate_table(t, budget);
  VerificationReport report;
  for (std::size_t a = 0; a < t.pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < t.pairs.size(); ++b) {
      const NormValue before =
          distance(t.pairs[a].first, t.pairs[b].first, t.alpha, t.p, budget);
      const NormValue after =
          distance(t.pairs[a].second, t.pairs[b].second, t.alpha, t.p, budget);
      if (!equivalent(before, after)) {
        report.add(distance_violation(a, b, before, after));
      }
    }
  }
  return report;
}

SignSeq extract_signs(const MapTable& t, Index n) {
  std::vector<int> signs;
  for (Index i = 1; i <= n; ++i) {
    const FinVector e = unit(i);
    auto it = std::find_if(t.pairs.begin(), t.pairs.end(),
                           [&](const auto& pr) { return pr.first == e; });
    if (it == t.pairs.end()) {
      throw Error(ErrorCode::MissingBasisPair,
                  "table has no entry for e_" + std::to_string(i), {{"i", i}});
    }
    if (it->second == e) {
      signs.push_back(1);
    } else if (it->second == unit(i, -1)) {
      signs.push_back(-1);
    } else {
      throw Error(ErrorCode::NotDiagonal,
                  "T(e_" + std::to_string(i) + ") = " + to_string(it->second) +
                      " is not +-e_" + std::to_string(i),
                  {{"i", i}, {"image", json::encode(it->second)}});
    }
  }
  return SignSeq(std::move(signs));
}

VerificationReport verify_diagonal(const MapTable& t, const SignSeq& theta) {
  VerificationReport report;
  for (std::size_t k = 0; k < t.pairs.size(); ++k) {
    const auto& [x, y] = t.pairs[k];
    for (Index i : x.support().united(y.support())) {
      const Rational expected = theta(i) * x(i);
      const Rational actual = y(i);
      if (actual == expected) continue;
      report.add({x(i) == 0 ? "support" : "coordinate", {k}, i, to_string(actual),
                  to_string(expected), to_string(abs(actual - expected))});
    }
  }
  return report;
}

CheckResult check_l1(const FinVector& x, Index n, Ordinal alpha, const Exponent& p,
                     const Budget& budget) {
  require_sphere(x, alpha, p, budget);
  CheckResult r;
  r.lhs = norm_is(x + unit(n), 2, alpha, p, budget);
  r.rhs = x(n) == 1;
  r.holds = r.lhs == r.rhs;
  // The equivalence fails for p = 1; such instances are only reported.
  r.in_scope = p.greater_than_one();
  return r;
}

FinVector l3_witness(const FinVector& u, Ordinal alpha, const Exponent& p,
                     const Budget& budget) {
  if (!p.greater_than_one()) {
    throw Error(ErrorCode::UnsupportedExponent, "l3_witness needs p > 1");
  }
  require_sphere(u, alpha, p, budget, "u");
  if (u == unit(1) || u == unit(1, -1)) {
    throw Error(ErrorCode::IsPlusMinusE1, "no witness exists for u = +-e_1");
  }
  // Some i >= 2 has u(i) != 0, and a finitely supported u vanishes at some
  // j >= 2; then {i, j} is admissible and ||u +- e_j||^p >= |u(i)|^p + 1.
  // When u(j) != 0 for every j >= 2 the argument instead picks a j past a
  // norming set with |u(j)| small; that needs infinite support and cannot
  // occur here.
  Index j = 2;
  while (u(j) != 0) ++j;
  FinVector x = unit(j);
  const bool plus = compare_norm(norm(u + x, alpha, p, budget), 1) > 0;
  const bool minus = compare_norm(norm(u - x, alpha, p, budget), 1) > 0;
  if (!plus || !minus) {
    throw Error(ErrorCode::InternalInconsistency,
                "candidate e_" + std::to_string(j) + " fails validation",
                {{"j", j}});
  }
  return x;
}

CheckResult check_imp_identity(const FinSet& indices, const std::vector<Rational>& weights,
                               const std::vector<int>& signs, std::size_t l,
                               Ordinal alpha, const Exponent& p, const Budget& budget) {
  const unsigned power = p.exact_power();
  if (indices.empty() || weights.size() != indices.size() ||
      signs.size() != indices.size() || l < 1 || l > indices.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "indices, weights and signs must have equal nonzero length and "
                "1 <= l <= |indices|");
  }
  if (!is_member(indices, alpha)) {
    throw Error(ErrorCode::NotAMember,
                to_string(indices) + " is not in S_" + to_string(alpha),
                {{"set", indices.vec()}});
  }
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) {
      throw Error(ErrorCode::WeightsNotNormalized, "weights must be positive");
    }
    total += w;
  }
  if (total != 1) {
    throw Error(ErrorCode::WeightsNotNormalized,
                "weights sum to " + to_string(total) + ", not 1",
                {{"sum", to_string(total)}});
  }

  FinVector x;
  std::vector<Rational> magnitudes;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    auto a = exact_root(weights[k], power);
    if (!a) {
      throw Error(ErrorCode::NotAPerfectPower,
                  to_string(weights[k]) + " is not the " + std::to_string(power) +
                      "-th power of a rational",
                  {{"weight", to_string(weights[k])}});
    }
    if (signs[k] != 1 && signs[k] != -1) {
      throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
    }
    magnitudes.push_back(*a);
    x.set(indices.vec()[k], signs[k] * *a);
  }

  const Index target = indices.vec()[l - 1];
  const int eps = signs[l - 1];
  const NormValue lhs = norm(x + unit(target, eps), alpha, p, budget);
  const Rational rhs = 1 - weights[l - 1] + pow(1 + magnitudes[l - 1], power);

  CheckResult r;
  r.holds = *lhs.pth_power == rhs;
  r.lhs = r.rhs = r.holds;
  r.in_scope = p.greater_than_one();
  r.lhs_value = to_string(*lhs.pth_power);
  r.rhs_value = to_string(rhs);
  return r;
}

namespace {

// Positive integers a_1..a_d and N with sum a_k^2 = N^2: d - 2 ones and a
// pair (b, c) with b^2 + c^2 = N^2 - (d - 2).
std::pair<std::vector<long>, long> integer_sphere_point(std::size_t d) {
  if (d == 1) return {{1}, 1};
  const long ones = static_cast<long>(d) - 2;
  for (long n = 2;; ++n) {
    const long rest = n * n - ones;
    for (long b = 1; 2 * b * b <= rest; ++b) {
      const long c2 = rest - b * b;
      const long c = std::lround(std::sqrt(static_cast<double>(c2)));
      if (c > 0 && c * c == c2) {
        std::vector<long> a{b, c};
        a.insert(a.end(), static_cast<std::size_t>(ones), 1);
        return {a, n};
      }
    }
  }
}

}  // namespace

Fact4Witness fact4_witness(Index i, Index j, Ordinal alpha, const Budget& budget) {
  if (!(i > j && j >= 2)) {
    throw Error(ErrorCode::InvalidArgument, "fact4_witness needs i > j >= 2",
                {{"i", i}, {"j", j}});
  }
  // Smallest m >= 2 with {i, i+2, ..., i+m} maximal. Growing m only adds
  // points, so once the set leaves S_alpha no larger m can work.
  std::vector<Index> shape{i, i + 2};
  std::optional<FinSet> maximal;
  for (std::size_t m = 2; m <= budget.witness_max_span; ++m) {
    if (m > 2) shape.push_back(i + static_cast<Index>(m));
    FinSet f(shape);
    if (!is_member(f, alpha)) break;
    if (is_maximal(f, alpha)) {
      maximal = std::move(f);
      break;
    }
  }
  if (!maximal) {
    throw Error(ErrorCode::ConstructionFailed,
                "no maximal set {i, i+2, ..., i+m} found within the search budget",
                {{"i", i}, {"alpha", to_string(alpha)},
                 {"max_span", budget.witness_max_span}});
  }

  const std::size_t d = maximal->size() - 1;
  const auto [a, n] = integer_sphere_point(d);
  Fact4Witness w{{}, *maximal};
  for (std::size_t k = 0; k < d; ++k) {
    w.x.set(maximal->vec()[k + 1], Rational(a[k], n));
  }

  // supp(x) and supp(x) u {i} lie in the maximal set, so those norms are full
  // l_2 sums; supp(x) u {j} is not admissible, so ||x +- e_j||^2 < 2 exactly.
  const auto below_two = [&](const FinVector& v) {
    if (v.support_size() <= budget.max_support) {
      return *norm(v, alpha, p_two(), budget).pth_power < 2;
    }
    return !norm_attains_lp_sum(v, alpha) && lp_sum(v, 2) == 2;
  };
  const auto square = [&](const FinVector& v) {
    return *norm(v, alpha, p_two(), budget).pth_power;
  };
  const bool ok = square(w.x) == 1 && square(w.x + unit(i)) == 2 &&
                  square(w.x - unit(i)) == 2 && below_two(w.x + unit(j)) &&
                  below_two(w.x - unit(j));
  if (!ok) {
    throw Error(ErrorCode::InternalInconsistency,
                "constructed witness fails validation",
                {{"i", i}, {"j", j}, {"alpha", to_string(alpha)}});
  }
  return w;
}

CheckResult check_fact1(const FinVector& x, Index i, Ordinal alpha, const Budget& budget) {
  if (i < 2) throw Error(ErrorCode::InvalidArgument, "check_fact1 needs i >= 2");
  require_sphere(x, alpha, p_two(), budget);
  const Rational plus = *norm(unit(i) + x, alpha, p_two(), budget).pth_power;
  const Rational minus = *norm(unit(i) - x, alpha, p_two(), budget).pth_power;
  CheckResult r;
  r.lhs = plus > 1 && minus > 1;
  r.rhs = plus + minus <= 4;
  r.holds = !r.lhs || r.rhs;
  r.lhs_value = to_string(Rational(plus + minus));
  r.rhs_value = "4";
  return r;
}

CheckResult check_lemma7(const FinVector& x, Index n, Ordinal alpha, const Budget& budget) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "check_lemma7 needs n >= 2");
  if (x == unit(1) || x == unit(1, -1)) {
    throw Error(ErrorCode::ExcludedInput, "x = +-e_1 is excluded");
  }
  require_sphere(x, alpha, p_one(), budget);
  const Rational sum = *norm(unit(n) + x, alpha, p_one(), budget).pth_power +
                       *norm(unit(n) - x, alpha, p_one(), budget).pth_power;
  CheckResult r;
  r.lhs = sum == 2;
  r.rhs = x == unit(n) || x == unit(n, -1);
  r.holds = r.lhs == r.rhs;
  r.lhs_value = to_string(sum);
  return r;
}

CheckResult check_lemma20(const FinVector& x, Index i, Index j, Ordinal alpha,
                          const Budget& budget) {
  if (!(i >= 2 && i < j)) {
    throw Error(ErrorCode::InvalidArgument, "check_lemma20 needs 2 <= i < j");
  }
  require_sphere(x, alpha, p_one(), budget);
  const auto is_two = [&](const FinVector& v) {
    return *norm(v, alpha, p_one(), budget).pth_power == 2;
  };
  CheckResult r;
  r.lhs = is_two(x + unit(i)) && is_two(x - unit(i));
  r.rhs = is_two(x + unit(j)) || is_two(x - unit(j));
  r.holds = !r.lhs || r.rhs;
  return r;
}

CheckResult check_lemma23(const FinVector& x, Index i, Index j, Ordinal alpha,
                          const Budget& budget) {
  if (alpha < Ordinal::finite(2)) {
    throw Error(ErrorCode::UnsupportedOrder, "check_lemma23 needs alpha >= 2",
                {{"alpha", to_string(alpha)}});
  }
  if (i == j || i < 2 || j < 2) {
    throw Error(ErrorCode::InvalidArgument, "check_lemma23 needs i != j, both >= 2");
  }
  if (x(1) != 0) throw Error(ErrorCode::ExcludedInput, "x(1) must be 0");
  require_sphere(x, alpha, p_one(), budget);
  const auto value = [&](const FinVector& v) {
    return *norm(v, alpha, p_one(), budget).pth_power;
  };
  CheckResult r;
  r.lhs = value(x + unit(i)) == 2 && value(x + unit(j)) == 2 &&
          value(x - unit(i)) == 1 && value(x - unit(j)) == 1;
  r.rhs = x == FinVector{{i, Rational(1, 2)}, {j, Rational(1, 2)}};
  r.holds = r.lhs == r.rhs;
  return r;
}

VerificationReport check_lemma1_p1(const FinVector& x, const FinVector& y, Ordinal alpha,
                                   const Budget& budget) {
  require_sphere(x, alpha, p_one(), budget, "x");
  require_sphere(y, alpha, p_one(), budget, "y");
  VerificationReport report;
  const FinVector s = x + y;
  if (*norm(s, alpha, p_one(), budget).pth_power != 2) return report;

  const FinSet ground = x.support().united(y.support());
  if (ground.size() > budget.max_support) {
    throw Error(ErrorCode::ResourceLimit, "joint support exceeds the budget",
                {{"support", ground.size()}, {"max_support", budget.max_support}});
  }
  for_each_member_subset(ground.elements(), alpha, [&](std::span<const Index> f) {
    Rational sum_s = 0;
    Rational sum_x = 0;
    Rational sum_y = 0;
    for (Index k : f) {
      sum_s += abs(s(k));
      sum_x += abs(x(k));
      sum_y += abs(y(k));
    }
    if (sum_s != 2) return;
    FinSet witness(std::vector<Index>(f.begin(), f.end()));
    const std::size_t idx = report.witnesses.size();
    if (sum_x != 1) report.add({"not_in_A_x", {idx}, std::nullopt, to_string(sum_x), "1",
                                to_string(abs(sum_x - 1))});
    if (sum_y != 1) report.add({"not_in_A_y", {idx}, std::nullopt, to_string(sum_y), "1",
                                to_string(abs(sum_y - 1))});
    for (Index k : f) {
      if (x(k) != 0 && y(k) != 0 && sgn(x(k)) != sgn(y(k))) {
        report.add({"sign", {idx}, k, to_string(x(k)), to_string(y(k)), ""});
      }
    }
    report.witnesses.push_back(std::move(witness));
  });
  return report;
}

}  // namespace schreier
