#include "schreier/properties.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <tuple>

#include "schreier/error.hpp"
#include "schreier/families.hpp"
#include "schreier/norm.hpp"
#include "schreier/one_sets.hpp"
#include "schreier/oracle.hpp"
#include "schreier/sampling.hpp"
#include "schreier/tingley.hpp"

namespace schreier {

namespace {

enum class Status { Pass, Fail, Skip };

struct Case {
  Status status = Status::Pass;
  std::string detail;
};

Case pass() { return {}; }
Case skip() { return {Status::Skip, {}}; }
Case fail(std::string detail) { return {Status::Fail, std::move(detail)}; }

using Kernel = std::function<Case(Sampler&, std::size_t, const Budget&)>;

const Ordinal kOmega = Ordinal::omega(1);

const std::vector<Ordinal>& structural_orders() {
  static const std::vector<Ordinal> v{Ordinal::finite(0), Ordinal::finite(1),
                                      Ordinal::finite(2), Ordinal::finite(3),
                                      kOmega,             Ordinal(1, 1)};
  return v;
}

Ordinal successor(Ordinal a) { return Ordinal(a.omega_coeff(), a.finite_part() + 1); }

FinVector unit(Index i, int sign = 1) { return FinVector::basis(i, Rational(sign)); }

std::string where(Ordinal alpha, const std::string& what) {
  return "alpha=" + to_string(alpha) + " " + what;
}

Case heredity(Sampler& s, std::size_t, const Budget&) {
  const Ordinal alpha = s.pick(structural_orders());
  const FinSet f = s.member(alpha, 12);
  std::vector<Index> g;
  for (Index k : f) {
    if (s.coin()) g.push_back(k);
  }
  const FinSet sub(std::move(g));
  if (!is_member(sub, alpha)) {
    return fail(where(alpha, to_string(sub) + " subset of member " + to_string(f)));
  }
  return pass();
}

Case spreading(Sampler& s, std::size_t, const Budget&) {
  const Ordinal alpha = s.pick(structural_orders());
  const FinSet f = s.member(alpha, 12);
  std::vector<Index> image;
  for (Index k : f) {
    const Index floor = image.empty() ? k : std::max(k, image.back() + 1);
    image.push_back(floor + static_cast<Index>(s.uniform(0, 3)));
  }
  const FinSet g = spread(f, FinSet(std::move(image)));
  if (!is_member(g, alpha)) {
    return fail(where(alpha, to_string(g) + " spreads member " + to_string(f)));
  }
  return pass();
}

Case monotonicity(Sampler& s, std::size_t, const Budget&) {
  const FinSet f = s.subset(12);
  if (s.coin()) {
    const Ordinal beta = s.pick(structural_orders());
    if (!is_member(f, beta)) return skip();
    if (!is_member(f, successor(beta))) {
      return fail(where(beta, to_string(f) + " lost at the successor"));
    }
    return pass();
  }
  const Ordinal limit = s.coin() ? kOmega : Ordinal::omega(2);
  const Index n = static_cast<Index>(s.uniform(1, 8));
  if (!is_member(f, approximant(limit, n))) return skip();
  if (!is_member(f, approximant(limit, n + 1))) {
    return fail(where(limit, to_string(f) + " lost between approximants " +
                                 std::to_string(n) + " and " + std::to_string(n + 1)));
  }
  return pass();
}

Case pair_rule(Sampler& s, std::size_t, const Budget&) {
  const Ordinal alpha = s.pick(structural_orders());
  const Index k = static_cast<Index>(s.uniform(1, 60));
  if (!is_member(FinSet{k}, alpha)) return fail(where(alpha, "singleton {" + std::to_string(k) + "}"));
  if (alpha == Ordinal::finite(0)) return pass();
  const Index m = static_cast<Index>(s.uniform(2, 59));
  const Index n = static_cast<Index>(s.uniform(m + 1, 60));
  if (!is_member(FinSet{m, n}, alpha)) return fail(where(alpha, to_string(FinSet{m, n})));
  return pass();
}

Case fact_max(Sampler& s, std::size_t, const Budget&) {
  const Ordinal alpha = s.pick(structural_orders());
  const FinSet f = s.member(alpha, 12);
  if (is_maximal(f, alpha)) return skip();
  for (Index l = f.max() + 1; l <= f.max() + 4; ++l) {
    if (!is_member(f.with(l), alpha)) {
      return fail(where(alpha, to_string(f) + " not maximal but " + std::to_string(l) +
                                   " cannot be added"));
    }
  }
  return pass();
}

Case fact3(Sampler& s, std::size_t, const Budget&) {
  const Ordinal alpha = s.pick(structural_orders());
  const FinSet f = s.member(alpha, 14);
  if (f.min() < 4) return skip();
  const Index m = static_cast<Index>(s.uniform(1, f.min() - 3));
  const Index n = static_cast<Index>(s.uniform(m + 1, f.min() - 2));
  const Index p = static_cast<Index>(s.uniform(n + 1, f.min() - 1));
  if (!is_member(f.with(m), alpha)) return skip();
  if (!is_member(f.with(n).with(p), alpha)) {
    return fail(where(alpha, to_string(f.with(m)) + " member but " +
                                 to_string(f.with(n).with(p)) + " is not"));
  }
  return pass();
}

Case decompose(Sampler& s, std::size_t, const Budget&) {
  static const std::vector<Ordinal> orders{Ordinal::finite(1), Ordinal::finite(2),
                                           Ordinal::finite(3), Ordinal(1, 1)};
  const Ordinal alpha = s.pick(orders);
  const auto g = s.maximal_member(alpha, 40);
  if (!g) return skip();
  const Ordinal beta = *classify(alpha).predecessor;
  const auto blocks = decompose_maximal(*g, alpha);
  std::vector<Index> joined;
  for (const FinSet& b : blocks) {
    if (!is_maximal(b, beta)) return fail(where(alpha, "block " + to_string(b) + " of " + to_string(*g)));
    if (!joined.empty() && b.min() <= joined.back()) return fail(where(alpha, "blocks overlap"));
    joined.insert(joined.end(), b.begin(), b.end());
  }
  if (FinSet(std::move(joined)) != *g) return fail(where(alpha, "concatenation differs"));
  if (blocks.size() != g->min()) {
    return fail(where(alpha, std::to_string(blocks.size()) + " blocks for " + to_string(*g)));
  }
  return pass();
}

Case membership_oracle(Sampler& s, std::size_t, const Budget& budget) {
  static const std::vector<Ordinal> orders{
      Ordinal::finite(0), Ordinal::finite(1), Ordinal::finite(2), Ordinal::finite(3),
      kOmega,             Ordinal(1, 1),      Ordinal(1, 2)};
  const Ordinal alpha = s.pick(orders);
  const FinSet f = s.subset(12);
  if (is_member(f, alpha) != oracle::member_bruteforce(f, alpha, budget)) {
    return fail(where(alpha, to_string(f)));
  }
  return pass();
}

const std::vector<Ordinal>& norm_orders() {
  static const std::vector<Ordinal> v{Ordinal::finite(1), Ordinal::finite(2), kOmega};
  return v;
}

Exponent small_exponent(Sampler& s, unsigned lo = 1, unsigned hi = 3) {
  return Exponent::exact(static_cast<unsigned>(s.uniform(lo, hi)));
}

Case norm_oracle(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const Exponent p = small_exponent(s);
  const FinVector x = s.vector(10, 10);
  const Rational fast = *norm(x, alpha, p, budget).pth_power;
  const Rational slow = *oracle::norm_bruteforce(x, alpha, p, budget).pth_power;
  if (fast != slow) {
    return fail(where(alpha, "p=" + to_string(p) + " x=" + to_string(x) + ": " +
                                 to_string(fast) + " vs " + to_string(slow)));
  }
  return pass();
}

Case attainment(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const Exponent p = small_exponent(s);
  const FinVector x = s.sphere_vector(alpha, p, 12, 8, budget);
  if (!is_on_sphere(x, alpha, p, budget)) return fail(where(alpha, "sampled off the sphere: " + to_string(x)));
  const auto sets = norming_sets(x, alpha, p, budget);
  if (sets.empty()) return fail(where(alpha, "no norming set for " + to_string(x)));
  for (const FinSet& f : sets) {
    Rational sum = 0;
    for (Index k : f) sum += pow(abs(x(k)), p.exact_power());
    if (sum != 1 || !is_member(f, alpha)) {
      return fail(where(alpha, to_string(f) + " sums to " + to_string(sum) + " for " + to_string(x)));
    }
  }
  return pass();
}

Case diagonal_isometry(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const SignSeq theta = s.signs(12);
  const FinVector x = s.vector(12, 6);
  const FinVector y = s.vector(12, 6);
  const FinVector tx = apply_diagonal(theta, x);
  const FinVector ty = apply_diagonal(theta, y);
  const Exponent p = small_exponent(s);
  const NormValue before = distance(x, y, alpha, p, budget);
  const NormValue after = distance(tx, ty, alpha, p, budget);
  if (*before.pth_power != *after.pth_power) {
    return fail(where(alpha, "p=" + to_string(p) + " " + to_string(*before.pth_power) +
                                 " vs " + to_string(*after.pth_power)));
  }
  const Exponent q = Exponent::approx(Decimal("1.5"));
  const Decimal a = distance(x, y, alpha, q, budget).value;
  const Decimal b = distance(tx, ty, alpha, q, budget).value;
  if (abs(a - b) > q.tolerance()) {
    return fail(where(alpha, "p=1.5 " + to_string(a) + " vs " + to_string(b)));
  }
  return pass();
}

Case l1(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.coin() ? Ordinal::finite(1) : Ordinal::finite(2);
  const Exponent p = small_exponent(s, 2, 3);
  FinVector x = s.sphere_vector(alpha, p, 10, 6, budget);
  Index n = static_cast<Index>(s.uniform(1, 12));
  const auto roll = s.uniform(0, 5);
  if (roll == 0) {
    x = unit(n, s.coin() ? 1 : -1);
  } else if (roll <= 2) {
    n = s.pick(x.support().vec());
  }
  const CheckResult r = check_l1(x, n, alpha, p, budget);
  if (!r.holds) return fail(where(alpha, "p=" + to_string(p) + " n=" + std::to_string(n) + " x=" + to_string(x)));
  return pass();
}

Case imp_identity(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const unsigned power = static_cast<unsigned>(s.uniform(2, 3));
  FinSet f = s.member(alpha, 12);
  if (power == 3 && f.size() % 2 == 0) f = f.without(f.max());
  const auto magnitudes = s.lp_sphere_point(f.size(), power);
  std::vector<Rational> weights;
  std::vector<int> signs;
  for (const auto& a : magnitudes) {
    weights.push_back(pow(a, power));
    signs.push_back(s.coin() ? 1 : -1);
  }
  const std::size_t l = s.uniform(1, f.size());
  const CheckResult r =
      check_imp_identity(f, weights, signs, l, alpha, Exponent::exact(power), budget);
  if (!r.holds) {
    return fail(where(alpha, "p=" + std::to_string(power) + " set " + to_string(f) + ": " +
                                 r.lhs_value + " vs " + r.rhs_value));
  }
  return pass();
}

Case fact1(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const Exponent two = Exponent::exact(2);
  for (int attempt = 0; attempt < 40; ++attempt) {
    const FinVector x = s.sphere_vector(alpha, two, 12, 8, budget);
    const Index i = static_cast<Index>(s.uniform(2, 14));
    const CheckResult r = check_fact1(x, i, alpha, budget);
    if (!r.lhs) continue;
    if (!r.holds) return fail(where(alpha, "i=" + std::to_string(i) + " x=" + to_string(x) + " sum " + r.lhs_value));
    return pass();
  }
  return skip();
}

Case l3(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.coin() ? Ordinal::finite(1) : Ordinal::finite(2);
  const Exponent p = small_exponent(s, 2, 3);
  FinVector u;
  do {
    u = s.coin(0.2) ? unit(static_cast<Index>(s.uniform(1, 10)), s.coin() ? 1 : -1)
                    : s.sphere_vector(alpha, p, 10, 6, budget);
  } while (u == unit(1) || u == unit(1, -1));
  const FinVector w = l3_witness(u, alpha, p, budget);
  const bool ok = is_on_sphere(w, alpha, p, budget) &&
                  compare_norm(norm(u + w, alpha, p, budget), 1) > 0 &&
                  compare_norm(norm(u - w, alpha, p, budget), 1) > 0;
  if (!ok) return fail(where(alpha, "u=" + to_string(u) + " w=" + to_string(w)));
  return pass();
}

// ||v||^2 < 2 where sum |v(k)|^2 = 2, either by evaluating the norm or, past
// the budget, by showing that no admissible set covers the support.
bool below_two(const FinVector& v, Ordinal alpha, const Budget& budget) {
  if (v.support_size() <= budget.max_support) {
    return *norm(v, alpha, Exponent::exact(2), budget).pth_power < 2;
  }
  return lp_sum(v, 2) == 2 && !is_member(v.support(), alpha);
}

Case fact4(Sampler&, std::size_t index, const Budget& budget) {
  std::vector<std::tuple<Index, Index, Ordinal>> grid;
  for (unsigned a = 1; a <= 2; ++a) {
    for (Index i = 3; i <= 8; ++i) {
      for (Index j = 2; j < i; ++j) grid.emplace_back(i, j, Ordinal::finite(a));
    }
  }
  const auto [i, j, alpha] = grid[index % grid.size()];
  const Fact4Witness w = fact4_witness(i, j, alpha, budget);
  const Exponent two = Exponent::exact(2);
  const FinVector& x = w.x;
  const std::string tag = where(alpha, "i=" + std::to_string(i) + " j=" + std::to_string(j));
  if (lp_sum(x, 2) != 1 || !is_member(x.support(), alpha)) return fail(tag + " x not on the sphere");
  for (int sign : {1, -1}) {
    if (*norm(x + unit(i, sign), alpha, two, budget).pth_power != 2) {
      return fail(tag + " norm at e_i is not 2");
    }
    if (!below_two(x + unit(j, sign), alpha, budget)) return fail(tag + " norm at e_j is not below 2");
  }
  return pass();
}

std::vector<FinVector> tingley_inputs(Sampler& s, Ordinal alpha, const Exponent& p,
                                      Index n, std::size_t samples, const Budget& budget) {
  std::vector<FinVector> inputs;
  for (Index k = 1; k <= n; ++k) inputs.push_back(unit(k));
  while (inputs.size() < n + samples) {
    FinVector x = s.sphere_vector(alpha, p, n, 5, budget);
    if (std::find(inputs.begin(), inputs.end(), x) == inputs.end()) inputs.push_back(std::move(x));
  }
  return inputs;
}

Case tingley_roundtrip(Sampler& s, std::size_t, const Budget& budget) {
  const Index n = 10;
  const Ordinal alpha = s.coin() ? Ordinal::finite(1) : Ordinal::finite(2);
  const Exponent p = small_exponent(s, 1, 2);
  const SignSeq theta = s.signs(n);
  const MapTable t = diagonal_table(theta, tingley_inputs(s, alpha, p, n, 50, budget), alpha, p);
  validate_table(t, budget);
  const SignSeq found = extract_signs(t, n);
  if (found.raw() != theta.raw()) return fail(where(alpha, "recovered " + to_string(found) + " for " + to_string(theta)));
  if (!verify_isometry(t, budget).ok) return fail(where(alpha, "diagonal map reported non-isometric"));
  if (!verify_diagonal(t, found).ok) return fail(where(alpha, "diagonal map reported non-diagonal"));
  return pass();
}

Case tingley_corruption(Sampler& s, std::size_t, const Budget& budget) {
  const Index n = 10;
  const Ordinal alpha = s.coin() ? Ordinal::finite(1) : Ordinal::finite(2);
  const Exponent p = small_exponent(s, 1, 2);
  const SignSeq theta = s.signs(n);
  MapTable t = diagonal_table(theta, tingley_inputs(s, alpha, p, n, 10, budget), alpha, p);
  const std::size_t entry = s.uniform(0, t.pairs.size() - 1);
  auto& image = t.pairs[entry].second;
  const Index c = s.pick(image.support().vec());
  image.set(c, -image(c));
  const std::string tag = where(alpha, "flip at coordinate " + std::to_string(c) + " of entry " +
                                           std::to_string(entry));

  if (verify_isometry(t, budget).ok && verify_diagonal(t, theta).ok) return fail(tag + " went unnoticed");
  // Flipping the image of a basis vector may yield another diagonal map, so
  // only other entries must also be caught without knowing theta.
  if (entry >= n) {
    try {
      if (verify_diagonal(t, extract_signs(t, n)).ok) return fail(tag + " passes with extracted signs");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDiagonal) throw;
    }
  }
  return pass();
}

Case one_set_analysis(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = Ordinal::finite(1);
  const FinVector x = s.sphere_vector(alpha, Exponent::exact(1), 10, 8, budget);
  const OneSetReport r = analyze_one_sets(x, alpha, budget);
  const std::string tag = "x=" + to_string(x);
  if (r.one_sets.empty()) return fail(tag + " has no 1-set");
  if (!(r.gap > 0 && r.gap <= 1)) return fail(tag + " gap " + to_string(r.gap));
  std::string bad;
  const FinSet supp = x.support();
  for_each_member_subset(supp.elements(), alpha, [&](std::span<const Index> f) {
    Rational sum = 0;
    for (Index k : f) sum += abs(x(k));
    if (sum != 1 && sum > 1 - r.gap) bad = "a non-1-set sums to " + to_string(sum);
  });
  if (!bad.empty()) return fail(tag + " " + bad);

  std::vector<FinSet> nonmaximal;
  for (const FinSet& f : r.one_sets) {
    if (!oracle::maximal_bruteforce(f, alpha, 4, budget)) nonmaximal.push_back(f);
  }
  if (nonmaximal.size() > 1) return fail(tag + " has several non-maximal 1-sets");
  if (nonmaximal.empty() != !r.nonmaximal_one_set.has_value()) return fail(tag + " non-maximal 1-set mismatch");
  if (r.nonmaximal_one_set) {
    const FinSet& f = *r.nonmaximal_one_set;
    std::vector<Index> tail;
    for (Index k : supp) {
      if (k >= f.min()) tail.push_back(k);
    }
    if (FinSet(std::move(tail)) != f) return fail(tag + " non-maximal 1-set " + to_string(f) + " is not a tail");
  }
  return pass();
}

// Sphere vectors for the p = 1 checks, mixing random points with the
// extremal shapes the statements single out.
FinVector p1_vector(Sampler& s, Ordinal alpha, Index lo, const Budget& budget) {
  const Index a = static_cast<Index>(s.uniform(lo, 10));
  Index b = static_cast<Index>(s.uniform(lo, 10));
  if (b == a) b = a + 1;
  FinVector x;
  switch (s.uniform(0, 5)) {
    case 0:
      x = unit(a, s.coin() ? 1 : -1);
      break;
    case 1:
      x = FinVector{{a, Rational(1, 2)}, {b, Rational(s.coin() ? 1 : -1, 2)}};
      break;
    default:
      x = s.sphere_vector(alpha, Exponent::exact(1), 10, 6, budget);
      if (x(1) != 0 && lo > 1) {
        x.set(1, 0);
        if (x.is_zero()) x = unit(a);
      }
  }
  x *= Rational(1 / *norm(x, alpha, Exponent::exact(1), budget).pth_power);
  return x;
}

Case lemma7(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const Index n = static_cast<Index>(s.uniform(2, 12));
  FinVector x;
  do {
    x = s.coin(0.2) ? unit(n, s.coin() ? 1 : -1) : p1_vector(s, alpha, 1, budget);
  } while (x == unit(1) || x == unit(1, -1));
  const CheckResult r = check_lemma7(x, n, alpha, budget);
  if (!r.holds) return fail(where(alpha, "n=" + std::to_string(n) + " x=" + to_string(x) + " sum " + r.lhs_value));
  return pass();
}

Case lemma20(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.pick(norm_orders());
  const Index i = static_cast<Index>(s.uniform(2, 11));
  const Index j = static_cast<Index>(s.uniform(i + 1, 12));
  const FinVector x = p1_vector(s, alpha, 1, budget);
  const CheckResult r = check_lemma20(x, i, j, alpha, budget);
  if (!r.holds) return fail(where(alpha, "i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" + to_string(x)));
  return pass();
}

Case lemma23(Sampler& s, std::size_t, const Budget& budget) {
  static const std::vector<Ordinal> orders{Ordinal::finite(2), Ordinal::finite(3), kOmega};
  const Ordinal alpha = s.pick(orders);
  const Index i = static_cast<Index>(s.uniform(2, 12));
  Index j = static_cast<Index>(s.uniform(2, 12));
  if (j == i) j = i + 1;
  const FinVector x = s.coin(0.25) ? FinVector{{i, Rational(1, 2)}, {j, Rational(1, 2)}}
                                   : p1_vector(s, alpha, 2, budget);
  const CheckResult r = check_lemma23(x, i, j, alpha, budget);
  if (!r.holds) return fail(where(alpha, "i=" + std::to_string(i) + " j=" + std::to_string(j) + " x=" + to_string(x)));
  return pass();
}

Case lemma1_p1(Sampler& s, std::size_t, const Budget& budget) {
  const Ordinal alpha = s.coin() ? Ordinal::finite(1) : Ordinal::finite(2);
  const FinVector x = p1_vector(s, alpha, 1, budget);
  FinVector y;
  switch (s.uniform(0, 2)) {
    case 0:
      y = x;
      break;
    case 1: {
      // Same signs on a shared norming set, different elsewhere.
      const FinSet f = norming_sets(x, alpha, Exponent::exact(1), budget).front();
      y = FinVector{};
      for (Index k : f) y.set(k, x(k));
      const Index extra = static_cast<Index>(s.uniform(1, 12));
      if (!f.contains(extra)) y.set(extra, s.rational(4) / 8);
      if (!is_on_sphere(y, alpha, Exponent::exact(1), budget)) y = x;
      break;
    }
    default:
      y = p1_vector(s, alpha, 1, budget);
  }
  const VerificationReport r = check_lemma1_p1(x, y, alpha, budget);
  if (!r.ok) return fail(where(alpha, "x=" + to_string(x) + " y=" + to_string(y) + " " + r.violations.front().kind));
  return pass();
}

const std::vector<std::pair<std::string, Kernel>>& registry() {
  static const std::vector<std::pair<std::string, Kernel>> r{
      {"membership-oracle", membership_oracle},
      {"heredity", heredity},
      {"spreading", spreading},
      {"monotonicity", monotonicity},
      {"pair-rule", pair_rule},
      {"fact-max", fact_max},
      {"fact3", fact3},
      {"decompose", decompose},
      {"norm-oracle", norm_oracle},
      {"attainment", attainment},
      {"diagonal-isometry", diagonal_isometry},
      {"l1", l1},
      {"imp-identity", imp_identity},
      {"fact1", fact1},
      {"l3-witness", l3},
      {"fact4-witness", fact4},
      {"tingley-roundtrip", tingley_roundtrip},
      {"tingley-corruption", tingley_corruption},
      {"one-sets", one_set_analysis},
      {"lemma7", lemma7},
      {"lemma20", lemma20},
      {"lemma23", lemma23},
      {"lemma1-p1", lemma1_p1},
  };
  return r;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, kernel] : registry()) out.push_back(name);
  return out;
}

PropertyOutcome run_property(std::string_view name, const PropertyOptions& options) {
  const Kernel* kernel = nullptr;
  for (const auto& [n, k] : registry()) {
    if (n == name) kernel = &k;
  }
  if (kernel == nullptr) {
    throw Error(ErrorCode::InvalidArgument, "unknown property '" + std::string(name) + "'",
                {{"known", property_names()}});
  }

  std::vector<Case> results(options.samples);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < options.samples; k += stride) {
      Sampler s = Sampler::for_case(options.seed, k);
      try {
        results[k] = (*kernel)(s, k, options.budget);
      } catch (const Error& e) {
        results[k] = fail(std::string(to_string(e.code())) + ": " + e.what());
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  }

  PropertyOutcome out;
  out.name = std::string(name);
  out.samples = options.samples;
  for (std::size_t k = 0; k < results.size(); ++k) {
    switch (results[k].status) {
      case Status::Pass:
        ++out.cases;
        break;
      case Status::Skip:
        ++out.skipped;
        break;
      case Status::Fail:
        ++out.cases;
        ++out.violations;
        if (out.examples.size() < 5) {
          out.examples.push_back("sample " + std::to_string(k) + ": " + results[k].detail);
        }
        break;
    }
  }
  return out;
}

}  // namespace schreier
