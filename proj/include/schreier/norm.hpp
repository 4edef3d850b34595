#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/rational.hpp"
#include "schreier/sign_seq.hpp"

namespace schreier {

/// Exponent p of the p-convexified norm. Integer p is evaluated exactly on
/// p-th powers; non-integer p uses 50-digit decimals and a tolerance.
class Exponent {
 public:
  static Exponent exact(unsigned p);
  static Exponent approx(const Decimal& p, const Decimal& tolerance = Decimal("1e-12"));
  /// "2" -> exact(2), "1.5" -> approx(1.5).
  static Exponent parse(std::string_view text, const Decimal& tolerance = Decimal("1e-12"));

  bool is_exact() const { return exact_ != 0; }
  /// Throws UnsupportedExponent in Approx mode.
  unsigned exact_power() const;
  const Decimal& value() const { return value_; }
  const Decimal& tolerance() const { return tolerance_; }
  bool greater_than_one() const { return value_ > 1; }

 private:
  unsigned exact_ = 0;
  Decimal value_;
  Decimal tolerance_ = 0;
};

std::string to_string(const Exponent& p);

/// ||x|| reported through its p-th power: exactly in Exact mode,
/// as a decimal in Approx mode. `value` is the norm itself.
struct NormValue {
  Exponent p;
  std::optional<Rational> pth_power;
  Decimal pth_power_approx;
  Decimal value;

  double approx() const { return value.convert_to<double>(); }
};

/// Three-way comparison of ||.|| with a non-negative rational target; Approx
/// mode treats values within the tolerance as equivalent.
std::partial_ordering compare_norm(const NormValue& v, const Rational& target);

NormValue norm(const FinVector& x, Ordinal alpha, const Exponent& p,
               const Budget& budget = {});

/// Every F in S_alpha inside supp(x) maximizing sum_{i in F} |x(i)|^p, in
/// lexicographic order. The zero vector gives {{}}.
std::vector<FinSet> norming_sets(const FinVector& x, Ordinal alpha,
                                 const Exponent& p, const Budget& budget = {});

bool is_on_sphere(const FinVector& x, Ordinal alpha, const Exponent& p,
                  const Budget& budget = {});

NormValue distance(const FinVector& x, const FinVector& y, Ordinal alpha,
                   const Exponent& p, const Budget& budget = {});

/// x -> (theta_i x(i)). Throws SignsMissing if theta is shorter than max supp(x).
FinVector apply_diagonal(const SignSeq& theta, const FinVector& x);

/// sum_i |x(i)|^p over the whole support (exact p only).
Rational lp_sum(const FinVector& x, unsigned p);

/// Whether ||x||^p equals the full l_p sum, i.e. supp(x) is in S_alpha. Any
/// member inside supp(x) that misses a support point loses its positive
/// weight, so otherwise ||x||^p is strictly smaller. No support cap applies.
bool norm_attains_lp_sum(const FinVector& x, Ordinal alpha);

}  // namespace schreier
