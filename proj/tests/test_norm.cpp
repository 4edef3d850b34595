#include <doctest.h>

#include <algorithm>

#include "schreier/norm.hpp"
#include "schreier/oracle.hpp"
#include "schreier/sampling.hpp"
#include "support.hpp"

using namespace schreier;
using testing::e;
using testing::error_code;
using testing::q;

namespace {

const Exponent kOne = Exponent::exact(1);
const Exponent kTwo = Exponent::exact(2);
const Ordinal kS1 = Ordinal::finite(1);

Rational pth(const FinVector& x, Ordinal a, const Exponent& p) { return *norm(x, a, p).pth_power; }

}  // namespace

TEST_CASE("norm examples") {
  CHECK(pth(e(1), kS1, kOne) == 1);
  CHECK(pth(e(2) + e(3) + e(4), kS1, kOne) == 2);
  CHECK(pth(e(1) + e(2) + e(3) + e(4) + e(5), Ordinal::finite(2), kOne) == 4);
  CHECK(pth(q(3, 5) * e(2) + q(4, 5) * e(3), kS1, kTwo) == 1);
  CHECK(pth(FinVector{}, kS1, kTwo) == 0);
  CHECK(pth(q(1, 2) * e(4) + q(1, 2) * e(5) + q(1, 2) * e(9), kS1, kOne) == q(3, 2));
  CHECK(pth(-e(3), Ordinal::finite(0), Exponent::exact(3)) == 1);
  CHECK(pth(e(2) - e(3) + e(4), Ordinal::finite(0), kOne) == 1);
}

TEST_CASE("norming sets") {
  using Sets = std::vector<FinSet>;
  CHECK(norming_sets(e(5), kS1, kOne) == Sets{{5}});
  CHECK(norming_sets(q(1, 2) * e(2) + q(1, 2) * e(3), kS1, kOne) == Sets{{2, 3}});
  CHECK(norming_sets(e(2) + e(3) + e(4), kS1, kOne) == Sets{{2, 3}, {2, 4}, {3, 4}});
  CHECK(norming_sets(FinVector{}, kS1, kOne) == Sets{{}});
}

TEST_CASE("sphere and distance") {
  CHECK(is_on_sphere(q(1, 2) * e(2) + q(1, 2) * e(3), kS1, kOne));
  CHECK(is_on_sphere(q(3, 5) * e(2) + q(4, 5) * e(3), kS1, kTwo));
  CHECK_FALSE(is_on_sphere(e(2) + e(3), kS1, kOne));

  CHECK(*distance(e(2), e(3), kS1, kOne).pth_power == 2);
  const FinVector x = q(3, 5) * e(2) + q(4, 5) * e(3);
  CHECK(*distance(x, x, Ordinal::omega(), kTwo).pth_power == 0);
  CHECK(*distance(x, e(2), kS1, kTwo).pth_power == q(4, 5));
  CHECK(pth(x + e(2), kS1, kTwo) == q(16, 5));
}

TEST_CASE("diagonal maps") {
  const FinVector x = q(1, 2) * e(2) + q(1, 2) * e(3);
  CHECK(apply_diagonal(SignSeq({1, 1, 1, 1}), x) == x);
  CHECK(apply_diagonal(SignSeq({-1, -1, -1}), e(3)) == -e(3));
  const FinVector y = apply_diagonal(SignSeq({-1, 1, -1, 1}), x);
  CHECK(y == q(1, 2) * e(2) - q(1, 2) * e(3));
  CHECK(pth(y, kS1, kOne) == 1);
  CHECK(error_code([&] { apply_diagonal(SignSeq({1, 1}), x); }) == ErrorCode::SignsMissing);
}

TEST_CASE("exponents") {
  CHECK(Exponent::parse("2").is_exact());
  CHECK(Exponent::parse("2").exact_power() == 2);
  CHECK_FALSE(Exponent::parse("1.5").is_exact());
  CHECK(error_code([] { Exponent::parse("0"); }) == ErrorCode::UnsupportedExponent);
  CHECK(error_code([] { Exponent::parse("1.0"); }) == ErrorCode::UnsupportedExponent);
  CHECK(error_code([] { Exponent::parse("0.5"); }) == ErrorCode::UnsupportedExponent);
  CHECK(error_code([] { Exponent::parse("abc"); }) == ErrorCode::ParseError);
  CHECK(error_code([] { Exponent::parse("1.5").exact_power(); }) == ErrorCode::UnsupportedExponent);
}

TEST_CASE("approximate exponents track the exact ones") {
  Sampler s(7);
  const Exponent approx_two = Exponent::approx(Decimal(2));
  for (int k = 0; k < 50; ++k) {
    const FinVector x = s.vector(10, 8);
    for (Ordinal a : {kS1, Ordinal::finite(2), Ordinal::omega()}) {
      const NormValue exact = norm(x, a, kTwo);
      const NormValue approx = norm(x, a, approx_two);
      CHECK(abs(to_decimal(*exact.pth_power) - approx.pth_power_approx) < Decimal("1e-30"));
      CHECK(compare_norm(approx, 1) == compare_norm(exact, 1));
    }
  }
  const NormValue v = norm(e(2) + e(3), kS1, Exponent::approx(Decimal("1.5")));
  CHECK(abs(v.pth_power_approx - 2) < Decimal("1e-40"));
  CHECK(compare_norm(v, 1) > 0);
}

TEST_CASE("large supports agree with the oracle") {
  Sampler s(11);
  for (int k = 0; k < 30; ++k) {
    const FinVector x = s.vector(16, 16);
    if (x.support_size() < 12) continue;
    for (Ordinal a : {kS1, Ordinal::finite(2), Ordinal::omega()}) {
      for (unsigned p : {1u, 2u}) {
        const Exponent ep = Exponent::exact(p);
        CHECK(*norm(x, a, ep).pth_power == *oracle::norm_bruteforce(x, a, ep).pth_power);
        CHECK(norming_sets(x, a, ep) == oracle::norming_sets_bruteforce(x, a, ep));
      }
    }
  }
}

TEST_CASE("budget") {
  FinVector x;
  for (Index k = 1; k <= 25; ++k) x.set(k, q(1, static_cast<long>(k)));
  CHECK(error_code([&] { norm(x, kS1, kOne); }) == ErrorCode::ResourceLimit);
  CHECK_FALSE(norm_attains_lp_sum(x, kS1));

  // Decreasing weights: the best S_1 set with minimum m is {m, ..., 2m-1}.
  Rational best = 0;
  for (Index m = 1; m <= 25; ++m) {
    Rational sum = 0;
    for (Index k = m; k <= std::min<Index>(2 * m - 1, 25); ++k) sum += q(1, static_cast<long>(k));
    best = std::max(best, sum);
  }
  Budget wide;
  wide.max_support = 30;
  CHECK(*norm(x, kS1, kOne, wide).pth_power == best);

  // An admissible support needs no search at all.
  FinVector y;
  for (Index k = 30; k < 55; ++k) y.set(k, q(1, 25));
  CHECK(norm_attains_lp_sum(y, kS1));
  CHECK(*norm(y, kS1, kOne).pth_power == 1);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(to_string(q(80, 25)) == "16/5");
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(error_code([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(error_code([] { parse_rational("0.5"); }) == ErrorCode::ParseError);
  CHECK(*exact_root(q(8, 27), 3) == q(2, 3));
  CHECK_FALSE(exact_root(q(1, 2), 2).has_value());
  CHECK(to_string(q(3, 5) * e(5) + q(4, 5) * e(6)) == "3/5*e5 + 4/5*e6");
}
