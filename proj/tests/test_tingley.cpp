#include <doctest.h>

#include <algorithm>

#include "schreier/families.hpp"
#include "schreier/norm.hpp"
#include "schreier/oracle.hpp"
#include "schreier/sampling.hpp"
#include "schreier/tingley.hpp"
#include "support.hpp"

using namespace schreier;
using testing::e;
using testing::error_code;
using testing::q;

namespace {

const Ordinal kS1 = Ordinal::finite(1);
const Ordinal kS2 = Ordinal::finite(2);
const Exponent kOne = Exponent::exact(1);
const Exponent kTwo = Exponent::exact(2);
const FinVector kPythagorean = q(3, 5) * e(2) + q(4, 5) * e(3);
const FinVector kHalfPair = q(1, 2) * e(2) + q(1, 2) * e(3);

std::vector<FinVector> sample_inputs(Sampler& s, Ordinal a, const Exponent& p, std::size_t count) {
  std::vector<FinVector> out;
  while (out.size() < count) {
    FinVector x = s.sphere_vector(a, p, 10, 5);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

TEST_CASE("isometry verification") {
  Sampler s(3);
  const SignSeq theta({1, -1, 1, -1, 1, -1, 1, -1, 1, -1});
  const MapTable t = diagonal_table(theta, sample_inputs(s, kS1, kOne, 10), kS1, kOne);
  CHECK(verify_isometry(t).ok);
  CHECK(verify_diagonal(t, theta).ok);

  MapTable empty;
  CHECK(verify_isometry(empty).ok);

  // Replace one output by a basis vector at the wrong distance.
  MapTable broken = diagonal_table(theta, {e(2), e(3), kHalfPair}, kS1, kOne);
  broken.pairs[2].second = e(5);
  const VerificationReport r = verify_isometry(broken);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  bool names_pair = false;
  for (const auto& v : r.violations) {
    CHECK(v.kind == "distance");
    names_pair = names_pair || v.entries == std::vector<std::size_t>{0, 2} ||
                 v.entries == std::vector<std::size_t>{1, 2};
  }
  CHECK(names_pair);
}

TEST_CASE("table validation") {
  MapTable t;
  t.alpha = kS1;
  t.pairs = {{e(2), e(2)}, {e(2) + e(3), e(2)}};
  CHECK(error_code([&] { validate_table(t); }) == ErrorCode::NotOnSphere);
  t.pairs = {{e(2), e(2)}, {e(2), -e(2)}};
  CHECK(error_code([&] { validate_table(t); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sign extraction") {
  MapTable t;
  t.alpha = kS1;
  std::vector<int> planted;
  for (Index i = 1; i <= 6; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    planted.push_back(sign);
    t.pairs.emplace_back(e(i), e(i, sign));
  }
  CHECK(extract_signs(t, 6) == SignSeq(planted));
  CHECK(error_code([&] { extract_signs(t, 7); }) == ErrorCode::MissingBasisPair);

  MapTable off;
  off.alpha = kS1;
  off.pairs = {{e(1), e(1)}, {e(2), e(3)}, {e(3), e(2)}};
  try {
    extract_signs(off, 3);
    FAIL("expected NotDiagonal");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotDiagonal);
    CHECK(err.details()["i"] == 2);
  }

  MapTable rotated;
  rotated.alpha = kS1;
  rotated.p = kTwo;
  rotated.pairs = {{e(1), e(1)}, {e(2), kPythagorean}};
  CHECK(error_code([&] { extract_signs(rotated, 2); }) == ErrorCode::NotDiagonal);
}

TEST_CASE("diagonal verification") {
  Sampler s(5);
  const SignSeq theta({1, 1, -1, 1, -1, -1, 1, 1, -1, 1});
  MapTable t = diagonal_table(theta, sample_inputs(s, kS2, kTwo, 8), kS2, kTwo);
  CHECK(verify_diagonal(t, theta).ok);

  // Flip the sign at an index some input uses.
  const Index used = t.pairs.front().first.support().min();
  std::vector<int> flipped(theta.raw().begin(), theta.raw().end());
  flipped[used - 1] = -flipped[used - 1];
  const VerificationReport r = verify_diagonal(t, SignSeq(flipped));
  CHECK_FALSE(r.ok);
  bool at_used = false;
  for (const auto& v : r.violations) at_used = at_used || (v.kind == "coordinate" && v.coordinate == used);
  CHECK(at_used);

  // An extra coordinate outside the input's support.
  MapTable leaky = diagonal_table(theta, {kHalfPair}, kS1, kOne);
  leaky.pairs[0].second.set(9, q(1, 4));
  REQUIRE(is_on_sphere(leaky.pairs[0].second, kS1, kOne));
  const VerificationReport z = verify_diagonal(leaky, theta);
  CHECK_FALSE(z.ok);
  bool support = false;
  for (const auto& v : z.violations) support = support || (v.kind == "support" && v.coordinate == 9);
  CHECK(support);
}

TEST_CASE("l1 check") {
  CHECK(check_l1(e(5), 5, kS1, kTwo).holds);
  const CheckResult r = check_l1(kPythagorean, 2, kS1, kTwo);
  CHECK(r.holds);
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  const CheckResult p1 = check_l1(kHalfPair, 2, kS1, kOne);
  CHECK_FALSE(p1.holds);
  CHECK(p1.lhs);
  CHECK_FALSE(p1.rhs);
  CHECK_FALSE(p1.in_scope);
  CHECK(error_code([] { check_l1(e(2) + e(3), 2, kS1, kTwo); }) == ErrorCode::NotOnSphere);
}

TEST_CASE("l3 witness") {
  const FinVector w = l3_witness(kPythagorean, kS1, kTwo);
  CHECK(w == e(4));
  CHECK(*norm(kPythagorean + w, kS1, kTwo).pth_power >= 1 + q(9, 25));
  CHECK(*norm(kPythagorean - w, kS1, kTwo).pth_power >= 1 + q(9, 25));

  const Exponent three = Exponent::exact(3);
  CHECK(l3_witness(e(7), kS2, three) == e(2));
  CHECK(*oracle::norm_bruteforce(e(7) - e(2), kS2, three).pth_power == 2);

  CHECK(error_code([] { l3_witness(e(1), kS1, kTwo); }) == ErrorCode::IsPlusMinusE1);
  CHECK(error_code([] { l3_witness(-e(1), kS2, kTwo); }) == ErrorCode::IsPlusMinusE1);
  CHECK(error_code([] { l3_witness(e(3), kS1, kOne); }) == ErrorCode::UnsupportedExponent);
}

TEST_CASE("imp identity") {
  const CheckResult r = check_imp_identity(FinSet{2, 3}, {q(9, 25), q(16, 25)}, {1, 1}, 1, kS1, kTwo);
  CHECK(r.holds);
  CHECK(r.lhs_value == "16/5");
  CHECK(check_imp_identity(FinSet{3}, {q(1)}, {1}, 1, kS1, kTwo).holds);
  const CheckResult p1 = check_imp_identity(FinSet{4, 5}, {q(1, 2), q(1, 2)}, {1, -1}, 2, kS1, kOne);
  CHECK_FALSE(p1.in_scope);

  CHECK(error_code([] { check_imp_identity(FinSet{1, 2}, {q(1, 2), q(1, 2)}, {1, 1}, 1, kS1, kTwo); }) ==
        ErrorCode::NotAMember);
  CHECK(error_code([] { check_imp_identity(FinSet{2, 3}, {q(1, 2), q(1, 3)}, {1, 1}, 1, kS1, kTwo); }) ==
        ErrorCode::WeightsNotNormalized);
  CHECK(error_code([] { check_imp_identity(FinSet{2, 3}, {q(1, 2), q(1, 2)}, {1, 1}, 1, kS1, kTwo); }) ==
        ErrorCode::NotAPerfectPower);
}

TEST_CASE("fact4 witness") {
  const Fact4Witness w = fact4_witness(3, 2, kS1);
  CHECK(w.x == q(3, 5) * e(5) + q(4, 5) * e(6));
  CHECK(w.maximal_set == FinSet{3, 5, 6});
  CHECK(*norm(w.x + e(2), kS1, kTwo).pth_power == q(41, 25));
  CHECK(*norm(w.x - e(3), kS1, kTwo).pth_power == 2);

  const Fact4Witness v = fact4_witness(4, 2, kS1);
  CHECK(v.maximal_set == FinSet{4, 6, 7, 8});
  CHECK(v.x.support() == FinSet{6, 7, 8});

  const Fact4Witness u = fact4_witness(3, 2, kS2);
  CHECK(u.maximal_set.vec()[0] == 3);
  CHECK(u.maximal_set.vec()[1] == 5);
  CHECK(is_maximal(u.maximal_set, kS2));

  CHECK(error_code([] { fact4_witness(2, 3, kS1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fact1 check") {
  CHECK(check_fact1(kPythagorean, 5, kS1).holds);
  CHECK(check_fact1(e(3), 2, kS1).lhs);
  CHECK(check_fact1(e(3), 2, kS1).holds);
  CHECK(error_code([] { check_fact1(e(3), 1, kS1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("lemma7 check") {
  CHECK(check_lemma7(e(4), 4, kS1).holds);
  const CheckResult r = check_lemma7(kHalfPair, 4, kS1);
  CHECK(r.holds);
  CHECK_FALSE(r.lhs);
  CHECK(check_lemma7(-e(6), 6, kS2).holds);
  CHECK(error_code([] { check_lemma7(e(1), 3, kS1); }) == ErrorCode::ExcludedInput);
}

TEST_CASE("lemma20 check") {
  const FinVector x = q(1, 2) * e(5) + q(1, 2) * e(6);
  const CheckResult r = check_lemma20(x, 3, 4, kS1);
  CHECK(r.lhs);
  CHECK(r.holds);
  CHECK(check_lemma20(e(2), 3, 4, kS1).holds);
  const CheckResult v = check_lemma20(e(1), 2, 3, kS1);
  CHECK(v.holds);
  CHECK_FALSE(v.lhs);
}

TEST_CASE("lemma23 check") {
  const CheckResult both = check_lemma23(kHalfPair, 2, 3, kS2);
  CHECK(both.lhs);
  CHECK(both.rhs);
  const CheckResult neither = check_lemma23(e(4), 2, 3, kS2);
  CHECK(neither.holds);
  CHECK_FALSE(neither.lhs);
  const CheckResult other = check_lemma23(kHalfPair, 2, 5, kS2);
  CHECK(other.holds);
  CHECK_FALSE(other.rhs);
  CHECK(error_code([] { check_lemma23(kHalfPair, 2, 3, kS1); }) == ErrorCode::UnsupportedOrder);
  CHECK(error_code([] { check_lemma23(e(1), 2, 3, kS2); }) == ErrorCode::ExcludedInput);
}

TEST_CASE("lemma1 check at p = 1") {
  const VerificationReport same = check_lemma1_p1(kHalfPair, kHalfPair, kS1);
  CHECK(same.ok);
  CHECK(same.witnesses == std::vector<FinSet>{{2, 3}});
  const FinVector y = q(1, 2) * e(2) - q(1, 2) * e(3);
  const VerificationReport vacuous = check_lemma1_p1(kHalfPair, y, kS1);
  CHECK(vacuous.ok);
  CHECK(vacuous.witnesses.empty());
  const VerificationReport r = check_lemma1_p1(e(4), q(1, 2) * e(4) + q(1, 2) * e(5), kS1);
  CHECK(r.ok);
  CHECK(r.witnesses == std::vector<FinSet>{{4, 5}});
}
