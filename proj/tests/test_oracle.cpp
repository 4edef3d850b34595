#include <doctest.h>

#include "schreier/norm.hpp"
#include "schreier/oracle.hpp"
#include "support.hpp"

using namespace schreier;
using testing::e;
using testing::error_code;
using testing::q;

namespace {

std::vector<FinSet> subsets(Index n) {
  std::vector<FinSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Index> f;
    for (Index k = 0; k < n; ++k) {
      if (mask >> k & 1) f.push_back(k + 1);
    }
    out.emplace_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_CASE("oracle membership examples") {
  CHECK(oracle::member_bruteforce(FinSet{2, 3, 4, 5}, Ordinal::finite(2)));
  CHECK(oracle::member_bruteforce(FinSet{2, 3, 4, 5, 6}, Ordinal::finite(2)));
  CHECK_FALSE(oracle::member_bruteforce(FinSet{2, 3, 4}, Ordinal::finite(1)));
  for (Ordinal a : {Ordinal::finite(0), Ordinal::finite(3), Ordinal::omega(), Ordinal(2, 1)}) {
    CHECK(oracle::member_bruteforce(FinSet{}, a));
  }
}

TEST_CASE("oracle norm examples") {
  const Exponent one = Exponent::exact(1);
  const Exponent two = Exponent::exact(2);
  CHECK(*oracle::norm_bruteforce(e(2) + e(3) + e(4), Ordinal::finite(1), one).pth_power == 2);
  CHECK(*oracle::norm_bruteforce(FinVector{}, Ordinal::omega(), two).pth_power == 0);
  CHECK(*oracle::norm_bruteforce(q(3, 5) * e(2) + q(4, 5) * e(3), Ordinal::finite(1), two).pth_power == 1);
  CHECK(oracle::norming_sets_bruteforce(e(2) + e(3) + e(4), Ordinal::finite(1), one) ==
        std::vector<FinSet>{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("oracle is hereditary and spreading") {
  for (unsigned a = 0; a <= 3; ++a) {
    const Ordinal alpha = Ordinal::finite(a);
    for (const FinSet& f : subsets(10)) {
      if (!oracle::member_bruteforce(f, alpha)) continue;
      for (Index k : f) CHECK(oracle::member_bruteforce(f.without(k), alpha));
      // Moving one element up by one, where room allows, is a spread.
      for (std::size_t k = 0; k < f.size(); ++k) {
        const Index v = f.vec()[k];
        const Index next = k + 1 < f.size() ? f.vec()[k + 1] : 11;
        if (v + 1 < next) CHECK(oracle::member_bruteforce(f.without(v).with(v + 1), alpha));
      }
    }
  }
}

TEST_CASE("oracle limits") {
  CHECK(error_code([] { oracle::member_bruteforce(FinSet::interval(1, 17), Ordinal::finite(2)); }) ==
        ErrorCode::ResourceLimit);
  CHECK(error_code([] { oracle::member_bruteforce(FinSet{2, 65}, Ordinal::finite(2)); }) ==
        ErrorCode::ResourceLimit);
}

TEST_CASE("oracle with a decimal exponent") {
  const Exponent p = Exponent::parse("1.5");
  const FinVector x = q(1, 3) * e(2) - q(2, 7) * e(3) + q(5, 4) * e(6) + e(7);
  for (Ordinal a : {Ordinal::finite(1), Ordinal::finite(2), Ordinal::omega()}) {
    const Decimal slow = oracle::norm_bruteforce(x, a, p).value;
    CHECK(abs(slow - norm(x, a, p).value) <= p.tolerance());
  }
}
