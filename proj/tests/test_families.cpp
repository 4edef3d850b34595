#include <doctest.h>

#include <algorithm>

#include "schreier/families.hpp"
#include "schreier/oracle.hpp"
#include "support.hpp"

using namespace schreier;
using testing::error_code;

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

const Ordinal kOmega = Ordinal::omega();

}  // namespace

TEST_CASE("membership examples") {
  CHECK(is_member(FinSet{2, 5}, Ordinal::finite(1)));
  CHECK_FALSE(is_member(FinSet{1, 2}, Ordinal::finite(1)));
  CHECK(is_member(FinSet{2, 3, 4, 5}, Ordinal::finite(2)));
  CHECK_FALSE(is_member(FinSet{2, 3, 4}, Ordinal::finite(1)));
  CHECK(is_member(FinSet{}, Ordinal::finite(0)));
  CHECK(is_member(FinSet{}, Ordinal::omega(2)));
  CHECK(is_member(FinSet{2, 3, 4, 5, 6}, Ordinal::finite(2)));
  CHECK_FALSE(is_member(FinSet{2, 3, 4, 5, 6, 7, 8}, Ordinal::finite(2)));
}

TEST_CASE("limit membership uses the approximant at min F") {
  // {3,...} in S_w iff it is in S_3.
  const FinSet f = FinSet::interval(3, 14);
  CHECK(is_member(f, kOmega) == is_member(f, Ordinal::finite(3)));
  CHECK(is_member(FinSet{2, 3, 4, 5}, kOmega));
  CHECK_FALSE(is_member(FinSet{2, 3, 4, 5, 6, 7, 8}, kOmega));
  // Smaller approximants never admit more.
  for (const FinSet& g : subsets(10)) {
    if (g.empty()) continue;
    bool smaller = false;
    for (Index n = 1; n < g.min(); ++n) smaller = smaller || is_member(g, approximant(kOmega, n));
    if (smaller) CHECK(is_member(g, kOmega));
  }
}

TEST_CASE("long sets") {
  CHECK(is_member(FinSet::interval(100, 199), Ordinal::finite(1)));
  CHECK_FALSE(is_member(FinSet::interval(100, 200), Ordinal::finite(1)));
  CHECK(is_maximal(FinSet::interval(100, 199), Ordinal::finite(1)));
  // S_2 intervals from 2: two S_1 blocks {2,3},{4..7} fill exactly [2,7].
  CHECK(is_maximal(FinSet::interval(2, 7), Ordinal::finite(2)));
  CHECK(is_maximal(FinSet::interval(3, 3 + 3 + 6 + 12 - 1), Ordinal::finite(2)));
}

TEST_CASE("maximality") {
  CHECK(is_maximal(FinSet{1}, Ordinal::finite(2)));
  CHECK(is_maximal(FinSet{2, 3}, Ordinal::finite(1)));
  CHECK_FALSE(is_maximal(FinSet{3, 4}, Ordinal::finite(1)));
  for (Ordinal a : {Ordinal::finite(0), Ordinal::finite(1), Ordinal::finite(3), kOmega, Ordinal(1, 1)}) {
    CHECK(is_maximal(FinSet{1}, a));
  }
  CHECK(error_code([] { is_maximal(FinSet{1, 2}, Ordinal::finite(1)); }) == ErrorCode::NotAMember);
  CHECK(error_code([] { is_maximal(FinSet{}, Ordinal::finite(1)); }) == ErrorCode::InvalidArgument);

  for (Ordinal a : {Ordinal::finite(1), Ordinal::finite(2), kOmega}) {
    for (const FinSet& f : subsets(9)) {
      if (f.empty() || !is_member(f, a)) continue;
      CHECK(is_maximal(f, a) == oracle::maximal_bruteforce(f, a));
    }
  }
}

TEST_CASE("decomposition") {
  CHECK(decompose_maximal(FinSet{1}, Ordinal::finite(1)) == std::vector<FinSet>{{1}});
  CHECK(decompose_maximal(FinSet{2, 3, 4, 5, 6, 7}, Ordinal::finite(2)) ==
        std::vector<FinSet>{{2, 3}, {4, 5, 6, 7}});
  CHECK(decompose_maximal(FinSet{3, 4, 5}, Ordinal::finite(1)) ==
        std::vector<FinSet>{{3}, {4}, {5}});
  CHECK(error_code([] { decompose_maximal(FinSet{2, 3}, kOmega); }) == ErrorCode::NotSuccessor);
  CHECK(error_code([] { decompose_maximal(FinSet{3, 4}, Ordinal::finite(1)); }) ==
        ErrorCode::NotMaximal);
  CHECK(error_code([] { decompose_maximal(FinSet{1, 2}, Ordinal::finite(1)); }) ==
        ErrorCode::NotAMember);

  CHECK_FALSE(is_maximal(FinSet::interval(2, 7), Ordinal(1, 1)));
  CHECK(decompose_maximal(FinSet{1}, Ordinal(1, 1)) == std::vector<FinSet>{{1}});
}

TEST_CASE("enumeration") {
  using Sets = std::vector<FinSet>;
  CHECK(enumerate(Ordinal::finite(0), 3) == Sets{{}, {1}, {2}, {3}});
  CHECK(enumerate(Ordinal::finite(1), 4) == Sets{{}, {1}, {2}, {2, 3}, {2, 4}, {3}, {3, 4}, {4}});
  CHECK(enumerate(Ordinal::finite(1), 1) == Sets{{}, {1}});
  CHECK(enumerate_maximal(Ordinal::finite(1), 4) == Sets{{1}, {2, 3}, {2, 4}});
  CHECK(enumerate_maximal(Ordinal::finite(0), 2) == Sets{{1}, {2}});
  CHECK(enumerate_maximal(Ordinal::finite(2), 3) == Sets{{1}});

  for (Ordinal a : {Ordinal::finite(2), kOmega}) {
    Sets filtered;
    for (const FinSet& f : subsets(10)) {
      if (is_member(f, a)) filtered.push_back(f);
    }
    std::sort(filtered.begin(), filtered.end());
    CHECK(enumerate(a, 10) == filtered);
  }

  Budget tight;
  tight.max_enumeration_bits = 8;
  CHECK(error_code([&] { enumerate(Ordinal::finite(1), 9, tight); }) == ErrorCode::ResourceLimit);
}

TEST_CASE("member subsets visitor matches membership") {
  const FinSet ground{2, 3, 5, 6, 8, 9, 11};
  for (Ordinal a : {Ordinal::finite(1), Ordinal::finite(2), kOmega}) {
    std::vector<FinSet> seen;
    for_each_member_subset(ground.elements(), a, [&](std::span<const Index> f) {
      seen.emplace_back(std::vector<Index>(f.begin(), f.end()));
    });
    std::size_t expected = 0;
    for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
      std::vector<Index> f;
      for (std::size_t k = 0; k < ground.size(); ++k) {
        if (mask >> k & 1) f.push_back(ground.vec()[k]);
      }
      if (is_member(FinSet(std::move(f)), a)) ++expected;
    }
    CHECK(seen.size() == expected);
    CHECK(seen.front().empty());
    for (const auto& f : seen) CHECK(is_member(f, a));
  }
}

TEST_CASE("spreads") {
  CHECK(spread(FinSet{2, 3}, FinSet{2, 7}) == FinSet{2, 7});
  CHECK(spread(FinSet{3, 4, 5}, FinSet{3, 9, 11}) == FinSet{3, 9, 11});
  CHECK(error_code([] { spread(FinSet{2, 3}, FinSet{1, 5}); }) == ErrorCode::NotASpread);
  CHECK(error_code([] { spread(FinSet{2, 3}, FinSet{5}); }) == ErrorCode::NotASpread);
}

TEST_CASE("singletons and pairs") {
  for (Ordinal a : {Ordinal::finite(0), Ordinal::finite(1), Ordinal::finite(4), kOmega, Ordinal(2, 3)}) {
    for (Index k = 1; k < 40; ++k) CHECK(is_member(FinSet{k}, a));
    if (a == Ordinal::finite(0)) continue;
    for (Index m = 2; m < 20; ++m) {
      for (Index n = m + 1; n < 25; ++n) CHECK(is_member(FinSet{m, n}, a));
    }
  }
}

TEST_CASE("set helpers") {
  CHECK(to_string(FinSet{2, 3}) == "{2,3}");
  CHECK(to_string(FinSet{}) == "{}");
  CHECK(FinSet::from_unsorted({5, 2, 2, 3}) == FinSet{2, 3, 5});
  CHECK(precedes(FinSet{2, 3}, FinSet{4, 9}));
  CHECK_FALSE(precedes(FinSet{2, 4}, FinSet{4, 9}));
  CHECK(precedes(FinSet{}, FinSet{1}));
  CHECK(error_code([] { FinSet(std::vector<Index>{3, 2}); }) == ErrorCode::InvalidArgument);
  CHECK(error_code([] { FinSet(std::vector<Index>{0, 2}); }) == ErrorCode::InvalidArgument);
}
