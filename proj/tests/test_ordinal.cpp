#include <doctest.h>

#include "schreier/ordinal.hpp"
#include "support.hpp"

using namespace schreier;
using testing::error_code;

TEST_CASE("classify") {
  CHECK(classify(Ordinal(0, 0)).kind == OrdinalKind::Zero);
  const auto c = classify(Ordinal(0, 3));
  CHECK(c.kind == OrdinalKind::Successor);
  CHECK(*c.predecessor == Ordinal(0, 2));
  CHECK(classify(Ordinal(2, 0)).kind == OrdinalKind::Limit);
  CHECK_FALSE(classify(Ordinal(2, 0)).predecessor.has_value());
  CHECK(*classify(Ordinal(1, 1)).predecessor == Ordinal::omega());
}

TEST_CASE("approximants") {
  CHECK(approximant(Ordinal::omega(), 1) == Ordinal(0, 1));
  CHECK(approximant(Ordinal::omega(), 5) == Ordinal(0, 5));
  CHECK(approximant(Ordinal::omega(2), 3) == Ordinal(1, 3));
  CHECK(error_code([] { approximant(Ordinal(1, 1), 2); }) == ErrorCode::NotALimit);
  CHECK(error_code([] { approximant(Ordinal(0, 0), 2); }) == ErrorCode::NotALimit);
  CHECK(error_code([] { approximant(Ordinal::omega(), 0); }) == ErrorCode::InvalidArgument);

  for (std::uint32_t q = 1; q <= 3; ++q) {
    for (std::uint32_t n = 1; n < 20; ++n) {
      CHECK(approximant(Ordinal::omega(q), n) < approximant(Ordinal::omega(q), n + 1));
      CHECK(approximant(Ordinal::omega(q), n) < Ordinal::omega(q));
    }
  }
}

TEST_CASE("order") {
  CHECK(Ordinal(0, 5) < Ordinal(1, 0));
  CHECK(Ordinal(1, 0) == Ordinal(1, 0));
  CHECK(Ordinal(1, 2) > Ordinal(0, 9));
  CHECK(Ordinal(2, 0) > Ordinal(1, 100));
}

TEST_CASE("string round trip") {
  for (std::uint32_t q = 0; q < 4; ++q) {
    for (std::uint32_t r = 0; r < 4; ++r) {
      const Ordinal a(q, r);
      CHECK(parse_ordinal(to_string(a)) == a);
    }
  }
  CHECK(to_string(Ordinal(0, 3)) == "3");
  CHECK(to_string(Ordinal(1, 0)) == "w");
  CHECK(to_string(Ordinal(1, 2)) == "w+2");
  CHECK(to_string(Ordinal(2, 5)) == "w*2+5");
  CHECK(parse_ordinal("w*1") == Ordinal::omega());

  for (const char* bad : {"", "x", "w*0", "w+", "2w", "-1", "w*2+", "w**2"}) {
    INFO(bad);
    CHECK(error_code([&] { parse_ordinal(bad); }) == ErrorCode::ParseError);
  }
}
