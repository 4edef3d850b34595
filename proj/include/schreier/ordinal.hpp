#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace schreier {

/// Ordinal below omega^2, written omega*q + r.
///
/// Comparison is lexicographic on (q, r), which matches ordinal order for
/// this notation.
class Ordinal {
 public:
  constexpr Ordinal() = default;
  constexpr Ordinal(std::uint32_t omega_coeff, std::uint32_t finite)
      : q_(omega_coeff), r_(finite) {}

  static constexpr Ordinal finite(std::uint32_t r) { return {0, r}; }
  static constexpr Ordinal omega(std::uint32_t q = 1) { return {q, 0}; }

  constexpr std::uint32_t omega_coeff() const { return q_; }
  constexpr std::uint32_t finite_part() const { return r_; }

  friend constexpr auto operator<=>(const Ordinal&, const Ordinal&) = default;

 private:
  std::uint32_t q_ = 0;
  std::uint32_t r_ = 0;
};

enum class OrdinalKind { Zero, Successor, Limit };

struct Classification {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set iff kind == Successor
};

Classification classify(Ordinal a);

/// The n-th term (n >= 1) of the fundamental sequence of a limit
/// omega*(q'+1): omega*q' + n. Every term is a successor and the sequence is
/// strictly increasing with supremum `limit`. Throws NotALimit otherwise.
Ordinal approximant(Ordinal limit, std::uint32_t n);

/// Grammar: digits | "w" ("*" digits)? ("+" digits)?
Ordinal parse_ordinal(std::string_view text);
std::string to_string(Ordinal a);

}  // namespace schreier
