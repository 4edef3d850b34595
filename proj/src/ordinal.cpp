#include "schreier/ordinal.hpp"

#include <charconv>
#include <limits>

#include "schreier/error.hpp"

namespace schreier {

Classification classify(Ordinal a) {
  if (a.finite_part() > 0) {
    return {OrdinalKind::Successor,
            Ordinal(a.omega_coeff(), a.finite_part() - 1)};
  }
  if (a.omega_coeff() == 0) return {OrdinalKind::Zero, std::nullopt};
  return {OrdinalKind::Limit, std::nullopt};
}

Ordinal approximant(Ordinal limit, std::uint32_t n) {
  if (classify(limit).kind != OrdinalKind::Limit) {
    throw Error(ErrorCode::NotALimit, to_string(limit) + " is not a limit",
                {{"alpha", to_string(limit)}});
  }
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "approximants are indexed from 1");
  }
  return Ordinal(limit.omega_coeff() - 1, n);
}

namespace {

std::uint32_t parse_digits(std::string_view text, std::string_view whole) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError,
                "malformed ordinal '" + std::string(whole) + "'",
                {{"input", std::string(whole)}});
  }
  return value;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  if (text.empty() || text.front() != 'w') {
    return Ordinal::finite(parse_digits(text, text));
  }
  std::string_view rest = text.substr(1);
  std::uint32_t q = 1;
  std::uint32_t r = 0;
  if (!rest.empty() && rest.front() == '*') {
    const auto plus = rest.find('+');
    q = parse_digits(rest.substr(1, plus == std::string_view::npos
                                        ? std::string_view::npos
                                        : plus - 1),
                     text);
    rest = plus == std::string_view::npos ? std::string_view{}
                                          : rest.substr(plus);
  }
  if (!rest.empty()) {
    if (rest.front() != '+') {
      throw Error(ErrorCode::ParseError,
                  "malformed ordinal '" + std::string(text) + "'",
                  {{"input", std::string(text)}});
    }
    r = parse_digits(rest.substr(1), text);
  }
  // "w*0" would alias a finite ordinal and break print/parse round-trips.
  if (q == 0) {
    throw Error(ErrorCode::ParseError,
                "omega coefficient must be positive in '" + std::string(text) + "'",
                {{"input", std::string(text)}});
  }
  return Ordinal(q, r);
}

std::string to_string(Ordinal a) {
  if (a.omega_coeff() == 0) return std::to_string(a.finite_part());
  std::string out = "w";
  if (a.omega_coeff() > 1) out += "*" + std::to_string(a.omega_coeff());
  if (a.finite_part() > 0) out += "+" + std::to_string(a.finite_part());
  return out;
}

}  // namespace schreier
