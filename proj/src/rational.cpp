#include "schreier/rational.hpp"

#include <cctype>

#include "schreier/error.hpp"

namespace schreier {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "malformed rational '" + std::string(text) + "'",
              {{"input", std::string(text)}});
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    bad_rational(text);
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const mpz_class d{std::string(den)};
  if (d == 0) bad_rational(text);
  Rational q(mpz_class(n), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  return Rational(num, den);  // already coprime
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::optional<Rational> exact_root(const Rational& q, unsigned k) {
  if (q < 0 || k == 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  if (mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), k) == 0) return std::nullopt;
  return Rational(num, den);
}

Decimal to_decimal(const Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

std::string to_string(const Decimal& d) {
  return d.str(std::numeric_limits<double>::max_digits10 + 4);
}

}  // namespace schreier
