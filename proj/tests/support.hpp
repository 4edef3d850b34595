#pragma once

#include <optional>

#include "schreier/error.hpp"
#include "schreier/fin_vector.hpp"

namespace testing {

// Code of the schreier::Error thrown by f, or nullopt if f returns.
template <typename F>
std::optional<schreier::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const schreier::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline schreier::FinVector e(schreier::Index i, const schreier::Rational& s = 1) {
  return schreier::FinVector::basis(i, s);
}

inline schreier::Rational q(long num, long den = 1) {
  schreier::Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace testing
