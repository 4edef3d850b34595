#pragma once

#include <map>
#include <string>
#include <utility>

#include "schreier/fin_set.hpp"
#include "schreier/rational.hpp"

namespace schreier {

/// Finitely supported vector with exact rational coordinates. Zero
/// coordinates are never stored, so the key set is the support.
class FinVector {
 public:
  using Storage = std::map<Index, Rational>;

  FinVector() = default;
  FinVector(std::initializer_list<std::pair<const Index, Rational>> coords);

  /// The unit vector e_i.
  static FinVector basis(Index i, const Rational& scale = 1);

  Rational operator()(Index i) const;
  void set(Index i, const Rational& value);

  const Storage& coords() const { return coords_; }
  FinSet support() const;
  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }

  FinVector& operator+=(const FinVector& other);
  FinVector& operator-=(const FinVector& other);
  FinVector& operator*=(const Rational& scale);

  friend FinVector operator+(FinVector a, const FinVector& b) { return a += b; }
  friend FinVector operator-(FinVector a, const FinVector& b) { return a -= b; }
  friend FinVector operator*(const Rational& s, FinVector a) { return a *= s; }
  friend FinVector operator-(FinVector a) { return a *= Rational(-1); }
  friend bool operator==(const FinVector&, const FinVector&) = default;

 private:
  Storage coords_;
};

std::string to_string(const FinVector& x);

}  // namespace schreier
