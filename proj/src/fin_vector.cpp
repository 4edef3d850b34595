#include "schreier/fin_vector.hpp"

#include "schreier/error.hpp"

namespace schreier {

FinVector::FinVector(std::initializer_list<std::pair<const Index, Rational>> coords) {
  for (const auto& [i, v] : coords) set(i, v);
}

FinVector FinVector::basis(Index i, const Rational& scale) {
  FinVector e;
  e.set(i, scale);
  return e;
}

Rational FinVector::operator()(Index i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? Rational(0) : it->second;
}

void FinVector::set(Index i, const Rational& value) {
  if (i == 0) {
    throw Error(ErrorCode::InvalidArgument, "vector indices start at 1");
  }
  if (value == 0) {
    coords_.erase(i);
  } else {
    coords_[i] = value;
  }
}

FinSet FinVector::support() const {
  std::vector<Index> s;
  s.reserve(coords_.size());
  for (const auto& kv : coords_) s.push_back(kv.first);
  return FinSet(std::move(s));
}

FinVector& FinVector::operator+=(const FinVector& other) {
  for (const auto& [i, v] : other.coords_) set(i, (*this)(i) + v);
  return *this;
}

FinVector& FinVector::operator-=(const FinVector& other) {
  for (const auto& [i, v] : other.coords_) set(i, (*this)(i) - v);
  return *this;
}

FinVector& FinVector::operator*=(const Rational& scale) {
  if (scale == 0) {
    coords_.clear();
  } else {
    for (auto& kv : coords_) kv.second *= scale;
  }
  return *this;
}

std::string to_string(const FinVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [i, v] : x.coords()) {
    if (!out.empty()) out += v < 0 ? " - " : " + ";
    else if (v < 0) out += "-";
    const Rational a = abs(v);
    if (a != 1) out += to_string(a) + "*";
    out += "e" + std::to_string(i);
  }
  return out;
}

}  // namespace schreier
