#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/fin_set.hpp"

namespace schreier {

/// Finite sign sequence theta_1, ..., theta_N with entries +1 / -1.
class SignSeq {
 public:
  SignSeq() = default;
  /// Throws InvalidArgument if an entry is not +1 or -1.
  explicit SignSeq(std::vector<int> signs);

  /// "+,-,+" or "1,-1,1"; an empty string gives the empty sequence.
  static SignSeq parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  bool covers(Index i) const { return i >= 1 && i <= signs_.size(); }
  /// theta_i, 1-based; throws SignsMissing past the end.
  int operator()(Index i) const;
  const std::vector<std::int8_t>& raw() const { return signs_; }

  friend bool operator==(const SignSeq&, const SignSeq&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

std::string to_string(const SignSeq& theta);

}  // namespace schreier
