#pragma once

#include <cstddef>

namespace schreier {

/// Resource caps honored by every exponential search.
struct Budget {
  /// enumerate() refuses N above this (2^N candidate subsets).
  unsigned max_enumeration_bits = 20;
  /// Largest support the norm search accepts.
  std::size_t max_support = 20;
  /// Largest support the brute-force oracle accepts.
  std::size_t oracle_max_support = 16;
  /// Largest m tried when looking for a maximal {i, i+2, ..., i+m}.
  std::size_t witness_max_span = 4096;

  /// Budget with enumeration bits and support caps taken from
  /// SCHREIER_BUDGET when it is set to a positive integer.
  static Budget from_environment();
};

}  // namespace schreier
