#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/norm.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/sign_seq.hpp"

namespace schreier {

/// Deterministic random generators for sets, vectors and sphere points.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Independent stream for case `index` of a sweep seeded with `seed`.
  static Sampler for_case(std::uint64_t seed, std::uint64_t index);

  std::mt19937_64& rng() { return rng_; }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin(double p_true = 0.5);
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(0, items.size() - 1)];
  }

  /// Nonzero rational with |num|, den in [1, max].
  Rational rational(long max = 20, bool allow_negative = true);
  /// Uniformly random subset of {1..n}.
  FinSet subset(Index n);
  /// Member of S_alpha inside {1..n}, grown by random insertions.
  FinSet member(Ordinal alpha, Index n, bool nonempty = true);
  /// Maximal member of S_alpha with max at most `cap`, if one is reached.
  std::optional<FinSet> maximal_member(Ordinal alpha, Index cap);
  FinVector vector(Index n, std::size_t max_support, long max = 20);
  /// Exact point of the unit sphere of X_{S_alpha,p}, p in {1, 2, 3, ...}.
  /// Supports stay inside {1..n} and within `max_support` points.
  FinVector sphere_vector(Ordinal alpha, const Exponent& p, Index n,
                          std::size_t max_support, const Budget& budget = {});
  SignSeq signs(std::size_t n);

  /// Rational point of the positive unit l_p sphere in dimension d, or empty
  /// if none is known for this (d, p): p = 1 any d, p = 2 any d, p = 3 odd d,
  /// any p for d = 1.
  std::vector<Rational> lp_sphere_point(std::size_t d, unsigned p);

 private:
  std::mt19937_64 rng_;
};

}  // namespace schreier
