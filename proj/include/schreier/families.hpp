#pragma once

#include <span>
#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/ordinal.hpp"

namespace schreier {

// Schreier families S_alpha for alpha < omega^2:
//   S_0         = sets with at most one element
//   S_{b+1}     = unions E_1 < ... < E_n of members of S_b with n <= min E_1
//   S_alpha     = { F : F in S_{alpha_n} for some n <= min F } at limits,
// with alpha_n taken from approximant().

/// Membership of a strictly increasing sequence. The span must satisfy the
/// FinSet invariants; this overload exists so callers can test prefixes and
/// blocks without copying.
bool is_member(std::span<const Index> f, Ordinal alpha);
bool is_member(const FinSet& f, Ordinal alpha);

/// Whether F has no proper superset in S_alpha. Throws NotAMember if F is not
/// in S_alpha and InvalidArgument for the empty set.
bool is_maximal(const FinSet& f, Ordinal alpha);

/// Splits a maximal G in S_{b+1} into G_1 < ... < G_m, each maximal in S_b,
/// with m = min G_1.
std::vector<FinSet> decompose_maximal(const FinSet& g, Ordinal alpha);

/// All members of S_alpha contained in {1..n}, including the empty set, in
/// lexicographic order.
std::vector<FinSet> enumerate(Ordinal alpha, unsigned n,
                              const Budget& budget = {});

/// Members of S_alpha inside {1..n} that are maximal in the whole family.
std::vector<FinSet> enumerate_maximal(Ordinal alpha, unsigned n,
                                      const Budget& budget = {});

/// Returns `image` after checking it is a pointwise-larger copy of `f`.
FinSet spread(const FinSet& f, const FinSet& image);

/// Calls `visit` on every subset of `ground` that belongs to S_alpha
/// (the empty set first). Uses heredity to skip non-member branches.
template <typename Visit>
void for_each_member_subset(std::span<const Index> ground, Ordinal alpha,
                            Visit&& visit);

}  // namespace schreier

#include "schreier/detail/families_inl.hpp"
