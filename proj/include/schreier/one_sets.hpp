#pragma once

#include <optional>
#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/rational.hpp"

namespace schreier {

// p = 1 combinatorics. For x on the unit sphere of X_{S_alpha}, a 1-set is a
// member F with sum_{i in F} |x(i)| = 1 and x nonzero on F.

struct OneSetReport {
  std::vector<FinSet> one_sets;
  Rational gap;
  std::optional<FinSet> nonmaximal_one_set;
};

/// All 1-sets of x, lexicographically sorted. Throws NotOnSphere.
std::vector<FinSet> one_sets(const FinVector& x, Ordinal alpha,
                             const Budget& budget = {});

/// The largest g such that every member F of S_alpha outside A_x^1 has
/// sum_{i in F} |x(i)| <= 1 - g. Any eps < g is an eps-gap in the strict sense.
Rational gap(const FinVector& x, Ordinal alpha, const Budget& budget = {});

/// For alpha = 1, the unique non-maximal 1-set if there is one. It has the
/// form [min F, infinity) intersected with supp(x). Throws UnsupportedOrder
/// for alpha != 1.
std::optional<FinSet> nonmaximal_one_set(const FinVector& x, Ordinal alpha,
                                         const Budget& budget = {});

/// one_sets + gap, plus nonmaximal_one_set when alpha = 1.
OneSetReport analyze_one_sets(const FinVector& x, Ordinal alpha,
                              const Budget& budget = {});

}  // namespace schreier
