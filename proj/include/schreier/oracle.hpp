#pragma once

#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/norm.hpp"
#include "schreier/ordinal.hpp"

// Definition-literal reference implementations. Exponential on purpose and
// kept free of any logic shared with families.cpp / norm.cpp.
namespace schreier::oracle {

/// Membership by trying every decomposition into at most min F consecutive
/// blocks at successors, and every n <= min F at limits.
bool member_bruteforce(const FinSet& f, Ordinal alpha, const Budget& budget = {});

/// Maximum over all subsets of supp(x) admitted by member_bruteforce.
NormValue norm_bruteforce(const FinVector& x, Ordinal alpha, const Exponent& p,
                          const Budget& budget = {});

/// All maximizers found by the same exhaustive scan (exact p only).
std::vector<FinSet> norming_sets_bruteforce(const FinVector& x, Ordinal alpha,
                                            const Exponent& p,
                                            const Budget& budget = {});

/// Maximality judged by trying every one-point extension up to max F + reach.
bool maximal_bruteforce(const FinSet& f, Ordinal alpha, Index reach = 4,
                        const Budget& budget = {});

}  // namespace schreier::oracle
