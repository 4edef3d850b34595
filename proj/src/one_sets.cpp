#include "schreier/one_sets.hpp"

#include "schreier/error.hpp"
#include "schreier/families.hpp"
#include "schreier/norm.hpp"

namespace schreier {

namespace {

const Exponent& p_one() {
  static const Exponent p = Exponent::exact(1);
  return p;
}

void require_sphere(const FinVector& x, Ordinal alpha, const Budget& budget) {
  const NormValue n = norm(x, alpha, p_one(), budget);
  if (*n.pth_power != 1) {
    throw Error(ErrorCode::NotOnSphere,
                "vector has norm " + to_string(*n.pth_power) + ", not 1",
                {{"norm", to_string(*n.pth_power)}});
  }
}

void require_budget(const FinVector& x, const Budget& budget) {
  if (x.support_size() > budget.max_support) {
    throw Error(ErrorCode::ResourceLimit,
                "support of size " + std::to_string(x.support_size()) +
                    " exceeds the budget of " + std::to_string(budget.max_support),
                {{"support", x.support_size()}, {"max_support", budget.max_support}});
  }
}

}  // namespace

std::vector<FinSet> one_sets(const FinVector& x, Ordinal alpha,
                             const Budget& budget) {
  require_sphere(x, alpha, budget);
  // With norm 1 the maximizers inside supp(x) are exactly the 1-sets.
  return norming_sets(x, alpha, p_one(), budget);
}

Rational gap(const FinVector& x, Ordinal alpha, const Budget& budget) {
  require_sphere(x, alpha, budget);
  require_budget(x, budget);
  // Subsets of supp(x) suffice: zero coordinates add nothing to a sum.
  Rational best_below = 0;
  const FinSet support = x.support();
  for_each_member_subset(support.elements(), alpha, [&](std::span<const Index> f) {
    Rational sum = 0;
    for (Index i : f) sum += abs(x(i));
    if (sum < 1 && sum > best_below) best_below = sum;
  });
  return 1 - best_below;
}

std::optional<FinSet> nonmaximal_one_set(const FinVector& x, Ordinal alpha,
                                         const Budget& budget) {
  if (alpha != Ordinal::finite(1)) {
    throw Error(ErrorCode::UnsupportedOrder,
                "uniqueness of the non-maximal 1-set is only known for alpha = 1",
                {{"alpha", to_string(alpha)}});
  }
  std::optional<FinSet> found;
  for (const FinSet& f : one_sets(x, alpha, budget)) {
    if (is_maximal(f, alpha)) continue;
    if (found) {
      throw Error(ErrorCode::InternalInconsistency,
                  "two non-maximal 1-sets: " + to_string(*found) + " and " +
                      to_string(f),
                  {{"first", found->vec()}, {"second", f.vec()}});
    }
    found = f;
  }
  return found;
}

OneSetReport analyze_one_sets(const FinVector& x, Ordinal alpha,
                              const Budget& budget) {
  OneSetReport r;
  r.one_sets = one_sets(x, alpha, budget);
  r.gap = gap(x, alpha, budget);
  if (alpha == Ordinal::finite(1)) r.nonmaximal_one_set = nonmaximal_one_set(x, alpha, budget);
  return r;
}

}  // namespace schreier
