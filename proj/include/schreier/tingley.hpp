#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schreier/budget.hpp"
#include "schreier/fin_set.hpp"
#include "schreier/fin_vector.hpp"
#include "schreier/norm.hpp"
#include "schreier/ordinal.hpp"
#include "schreier/sign_seq.hpp"

namespace schreier {

/// Observable trace of a sphere map T: pairs (x, T(x)) on the unit sphere of
/// X_{S_alpha,p}.
struct MapTable {
  Ordinal alpha;
  Exponent p = Exponent::exact(1);
  std::vector<std::pair<FinVector, FinVector>> pairs;
};

/// Table (x, apply_diagonal(theta, x)) for each input.
MapTable diagonal_table(const SignSeq& theta, const std::vector<FinVector>& inputs,
                        Ordinal alpha, const Exponent& p);

struct Violation {
  std::string kind;
  std::vector<std::size_t> entries;  // pair indices into the table
  std::optional<Index> coordinate;
  std::string lhs;
  std::string rhs;
  std::string deficit;  // |lhs - rhs|
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
  /// Sets the check examined, when it searches for any (check_lemma1_p1).
  std::vector<FinSet> witnesses;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

/// Throws NotOnSphere (listing every offending entry) or InvalidArgument for
/// repeated inputs.
void validate_table(const MapTable& t, const Budget& budget = {});

/// ||x_i - x_j|| = ||T x_i - T x_j|| for every pair of entries.
VerificationReport verify_isometry(const MapTable& t, const Budget& budget = {});

/// Reads theta_1..theta_n off T(e_i) = +-e_i. Throws MissingBasisPair or
/// NotDiagonal (with the first offending i and its image).
SignSeq extract_signs(const MapTable& t, Index n);

/// T(x)(i) = theta_i x(i) on every coordinate of every entry, which includes
/// T(x)(i) = 0 off supp(x). Throws SignsMissing if theta is too short.
VerificationReport verify_diagonal(const MapTable& t, const SignSeq& theta);

/// Outcome of evaluating both sides of a stated equivalence or implication.
struct CheckResult {
  bool lhs = false;
  bool rhs = false;
  bool holds = false;
  /// False when the instance lies outside the statement's hypotheses (e.g.
  /// p = 1 for a statement about p > 1); `holds` is then reported, not asserted.
  bool in_scope = true;
  /// Compared quantities, for identity checks.
  std::string lhs_value;
  std::string rhs_value;
};

/// ||x + e_n|| = 2  <=>  x(n) = 1, for x on the sphere.
CheckResult check_l1(const FinVector& x, Index n, Ordinal alpha, const Exponent& p,
                     const Budget& budget = {});

/// A sphere vector x with min(||u + x||, ||u - x||) > 1, for u on the sphere
/// other than +-e_1 and p > 1.
FinVector l3_witness(const FinVector& u, Ordinal alpha, const Exponent& p,
                     const Budget& budget = {});

/// Builds x with |x(i_k)|^p = weights[k] and sign signs[k] and compares
/// ||x + eps e_{i_l}||^p with 1 - |a_l|^p + (1 + |a_l|)^p, eps = sgn x(i_l).
/// `l` is 1-based. Weights must be exact p-th powers of rationals.
CheckResult check_imp_identity(const FinSet& indices, const std::vector<Rational>& weights,
                               const std::vector<int>& signs, std::size_t l,
                               Ordinal alpha, const Exponent& p,
                               const Budget& budget = {});

struct Fact4Witness {
  FinVector x;
  FinSet maximal_set;  // {i, i+2, ..., i+m}
};

/// For i > j >= 2, an x on the sphere of X_{S_alpha,2} with
/// ||x +- e_i||^2 = 2 and ||x +- e_j||^2 < 2.
Fact4Witness fact4_witness(Index i, Index j, Ordinal alpha, const Budget& budget = {});

/// p = 2, i >= 2: if ||e_i + x|| > 1 and ||e_i - x|| > 1 then the squares sum
/// to at most 4. lhs = hypothesis, rhs = conclusion.
CheckResult check_fact1(const FinVector& x, Index i, Ordinal alpha,
                        const Budget& budget = {});

/// p = 1, n >= 2, x != +-e_1: ||e_n + x|| + ||e_n - x|| = 2  <=>  x = +-e_n.
CheckResult check_lemma7(const FinVector& x, Index n, Ordinal alpha,
                         const Budget& budget = {});

/// p = 1, 2 <= i < j: ||x +- e_i|| = 2 implies ||x + e_j|| = 2 or ||x - e_j|| = 2.
CheckResult check_lemma20(const FinVector& x, Index i, Index j, Ordinal alpha,
                          const Budget& budget = {});

/// p = 1, alpha >= 2, i != j >= 2, x(1) = 0:
/// (||x + e_i|| = ||x + e_j|| = 2 and ||x - e_i|| = ||x - e_j|| = 1)
///   <=>  x = e_i / 2 + e_j / 2.
CheckResult check_lemma23(const FinVector& x, Index i, Index j, Ordinal alpha,
                          const Budget& budget = {});

/// p = 1: when ||x + y|| = 2, every F with sum_F |x + y| = 2 lies in
/// A_x^1 and A_y^1 and x, y agree in sign on supp(x) n supp(y) n F.
VerificationReport check_lemma1_p1(const FinVector& x, const FinVector& y, Ordinal alpha,
                                   const Budget& budget = {});

}  // namespace schreier
