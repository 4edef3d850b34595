#include "schreier/norm.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "schreier/error.hpp"
#include "schreier/families.hpp"

namespace schreier {

Exponent Exponent::exact(unsigned p) {
  if (p == 0) {
    throw Error(ErrorCode::UnsupportedExponent, "p must be at least 1");
  }
  Exponent e;
  e.exact_ = p;
  e.value_ = p;
  return e;
}

Exponent Exponent::approx(const Decimal& p, const Decimal& tolerance) {
  if (!(p > 1)) {
    throw Error(ErrorCode::UnsupportedExponent,
                "approximate exponents must exceed 1");
  }
  if (!(tolerance > 0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  Exponent e;
  e.value_ = p;
  e.tolerance_ = tolerance;
  return e;
}

Exponent Exponent::parse(std::string_view text, const Decimal& tolerance) {
  unsigned p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec == std::errc() && ptr == text.data() + text.size()) return exact(p);
  try {
    return approx(Decimal(std::string(text)), tolerance);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::ParseError,
                "malformed exponent '" + std::string(text) + "'",
                {{"input", std::string(text)}});
  }
}

unsigned Exponent::exact_power() const {
  if (!is_exact()) {
    throw Error(ErrorCode::UnsupportedExponent,
                "operation requires an integer exponent");
  }
  return exact_;
}

std::string to_string(const Exponent& p) {
  return p.is_exact() ? std::to_string(p.exact_power()) : to_string(p.value());
}

std::partial_ordering compare_norm(const NormValue& v, const Rational& target) {
  if (v.p.is_exact()) {
    const int c = cmp(*v.pth_power, pow(target, v.p.exact_power()));
    return c < 0   ? std::partial_ordering::less
           : c > 0 ? std::partial_ordering::greater
                   : std::partial_ordering::equivalent;
  }
  const Decimal t = to_decimal(target);
  if (abs(v.value - t) <= v.p.tolerance()) return std::partial_ordering::equivalent;
  return v.value < t ? std::partial_ordering::less : std::partial_ordering::greater;
}

namespace {

// Branch-and-bound over members of S_alpha inside the support. Positions are
// taken in increasing index order, so every prefix visited is a member
// (heredity) and each member is reached once. `tolerance` widens ties in
// Approx mode; it is zero for rationals.
template <typename W>
class MaxWeightSearch {
 public:
  MaxWeightSearch(std::span<const Index> support, std::vector<W> weights,
                  Ordinal alpha, bool collect_ties, W tolerance)
      : support_(support),
        weights_(std::move(weights)),
        alpha_(alpha),
        collect_(collect_ties),
        tolerance_(std::move(tolerance)),
        suffix_(weights_.size() + 1, W(0)) {
    for (std::size_t k = weights_.size(); k-- > 0;) {
      suffix_[k] = suffix_[k + 1] + weights_[k];
    }
  }

  void run_branch_and_bound() {
    offer(W(0));
    descend(0, W(0));
  }

  void run_exhaustive() {
    const std::size_t n = support_.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      current_.clear();
      W sum(0);
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1U) {
          current_.push_back(support_[k]);
          sum += weights_[k];
        }
      }
      if (is_member(std::span<const Index>(current_), alpha_)) offer(sum);
    }
  }

  const W& best() const { return best_; }

  std::vector<FinSet> argmax() const {
    std::vector<FinSet> out;
    for (const auto& [sum, set] : candidates_) {
      if (!(sum + tolerance_ < best_)) out.emplace_back(set);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void offer(const W& sum) {
    if (!seen_any_ || sum > best_) {
      best_ = sum;
      seen_any_ = true;
    }
    if (collect_ && !(sum + tolerance_ < best_)) {
      candidates_.emplace_back(sum, current_);
    }
  }

  bool prune(const W& bound) const {
    return collect_ ? bound + tolerance_ < best_ : !(bound > best_);
  }

  void descend(std::size_t next, const W& sum) {
    for (std::size_t k = next; k < support_.size(); ++k) {
      // suffix_ shrinks with k, so once the bound fails it fails for the rest.
      if (prune(sum + suffix_[k])) return;
      current_.push_back(support_[k]);
      if (is_member(std::span<const Index>(current_), alpha_)) {
        const W extended = sum + weights_[k];
        offer(extended);
        descend(k + 1, extended);
      }
      current_.pop_back();
    }
  }

  std::span<const Index> support_;
  std::vector<W> weights_;
  Ordinal alpha_;
  bool collect_;
  W tolerance_;
  std::vector<W> suffix_;
  std::vector<Index> current_;
  W best_ = W(0);
  bool seen_any_ = false;
  std::vector<std::pair<W, std::vector<Index>>> candidates_;
};

// Below this support size every subset is tried directly.
constexpr std::size_t kExhaustiveBelow = 12;

struct Outcome {
  NormValue value;
  std::vector<FinSet> sets;
};

Decimal root(const Decimal& v, const Decimal& p) {
  if (v == 0) return Decimal(0);
  if (p == 1) return v;
  return boost::multiprecision::pow(v, Decimal(1) / p);
}

template <typename W>
void run(MaxWeightSearch<W>& search, std::size_t support_size) {
  if (support_size < kExhaustiveBelow) {
    search.run_exhaustive();
  } else {
    search.run_branch_and_bound();
  }
}

Outcome evaluate(const FinVector& x, Ordinal alpha, const Exponent& p,
                 const Budget& budget, bool collect) {
  const FinSet support = x.support();
  Outcome out{NormValue{p, std::nullopt, 0, 0}, {}};

  if (p.is_exact()) {
    const unsigned power = p.exact_power();
    std::vector<Rational> weights;
    weights.reserve(support.size());
    for (const auto& [i, v] : x.coords()) weights.push_back(pow(abs(v), power));

    // Monotone domination: a member support attains the full sum, uniquely
    // among subsets since every weight is positive.
    if (is_member(support, alpha)) {
      Rational total = 0;
      for (const auto& w : weights) total += w;
      out.value.pth_power = total;
      if (collect) out.sets.push_back(support);
    } else {
      if (support.size() > budget.max_support) {
        throw Error(ErrorCode::ResourceLimit,
                    "support of size " + std::to_string(support.size()) +
                        " exceeds the norm budget of " +
                        std::to_string(budget.max_support),
                    {{"support", support.size()}, {"max_support", budget.max_support}});
      }
      MaxWeightSearch<Rational> search(support.elements(), std::move(weights),
                                       alpha, collect, Rational(0));
      run(search, support.size());
      out.value.pth_power = search.best();
      if (collect) out.sets = search.argmax();
    }
    out.value.pth_power_approx = to_decimal(*out.value.pth_power);
  } else {
    if (support.size() > budget.max_support) {
      throw Error(ErrorCode::ResourceLimit,
                  "support of size " + std::to_string(support.size()) +
                      " exceeds the norm budget of " +
                      std::to_string(budget.max_support),
                  {{"support", support.size()}, {"max_support", budget.max_support}});
    }
    std::vector<Decimal> weights;
    weights.reserve(support.size());
    for (const auto& [i, v] : x.coords()) {
      weights.push_back(boost::multiprecision::pow(to_decimal(abs(v)), p.value()));
    }
    MaxWeightSearch<Decimal> search(support.elements(), std::move(weights),
                                    alpha, collect, p.tolerance());
    run(search, support.size());
    out.value.pth_power_approx = search.best();
    if (collect) out.sets = search.argmax();
  }
  out.value.value = root(out.value.pth_power_approx, p.value());
  return out;
}

}  // namespace

NormValue norm(const FinVector& x, Ordinal alpha, const Exponent& p,
               const Budget& budget) {
  return evaluate(x, alpha, p, budget, false).value;
}

std::vector<FinSet> norming_sets(const FinVector& x, Ordinal alpha,
                                 const Exponent& p, const Budget& budget) {
  return evaluate(x, alpha, p, budget, true).sets;
}

bool is_on_sphere(const FinVector& x, Ordinal alpha, const Exponent& p,
                  const Budget& budget) {
  return compare_norm(norm(x, alpha, p, budget), Rational(1)) == 0;
}

NormValue distance(const FinVector& x, const FinVector& y, Ordinal alpha,
                   const Exponent& p, const Budget& budget) {
  return norm(x - y, alpha, p, budget);
}

FinVector apply_diagonal(const SignSeq& theta, const FinVector& x) {
  FinVector out;
  for (const auto& [i, v] : x.coords()) {
    if (!theta.covers(i)) {
      throw Error(ErrorCode::SignsMissing,
                  "sign sequence of length " + std::to_string(theta.size()) +
                      " does not cover index " + std::to_string(i),
                  {{"index", i}, {"length", theta.size()}});
    }
    out.set(i, theta(i) > 0 ? v : Rational(-v));
  }
  return out;
}

Rational lp_sum(const FinVector& x, unsigned p) {
  Rational total = 0;
  for (const auto& kv : x.coords()) total += pow(abs(kv.second), p);
  return total;
}

bool norm_attains_lp_sum(const FinVector& x, Ordinal alpha) {
  return is_member(x.support(), alpha);
}

}  // namespace schreier
