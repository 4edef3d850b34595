#include "schreier/oracle.hpp"

#include <algorithm>
#include <string>

#include "schreier/error.hpp"

namespace schreier::oracle {

namespace {

constexpr Index kMaxElement = 64;

using Seq = std::vector<Index>;

bool member(const Seq& f, std::uint32_t q, std::uint32_t r);

// Can f[pos..] be cut into at most `blocks_left` nonempty consecutive blocks,
// each in S_{omega*q + r}?
bool blocks(const Seq& f, std::size_t pos, std::size_t blocks_left,
            std::uint32_t q, std::uint32_t r) {
  if (pos == f.size()) return true;
  if (blocks_left == 0) return false;
  for (std::size_t end = pos + 1; end <= f.size(); ++end) {
    const Seq block(f.begin() + static_cast<std::ptrdiff_t>(pos),
                    f.begin() + static_cast<std::ptrdiff_t>(end));
    if (member(block, q, r) && blocks(f, end, blocks_left - 1, q, r)) {
      return true;
    }
  }
  return false;
}

bool member(const Seq& f, std::uint32_t q, std::uint32_t r) {
  if (f.empty()) return true;
  if (q == 0 && r == 0) return f.size() <= 1;
  if (r > 0) return blocks(f, 0, f.front(), q, r - 1);
  // omega*q at a limit: alpha_n = omega*(q-1) + n for some n <= min F.
  for (std::uint32_t n = 1; n <= f.front(); ++n) {
    if (member(f, q - 1, n)) return true;
  }
  return false;
}

void check_set(const FinSet& f, const Budget& budget) {
  if (f.size() > budget.oracle_max_support || (!f.empty() && f.max() > kMaxElement)) {
    throw Error(ErrorCode::ResourceLimit,
                "set " + to_string(f) + " is too large for the brute-force oracle",
                {{"size", f.size()}, {"max_size", budget.oracle_max_support}});
  }
}

struct Scan {
  std::optional<Rational> best_exact;
  Decimal best_approx = 0;
  std::vector<FinSet> maximizers;
};

Scan scan(const FinVector& x, Ordinal alpha, const Exponent& p,
          const Budget& budget) {
  const FinSet support = x.support();
  check_set(support, budget);
  const auto& s = support.vec();
  const std::size_t n = s.size();

  Scan out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Seq f;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1U) f.push_back(s[k]);
    }
    if (!member(f, alpha.omega_coeff(), alpha.finite_part())) continue;
    if (p.is_exact()) {
      Rational sum = 0;
      for (Index i : f) sum += pow(abs(x(i)), p.exact_power());
      if (!out.best_exact || sum > *out.best_exact) {
        out.best_exact = sum;
        out.maximizers.clear();
      }
      if (sum == *out.best_exact) out.maximizers.emplace_back(f);
    } else {
      Decimal sum = 0;
      for (Index i : f) {
        sum += boost::multiprecision::pow(to_decimal(abs(x(i))), p.value());
      }
      out.best_approx = std::max(out.best_approx, sum);
    }
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  return out;
}

}  // namespace

bool member_bruteforce(const FinSet& f, Ordinal alpha, const Budget& budget) {
  check_set(f, budget);
  return member(f.vec(), alpha.omega_coeff(), alpha.finite_part());
}

NormValue norm_bruteforce(const FinVector& x, Ordinal alpha, const Exponent& p,
                          const Budget& budget) {
  Scan s = scan(x, alpha, p, budget);
  NormValue v{p, std::nullopt, 0, 0};
  if (p.is_exact()) {
    v.pth_power = *s.best_exact;
    v.pth_power_approx = to_decimal(*s.best_exact);
  } else {
    v.pth_power_approx = s.best_approx;
  }
  v.value = v.pth_power_approx == 0
                ? Decimal(0)
                : boost::multiprecision::pow(v.pth_power_approx, Decimal(1) / p.value());
  return v;
}

std::vector<FinSet> norming_sets_bruteforce(const FinVector& x, Ordinal alpha,
                                            const Exponent& p,
                                            const Budget& budget) {
  if (!p.is_exact()) {
    throw Error(ErrorCode::UnsupportedExponent,
                "oracle norming sets need an integer exponent");
  }
  return scan(x, alpha, p, budget).maximizers;
}

bool maximal_bruteforce(const FinSet& f, Ordinal alpha, Index reach,
                        const Budget& budget) {
  if (f.empty() || !member_bruteforce(f, alpha, budget)) {
    throw Error(ErrorCode::NotAMember, to_string(f) + " is not a member");
  }
  for (Index l = 1; l <= f.max() + reach; ++l) {
    if (f.contains(l)) continue;
    if (member_bruteforce(f.with(l), alpha, budget)) return false;
  }
  return true;
}

}  // namespace schreier::oracle
