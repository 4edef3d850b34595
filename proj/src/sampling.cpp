#include "schreier/sampling.hpp"

#include <algorithm>
#include <array>

#include "schreier/error.hpp"
#include "schreier/families.hpp"

namespace schreier {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Positive integer solutions of a^3 + b^3 + c^3 = d^3 with d <= 40.
const std::vector<std::array<long, 4>>& cubic_quadruples() {
  static const std::vector<std::array<long, 4>> table = [] {
    std::vector<std::array<long, 4>> out;
    for (long d = 2; d <= 40; ++d) {
      for (long a = 1; a < d; ++a) {
        for (long b = a; b < d; ++b) {
          const long rest = d * d * d - a * a * a - b * b * b;
          if (rest < b * b * b) break;
          long c = std::lround(std::cbrt(static_cast<double>(rest)));
          for (long cc = std::max(b, c - 1); cc <= c + 1; ++cc) {
            if (cc * cc * cc == rest) out.push_back({a, b, cc, d});
          }
        }
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

Sampler Sampler::for_case(std::uint64_t seed, std::uint64_t index) {
  return Sampler(splitmix(seed ^ splitmix(index + 1)));
}

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool Sampler::coin(double p_true) {
  return std::bernoulli_distribution(p_true)(rng_);
}

Rational Sampler::rational(long max, bool allow_negative) {
  const long num = static_cast<long>(uniform(1, static_cast<std::uint64_t>(max)));
  const long den = static_cast<long>(uniform(1, static_cast<std::uint64_t>(max)));
  Rational q(num, den);
  q.canonicalize();
  if (allow_negative && coin()) q = -q;
  return q;
}

FinSet Sampler::subset(Index n) {
  std::vector<Index> out;
  for (Index i = 1; i <= n; ++i) {
    if (coin()) out.push_back(i);
  }
  return FinSet(std::move(out));
}

FinSet Sampler::member(Ordinal alpha, Index n, bool nonempty) {
  std::vector<Index> order(n);
  for (Index i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng_);
  const std::size_t attempts = uniform(nonempty ? 1 : 0, n);
  FinSet f;
  for (std::size_t k = 0; k < attempts; ++k) {
    FinSet g = f.with(order[k]);
    if (is_member(g, alpha)) f = std::move(g);
  }
  return f;
}

std::optional<FinSet> Sampler::maximal_member(Ordinal alpha, Index cap) {
  FinSet f = FinSet{static_cast<Index>(uniform(1, std::max<Index>(1, cap / 3)))};
  while (f.max() < cap) {
    if (is_maximal(f, alpha)) return f;
    // Random gaps keep the sample away from pure intervals.
    const Index step = coin(0.7) ? 1 : static_cast<Index>(uniform(2, 3));
    f = f.with(f.max() + step);
    if (!is_member(f, alpha)) f = f.without(f.max()).with(f.max() + 1);
  }
  if (is_member(f, alpha) && is_maximal(f, alpha)) return f;
  return std::nullopt;
}

FinVector Sampler::vector(Index n, std::size_t max_support, long max) {
  FinVector x;
  const std::size_t size = uniform(1, std::min<std::size_t>(n, max_support));
  while (x.support_size() < size) {
    x.set(static_cast<Index>(uniform(1, n)), rational(max));
  }
  return x;
}

std::vector<Rational> Sampler::lp_sphere_point(std::size_t d, unsigned p) {
  if (d == 0) return {};
  if (d == 1) return {Rational(1)};
  if (p == 1) {
    std::vector<Rational> w(d);
    Rational total = 0;
    for (auto& v : w) {
      v = rational(20, false);
      total += v;
    }
    for (auto& v : w) v /= total;
    return w;
  }
  if (p == 2) {
    // Inverse stereographic projection of a rational point of Q^{d-1}.
    for (;;) {
      std::vector<Rational> t(d - 1);
      Rational s = 0;
      for (auto& v : t) {
        v = rational(9, false);
        s += v * v;
      }
      if (s == 1) continue;
      std::vector<Rational> out;
      for (const auto& v : t) out.push_back(2 * v / (1 + s));
      out.push_back(abs(Rational((s - 1) / (s + 1))));
      return out;
    }
  }
  if (p == 3 && d % 2 == 1) {
    // Split a coordinate c into c*(a, b, c') / d using a^3 + b^3 + c'^3 = d^3.
    std::vector<Rational> out{Rational(1)};
    const auto& table = cubic_quadruples();
    while (out.size() < d) {
      const std::size_t k = uniform(0, out.size() - 1);
      const auto& q = table[uniform(0, table.size() - 1)];
      const Rational c = out[k];
      out[k] = c * Rational(q[0], q[3]);
      out.push_back(c * Rational(q[1], q[3]));
      out.push_back(c * Rational(q[2], q[3]));
    }
    for (auto& v : out) v.canonicalize();
    return out;
  }
  return {};
}

FinVector Sampler::sphere_vector(Ordinal alpha, const Exponent& p, Index n,
                                 std::size_t max_support, const Budget& budget) {
  const unsigned power = p.exact_power();
  if (power == 1) {
    FinVector x = vector(n, max_support);
    const Rational length = *norm(x, alpha, p, budget).pth_power;
    x *= Rational(1 / length);
    return x;
  }

  FinSet f = member(alpha, n);
  std::vector<Index> pts(f.begin(), f.end());
  std::shuffle(pts.begin(), pts.end(), rng_);
  std::size_t d = std::min(pts.size(), max_support);
  std::vector<Rational> coords = lp_sphere_point(d, power);
  while (coords.empty() && d > 1) coords = lp_sphere_point(--d, power);

  FinVector x;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    x.set(pts[k], coin() ? coords[k] : Rational(-coords[k]));
  }

  // A few small coordinates off the norming set, shrunk until x stays on the
  // sphere and dropped if that never happens.
  const std::size_t extras = uniform(0, 2);
  for (std::size_t e = 0; e < extras && x.support_size() < max_support; ++e) {
    const Index k = static_cast<Index>(uniform(1, n));
    if (x(k) != 0) continue;
    Rational delta = rational(9) / 4;
    for (int tries = 0; tries < 6; ++tries, delta /= 3) {
      FinVector y = x;
      y.set(k, delta);
      if (is_on_sphere(y, alpha, p, budget)) {
        x = std::move(y);
        break;
      }
    }
  }
  return x;
}

SignSeq Sampler::signs(std::size_t n) {
  std::vector<int> out(n);
  for (auto& s : out) s = coin() ? 1 : -1;
  return SignSeq(std::move(out));
}

}  // namespace schreier
