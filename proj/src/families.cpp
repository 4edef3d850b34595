#include "schreier/families.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "schreier/error.hpp"

namespace schreier {

namespace {

// Length of the longest prefix of `f` that belongs to S_beta. Prefixes of a
// member are members, so the admissible lengths form an interval [1, L].
std::size_t longest_member_prefix(std::span<const Index> f, Ordinal beta) {
  std::size_t len = 1;
  while (len < f.size() && is_member(f.first(len + 1), beta)) ++len;
  return len;
}

}  // namespace

bool is_member(std::span<const Index> f, Ordinal alpha) {
  if (f.empty()) return true;
  const Classification c = classify(alpha);
  switch (c.kind) {
    case OrdinalKind::Zero:
      return f.size() <= 1;
    case OrdinalKind::Successor: {
      // Singletons are in every S_beta, so |F| <= min F already suffices.
      if (f.size() <= f.front()) return true;
      // Greedy longest-prefix peeling uses the fewest blocks: any other
      // decomposition's blocks, cut at the greedy boundaries, are subsets of
      // members and hence members.
      const Ordinal beta = *c.predecessor;
      std::size_t blocks = 0;
      std::size_t pos = 0;
      while (pos < f.size()) {
        if (++blocks > f.front()) return false;
        pos += longest_member_prefix(f.subspan(pos), beta);
      }
      return true;
    }
    case OrdinalKind::Limit:
      // The approximants increase, so S_{alpha_n} for n < min F is contained
      // in S_{alpha_{min F}}.
      return is_member(f, approximant(alpha, f.front()));
  }
  return false;
}

bool is_member(const FinSet& f, Ordinal alpha) {
  return is_member(f.elements(), alpha);
}

bool is_maximal(const FinSet& f, Ordinal alpha) {
  if (f.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "maximality is only defined for nonempty sets");
  }
  if (!is_member(f, alpha)) {
    throw Error(ErrorCode::NotAMember,
                to_string(f) + " is not in S_" + to_string(alpha),
                {{"alpha", to_string(alpha)}, {"set", f.vec()}});
  }
  // Inserting l < max F spreads to F u {max F + 1}, and membership of
  // F u {l} for l > max F does not depend on l.
  return !is_member(f.with(f.max() + 1), alpha);
}

namespace {

bool blocks_valid(const std::vector<FinSet>& blocks, const FinSet& g,
                  Ordinal beta) {
  if (blocks.empty() || blocks.size() != blocks.front().min()) return false;
  std::vector<Index> joined;
  for (const auto& b : blocks) {
    if (b.empty() || !is_member(b, beta) || !is_maximal(b, beta)) return false;
    joined.insert(joined.end(), b.begin(), b.end());
  }
  return joined == g.vec();
}

// Exhaustive search over consecutive block decompositions; returns the first
// valid one in lexicographic order of cut points.
bool search_blocks(const FinSet& g, Ordinal beta, std::size_t pos,
                   std::vector<FinSet>& acc) {
  const auto& e = g.vec();
  if (pos == e.size()) return blocks_valid(acc, g, beta);
  if (acc.size() >= g.min()) return false;
  for (std::size_t end = pos + 1; end <= e.size(); ++end) {
    FinSet block(std::vector<Index>(e.begin() + pos, e.begin() + end));
    if (!is_member(block, beta)) break;
    if (!is_maximal(block, beta)) continue;
    acc.push_back(std::move(block));
    if (search_blocks(g, beta, end, acc)) return true;
    acc.pop_back();
  }
  return false;
}

}  // namespace

std::vector<FinSet> decompose_maximal(const FinSet& g, Ordinal alpha) {
  const Classification c = classify(alpha);
  if (c.kind != OrdinalKind::Successor) {
    throw Error(ErrorCode::NotSuccessor,
                to_string(alpha) + " is not a successor",
                {{"alpha", to_string(alpha)}});
  }
  if (g.empty() || !is_maximal(g, alpha)) {
    throw Error(ErrorCode::NotMaximal,
                to_string(g) + " is not maximal in S_" + to_string(alpha),
                {{"alpha", to_string(alpha)}, {"set", g.vec()}});
  }
  const Ordinal beta = *c.predecessor;

  std::vector<FinSet> blocks;
  const auto elems = g.elements();
  for (std::size_t pos = 0; pos < elems.size();) {
    const std::size_t len = longest_member_prefix(elems.subspan(pos), beta);
    blocks.emplace_back(std::vector<Index>(elems.begin() + pos,
                                           elems.begin() + pos + len));
    pos += len;
  }
  if (blocks_valid(blocks, g, beta)) return blocks;

  blocks.clear();
  if (search_blocks(g, beta, 0, blocks)) return blocks;
  throw Error(ErrorCode::InternalInconsistency,
              "no decomposition into maximal blocks exists for " + to_string(g),
              {{"alpha", to_string(alpha)}, {"set", g.vec()}});
}

std::vector<FinSet> enumerate(Ordinal alpha, unsigned n, const Budget& budget) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  if (n > budget.max_enumeration_bits) {
    throw Error(ErrorCode::ResourceLimit,
                "enumeration over {1.." + std::to_string(n) +
                    "} exceeds the budget of 2^" +
                    std::to_string(budget.max_enumeration_bits) + " subsets",
                {{"n", n}, {"max_bits", budget.max_enumeration_bits}});
  }
  const FinSet ground = FinSet::interval(1, n);
  std::vector<FinSet> out;
  for_each_member_subset(ground.elements(), alpha,
                         [&](std::span<const Index> f) {
                           out.emplace_back(
                               std::vector<Index>(f.begin(), f.end()));
                         });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinSet> enumerate_maximal(Ordinal alpha, unsigned n,
                                      const Budget& budget) {
  std::vector<FinSet> out;
  for (auto& f : enumerate(alpha, n, budget)) {
    if (!f.empty() && is_maximal(f, alpha)) out.push_back(std::move(f));
  }
  return out;
}

FinSet spread(const FinSet& f, const FinSet& image) {
  bool ok = f.size() == image.size();
  for (std::size_t k = 0; ok && k < f.size(); ++k) {
    ok = image.vec()[k] >= f.vec()[k];
  }
  if (!ok) {
    throw Error(ErrorCode::NotASpread,
                to_string(image) + " is not a spread of " + to_string(f),
                {{"set", f.vec()}, {"image", image.vec()}});
  }
  return image;
}

}  // namespace schreier
