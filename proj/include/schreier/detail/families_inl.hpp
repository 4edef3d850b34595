#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace schreier {

namespace detail {

template <typename Visit>
void visit_members(std::span<const Index> ground, std::size_t next,
                   Ordinal alpha, std::vector<Index>& current, Visit& visit) {
  for (std::size_t k = next; k < ground.size(); ++k) {
    current.push_back(ground[k]);
    if (is_member(std::span<const Index>(current), alpha)) {
      visit(std::span<const Index>(current));
      visit_members(ground, k + 1, alpha, current, visit);
    }
    current.pop_back();
  }
}

}  // namespace detail

template <typename Visit>
void for_each_member_subset(std::span<const Index> ground, Ordinal alpha,
                            Visit&& visit) {
  std::vector<Index> current;
  visit(std::span<const Index>(current));
  detail::visit_members(ground, 0, alpha, current, visit);
}

}  // namespace schreier
