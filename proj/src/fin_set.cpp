#include "schreier/fin_set.hpp"

#include <algorithm>

#include "schreier/error.hpp"

namespace schreier {

FinSet::FinSet(std::vector<Index> elements) : elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == 0 || (k > 0 && elements_[k - 1] >= elements_[k])) {
      throw Error(ErrorCode::InvalidArgument,
                  "set elements must be strictly increasing and >= 1");
    }
  }
}

FinSet FinSet::from_unsorted(std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return FinSet(std::move(elements));
}

FinSet FinSet::interval(Index first, Index last) {
  std::vector<Index> out;
  for (Index i = first; i <= last && i >= first; ++i) out.push_back(i);
  return FinSet(std::move(out));
}

bool FinSet::contains(Index i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

FinSet FinSet::with(Index i) const {
  std::vector<Index> out = elements_;
  auto it = std::lower_bound(out.begin(), out.end(), i);
  if (it == out.end() || *it != i) out.insert(it, i);
  return FinSet(std::move(out));
}

FinSet FinSet::without(Index i) const {
  std::vector<Index> out = elements_;
  auto it = std::lower_bound(out.begin(), out.end(), i);
  if (it != out.end() && *it == i) out.erase(it);
  FinSet f;
  f.elements_ = std::move(out);
  return f;
}

FinSet FinSet::united(const FinSet& other) const {
  std::vector<Index> out;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out));
  FinSet f;
  f.elements_ = std::move(out);
  return f;
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool precedes(const FinSet& e, const FinSet& g) {
  return e.empty() || g.empty() || e.max() < g.min();
}

std::string to_string(const FinSet& f) {
  std::string out = "{";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(f.vec()[k]);
  }
  return out + "}";
}

}  // namespace schreier
