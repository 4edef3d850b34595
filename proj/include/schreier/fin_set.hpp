#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schreier {

using Index = std::uint32_t;

/// Finite strictly increasing set of positive integers.
class FinSet {
 public:
  FinSet() = default;
  /// Throws InvalidArgument unless `elements` is strictly increasing and >= 1.
  explicit FinSet(std::vector<Index> elements);
  FinSet(std::initializer_list<Index> elements)
      : FinSet(std::vector<Index>(elements)) {}

  /// Sorts and deduplicates; still rejects 0.
  static FinSet from_unsorted(std::vector<Index> elements);
  /// {first, ..., last}; empty when last < first.
  static FinSet interval(Index first, Index last);

  std::span<const Index> elements() const { return elements_; }
  const std::vector<Index>& vec() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  Index min() const { return elements_.front(); }
  Index max() const { return elements_.back(); }
  bool contains(Index i) const;

  FinSet with(Index i) const;
  FinSet without(Index i) const;
  FinSet united(const FinSet& other) const;
  bool is_subset_of(const FinSet& other) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Lexicographic on the element sequence: {} < {1} < {1,2} < {2}.
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Index> elements_;
};

/// E < G: every element of E is below every element of G; true if either is
/// empty.
bool precedes(const FinSet& e, const FinSet& g);

std::string to_string(const FinSet& f);

}  // namespace schreier
