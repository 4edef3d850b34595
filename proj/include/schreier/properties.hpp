#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/budget.hpp"

namespace schreier {

struct PropertyOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Budget budget;
};

struct PropertyOutcome {
  std::string name;
  std::size_t samples = 0;
  std::size_t cases = 0;    // samples where the hypothesis was met
  std::size_t skipped = 0;  // samples where it was not
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few violations, in sample order
  bool ok() const { return violations == 0; }
};

/// Names accepted by run_property, in a fixed order.
std::vector<std::string> property_names();

/// Runs a randomized sweep. Case k draws from its own seeded stream, so the
/// outcome does not depend on `jobs`.
PropertyOutcome run_property(std::string_view name, const PropertyOptions& options);

}  // namespace schreier
