#pragma once

#include <stdexcept>
#include <string>

namespace conjchar {

/// Bad user input: malformed files, unsupported parameters, out-of-domain arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation was refused because it exceeds the configured size limits.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (corrupt table, inconsistent lift, ...).
/// Results are never emitted past a failed consistency check.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Budget {
  long long max_order = 2'000'000;  // largest group enumerated element-wise
  int max_classes = 400;            // largest conjugacy class count
  int max_characters = 150;         // Dixon-Schneider table size limit
};

}  // namespace conjchar
