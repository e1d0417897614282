#pragma once

#include <stdexcept>

namespace spanrl {

// A config value outside its documented range (group size < 2, eps outside
// (0,1), infeasible horizon, unknown profile, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (token id out of vocab, missing reward channel,
// missing log-probabilities, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A violated structural invariant (span not a partition).
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Execution backend transport failure. Deliberately distinct from a query
// that errors or times out: those are reward 0, this is not a score at all.
struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spanrl
