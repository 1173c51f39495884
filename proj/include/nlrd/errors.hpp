#pragma once

#include <stdexcept>
#include <string>

namespace nlrd {

// Error types thrown across the library. Each names the contract it guards.

struct NonDivisibleSpacing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonpositiveDiffusivity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field passed to a convolution had an entry below -1e-12, i.e. an
// upstream positivity violation rather than rounding noise.
struct NegativeField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidExponentRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exponent denominator in a closed-form bound is <= 0; the formula does
// not apply to the requested parameter combination.
struct ExponentDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownScenario : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlrd
