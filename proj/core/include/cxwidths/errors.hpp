#pragma once

#include <stdexcept>
#include <string>

namespace cxw {

// Bad caller input: negative degrees, points off the sphere, unknown family.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite samples, malformed CSV/JSON input.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fit range empty, too short or containing zeros.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// A forward scan ran out of levels.
class DivergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameters outside a theorem's stated hypotheses.
class HypothesisError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Self-check failed; results must not be used.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace cxw
