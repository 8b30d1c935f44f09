#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerically or mathematically invalid input (non-finite entries, singular
/// conjugator, impossible sampling mode, ...).
class invalid_input_error : public error {
public:
  using error::error;
};

/// Shape problems: dimension mismatches, out-of-range word letters, rank
/// mismatch between representations.
class structural_error : public error {
public:
  using error::error;
};

/// Input is well formed but outside what the algorithm supports, e.g. a
/// non-semisimple GL representation handed to the decomposer.
class unsupported_input_error : public error {
public:
  using error::error;
};

/// An internal consistency check failed. Seeing this is a bug.
class internal_error : public error {
public:
  using error::error;
};

} // namespace charvar
