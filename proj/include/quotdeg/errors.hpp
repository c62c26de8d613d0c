#pragma once

#include <stdexcept>
#include <string>

namespace quotdeg {

/// Inversion was requested for a series whose constant term is zero.
/// In the localization pipeline this signals a non-generic weight vector.
class NonUnitError : public std::runtime_error {
public:
  explicit NonUnitError(const std::string& what) : std::runtime_error(what) {}
};

/// A weight vector produced a degenerate equivariant factor (zero constant
/// under a negative exponent, or a vanishing form).
class NonGenericWeights : public std::runtime_error {
public:
  explicit NonGenericWeights(const std::string& what) : std::runtime_error(what) {}
};

/// The Bott sum did not reduce to an integer.  The true degree is integral,
/// so this always indicates a sign or bookkeeping fault.
class NonIntegralSum : public std::runtime_error {
public:
  explicit NonIntegralSum(const std::string& what) : std::runtime_error(what) {}
};

/// The floating evaluation could not be certified at the maximum precision.
class PrecisionError : public std::runtime_error {
public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quotdeg
