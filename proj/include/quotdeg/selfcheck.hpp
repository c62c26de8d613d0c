#pragma once

#include <string>
#include <vector>

#include "quotdeg/localization.hpp"

namespace quotdeg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Hand-tabulated normal-bundle Euler class denominators for d = 3, keyed by
/// component; the golden values the engine must reproduce factor by factor.
struct ReferenceFactor {
  int coeff_u;
  int coeff_v;
  int weight_plus;   // index of the added weight
  int weight_minus;  // index of the subtracted weight
  int exponent;
};

struct ReferenceEulerClass {
  int b;
  int a;
  int pos_b;
  int pos_a;
  std::vector<ReferenceFactor> factors;
};

const std::vector<ReferenceEulerClass>& d3_reference_euler_classes();

/// The verification battery behind the `selftest` command.  quick trims the
/// degree ranges and random iteration counts to CI-smoke size.
std::vector<CheckResult> run_selfchecks(bool quick);

/// Weight vectors used by the weight-invariance checks: three fixed
/// quadruples plus two seeded pseudo-random ones in [-50, 50].
std::vector<WeightVector> invariance_weight_set();

}  // namespace quotdeg
