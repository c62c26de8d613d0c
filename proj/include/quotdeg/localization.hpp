#pragma once

#include <vector>

#include "quotdeg/fixed_points.hpp"
#include "quotdeg/rational.hpp"
#include "quotdeg/series.hpp"

namespace quotdeg {

/// One linear factor of an equivariant class, with a signed exponent.
/// A negative exponent requires a nonzero constant term (the factor must be
/// invertible after restriction); violations throw NonGenericWeights.
struct EquivariantFactor {
  LinearForm form;
  int exponent;

  static EquivariantFactor make(LinearForm form, int exponent);
};

/// Product of linear factors with signed integer exponents.
struct EquivariantClassProduct {
  std::vector<EquivariantFactor> factors;

  /// Sum of exponents; each factor counts as degree 1 per power.
  int total_degree() const;

  /// Expansion in Q[u,v]/(u^(cap_u+1), v^(cap_v+1)).  Negative exponents go
  /// through series inversion; NonUnitError surfaces as NonGenericWeights.
  TruncatedSeries expand(int cap_u, int cap_v) const;
};

/// Restriction of the first equivariant Chern class of the polarization
/// divisor to a fixed component: u + v + w_k + w_l with the variable of a
/// point factor dropped, (k, l) the trivial positions.
LinearForm alpha_restriction(const FixedComponent& c, const WeightVector& w);

/// Restriction of the first equivariant Chern class of the companion
/// divisor.  Note the crossed variable coefficients: the degree-b torsion
/// contributes a*u on its own factor's partner.
LinearForm beta_restriction(const FixedComponent& c, const WeightVector& w);

/// Equivariant Euler class of the normal bundle of the fixed component,
/// as a single unified product covering b > a, b == a, and a == 0 (for
/// a == 0 the cancelling factor pair is merged symbolically).  The sum of
/// exponents is always 3d + 4, the rank of the normal bundle.
EquivariantClassProduct normal_euler_class(const FixedComponent& c, const WeightVector& w);

struct ComponentContribution {
  FixedComponent component;
  Rational value;
};

/// One summand of the Bott residue sum: the u^b v^a coefficient of
/// alpha^(4d+4) / e(N), i.e. the pushforward from P^b x P^a to a point.
ComponentContribution component_contribution(const FixedComponent& c, const WeightVector& w);

/// Contributions of every component of R_d in enumeration order.
/// jobs > 1 evaluates components concurrently; the result is identical.
std::vector<ComponentContribution> all_contributions(int d, const WeightVector& w, int jobs = 1);

/// Checked narrowing of the Bott sum to its integer value; the true degree
/// is integral, so a fractional sum throws NonIntegralSum.
Int require_integral(const Rational& sum);

/// Degree of the generalized Pluecker embedding of R_d: the Bott residue
/// sum of all component contributions, certified integral.
Int plucker_degree(int d, const WeightVector& w, int jobs = 1);

}  // namespace quotdeg
