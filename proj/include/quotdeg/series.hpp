#pragma once

#include <string>
#include <vector>

#include "quotdeg/rational.hpp"

namespace quotdeg {

/// coeff_u*u + coeff_v*v + constant, represented exactly as written.
struct LinearForm {
  Rational coeff_u;
  Rational coeff_v;
  Rational constant;

  bool is_zero() const { return coeff_u.is_zero() && coeff_v.is_zero() && constant.is_zero(); }
  std::string str() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeff_u == b.coeff_u && a.coeff_v == b.coeff_v && a.constant == b.constant;
  }
};

/// Element of Q[u,v] / (u^(cap_u+1), v^(cap_v+1)), dense coefficient grid.
///
/// Binary operations require identical caps on both operands; mixing caps is
/// a usage error, not a promotion.  Values are immutable after construction.
class TruncatedSeries {
public:
  TruncatedSeries(int cap_u, int cap_v);

  static TruncatedSeries constant(const Rational& c, int cap_u, int cap_v);
  static TruncatedSeries one(int cap_u, int cap_v) { return constant(Rational(1), cap_u, cap_v); }
  static TruncatedSeries of(const LinearForm& form, int cap_u, int cap_v);

  /// coeffs listed row-major: coeffs[i*(cap_v+1) + j] is the u^i v^j entry.
  static TruncatedSeries from_coefficients(int cap_u, int cap_v, std::vector<Rational> coeffs);

  int cap_u() const { return cap_u_; }
  int cap_v() const { return cap_v_; }

  /// Exact u^i v^j coefficient; throws std::out_of_range outside the grid.
  const Rational& coefficient(int i, int j) const;

  bool is_zero() const;
  bool is_one() const;

  /// Image under the quotient map onto the ring with smaller caps.
  TruncatedSeries truncated_to(int cap_u, int cap_v) const;

  /// Multiplicative inverse in the truncated ring, by order-by-order solve.
  /// Throws NonUnitError when the constant term vanishes.
  TruncatedSeries inverse() const;

  /// x^e for any signed e; e = 0 gives 1, negative e inverts first.
  TruncatedSeries pow(long e) const;

  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y);
  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y);
  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y);

  std::string str() const;

private:
  int cap_u_;
  int cap_v_;
  std::vector<Rational> coeffs_;  // (cap_u_+1) x (cap_v_+1), row-major

  Rational& at(int i, int j) { return coeffs_[static_cast<size_t>(i) * (cap_v_ + 1) + j]; }
  const Rational& at(int i, int j) const {
    return coeffs_[static_cast<size_t>(i) * (cap_v_ + 1) + j];
  }
  static void require_same_caps(const TruncatedSeries& x, const TruncatedSeries& y);
};

}  // namespace quotdeg
