#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "quotdeg/rational.hpp"

namespace quotdeg {

/// Exact element of Q(i), used whenever the evaluation roots are Gaussian
/// (n = 4, and the degenerate n = 1, 2 cases).
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y);
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

/// Complex number over GMP floats at a fixed mantissa precision.
struct ComplexFloat {
  mpf_class re;
  mpf_class im;

  explicit ComplexFloat(int precision_bits)
      : re(0, static_cast<mp_bitcnt_t>(precision_bits)),
        im(0, static_cast<mp_bitcnt_t>(precision_bits)) {}
  ComplexFloat(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexFloat operator+(const ComplexFloat& x, const ComplexFloat& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexFloat operator-(const ComplexFloat& x, const ComplexFloat& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexFloat operator*(const ComplexFloat& x, const ComplexFloat& y) {
    return {mpf_class(x.re * y.re - x.im * y.im), mpf_class(x.re * y.im + x.im * y.re)};
  }
  friend ComplexFloat operator/(const ComplexFloat& x, const ComplexFloat& y);
};

/// Either representation of a complex scalar; the exact branch is taken
/// whenever the root of unity involved is Gaussian.
using ComplexValue = std::variant<GaussianRational, ComplexFloat>;

bool is_exact(const ComplexValue& z);
double re_approx(const ComplexValue& z);
double im_approx(const ComplexValue& z);

/// Primitive n-th root of (-1)^k: e^(2*pi*i/n) for k even, e^(pi*i/n) for
/// k odd.  Exact Gaussian value when possible, floating otherwise.
ComplexValue primitive_root(int k, int n, int precision_bits = 128);

/// Elementary symmetric polynomial e_r of the inputs, by the standard
/// recurrence.  Mixed exact/float inputs are promoted to float.
ComplexValue elementary_symmetric(int r, const std::vector<ComplexValue>& values);

/// A genus-0 Grassmannian invariant query for G(k, n) in degree d with
/// Schubert insertions sigma_{a_i}.  The selection rule
/// sum(a_i) = k(n-k) + n*d must hold.
struct VIQuery {
  int k = 2;
  int n = 4;
  int d = 0;
  std::vector<int> insertions;
};

struct VIOptions {
  int precision_bits = 128;      // starting float precision
  int max_precision_bits = 1024; // doubling retry ceiling
  bool conjugate_root = false;   // evaluate at the conjugate primitive root
};

struct VIResult {
  Int value;
  bool exact_path = false;
  int precision_bits = 0;  // 0 on the exact path
};

/// Root-of-unity evaluation of the Vafa-Intriligator sum.  Exact Gaussian
/// arithmetic for n in {1, 2, 4}; otherwise floating at increasing precision
/// until the result certifies as an integer (PrecisionError past the cap).
VIResult vi_invariant(const VIQuery& query, const VIOptions& options = {});

/// Pluecker degree of R_d through the oracle: k = 2, n = 4, with 4d + 4
/// hyperplane insertions.  Always on the exact path.
Int vi_plucker_degree(int d, const VIOptions& options = {});

}  // namespace quotdeg
