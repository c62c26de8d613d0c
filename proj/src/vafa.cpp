#include "quotdeg/vafa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quotdeg/errors.hpp"

namespace quotdeg {

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
  if (y.is_zero()) throw std::invalid_argument("Gaussian division by zero");
  const Rational norm = y.re * y.re + y.im * y.im;
  const GaussianRational num = x * y.conj();
  return {num.re / norm, num.im / norm};
}

ComplexFloat operator/(const ComplexFloat& x, const ComplexFloat& y) {
  mpf_class norm(y.re * y.re + y.im * y.im);
  return {mpf_class((x.re * y.re + x.im * y.im) / norm),
          mpf_class((x.im * y.re - x.re * y.im) / norm)};
}

bool is_exact(const ComplexValue& z) { return std::holds_alternative<GaussianRational>(z); }

double re_approx(const ComplexValue& z) {
  if (const auto* g = std::get_if<GaussianRational>(&z))
    return g->re.num().get_d() / g->re.den().get_d();
  return std::get<ComplexFloat>(z).re.get_d();
}

double im_approx(const ComplexValue& z) {
  if (const auto* g = std::get_if<GaussianRational>(&z))
    return g->im.num().get_d() / g->im.den().get_d();
  return std::get<ComplexFloat>(z).im.get_d();
}

namespace {

mpf_class to_mpf(const Rational& r, int precision_bits) {
  mpf_class num(r.num(), static_cast<mp_bitcnt_t>(precision_bits));
  mpf_class den(r.den(), static_cast<mp_bitcnt_t>(precision_bits));
  return mpf_class(num / den);
}

/// Newton refinement of a root of z^m = target (target = +-1) from a long
/// double seed; quadratic convergence doubles the correct bits per step.
ComplexFloat refine_root(long double angle, int m, int target, int precision_bits) {
  ComplexFloat z(mpf_class(static_cast<double>(std::cos(angle)),
                           static_cast<mp_bitcnt_t>(precision_bits)),
                 mpf_class(static_cast<double>(std::sin(angle)),
                           static_cast<mp_bitcnt_t>(precision_bits)));
  const ComplexFloat t(mpf_class(target, static_cast<mp_bitcnt_t>(precision_bits)),
                       mpf_class(0, static_cast<mp_bitcnt_t>(precision_bits)));
  const ComplexFloat m_c(mpf_class(m, static_cast<mp_bitcnt_t>(precision_bits)),
                         mpf_class(0, static_cast<mp_bitcnt_t>(precision_bits)));
  int steps = 4;
  for (int p = 64; p < precision_bits; p *= 2) ++steps;
  for (int s = 0; s < steps; ++s) {
    // z^(m-1) and z^m by repeated multiplication; m is small.
    ComplexFloat pow_m1(mpf_class(1, static_cast<mp_bitcnt_t>(precision_bits)),
                        mpf_class(0, static_cast<mp_bitcnt_t>(precision_bits)));
    for (int e = 0; e < m - 1; ++e) pow_m1 = pow_m1 * z;
    ComplexFloat pow_m = pow_m1 * z;
    z = z - (pow_m - t) / (m_c * pow_m1);
  }
  return z;
}

template <class C>
C complex_pow(C base, int e, const C& one) {
  C acc = one;
  for (int s = 0; s < e; ++s) acc = acc * base;
  return acc;
}

/// Shared accumulation: sum over descending index tuples of
///   prod_m sigma_{a_m}(x) * prod_{j<l}(x_j - x_l)^2 * (-1)^C(k,2) / prod_j x_j^(n-1).
/// Tuples are visited in lexicographic order for reproducible float runs.
template <class C>
C vi_sum(const VIQuery& q, const std::vector<C>& roots, const C& one) {
  const int k = q.k, n = q.n;
  const C zero = one - one;

  std::vector<int> count(static_cast<size_t>(k) + 1, 0);
  for (int a : q.insertions) ++count[static_cast<size_t>(a)];
  const bool flip = (static_cast<long>(k) * (k - 1) / 2) % 2 != 0;

  C total = zero;
  std::vector<int> pick(static_cast<size_t>(k));
  for (int m = 0; m < k; ++m) pick[static_cast<size_t>(m)] = m + 1;

  while (true) {
    std::vector<C> x;
    x.reserve(static_cast<size_t>(k));
    for (int idx : pick) x.push_back(roots[static_cast<size_t>(idx - 1)]);

    std::vector<C> e(static_cast<size_t>(k) + 1, zero);
    e[0] = one;
    for (int m = 0; m < k; ++m)
      for (int r = m + 1; r >= 1; --r)
        e[static_cast<size_t>(r)] =
            e[static_cast<size_t>(r)] + x[static_cast<size_t>(m)] * e[static_cast<size_t>(r) - 1];

    C term = one;
    for (int r = 0; r <= k; ++r)
      for (int rep = 0; rep < count[static_cast<size_t>(r)]; ++rep)
        term = term * e[static_cast<size_t>(r)];

    C pairs = one;
    for (int j = 0; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        pairs = pairs * (x[static_cast<size_t>(j)] - x[static_cast<size_t>(l)]);
    C vandermonde = pairs * pairs;
    if (flip) vandermonde = zero - vandermonde;

    C denom = one;
    for (const C& xv : x) denom = denom * complex_pow(xv, n - 1, one);

    total = total + term * vandermonde / denom;

    // next ascending combination of {1..n}
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
    for (int m = pos + 1; m < k; ++m)
      pick[static_cast<size_t>(m)] = pick[static_cast<size_t>(m) - 1] + 1;
  }
  return total;
}

void validate(const VIQuery& q) {
  if (q.k < 1) throw std::invalid_argument("vi: k must be >= 1");
  if (q.n <= q.k) throw std::invalid_argument("vi: n must exceed k");
  if (q.d < 0) throw std::invalid_argument("vi: d must be >= 0");
  long sum = 0;
  for (int a : q.insertions) {
    if (a < 0 || a > q.k)
      throw std::invalid_argument("vi: insertion " + std::to_string(a) + " outside 0.." +
                                  std::to_string(q.k));
    sum += a;
  }
  const long expected = static_cast<long>(q.k) * (q.n - q.k) + static_cast<long>(q.n) * q.d;
  if (sum != expected)
    throw std::invalid_argument("vi: selection rule violated: sum of insertions is " +
                                std::to_string(sum) + ", expected k*(n-k) + n*d = " +
                                std::to_string(expected));
}

bool sign_is_negative(const VIQuery& q) {
  // (-1)^(d(k-1)); the remaining root-of-unity phases collapse into this
  // once the evaluation points are pinned to the n-th roots of unity.
  return (static_cast<long>(q.d) * (q.k - 1)) % 2 != 0;
}

Int exact_vi(const VIQuery& q, bool conjugate) {
  // The n-th roots of unity are Gaussian for n in {1, 2, 4}.
  GaussianRational eta;
  switch (q.n) {
    case 1: eta = {Rational(1), Rational(0)}; break;
    case 2: eta = {Rational(-1), Rational(0)}; break;
    case 4: eta = {Rational(0), Rational(conjugate ? -1 : 1)}; break;
    default: throw std::logic_error("exact path requires Gaussian roots");
  }
  // roots[m-1] = eta^m, matching index m in the sum
  std::vector<GaussianRational> roots;
  GaussianRational acc{Rational(1), Rational(0)};
  for (int m = 1; m <= q.n; ++m) {
    acc = acc * eta;
    roots.push_back(acc);
  }

  const GaussianRational one{Rational(1), Rational(0)};
  GaussianRational total = vi_sum(q, roots, one);

  Int scale = 1;
  for (int m = 0; m < q.k; ++m) scale *= q.n;
  Rational value = total.re / Rational(scale);
  if (sign_is_negative(q)) value = -value;
  const Rational imag = total.im / Rational(scale);
  if (!imag.is_zero())
    throw std::logic_error("vi exact path produced nonzero imaginary part: " + imag.str());
  if (!value.is_integer())
    throw std::logic_error("vi exact path produced non-integer: " + value.str());
  return value.to_integer();
}

struct FloatAttempt {
  bool ok = false;
  Int value;
};

FloatAttempt float_vi_at(const VIQuery& q, bool conjugate, int precision_bits) {
  const long double pi = 3.14159265358979323846264338327950288L;
  std::vector<ComplexFloat> roots;
  ComplexFloat eta = refine_root(2.0L * pi / q.n * (conjugate ? -1 : 1), q.n, 1, precision_bits);
  ComplexFloat acc(mpf_class(1, static_cast<mp_bitcnt_t>(precision_bits)),
                   mpf_class(0, static_cast<mp_bitcnt_t>(precision_bits)));
  for (int m = 1; m <= q.n; ++m) {
    acc = acc * eta;
    roots.push_back(acc);
  }

  const ComplexFloat one(mpf_class(1, static_cast<mp_bitcnt_t>(precision_bits)),
                         mpf_class(0, static_cast<mp_bitcnt_t>(precision_bits)));
  ComplexFloat total = vi_sum(q, roots, one);

  mpf_class scale(1, static_cast<mp_bitcnt_t>(precision_bits));
  for (int m = 0; m < q.k; ++m) scale *= q.n;
  mpf_class re(total.re / scale), im(total.im / scale);
  if (sign_is_negative(q)) re = -re;

  mpf_class rounded = floor(re + 0.5);
  const mpf_class tol(1e-6, static_cast<mp_bitcnt_t>(precision_bits));
  FloatAttempt attempt;
  if (abs(re - rounded) < tol && abs(im) < tol) {
    attempt.ok = true;
    attempt.value = Int(rounded);
  }
  return attempt;
}

}  // namespace

ComplexValue primitive_root(int k, int n, int precision_bits) {
  if (n < 1) throw std::invalid_argument("primitive_root: n must be >= 1");
  const bool even = k % 2 == 0;
  if (even) {
    // e^(2*pi*i/n)
    if (n == 1) return GaussianRational{Rational(1), Rational(0)};
    if (n == 2) return GaussianRational{Rational(-1), Rational(0)};
    if (n == 4) return GaussianRational{Rational(0), Rational(1)};
    const long double pi = 3.14159265358979323846264338327950288L;
    return refine_root(2.0L * pi / n, n, 1, precision_bits);
  }
  // e^(pi*i/n), an n-th root of -1
  if (n == 1) return GaussianRational{Rational(-1), Rational(0)};
  if (n == 2) return GaussianRational{Rational(0), Rational(1)};
  const long double pi = 3.14159265358979323846264338327950288L;
  return refine_root(pi / n, n, -1, precision_bits);
}

ComplexValue elementary_symmetric(int r, const std::vector<ComplexValue>& values) {
  if (r < 0 || static_cast<size_t>(r) > values.size())
    throw std::invalid_argument("elementary_symmetric: r outside 0..|values|");

  bool all_exact = true;
  int precision = 0;
  for (const auto& v : values) {
    if (!is_exact(v)) {
      all_exact = false;
      precision = std::max(
          precision, static_cast<int>(std::get<ComplexFloat>(v).re.get_prec()));
    }
  }

  if (all_exact) {
    std::vector<GaussianRational> e(static_cast<size_t>(r) + 1,
                                    GaussianRational{Rational(0), Rational(0)});
    e[0] = GaussianRational{Rational(1), Rational(0)};
    for (const auto& v : values) {
      const auto& x = std::get<GaussianRational>(v);
      for (int idx = r; idx >= 1; --idx)
        e[static_cast<size_t>(idx)] = e[static_cast<size_t>(idx)] + x * e[static_cast<size_t>(idx) - 1];
    }
    return e[static_cast<size_t>(r)];
  }

  auto promote = [precision](const ComplexValue& v) -> ComplexFloat {
    if (const auto* g = std::get_if<GaussianRational>(&v))
      return ComplexFloat(to_mpf(g->re, precision), to_mpf(g->im, precision));
    return std::get<ComplexFloat>(v);
  };
  std::vector<ComplexFloat> e(static_cast<size_t>(r) + 1, ComplexFloat(precision));
  e[0] = ComplexFloat(mpf_class(1, static_cast<mp_bitcnt_t>(precision)),
                      mpf_class(0, static_cast<mp_bitcnt_t>(precision)));
  for (const auto& v : values) {
    const ComplexFloat x = promote(v);
    for (int idx = r; idx >= 1; --idx)
      e[static_cast<size_t>(idx)] = e[static_cast<size_t>(idx)] + x * e[static_cast<size_t>(idx) - 1];
  }
  return e[static_cast<size_t>(r)];
}

VIResult vi_invariant(const VIQuery& query, const VIOptions& options) {
  validate(query);

  if (query.n == 1 || query.n == 2 || query.n == 4)
    return VIResult{exact_vi(query, options.conjugate_root), true, 0};

  for (int prec = options.precision_bits; prec <= options.max_precision_bits; prec *= 2) {
    FloatAttempt attempt = float_vi_at(query, options.conjugate_root, prec);
    if (attempt.ok) return VIResult{attempt.value, false, prec};
  }
  throw PrecisionError("vi: result failed to certify as an integer at " +
                       std::to_string(options.max_precision_bits) + " bits");
}

Int vi_plucker_degree(int d, const VIOptions& options) {
  if (d < 0) throw std::invalid_argument("vi_plucker_degree: d must be >= 0");
  VIQuery q;
  q.k = 2;
  q.n = 4;
  q.d = d;
  q.insertions.assign(static_cast<size_t>(4) * d + 4, 1);
  return vi_invariant(q, options).value;
}

}  // namespace quotdeg
