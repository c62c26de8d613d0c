#include "quotdeg/series.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quotdeg/errors.hpp"

namespace quotdeg {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

void append_term(std::ostream& os, bool& first, const Rational& c, int i, int j) {
  if (c.is_zero()) return;
  Rational a = c;
  if (first) {
    if (a < Rational(0)) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < Rational(0) ? " - " : " + ");
    if (a < Rational(0)) a = -a;
  }
  first = false;
  const bool has_var = i > 0 || j > 0;
  if (!has_var || a != Rational(1)) {
    os << (a.is_integer() ? a.num().get_str() : a.str());
    if (has_var) os << "*";
  }
  if (i == 1) os << "u";
  if (i > 1) os << "u^" << i;
  if (i > 0 && j > 0) os << "*";
  if (j == 1) os << "v";
  if (j > 1) os << "v^" << j;
}

}  // namespace

std::string LinearForm::str() const {
  std::ostringstream os;
  bool first = true;
  append_term(os, first, coeff_u, 1, 0);
  append_term(os, first, coeff_v, 0, 1);
  append_term(os, first, constant, 0, 0);
  if (first) os << "0";
  return os.str();
}

TruncatedSeries::TruncatedSeries(int cap_u, int cap_v) : cap_u_(cap_u), cap_v_(cap_v) {
  if (cap_u < 0 || cap_v < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
  coeffs_.assign(static_cast<size_t>(cap_u + 1) * (cap_v + 1), Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int cap_u, int cap_v) {
  TruncatedSeries s(cap_u, cap_v);
  s.at(0, 0) = c;
  return s;
}

TruncatedSeries TruncatedSeries::of(const LinearForm& form, int cap_u, int cap_v) {
  TruncatedSeries s(cap_u, cap_v);
  s.at(0, 0) = form.constant;
  if (cap_u >= 1) s.at(1, 0) = form.coeff_u;
  if (cap_v >= 1) s.at(0, 1) = form.coeff_v;
  return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(int cap_u, int cap_v,
                                                   std::vector<Rational> coeffs) {
  TruncatedSeries s(cap_u, cap_v);
  if (coeffs.size() != s.coeffs_.size())
    throw std::invalid_argument("TruncatedSeries: coefficient count does not match caps");
  s.coeffs_ = std::move(coeffs);
  return s;
}

const Rational& TruncatedSeries::coefficient(int i, int j) const {
  if (i < 0 || i > cap_u_ || j < 0 || j > cap_v_)
    throw std::out_of_range("TruncatedSeries: coefficient index outside caps");
  return at(i, j);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool TruncatedSeries::is_one() const { return *this == one(cap_u_, cap_v_); }

TruncatedSeries TruncatedSeries::truncated_to(int cap_u, int cap_v) const {
  if (cap_u > cap_u_ || cap_v > cap_v_)
    throw std::invalid_argument("TruncatedSeries: truncation may not enlarge caps");
  TruncatedSeries s(cap_u, cap_v);
  for (int i = 0; i <= cap_u; ++i)
    for (int j = 0; j <= cap_v; ++j) s.at(i, j) = at(i, j);
  return s;
}

void TruncatedSeries::require_same_caps(const TruncatedSeries& x, const TruncatedSeries& y) {
  if (x.cap_u_ != y.cap_u_ || x.cap_v_ != y.cap_v_)
    throw std::invalid_argument("TruncatedSeries: cap mismatch between operands");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(cap_u_, cap_v_);
  for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries::require_same_caps(x, y);
  TruncatedSeries r(x.cap_u_, x.cap_v_);
  for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = x.coeffs_[k] + y.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries::require_same_caps(x, y);
  TruncatedSeries r(x.cap_u_, x.cap_v_);
  for (size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = x.coeffs_[k] - y.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
  TruncatedSeries::require_same_caps(x, y);
  TruncatedSeries r(x.cap_u_, x.cap_v_);
  for (int i = 0; i <= x.cap_u_; ++i)
    for (int j = 0; j <= x.cap_v_; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int p = 0; i + p <= x.cap_u_; ++p)
        for (int q = 0; j + q <= x.cap_v_; ++q) {
          if (y.at(p, q).is_zero()) continue;
          r.at(i + p, j + q) += x.at(i, j) * y.at(p, q);
        }
    }
  return r;
}

bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
  return x.cap_u_ == y.cap_u_ && x.cap_v_ == y.cap_v_ && x.coeffs_ == y.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (at(0, 0).is_zero())
    throw NonUnitError("series inverse: constant term is zero (non-unit)");
  const Rational c0 = at(0, 0).inverse();
  TruncatedSeries y(cap_u_, cap_v_);
  // Solve x*y = 1 coefficient by coefficient in graded order; each y[i][j]
  // only depends on entries with p <= i, q <= j already solved.
  for (int i = 0; i <= cap_u_; ++i)
    for (int j = 0; j <= cap_v_; ++j) {
      Rational acc = (i == 0 && j == 0) ? Rational(1) : Rational(0);
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) {
          if (p == i && q == j) continue;
          if (at(i - p, j - q).is_zero()) continue;
          acc -= at(i - p, j - q) * y.at(p, q);
        }
      y.at(i, j) = acc * c0;
    }
  return y;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TruncatedSeries acc = one(cap_u_, cap_v_);
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= cap_u_; ++i)
    for (int j = 0; j <= cap_v_; ++j) append_term(os, first, at(i, j), i, j);
  if (first) os << "0";
  return os.str();
}

}  // namespace quotdeg
