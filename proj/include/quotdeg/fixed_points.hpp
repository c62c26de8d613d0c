#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace quotdeg {

/// The four integral torus weights, strictly increasing.  Strictness makes
/// every pairwise difference nonzero, which is exactly the genericity the
/// localization denominators need.
class WeightVector {
public:
  WeightVector(long w0, long w1, long w2, long w3);

  long operator[](int i) const { return w_[static_cast<size_t>(i)]; }
  const std::array<long, 4>& values() const { return w_; }

  std::string str() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

private:
  std::array<long, 4> w_;
};

/// One torus-fixed component of R_d: torsion degrees b >= a at two of the
/// four coordinates, rank-1 trivial summands at the other two.  The fixed
/// locus is P^b x P^a (a factor of dimension 0 is a point).
struct FixedComponent {
  int d;      // total torsion degree, b + a
  int b;      // larger torsion degree, at position pos_b
  int a;      // smaller torsion degree, at position pos_a
  int pos_b;  // 0..3
  int pos_a;  // 0..3, distinct from pos_b; pos_b < pos_a when b == a

  /// The two positions carrying the trivial summands, ascending.
  std::array<int, 2> trivial_positions() const;

  /// Rank of the Chow group of P^b x P^a.
  int chow_rank() const { return (b + 1) * (a + 1); }

  /// Four position symbols, e.g. ("b:3", "a:0", "t+1", "t+1").
  std::array<std::string, 4> pattern() const;

  std::string locus_str() const;  // "P^b x P^a", points dropped

  friend bool operator==(const FixedComponent& x, const FixedComponent& y) {
    return x.d == y.d && x.b == y.b && x.a == y.a && x.pos_b == y.pos_b && x.pos_a == y.pos_a;
  }
};

/// All fixed components of R_d in canonical form, sorted by (b, pos_b, pos_a).
/// There are 6*(d+1) of them for every d >= 0.
std::vector<FixedComponent> enumerate_components(int d);

/// chi(R_d) = 6 * C(d+3, 3) = (d+1)(d+2)(d+3).
std::int64_t euler_characteristic(int d);

inline int chow_rank(const FixedComponent& c) { return c.chow_rank(); }

}  // namespace quotdeg
