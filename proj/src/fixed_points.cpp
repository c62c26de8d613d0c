#include "quotdeg/fixed_points.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace quotdeg {

WeightVector::WeightVector(long w0, long w1, long w2, long w3) : w_{w0, w1, w2, w3} {
  if (!(w0 < w1 && w1 < w2 && w2 < w3))
    throw std::invalid_argument("weights must be strictly increasing");
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << "(" << w_[0] << ", " << w_[1] << ", " << w_[2] << ", " << w_[3] << ")";
  return os.str();
}

std::array<int, 2> FixedComponent::trivial_positions() const {
  std::array<int, 2> t{};
  int n = 0;
  for (int p = 0; p < 4; ++p)
    if (p != pos_b && p != pos_a) t[static_cast<size_t>(n++)] = p;
  return t;
}

std::array<std::string, 4> FixedComponent::pattern() const {
  std::array<std::string, 4> sym;
  for (int p = 0; p < 4; ++p) sym[static_cast<size_t>(p)] = "t+1";
  sym[static_cast<size_t>(pos_b)] = "b:" + std::to_string(b);
  sym[static_cast<size_t>(pos_a)] = "a:" + std::to_string(a);
  return sym;
}

std::string FixedComponent::locus_str() const {
  if (b == 0) return "point";
  if (a == 0) return "P^" + std::to_string(b);
  return "P^" + std::to_string(b) + " x P^" + std::to_string(a);
}

std::vector<FixedComponent> enumerate_components(int d) {
  if (d < 0) throw std::invalid_argument("enumerate_components: d must be >= 0");
  std::vector<FixedComponent> out;
  out.reserve(static_cast<size_t>(6 * (d + 1)));
  for (int a = 0; 2 * a <= d; ++a) {
    const int b = d - a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        // Equal torsion degrees make the ordered assignments the same
        // component; keep only the canonical representative.
        if (b == a && i > j) continue;
        out.push_back(FixedComponent{d, b, a, i, j});
      }
  }
  std::sort(out.begin(), out.end(), [](const FixedComponent& x, const FixedComponent& y) {
    return std::tie(x.b, x.pos_b, x.pos_a) < std::tie(y.b, y.pos_b, y.pos_a);
  });
  return out;
}

std::int64_t euler_characteristic(int d) {
  if (d < 0) throw std::invalid_argument("euler_characteristic: d must be >= 0");
  const std::int64_t n = d;
  return (n + 1) * (n + 2) * (n + 3);
}

}  // namespace quotdeg
