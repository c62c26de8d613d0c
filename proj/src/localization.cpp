#include "quotdeg/localization.hpp"

#include <mutex>
#include <stdexcept>
#include <thread>

#include "quotdeg/errors.hpp"

namespace quotdeg {

EquivariantFactor EquivariantFactor::make(LinearForm form, int exponent) {
  if (form.is_zero() && exponent > 0)
    throw NonGenericWeights("equivariant factor vanishes: " + form.str());
  if (exponent < 0 && form.constant.is_zero())
    throw NonGenericWeights("non-invertible equivariant factor: (" + form.str() + ")^" +
                            std::to_string(exponent));
  return EquivariantFactor{std::move(form), exponent};
}

int EquivariantClassProduct::total_degree() const {
  int deg = 0;
  for (const auto& f : factors) deg += f.exponent;
  return deg;
}

TruncatedSeries EquivariantClassProduct::expand(int cap_u, int cap_v) const {
  TruncatedSeries acc = TruncatedSeries::one(cap_u, cap_v);
  try {
    for (const auto& f : factors)
      acc = acc * TruncatedSeries::of(f.form, cap_u, cap_v).pow(f.exponent);
  } catch (const NonUnitError& e) {
    throw NonGenericWeights(e.what());
  }
  return acc;
}

LinearForm alpha_restriction(const FixedComponent& c, const WeightVector& w) {
  const auto [k, l] = c.trivial_positions();
  return LinearForm{Rational(c.b > 0 ? 1 : 0), Rational(c.a > 0 ? 1 : 0),
                    Rational(w[k] + w[l])};
}

LinearForm beta_restriction(const FixedComponent& c, const WeightVector& w) {
  const auto [k, l] = c.trivial_positions();
  const long d = c.d;
  return LinearForm{Rational(c.a), Rational(c.b),
                    Rational(c.b * w[c.pos_b] + c.a * w[c.pos_a] + d * (w[k] + w[l]))};
}

EquivariantClassProduct normal_euler_class(const FixedComponent& c, const WeightVector& w) {
  const int i = c.pos_b, j = c.pos_a;
  const auto [k, l] = c.trivial_positions();
  const int b = c.b, a = c.a;

  EquivariantClassProduct product;
  auto add = [&product](long cu, long cv, long constant, int exponent) {
    if (exponent == 0) return;
    product.factors.push_back(
        EquivariantFactor::make(LinearForm{Rational(cu), Rational(cv), Rational(constant)},
                                exponent));
  };

  // Weight decomposition of the normal bundle, one factor per eigensubbundle
  // piece; u lives on the P^b factor, v on the P^a factor.
  add(1, 0, w[k] - w[i], b + 1);
  add(1, 0, w[l] - w[i], b + 1);
  add(0, 1, w[k] - w[j], a + 1);
  add(0, 1, w[l] - w[j], a + 1);
  add(-1, 1, w[i] - w[j], b - a - 1);
  add(0, 1, w[i] - w[j], a + 1);
  if (a > 0) {
    add(1, 0, w[j] - w[i], b + 1);
    add(1, -1, w[j] - w[i], a - b - 1);
  }
  // a == 0: the last two factors carry the same restricted form (v is a
  // point class) and their exponents cancel exactly; merged away instead of
  // paying a series inversion.

#ifdef QUOTDEG_FAULT_INJECTION
  // Test-only build: corrupt one factor so the Bott sum stops being integral.
  if (i == 0) product.factors[0].form.constant = -product.factors[0].form.constant;
#endif

  const int expected = 3 * c.d + 4;
  if (product.total_degree() != expected)
    throw std::logic_error("normal bundle degree bookkeeping violated");
  return product;
}

ComponentContribution component_contribution(const FixedComponent& c, const WeightVector& w) {
  const int cap_u = c.b, cap_v = c.a;
  const long dim = 4L * c.d + 4;

  TruncatedSeries acc =
      TruncatedSeries::of(alpha_restriction(c, w), cap_u, cap_v).pow(dim);
  try {
    for (const auto& f : normal_euler_class(c, w).factors)
      acc = acc * TruncatedSeries::of(f.form, cap_u, cap_v).pow(-f.exponent);
  } catch (const NonUnitError& e) {
    throw NonGenericWeights(e.what());
  }
  return ComponentContribution{c, acc.coefficient(c.b, c.a)};
}

std::vector<ComponentContribution> all_contributions(int d, const WeightVector& w, int jobs) {
  const auto components = enumerate_components(d);
  std::vector<ComponentContribution> out(components.size());

  if (jobs <= 1 || components.size() <= 1) {
    for (size_t idx = 0; idx < components.size(); ++idx)
      out[idx] = component_contribution(components[idx], w);
    return out;
  }

  const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), components.size());
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (size_t idx = t; idx < components.size(); idx += nthreads)
          out[idx] = component_contribution(components[idx], w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

Int require_integral(const Rational& sum) {
  if (!sum.is_integer())
    throw NonIntegralSum("Bott sum is not an integer: " + sum.str());
  return sum.num();
}

Int plucker_degree(int d, const WeightVector& w, int jobs) {
  Rational sum(0);
  for (const auto& contribution : all_contributions(d, w, jobs)) sum += contribution.value;
  return require_integral(sum);
}

}  // namespace quotdeg
