#include "quotdeg/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "quotdeg/errors.hpp"
#include "quotdeg/vafa.hpp"

namespace quotdeg {

namespace {

// d = 3 golden denominators: (b, a, pos_b, pos_a) and the factor list, each
// factor coeff_u*u + coeff_v*v + (w[plus] - w[minus]) raised to exponent.
const std::vector<ReferenceEulerClass> kD3Reference = {
    // P^3 components, torsion (3, 0)
    {3, 0, 0, 1, {{1, 0, 2, 0, 4}, {1, 0, 3, 0, 4}, {0, 0, 0, 1, 1}, {1, 0, 1, 0, 2}, {0, 0, 2, 1, 1}, {0, 0, 3, 1, 1}}},
    {3, 0, 0, 2, {{1, 0, 1, 0, 4}, {1, 0, 3, 0, 4}, {0, 0, 0, 2, 1}, {1, 0, 2, 0, 2}, {0, 0, 1, 2, 1}, {0, 0, 3, 2, 1}}},
    {3, 0, 0, 3, {{1, 0, 1, 0, 4}, {1, 0, 2, 0, 4}, {0, 0, 0, 3, 1}, {1, 0, 3, 0, 2}, {0, 0, 1, 3, 1}, {0, 0, 2, 3, 1}}},
    {3, 0, 1, 0, {{1, 0, 2, 1, 4}, {1, 0, 3, 1, 4}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 2}, {0, 0, 2, 0, 1}, {0, 0, 3, 0, 1}}},
    {3, 0, 1, 2, {{1, 0, 0, 1, 4}, {1, 0, 3, 1, 4}, {0, 0, 1, 2, 1}, {1, 0, 2, 1, 2}, {0, 0, 0, 2, 1}, {0, 0, 3, 2, 1}}},
    {3, 0, 1, 3, {{1, 0, 0, 1, 4}, {1, 0, 2, 1, 4}, {0, 0, 1, 3, 1}, {1, 0, 3, 1, 2}, {0, 0, 2, 3, 1}, {0, 0, 0, 3, 1}}},
    {3, 0, 2, 0, {{1, 0, 1, 2, 4}, {1, 0, 3, 2, 4}, {0, 0, 2, 0, 1}, {1, 0, 0, 2, 2}, {0, 0, 1, 0, 1}, {0, 0, 3, 0, 1}}},
    {3, 0, 2, 1, {{1, 0, 0, 2, 4}, {1, 0, 3, 2, 4}, {0, 0, 2, 1, 1}, {1, 0, 1, 2, 2}, {0, 0, 0, 1, 1}, {0, 0, 3, 1, 1}}},
    {3, 0, 2, 3, {{1, 0, 0, 2, 4}, {1, 0, 1, 2, 4}, {0, 0, 2, 3, 1}, {1, 0, 3, 2, 2}, {0, 0, 0, 3, 1}, {0, 0, 1, 3, 1}}},
    {3, 0, 3, 0, {{1, 0, 1, 3, 4}, {1, 0, 2, 3, 4}, {0, 0, 3, 0, 1}, {1, 0, 0, 3, 2}, {0, 0, 1, 0, 1}, {0, 0, 2, 0, 1}}},
    {3, 0, 3, 1, {{1, 0, 0, 3, 4}, {1, 0, 2, 3, 4}, {0, 0, 3, 1, 1}, {1, 0, 1, 3, 2}, {0, 0, 0, 1, 1}, {0, 0, 2, 1, 1}}},
    {3, 0, 3, 2, {{1, 0, 0, 3, 4}, {1, 0, 1, 3, 4}, {0, 0, 3, 2, 1}, {1, 0, 2, 3, 2}, {0, 0, 0, 2, 1}, {0, 0, 1, 2, 1}}},
    // P^2 x P^1 components, torsion (2, 1)
    {2, 1, 0, 2, {{0, 1, 0, 2, 2}, {1, 2, 2, 0, 1}, {0, 1, 1, 2, 2}, {0, 1, 3, 2, 2}, {1, 0, 1, 0, 3}, {1, 0, 3, 0, 3}}},
    {2, 1, 0, 3, {{0, 1, 0, 3, 2}, {1, 2, 3, 0, 1}, {0, 1, 2, 3, 2}, {0, 1, 1, 3, 2}, {1, 0, 1, 0, 3}, {1, 0, 2, 0, 3}}},
    {2, 1, 1, 0, {{0, 1, 1, 0, 2}, {1, 2, 0, 1, 1}, {0, 1, 2, 0, 2}, {0, 1, 3, 0, 2}, {1, 0, 3, 1, 3}, {1, 0, 2, 1, 3}}},
    {2, 1, 2, 0, {{0, 1, 2, 0, 2}, {1, 2, 0, 2, 1}, {0, 1, 1, 0, 2}, {0, 1, 3, 0, 2}, {1, 0, 1, 2, 3}, {1, 0, 3, 2, 3}}},
    {2, 1, 2, 1, {{0, 1, 2, 1, 2}, {1, 2, 1, 2, 1}, {0, 1, 0, 1, 2}, {0, 1, 3, 1, 2}, {1, 0, 0, 2, 3}, {1, 0, 3, 2, 3}}},
    {2, 1, 3, 1, {{0, 1, 3, 1, 2}, {1, 2, 1, 3, 1}, {0, 1, 0, 1, 2}, {0, 1, 2, 1, 2}, {1, 0, 0, 3, 3}, {1, 0, 2, 3, 3}}},
};

std::string int_str(const Int& v) { return v.get_str(); }

using Check = CheckResult (*)(bool quick);

struct SeriesRng {
  std::mt19937 rng{20240311u};

  int caps() { return static_cast<int>(rng() % 5); }  // 0..4
  Rational coeff() { return Rational(static_cast<long>(rng() % 19) - 9); }

  TruncatedSeries series(int cap_u, int cap_v, bool unit = false) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(cap_u + 1) * (cap_v + 1));
    for (int i = 0; i <= cap_u; ++i)
      for (int j = 0; j <= cap_v; ++j) c.push_back(coeff());
    if (unit && c[0].is_zero()) c[0] = Rational(static_cast<long>(rng() % 9) + 1);
    return TruncatedSeries::from_coefficients(cap_u, cap_v, std::move(c));
  }
};

CheckResult check_series_ring_laws(bool quick) {
  const int iterations = quick ? 200 : 1000;
  SeriesRng gen;
  for (int it = 0; it < iterations; ++it) {
    const int cu = gen.caps(), cv = gen.caps();
    const auto x = gen.series(cu, cv);
    const auto y = gen.series(cu, cv);
    const auto z = gen.series(cu, cv);
    const auto zero = TruncatedSeries(cu, cv);
    const auto one = TruncatedSeries::one(cu, cv);
    const bool ok = (x + y) + z == x + (y + z) && x + y == y + x && x * y == y * x &&
                    (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
                    x + zero == x && x * one == x;
    if (!ok)
      return {"series_ring_laws", false,
              "law violated at iteration " + std::to_string(it) + " caps (" +
                  std::to_string(cu) + "," + std::to_string(cv) + ")"};
  }
  return {"series_ring_laws", true, std::to_string(iterations) + " random triples"};
}

CheckResult check_series_units_and_powers(bool quick) {
  const int iterations = quick ? 200 : 1000;
  SeriesRng gen;
  for (int it = 0; it < iterations; ++it) {
    const int cu = gen.caps(), cv = gen.caps();
    const auto x = gen.series(cu, cv, /*unit=*/true);
    const auto one = TruncatedSeries::one(cu, cv);
    if (!(x * x.inverse() == one))
      return {"series_units_and_powers", false, "x * x^-1 != 1 at iteration " + std::to_string(it)};
    const long pa = static_cast<long>(gen.rng() % 7) - 3;
    const long pb = static_cast<long>(gen.rng() % 7) - 3;
    if (!(x.pow(pa + pb) == x.pow(pa) * x.pow(pb)))
      return {"series_units_and_powers", false,
              "power law failed for exponents " + std::to_string(pa) + ", " + std::to_string(pb)};
    // truncation is a ring homomorphism
    const int tu = static_cast<int>(gen.rng() % (cu + 1));
    const int tv = static_cast<int>(gen.rng() % (cv + 1));
    const auto y = gen.series(cu, cv);
    if (!((x * y).truncated_to(tu, tv) == x.truncated_to(tu, tv) * y.truncated_to(tu, tv)) ||
        !((x + y).truncated_to(tu, tv) == x.truncated_to(tu, tv) + y.truncated_to(tu, tv)))
      return {"series_units_and_powers", false,
              "truncation homomorphism failed at iteration " + std::to_string(it)};
  }
  return {"series_units_and_powers", true, std::to_string(iterations) + " random units"};
}

CheckResult check_component_count(bool quick) {
  const int dmax = quick ? 3 : 20;
  for (int d = 0; d <= dmax; ++d) {
    const auto components = enumerate_components(d);
    if (components.size() != static_cast<size_t>(6 * (d + 1)))
      return {"component_count", false,
              "d=" + std::to_string(d) + ": " + std::to_string(components.size()) +
                  " components, expected " + std::to_string(6 * (d + 1))};
  }
  return {"component_count", true, "6(d+1) components for d <= " + std::to_string(dmax)};
}

CheckResult check_euler_characteristic(bool quick) {
  const int dmax = quick ? 3 : 20;
  for (int d = 0; d <= dmax; ++d) {
    std::int64_t rank_sum = 0;
    for (const auto& c : enumerate_components(d)) rank_sum += c.chow_rank();
    if (rank_sum != euler_characteristic(d))
      return {"euler_characteristic", false,
              "d=" + std::to_string(d) + ": rank sum " + std::to_string(rank_sum) +
                  " != chi = " + std::to_string(euler_characteristic(d))};
  }
  if (euler_characteristic(3) != 120 || enumerate_components(3).size() != 24)
    return {"euler_characteristic", false, "d=3 must give 24 components and chi = 120"};
  return {"euler_characteristic", true,
          "chow rank sums match chi(R_d) for d <= " + std::to_string(dmax)};
}

CheckResult check_d3_reference(bool) {
  const WeightVector w(0, 1, 2, 3);
  const auto components = enumerate_components(3);
  int compared = 0;
  for (const auto& ref : d3_reference_euler_classes()) {
    const FixedComponent* match = nullptr;
    for (const auto& c : components)
      if (c.b == ref.b && c.a == ref.a && c.pos_b == ref.pos_b && c.pos_a == ref.pos_a)
        match = &c;
    if (!match)
      return {"d3_euler_class_reference", false, "reference component not enumerated"};

    TruncatedSeries expected = TruncatedSeries::one(ref.b, ref.a);
    int degree = 0;
    for (const auto& f : ref.factors) {
      const LinearForm form{Rational(f.coeff_u), Rational(f.coeff_v),
                            Rational(w[f.weight_plus] - w[f.weight_minus])};
      expected = expected * TruncatedSeries::of(form, ref.b, ref.a).pow(f.exponent);
      degree += f.exponent;
    }
    if (degree != 13)
      return {"d3_euler_class_reference", false, "reference factor degrees must total 13"};

    const TruncatedSeries actual = normal_euler_class(*match, w).expand(ref.b, ref.a);
    if (!(actual == expected))
      return {"d3_euler_class_reference", false,
              "mismatch at (b,a)=(" + std::to_string(ref.b) + "," + std::to_string(ref.a) +
                  ") positions (" + std::to_string(ref.pos_b) + "," + std::to_string(ref.pos_a) +
                  "): engine " + actual.str() + " vs reference " + expected.str()};
    ++compared;
  }
  return {"d3_euler_class_reference", true,
          std::to_string(compared) + " denominators reproduced exactly"};
}

CheckResult check_closed_form(bool quick) {
  const int dmax = quick ? 3 : 6;
  const WeightVector w(0, 1, 2, 3);
  for (int d = 0; d <= dmax; ++d) {
    Int expected = 1;
    expected <<= (2 * d + 1);
    const Int got = plucker_degree(d, w);
    if (got != expected)
      return {"closed_form_powers_of_two", false,
              "d=" + std::to_string(d) + ": " + int_str(got) + " != 2^(2d+1) = " +
                  int_str(expected)};
  }
  return {"closed_form_powers_of_two", true, "P_d = 2^(2d+1) for d <= " + std::to_string(dmax)};
}

CheckResult check_weight_invariance(bool quick) {
  const int dmax = quick ? 3 : 4;
  const auto weight_set = invariance_weight_set();
  for (int d = 0; d <= dmax; ++d) {
    const Int reference = plucker_degree(d, weight_set.front());
    for (size_t i = 1; i < weight_set.size(); ++i) {
      const Int got = plucker_degree(d, weight_set[i]);
      if (got != reference)
        return {"weight_invariance", false,
                "d=" + std::to_string(d) + ": weights " + weight_set[i].str() + " give " +
                    int_str(got) + ", expected " + int_str(reference)};
    }
  }
  return {"weight_invariance", true,
          std::to_string(weight_set.size()) + " weight vectors agree for d <= " +
              std::to_string(dmax)};
}

CheckResult check_oracle_agreement(bool quick) {
  const int dmax = quick ? 2 : 5;
  const WeightVector w(0, 1, 2, 3);
  for (int d = 0; d <= dmax; ++d) {
    const Int bott = plucker_degree(d, w);
    const Int vafa = vi_plucker_degree(d);
    if (bott != vafa)
      return {"oracle_agreement", false,
              "d=" + std::to_string(d) + ": bott " + int_str(bott) + " != vafa " + int_str(vafa)};
  }
  return {"oracle_agreement", true, "bott == vafa for d <= " + std::to_string(dmax)};
}

CheckResult check_vi_calibration(bool) {
  // Pins the root-of-unity and index-range conventions of the oracle.
  const Int got = vi_plucker_degree(1);
  if (got != 8)
    return {"vi_calibration", false, "vi_plucker_degree(1) = " + int_str(got) + ", expected 8"};
  return {"vi_calibration", true, "vi_plucker_degree(1) == 8"};
}

}  // namespace

const std::vector<ReferenceEulerClass>& d3_reference_euler_classes() { return kD3Reference; }

std::vector<WeightVector> invariance_weight_set() {
  std::vector<WeightVector> ws = {WeightVector(0, 1, 2, 3), WeightVector(0, 1, 3, 7),
                                  WeightVector(-3, 0, 2, 11)};
  std::mt19937 rng(977003u);
  while (ws.size() < 5) {
    std::array<long, 4> w{};
    for (auto& x : w) x = static_cast<long>(rng() % 101) - 50;
    std::sort(w.begin(), w.end());
    if (w[0] < w[1] && w[1] < w[2] && w[2] < w[3])
      ws.push_back(WeightVector(w[0], w[1], w[2], w[3]));
  }
  return ws;
}

std::vector<CheckResult> run_selfchecks(bool quick) {
  const std::pair<const char*, Check> checks[] = {
      {"series_ring_laws", check_series_ring_laws},
      {"series_units_and_powers", check_series_units_and_powers},
      {"component_count", check_component_count},
      {"euler_characteristic", check_euler_characteristic},
      {"d3_euler_class_reference", check_d3_reference},
      {"closed_form_powers_of_two", check_closed_form},
      {"weight_invariance", check_weight_invariance},
      {"oracle_agreement", check_oracle_agreement},
      {"vi_calibration", check_vi_calibration}};
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    try {
      results.push_back(check(quick));
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  return results;
}

}  // namespace quotdeg
