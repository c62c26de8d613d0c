// Acceptance suite: one line per criterion, nonzero exit if any fail.
// QUOTDEG_BIN and QUOTDEG_FAULTED_BIN must point at the CLI binaries.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quotdeg/errors.hpp"
#include "quotdeg/localization.hpp"
#include "quotdeg/selfcheck.hpp"
#include "quotdeg/vafa.hpp"

using namespace quotdeg;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const char* env_name, const std::string& args) {
  const char* bin = std::getenv(env_name);
  if (!bin) throw std::runtime_error(std::string(env_name) + " is not set");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult result;
  std::array<char, 4096> buffer{};
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string check_degree_cli() {
  const auto started = std::chrono::steady_clock::now();
  const RunResult r = run_cli("QUOTDEG_BIN", "degree --d 3 --method bott");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (r.exit_code != 0) return "exit code " + std::to_string(r.exit_code);
  if (r.output.find("total degree = 128") == std::string::npos)
    return "output lacks 'total degree = 128': " + r.output;
  if (seconds >= 1.0) return "took " + std::to_string(seconds) + " s, budget is 1 s";
  return "";
}

std::string check_closed_form() {
  const WeightVector w(0, 1, 2, 3);
  for (int d = 0; d <= 8; ++d) {
    Int expected = 1;
    expected <<= (2 * d + 1);
    const Int got = plucker_degree(d, w);
    if (got != expected)
      return "d=" + std::to_string(d) + ": " + got.get_str() + " != " + expected.get_str();
  }
  return "";
}

std::string check_weight_invariance() {
  const auto ws = invariance_weight_set();
  if (ws.size() < 5) return "weight set too small";
  for (int d = 0; d <= 4; ++d) {
    const Int reference = plucker_degree(d, ws.front());
    for (const auto& w : ws)
      if (plucker_degree(d, w) != reference)
        return "d=" + std::to_string(d) + " disagrees at weights " + w.str();
  }
  return "";
}

std::string check_oracle_agreement() {
  const WeightVector w(0, 1, 2, 3);
  for (int d = 0; d <= 5; ++d) {
    const Int bott = plucker_degree(d, w);
    const VIResult vafa = vi_invariant(VIQuery{2, 4, d, std::vector<int>(4 * d + 4, 1)});
    if (!vafa.exact_path) return "oracle left the exact path at d=" + std::to_string(d);
    if (bott != vafa.value)
      return "d=" + std::to_string(d) + ": bott " + bott.get_str() + " != vafa " +
             vafa.value.get_str();
  }
  return "";
}

std::string check_combinatorics() {
  for (int d = 0; d <= 20; ++d) {
    const auto components = enumerate_components(d);
    if (components.size() != static_cast<size_t>(6 * (d + 1)))
      return "d=" + std::to_string(d) + ": component count " +
             std::to_string(components.size());
    std::int64_t rank_sum = 0;
    for (const auto& c : components) rank_sum += c.chow_rank();
    if (rank_sum != euler_characteristic(d))
      return "d=" + std::to_string(d) + ": rank sum " + std::to_string(rank_sum) +
             " != " + std::to_string(euler_characteristic(d));
  }
  if (enumerate_components(3).size() != 24 || euler_characteristic(3) != 120)
    return "d=3 must reproduce 24 components and chi = 120";
  return "";
}

std::string check_golden_set() {
  const WeightVector w(0, 1, 2, 3);
  const auto components = enumerate_components(3);
  size_t compared = 0;
  for (const auto& ref : d3_reference_euler_classes()) {
    const FixedComponent* match = nullptr;
    for (const auto& c : components)
      if (c.b == ref.b && c.a == ref.a && c.pos_b == ref.pos_b && c.pos_a == ref.pos_a)
        match = &c;
    if (!match) return "missing component for a golden entry";
    TruncatedSeries expected = TruncatedSeries::one(ref.b, ref.a);
    int degree = 0;
    for (const auto& f : ref.factors) {
      expected = expected * TruncatedSeries::of(LinearForm{Rational(f.coeff_u),
                                                           Rational(f.coeff_v),
                                                           Rational(w[f.weight_plus] -
                                                                    w[f.weight_minus])},
                                                ref.b, ref.a)
                                .pow(f.exponent);
      degree += f.exponent;
    }
    if (degree != 13) return "golden factor degrees must total 13";
    if (!(normal_euler_class(*match, w).expand(ref.b, ref.a) == expected))
      return "mismatch at component (b,a,pos_b,pos_a)=(" + std::to_string(ref.b) + "," +
             std::to_string(ref.a) + "," + std::to_string(ref.pos_b) + "," +
             std::to_string(ref.pos_a) + ")";
    ++compared;
  }
  if (compared < 13) return "golden set smaller than the required minimum";

  // bridge identity: (u+c)^3 (u-v+c)^-2 = u + 2v + c mod (u^3, v^2)
  for (long c : {-1L, 1L, 2L}) {
    const auto lhs =
        TruncatedSeries::of(LinearForm{Rational(1), Rational(0), Rational(c)}, 2, 1).pow(3) *
        TruncatedSeries::of(LinearForm{Rational(1), Rational(-1), Rational(c)}, 2, 1).pow(-2);
    if (!(lhs == TruncatedSeries::of(LinearForm{Rational(1), Rational(2), Rational(c)}, 2, 1)))
      return "bridge identity failed at c=" + std::to_string(c);
  }
  return "";
}

std::string check_series_properties() {
  std::mt19937 rng(777u);
  auto random_series = [&rng](int cu, int cv, bool unit) {
    std::vector<Rational> c;
    for (int i = 0; i <= cu; ++i)
      for (int j = 0; j <= cv; ++j) c.push_back(Rational(static_cast<long>(rng() % 19) - 9));
    if (unit && c[0].is_zero()) c[0] = Rational(3);
    return TruncatedSeries::from_coefficients(cu, cv, std::move(c));
  };
  for (int it = 0; it < 1000; ++it) {
    const int cu = static_cast<int>(rng() % 5), cv = static_cast<int>(rng() % 5);
    const auto x = random_series(cu, cv, false);
    const auto y = random_series(cu, cv, false);
    const auto z = random_series(cu, cv, false);
    const auto one = TruncatedSeries::one(cu, cv);
    if (!((x + y) + z == x + (y + z)) || !(x * y == y * x) || !((x * y) * z == x * (y * z)) ||
        !(x * (y + z) == x * y + x * z) || !(x + TruncatedSeries(cu, cv) == x) ||
        !(x * one == x))
      return "ring law failed at iteration " + std::to_string(it);
    const auto u = random_series(cu, cv, true);
    if (!(u * u.inverse() == one)) return "unit inverse failed at iteration " + std::to_string(it);
    const long pa = static_cast<long>(rng() % 7) - 3, pb = static_cast<long>(rng() % 7) - 3;
    if (!(u.pow(pa + pb) == u.pow(pa) * u.pow(pb)))
      return "power law failed at iteration " + std::to_string(it);
    const int tu = static_cast<int>(rng() % (cu + 1)), tv = static_cast<int>(rng() % (cv + 1));
    if (!((x * y).truncated_to(tu, tv) == x.truncated_to(tu, tv) * y.truncated_to(tu, tv)))
      return "truncation homomorphism failed at iteration " + std::to_string(it);
  }
  return "";
}

std::string check_error_paths() {
  const RunResult usage = run_cli("QUOTDEG_BIN", "degree --d 3 --weights 0,1,2,2");
  if (usage.exit_code != 1)
    return "non-increasing weights gave exit " + std::to_string(usage.exit_code) +
           ", expected 1";
  if (usage.output.find("strictly increasing") == std::string::npos)
    return "usage diagnostic missing: " + usage.output;

  const RunResult faulted = run_cli("QUOTDEG_FAULTED_BIN", "degree --d 2 --method bott");
  if (faulted.exit_code != 2)
    return "fault-injected build gave exit " + std::to_string(faulted.exit_code) +
           ", expected 2";
  if (faulted.output.find("not an integer") == std::string::npos)
    return "fault-injected build lacks the NonIntegralSum diagnostic: " + faulted.output;

  const RunResult faulted_selftest = run_cli("QUOTDEG_FAULTED_BIN", "selftest --quick");
  if (faulted_selftest.exit_code != 3)
    return "fault-injected selftest gave exit " + std::to_string(faulted_selftest.exit_code) +
           ", expected 3";
  if (faulted_selftest.output.find("selftest failed at:") == std::string::npos)
    return "fault-injected selftest does not name the failing check";

  // at d = 0 the injected fault keeps the sum integral but wrong, so the
  // default method=both run must end in a cross-check failure
  const RunResult disagree = run_cli("QUOTDEG_FAULTED_BIN", "degree --d 0");
  if (disagree.exit_code != 3)
    return "fault-injected cross-check gave exit " + std::to_string(disagree.exit_code) +
           ", expected 3";
  return "";
}

struct Criterion {
  std::string label;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1. CLI degree --d 3 --method bott returns exactly 128 in under 1 s", check_degree_cli},
      {"2. plucker_degree(d) = 2^(2d+1) for d = 0..8", check_closed_form},
      {"3. weight invariance for d = 0..4 over 5 weight quadruples", check_weight_invariance},
      {"4. Bott sum equals the exact Vafa-Intriligator oracle for d = 0..5",
       check_oracle_agreement},
      {"5. 6(d+1) components and chow rank sum 6*C(d+3,3) for d = 0..20", check_combinatorics},
      {"6. d = 3 golden Euler classes and the bridge identity", check_golden_set},
      {"7. series ring laws on 1000 random series", check_series_properties},
      {"8. error contract: usage exit 1, injected sign fault exit 2", check_error_paths},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "PASS  " << criterion.label << "\n";
    } else {
      std::cout << "FAIL  " << criterion.label << "  [" << detail << "]\n";
      ++failures;
    }
  }
  if (failures == 0)
    std::cout << "acceptance: all " << criteria.size() << " criteria pass\n";
  else
    std::cout << "acceptance: " << failures << " criterion(s) failing\n";
  return failures == 0 ? 0 : 1;
}
