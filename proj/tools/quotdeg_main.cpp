#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quotdeg/errors.hpp"
#include "quotdeg/localization.hpp"
#include "quotdeg/report.hpp"
#include "quotdeg/selfcheck.hpp"
#include "quotdeg/vafa.hpp"

namespace {

using namespace quotdeg;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitCrossCheck = 3;

WeightVector parse_weights(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    w.push_back(std::stol(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad weight '" + item + "'");
  }
  if (w.size() != 4) throw std::invalid_argument("expected 4 comma-separated weights");
  return WeightVector(w[0], w[1], w[2], w[3]);
}

// "1x16", "2x3,1x4", or a plain comma list "1,1,2"
std::vector<int> parse_insertions(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const size_t x = token.find('x');
    size_t used = 0;
    if (x == std::string::npos) {
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument("bad insertion '" + token + "'");
    } else {
      const int value = std::stoi(token.substr(0, x), &used);
      if (used != x) throw std::invalid_argument("bad insertion '" + token + "'");
      const std::string rep = token.substr(x + 1);
      const int times = std::stoi(rep, &used);
      if (used != rep.size() || times < 0)
        throw std::invalid_argument("bad repeat count in '" + token + "'");
      out.insert(out.end(), static_cast<size_t>(times), value);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty insertion list");
  return out;
}

VIOptions vi_options_from_env() {
  VIOptions opts;
  if (const char* env = std::getenv("QUOTDEG_PRECISION_BITS")) {
    const int bits = std::atoi(env);
    if (bits < 2) throw std::invalid_argument("QUOTDEG_PRECISION_BITS must be a positive integer");
    opts.precision_bits = bits;
    opts.max_precision_bits = std::max(opts.max_precision_bits, bits);
  }
  return opts;
}

std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::runtime_error("degree does not fit in a 64-bit integer");
  return static_cast<std::int64_t>(v.get_si());
}

struct DegreeArgs {
  int d = 0;
  std::string weights = "0,1,2,3";
  std::string method = "both";
  bool per_component = false;
  std::string format = "text";
  int jobs = 1;
};

int run_degree(const DegreeArgs& args) {
  const WeightVector w = parse_weights(args.weights);
  const Method method = parse_method(args.method);

  Report report;
  report.d = args.d;
  report.weights = w.values();
  report.method = method;

  std::optional<Int> bott, vafa;
  if (method != Method::vafa) {
    const auto contributions = all_contributions(args.d, w, args.jobs);
    Rational sum(0);
    for (const auto& c : contributions) sum += c.value;
    bott = require_integral(sum);
    report.checks.push_back({"integral_sum", true, "Bott sum reduces to " + bott->get_str()});
    if (args.per_component) {
      std::vector<PerComponentEntry> entries;
      for (const auto& c : contributions)
        entries.push_back({c.component.pattern(), c.value.str()});
      report.per_component = std::move(entries);
    }
  }
  if (method != Method::bott) vafa = vi_plucker_degree(args.d, vi_options_from_env());

  bool agree = true;
  if (method == Method::both) {
    agree = *bott == *vafa;
    report.checks.push_back({"oracle_agreement", agree,
                             "bott=" + bott->get_str() + " vafa=" + vafa->get_str()});
  }
  report.total_degree = to_int64(bott ? *bott : *vafa);

  std::cout << (args.format == "json" ? report.to_json() : report.to_text());
  return agree ? 0 : kExitCrossCheck;
}

int run_components(int d) {
  const auto components = enumerate_components(d);
  std::int64_t rank_sum = 0;
  std::cout << "  #   pattern                          (b,a)    locus       rank\n";
  int idx = 0;
  for (const auto& c : components) {
    const auto sym = c.pattern();
    std::string pattern = "(" + sym[0] + ", " + sym[1] + ", " + sym[2] + ", " + sym[3] + ")";
    pattern.resize(32, ' ');
    std::string ba = "(" + std::to_string(c.b) + "," + std::to_string(c.a) + ")";
    ba.resize(8, ' ');
    std::string locus = c.locus_str();
    locus.resize(11, ' ');
    std::ostringstream line;
    line << idx;
    std::string idx_str = line.str();
    idx_str.insert(0, 3 - std::min<size_t>(3, idx_str.size()), ' ');
    std::cout << idx_str << "   " << pattern << " " << ba << " " << locus << " "
              << c.chow_rank() << "\n";
    rank_sum += c.chow_rank();
    ++idx;
  }
  std::cout << "components = " << components.size() << "   euler characteristic = " << rank_sum
            << "\n";
  return 0;
}

struct VIArgs {
  int k = 2;
  int n = 4;
  int d = 0;
  std::string insertions;
  std::string format = "text";
};

int run_vi(const VIArgs& args) {
  VIQuery query{args.k, args.n, args.d, parse_insertions(args.insertions)};
  const VIResult result = vi_invariant(query, vi_options_from_env());
  if (args.format == "json") {
    ordered_json j;
    j["k"] = args.k;
    j["n"] = args.n;
    j["d"] = args.d;
    j["insertions"] = query.insertions;
    j["value"] = result.value.get_str();
    j["path"] = result.exact_path ? "exact" : "float";
    j["precision_bits"] = result.precision_bits;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.value.get_str() << "\n";
  }
  return 0;
}

int run_selftest(bool quick, bool json) {
  const auto results = run_selfchecks(quick);
  if (json) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
      ordered_json entry;
      entry["name"] = r.name;
      entry["pass"] = r.pass;
      entry["detail"] = r.detail;
      list.push_back(std::move(entry));
      all = all && r.pass;
    }
    j["checks"] = std::move(list);
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << "  (" << r.detail << ")\n";
  }
  for (const auto& r : results)
    if (!r.pass) {
      std::cerr << "selftest failed at: " << r.name << "\n";
      return kExitCrossCheck;
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quotdeg: exact degree of the generalized Pluecker embedding of the Quot scheme\n"
               "compactifying degree-d maps P^1 -> G(2,4), with an independent\n"
               "Vafa-Intriligator cross-check."};
  app.require_subcommand(1);

  DegreeArgs degree_args;
  auto* degree = app.add_subcommand("degree", "compute the degree P_d");
  degree->add_option("--d", degree_args.d, "torsion degree d (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  degree->add_option("--weights", degree_args.weights,
                     "four strictly increasing integers, comma separated");
  degree->add_option("--method", degree_args.method, "bott|vafa|both (default both)");
  degree->add_flag("--per-component", degree_args.per_component,
                   "list each fixed component's contribution");
  degree->add_option("--format", degree_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  degree->add_option("--jobs", degree_args.jobs, "parallel component evaluation")
      ->check(CLI::PositiveNumber);

  int components_d = 0;
  auto* components = app.add_subcommand("components", "list the torus-fixed components of R_d");
  components->add_option("--d", components_d, "torsion degree d (>= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  VIArgs vi_args;
  auto* vi = app.add_subcommand("vi", "evaluate the Vafa-Intriligator sum for G(k,n)");
  vi->add_option("--k", vi_args.k, "subspace rank k (>= 1)")->required();
  vi->add_option("--n", vi_args.n, "ambient rank n (> k)")->required();
  vi->add_option("--d", vi_args.d, "map degree d (>= 0)")->required();
  vi->add_option("--insertions", vi_args.insertions, "e.g. 1x16 or 2x3,1x4")->required();
  vi->add_option("--format", vi_args.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  bool quick = false, selftest_json = false;
  auto* selftest = app.add_subcommand("selftest", "run the verification battery");
  selftest->add_flag("--quick", quick, "reduced ranges for CI smoke");
  selftest->add_flag("--json", selftest_json, "machine-readable check list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (degree->parsed()) return run_degree(degree_args);
    if (components->parsed()) return run_components(components_d);
    if (vi->parsed()) return run_vi(vi_args);
    if (selftest->parsed()) return run_selftest(quick, selftest_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonGenericWeights& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const NonIntegralSum& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const PrecisionError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return 0;
}
