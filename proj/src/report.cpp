#include "quotdeg/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quotdeg {

using ordered_json = nlohmann::ordered_json;

std::string method_name(Method m) {
  switch (m) {
    case Method::bott: return "bott";
    case Method::vafa: return "vafa";
    case Method::both: return "both";
  }
  throw std::logic_error("unknown method");
}

Method parse_method(const std::string& name) {
  if (name == "bott") return Method::bott;
  if (name == "vafa") return Method::vafa;
  if (name == "both") return Method::both;
  throw std::invalid_argument("method must be one of bott|vafa|both, got '" + name + "'");
}

bool Report::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_json() const {
  ordered_json j;
  j["d"] = d;
  j["weights"] = weights;
  j["method"] = method_name(method);
  j["total_degree"] = total_degree;
  if (per_component) {
    ordered_json list = ordered_json::array();
    for (const auto& e : *per_component) {
      ordered_json entry;
      entry["pattern"] = e.pattern;
      entry["contribution"] = e.contribution;
      list.push_back(std::move(entry));
    }
    j["per_component"] = std::move(list);
  }
  ordered_json checks_json = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks_json.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks_json);
  return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  Report r;
  r.d = j.at("d").get<int>();
  const auto w = j.at("weights").get<std::vector<long>>();
  if (w.size() != 4) throw std::invalid_argument("report: weights must have 4 entries");
  std::copy(w.begin(), w.end(), r.weights.begin());
  r.method = parse_method(j.at("method").get<std::string>());
  r.total_degree = j.at("total_degree").get<std::int64_t>();
  if (j.contains("per_component")) {
    std::vector<PerComponentEntry> list;
    for (const auto& entry : j.at("per_component")) {
      PerComponentEntry e;
      const auto pattern = entry.at("pattern").get<std::vector<std::string>>();
      if (pattern.size() != 4) throw std::invalid_argument("report: pattern must have 4 symbols");
      std::copy(pattern.begin(), pattern.end(), e.pattern.begin());
      e.contribution = entry.at("contribution").get<std::string>();
      list.push_back(std::move(e));
    }
    r.per_component = std::move(list);
  }
  for (const auto& entry : j.at("checks"))
    r.checks.push_back(CheckEntry{entry.at("name").get<std::string>(),
                                  entry.at("pass").get<bool>(),
                                  entry.at("detail").get<std::string>()});
  return r;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "d = " << d << "   weights = (" << weights[0] << ", " << weights[1] << ", "
     << weights[2] << ", " << weights[3] << ")   method = " << method_name(method) << "\n";
  os << "total degree = " << total_degree << "\n";
  if (per_component) {
    os << "\n  #   pattern                          contribution\n";
    int idx = 0;
    for (const auto& e : *per_component) {
      std::string pattern = "(" + e.pattern[0] + ", " + e.pattern[1] + ", " + e.pattern[2] +
                            ", " + e.pattern[3] + ")";
      pattern.resize(32, ' ');
      os << "  " << idx << (idx < 10 ? "  " : " ") << " " << pattern << " " << e.contribution
         << "\n";
      ++idx;
    }
  }
  if (!checks.empty()) {
    os << "\n";
    for (const auto& c : checks)
      os << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")")
         << "\n";
  }
  return os.str();
}

}  // namespace quotdeg
