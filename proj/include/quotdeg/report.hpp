#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quotdeg {

enum class Method { bott, vafa, both };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PerComponentEntry {
  std::array<std::string, 4> pattern;  // symbols from {b:<int>, a:<int>, t+1}
  std::string contribution;            // exact rational "num/den"
};

/// Machine-readable result of a degree run.  Serializes to JSON with a
/// fixed key order so that parse + re-serialize is byte-identical.
struct Report {
  int d = 0;
  std::array<long, 4> weights{0, 1, 2, 3};
  Method method = Method::both;
  std::int64_t total_degree = 0;
  std::optional<std::vector<PerComponentEntry>> per_component;
  std::vector<CheckEntry> checks;

  bool all_checks_pass() const;

  std::string to_json() const;  // canonical, 2-space indent, trailing newline
  static Report from_json(const std::string& text);

  std::string to_text() const;
};

}  // namespace quotdeg
