#pragma once

#include <string>
#include <vector>

namespace atoric {

struct Finding {
  std::string source;  // "diagram", "label[i]", "ingredient"
  std::string code;    // condition tag, e.g. "b:corner"
  std::string detail;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  bool has(const std::string& code) const;
  void add(std::string source, std::string code, std::string detail);
  void append(const ValidationReport& other);
  std::string to_string() const;
};

}  // namespace atoric
