#include "atoric/report.hpp"

#include <algorithm>
#include <sstream>

namespace atoric {

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.code == code; });
}

void ValidationReport::add(std::string source, std::string code, std::string detail) {
  findings.push_back({std::move(source), std::move(code), std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

std::string ValidationReport::to_string() const {
  if (ok()) return "pass\n";
  std::ostringstream out;
  out << "fail (" << findings.size() << " finding" << (findings.size() == 1 ? "" : "s") << ")\n";
  for (const auto& f : findings) out << "  [" << f.source << "] " << f.code << ": " << f.detail << "\n";
  return out.str();
}

}  // namespace atoric
