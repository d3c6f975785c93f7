#include "gray/report.hpp"

#include <map>
#include <sstream>

namespace gray {

bool AxiomReport::has_tag(const std::string& tag) const {
  for (const auto& v : violations)
    if (v.tag == tag) return true;
  return false;
}

void AxiomReport::add(std::string tag, std::vector<CellRef> witness, std::string detail) {
  violations.push_back({std::move(tag), std::move(witness), std::move(detail)});
}

void AxiomReport::merge(const AxiomReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  checked += other.checked;
  skipped += other.skipped;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  if (passed()) {
    os << "pass (" << checked << " checked, " << skipped << " skipped)";
    return os.str();
  }
  std::map<std::string, int> by_tag;
  for (const auto& v : violations) ++by_tag[v.tag];
  os << "fail:";
  for (const auto& [t, n] : by_tag) os << ' ' << t << '=' << n;
  return os.str();
}

}  // namespace gray
