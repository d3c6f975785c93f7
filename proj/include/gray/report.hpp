#pragma once

#include <string>
#include <vector>

#include "gray/core.hpp"

namespace gray {

struct Violation {
  std::string tag;  // axiom family, e.g. "C4", "HOM", "BOUNDARY", "GAP"
  std::vector<CellRef> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a checker. passed ⇔ violations empty.
struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t checked = 0;  // tuples examined
  std::size_t skipped = 0;  // tuples skipped because they leave a truncation bound
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  bool has_tag(const std::string& tag) const;
  void add(std::string tag, std::vector<CellRef> witness, std::string detail = {});
  void merge(const AxiomReport& other);
  std::string summary() const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Serial reference path or OpenMP data-parallel path. Both yield identical reports.
enum class Exec { Serial, Parallel };

/// Runs body(i, report) for i in [0, n) and concatenates the per-index reports
/// in index order, so the result does not depend on scheduling.
template <class Body>
AxiomReport for_each_index(std::size_t n, Exec exec, Body&& body);

}  // namespace gray

#include "gray/report_impl.hpp"
