#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gray/core.hpp"
#include "gray/report.hpp"

namespace gray::detail {

/// Evaluates both sides of one law instance and records a violation if they
/// differ or if evaluation fails. A missing table entry is reported as GAP.
template <class L, class R>
void law(AxiomReport& rep, const char* tag, std::vector<CellRef> w, L&& lhs, R&& rhs) {
  ++rep.checked;
  try {
    auto a = lhs();
    auto b = rhs();
    if (a != b) rep.add(tag, std::move(w), "sides differ");
  } catch (const Error& e) {
    rep.add(e.kind() == ErrorKind::TableGap ? "GAP" : tag, std::move(w), e.what());
  }
}

/// Evaluates cond(); false or an evaluation error yields a violation.
template <class P>
void holds(AxiomReport& rep, const char* tag, std::vector<CellRef> w, P&& cond,
           const std::string& detail = "condition fails") {
  ++rep.checked;
  try {
    if (!cond()) rep.add(tag, std::move(w), detail);
  } catch (const Error& e) {
    rep.add(e.kind() == ErrorKind::TableGap ? "GAP" : tag, std::move(w), e.what());
  }
}

inline CellRef r0(CellId x) { return {0, x}; }
inline CellRef r1(CellId x) { return {1, x}; }
inline CellRef r2(CellId x) { return {2, x}; }
inline CellRef r3(CellId x) { return {3, x}; }

}  // namespace gray::detail
