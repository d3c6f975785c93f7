#pragma once

#include "gray/category.hpp"
#include "gray/report.hpp"

namespace gray {

/// Exhaustive check of a finite Gray-category.
///
/// Tags: BOUNDARY and GAP for malformed tables, HOM for the strict
/// 2-category laws of each hom (including interchange), D4 for the
/// functoriality of whiskering, D5 for invertibility of Σ, and C1..C6.
/// An instance whose evaluation hits an ill-typed entry is reported under the
/// tag of the law being evaluated; a missing entry is reported as GAP.
AxiomReport check_gray_axioms(const FiniteGrayCategory& C, Exec exec = Exec::Parallel);

}  // namespace gray
