#pragma once

#include <cstdint>

#include "gray/category.hpp"

namespace oracle {

struct Counts {
  std::uint64_t strings = 0, gens = 0, cells2 = 0, cells3 = 0;
};

/// Brute-force cell counts of the length-L truncation of Gr A. Shares nothing
/// with GrTruncation: strings by depth-first extension, generators by direct
/// enumeration of (k, l1, l2), brackets by one-cell-at-a-time whiskering,
/// 2- and 3-cells by dynamic programming over evaluations.
Counts truncation_counts(const gray::FiniteGrayCategory& A, int L);

}  // namespace oracle
