#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gray/category.hpp"
#include "gray/report.hpp"

namespace gray {

using CategoryPtr = std::shared_ptr<const FiniteGrayCategory>;

/// Cell maps of a would-be Gray-functor, one vector per dimension.
struct GrayFunctorData {
  std::string name;
  CategoryPtr source;
  CategoryPtr target;
  std::array<std::vector<CellId>, 4> map;

  CellId operator()(int dim, CellId x) const { return map[dim][x]; }

  /// Same endpoints (by name) and same cell maps.
  friend bool operator==(const GrayFunctorData& l, const GrayFunctorData& r);
};

/// Boundary preservation and strict preservation of identities, ⊠, ⊗, ∘ and Σ.
/// Tags: BOUNDARY, ID, TENSOR1, WHISKER, TENSOR2, CIRC3, TENSOR3, SIGMA.
/// Laws mentioning cells above `upto` are not examined.
AxiomReport check_gray_functor(const GrayFunctorData& F, int upto = 3,
                               Exec exec = Exec::Parallel);

GrayFunctorData identity_functor(const CategoryPtr& C);

/// G ∘ F by table composition.
GrayFunctorData compose(const GrayFunctorData& G, const GrayFunctorData& F);

/// The unique functor into a category with one cell per dimension.
GrayFunctorData to_terminal(const CategoryPtr& source, const CategoryPtr& terminal);

/// All strict Gray-functors source → target, in lexicographic order of their
/// cell maps (objects first). Stops after `limit` results.
std::vector<GrayFunctorData> enumerate_strict_functors(const CategoryPtr& source,
                                                       const CategoryPtr& target,
                                                       std::size_t limit = SIZE_MAX);

}  // namespace gray
