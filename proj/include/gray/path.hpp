#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "gray/functor.hpp"
#include "gray/search.hpp"
#include "gray/weak.hpp"

namespace gray {

/// The path object ℙB of a finite Gray-category B, materialized.
///
///   object  a⃗: Sa → Ta, a 1-cell of B with a chosen biadjoint biequivalence
///   1-cell  (Sf, Tf, f⃗) with f⃗: b⃗⊠Sf ⇒ Tf⊠a⃗ an equivalence
///   2-cell  (Sθ, Tθ, θ⃗) with θ⃗: g⃗⊗(b⃗⊠Sθ) ⇛ (Tθ⊠a⃗)⊗f⃗ invertible
///   3-cell  (SΓ, TΓ) with σ⃗∘(id_{g⃗}⊗(b⃗⊠SΓ)) = ((TΓ⊠a⃗)⊗id_{f⃗})∘θ⃗
///
/// Cell ids in `cat` index the vectors below.
struct PathCategory {
  struct Cell1 {
    CellId src, tgt, S, T, vec;
    AdjointEquivalence ae;
  };
  struct Cell2 {
    CellId src, tgt, S, T, vec;
  };
  struct Cell3 {
    CellId src, tgt, S, T;
  };

  CategoryPtr base;
  CategoryPtr cat;
  std::vector<BiadjointBiequivalence> witness;
  std::vector<Cell1> cells1;
  std::vector<Cell2> cells2;
  std::vector<Cell3> cells3;
  GrayFunctorData S, T, C;
  /// Composites of B-components that fell outside ℙB (tag PATH).
  AxiomReport build_report;

  CellId arrow(CellId obj) const { return witness[obj].fwd; }
  std::optional<CellId> object_of(CellId arrow) const;
  std::optional<CellId> find1(CellId a, CellId b, CellId S, CellId T, CellId vec) const;
  std::optional<CellId> find2(CellId f, CellId g, CellId S, CellId T, CellId vec) const;
  std::optional<CellId> find3(CellId th, CellId sg, CellId S, CellId T) const;

  std::map<CellId, CellId> objects_by_arrow;
  std::map<std::array<CellId, 5>, CellId> index1, index2;
  std::map<std::array<CellId, 4>, CellId> index3;
};

/// Enumerates ℙB, inherits its composites and interchangers componentwise
/// from B and builds S, T: ℙB → B and C: B → ℙB.
PathCategory build_path(CategoryPtr B);

/// Re-checks every cell's side condition and S∘C = T∘C = id. Tags PATH0..PATH3, PC.
AxiomReport check_path_cells(const PathCategory& P);

/// ℙF: ℙA → ℙB, componentwise. Throws ImageNotInPath if an image tuple is not a cell.
GrayFunctorData path_map(const GrayFunctorData& F, const PathCategory& PA, const PathCategory& PB);

/// The equivalence witnesses for C: B → ℙB, each constructed and validated as
/// a cell of ℙB. Tags CW3 (full and faithful on 3-cells), CW2 (2-cells),
/// CW1 (1-cells), CW0 (objects).
AxiomReport check_C_weak_equivalence(const PathCategory& P);

/// Tritransformation data α: F ⇒ G between strict functors A → B.
///   alpha0[a]  α_a: Fa → Ga, a 1-cell of B that is an object of ℙB
///   M[a]       M_a: α_{id_a} ⇛ id_{α_a}, invertible
///   alpha1[f]  α_f: α_b⊠Ff ⇒ Gf⊠α_a, with adjoint data
///   Pi[(g,f)]  Π_{g,f}: (Gg⊠α_f)⊗(α_g⊠Ff) ⇛ α_{g⊠f}, invertible
///   alpha2[θ]  α_θ: α_g⊗(α_b⊠Fθ) ⇛ (Gθ⊠α_a)⊗α_f, invertible
struct Tritransformation {
  std::vector<CellId> alpha0;
  std::vector<CellId> M;
  std::vector<AdjointEquivalence> alpha1;
  std::map<std::pair<CellId, CellId>, CellId> Pi;
  std::vector<CellId> alpha2;

  friend bool operator==(const Tritransformation&, const Tritransformation&) = default;
};

/// The identity tritransformation on F.
Tritransformation identity_tritransformation(const GrayFunctorData& F, const PathCategory& PB);

/// ⟨F,G⟩: A → ℙB with f ↦ (Ff, Gf, α_f), χ = (id, id, Π⁻¹), ι = (id, id, M).
/// Throws AxiomFail naming the failing tritransformation axiom: boundary of a
/// component, naturality of α, naturality of Π, associativity of Π, left or
/// right unitality.
WeakFunctorData pair_functor(const GrayFunctorData& F, const GrayFunctorData& G,
                             const Tritransformation& alpha, const PathCategory& PB);

}  // namespace gray
