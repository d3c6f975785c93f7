#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gray/functor.hpp"
#include "gray/search.hpp"

namespace gray {

/// A weak 3-functor between finite Gray-categories, locally strict: the cell
/// maps preserve identities, ⊗ and ∘ inside each hom, while ⊠ and identity
/// 1-cells are preserved only up to the chosen constraint data.
///
///   chi[(g,f)]      χ_{g,f}: Fg⊠Ff ⇒ F(g⊠f), with adjoint data
///   iota[a]         ι_a: id_{Fa} ⇒ F(id_a), with adjoint data
///   chi_nat[(σ,θ)]  χ_{g'f'}⊗(Fσ⊠Fθ) ⇛ F(σ⊠θ)⊗χ_{gf}
///   omega[(h,g,f)]  χ_{hg,f}⊗(χ_{h,g}⊠Ff) ⇛ χ_{h,gf}⊗(Fh⊠χ_{g,f})
///   gamma[f]        χ_{id_b,f}⊗(ι_b⊠Ff) ⇛ id_{Ff}
///   delta[f]        id_{Ff} ⇛ χ_{f,id_a}⊗(Ff⊠ι_a)
/// where σ⊠θ = (σ⊠f')⊗(g⊠θ) for σ: g⇒g', θ: f⇒f'.
struct WeakFunctorData {
  std::string name;
  CategoryPtr source;
  CategoryPtr target;
  std::array<std::vector<CellId>, 4> map;
  std::map<std::pair<CellId, CellId>, AdjointEquivalence> chi;
  std::vector<AdjointEquivalence> iota;
  std::map<std::pair<CellId, CellId>, CellId> chi_nat;
  std::map<std::array<CellId, 3>, CellId> omega;
  std::map<CellId, CellId> gamma;
  std::map<CellId, CellId> delta;

  CellId operator()(int dim, CellId x) const { return map[dim][x]; }
  const AdjointEquivalence& chi_at(CellId g, CellId f) const;

  friend bool operator==(const WeakFunctorData&, const WeakFunctorData&) = default;
};

/// A strict functor viewed as weak: every constraint is an identity.
WeakFunctorData weaken(const GrayFunctorData& F);

/// The cell maps alone, without the constraint data.
GrayFunctorData underlying(const WeakFunctorData& W);

/// True when every constraint cell is an identity.
bool has_trivial_constraints(const WeakFunctorData& W);

/// Fills absent chi_nat, omega, gamma and delta entries with the first
/// invertible 3-cell of the required boundary. Entries with no candidate stay absent.
void complete_constraints(WeakFunctorData& W);

/// Boundaries of the cell maps and of every constraint, local strictness,
/// adjoint data for χ and ι, invertibility of the 3-cell constraints.
/// Tags: BOUNDARY, LOCAL, CHI, IOTA, CHI_NAT, OMEGA, GAMMA, DELTA, MISSING.
AxiomReport check_weak_functor(const WeakFunctorData& W);

/// G after F. χ and ι compose with their adjoint data; the 3-cell constraints
/// are filled by complete_constraints, which picks identities where it can.
WeakFunctorData compose(const WeakFunctorData& G, const WeakFunctorData& F);
WeakFunctorData compose(const GrayFunctorData& G, const WeakFunctorData& F);

/// Expected boundaries of the 3-cell constraints; throws on gaps.
std::pair<CellId, CellId> chi_nat_boundary(const WeakFunctorData& W, CellId sigma, CellId theta);
std::pair<CellId, CellId> omega_boundary(const WeakFunctorData& W, CellId h, CellId g, CellId f);
std::pair<CellId, CellId> gamma_boundary(const WeakFunctorData& W, CellId f);
std::pair<CellId, CellId> delta_boundary(const WeakFunctorData& W, CellId f);

namespace fixtures {

/// Weak functors used as test inputs: the identity of chaotic2 seen as weak,
/// and the identity of z2 with χ and ι both equal to the nontrivial 2-cell s.
std::vector<WeakFunctorData> weak_functors();

}  // namespace fixtures
}  // namespace gray
