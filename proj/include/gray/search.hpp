#pragma once

#include <optional>

#include "gray/category.hpp"

namespace gray {

/// (fwd, bwd, unit, counit) inside a hom 2-category:
///   fwd: f ⇒ g, bwd: g ⇒ f, unit: id_f ⇛ bwd⊗fwd, counit: fwd⊗bwd ⇛ id_g.
struct AdjointEquivalence {
  CellId fwd = kNoCell;
  CellId bwd = kNoCell;
  CellId unit = kNoCell;
  CellId counit = kNoCell;

  friend bool operator==(const AdjointEquivalence&, const AdjointEquivalence&) = default;
};

/// Biequivalence a⃗: a → b with fully chosen adjoint data.
///   m.fwd: id_a ⇒ a⃗•⊠a⃗          n.fwd: id_b ⇒ a⃗⊠a⃗•
///   phi: (n.bwd⊠a⃗)⊗(a⃗⊠m.fwd) ⇛ id_{a⃗}
///   psi: (a⃗•⊠n.bwd)⊗(m.fwd⊠a⃗•) ⇛ id_{a⃗•}
struct BiadjointBiequivalence {
  CellId fwd = kNoCell;
  CellId bwd = kNoCell;
  AdjointEquivalence m;
  AdjointEquivalence n;
  CellId phi = kNoCell;
  CellId psi = kNoCell;

  friend bool operator==(const BiadjointBiequivalence&, const BiadjointBiequivalence&) = default;
};

/// Two-sided inverse of a 3-cell, first in id order.
std::optional<CellId> invert3(const FiniteGrayCategory& C, CellId gamma);

bool is_invertible3(const FiniteGrayCategory& C, CellId gamma);

/// True when the data typechecks, unit/counit are invertible and both
/// zig-zag composites are identities.
bool validate_adjoint_equivalence(const FiniteGrayCategory& C, const AdjointEquivalence& e);

std::optional<AdjointEquivalence> find_adjoint_equivalence(const FiniteGrayCategory& C,
                                                           CellId xi);

/// Same search with bwd fixed.
std::optional<AdjointEquivalence> find_adjoint_equivalence(const FiniteGrayCategory& C,
                                                           CellId xi, CellId bwd);

bool validate_biadjoint_biequivalence(const FiniteGrayCategory& C,
                                      const BiadjointBiequivalence& w);

std::optional<BiadjointBiequivalence> find_biadjoint_biequivalence(const FiniteGrayCategory& C,
                                                                   CellId a, CellId b);

/// Witness for a fixed forward 1-cell.
std::optional<BiadjointBiequivalence> find_biadjoint_biequivalence_for(
    const FiniteGrayCategory& C, CellId fwd);

/// First invertible 3-cell src ⇛ tgt, the identity when src == tgt.
std::optional<CellId> find_invertible3(const FiniteGrayCategory& C, CellId src, CellId tgt);

// Adjoint equivalences in a hom 2-category.
AdjointEquivalence identity_equivalence(const FiniteGrayCategory& C, CellId f);
/// e2 after e1: forward 2-cell e2.fwd ⊗ e1.fwd.
AdjointEquivalence compose_equivalences(const FiniteGrayCategory& C, const AdjointEquivalence& e2,
                                        const AdjointEquivalence& e1);
AdjointEquivalence whisker_equivalence(const FiniteGrayCategory& C, Side side, CellId w,
                                       const AdjointEquivalence& e);

/// True if some 2-cell g ⇒ f is an equivalence (has adjoint data), i.e. the
/// 1-cells are equivalent in their hom.
bool equivalent_1cells(const FiniteGrayCategory& C, CellId f, CellId g);

}  // namespace gray
