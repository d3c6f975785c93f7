#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "gray/free.hpp"
#include "gray/path.hpp"
#include "gray/weak.hpp"

namespace gray {

/// Relative fullness at every level plus full faithfulness on 3-cells:
///   TF0  every target object is hit
///   TF1  every 1-cell Fa → Fb has a preimage a → b
///   TF2  every 2-cell Ff ⇒ Ff' has a preimage f ⇒ f'
///   TF3  hom3(x, y) → hom3(Fx, Fy) is bijective for parallel x, y
/// Relative fullness implies surjectivity on cells.
AxiomReport is_trivial_fibration(const GrayFunctorData& F);

/// Same predicate for ev: Gr A → A on a truncation.
AxiomReport is_trivial_fibration(const GrTruncation& T);

/// Layered weak equivalence:
///   TE0  every target object is biequivalent to an image object
///   TE1  every 1-cell Fa → Fa' is equivalent to the image of some f
///   TE2  every 2-cell Ff ⇒ Ff' is isomorphic to the image of some α
///   TE3  hom3(x, y) → hom3(Fx, Fy) is bijective for parallel x, y
AxiomReport is_triequivalence(const GrayFunctorData& F);

/// Commutative square   A --top--> A'
///                      |          |
///                    left       right
///                      v          v
///                      B --bot--> B'
/// with `generators` marking the cells of B that together with the image of
/// left generate B freely.
struct LiftingProblem {
  GrayFunctorData left;
  GrayFunctorData right;
  GrayFunctorData top;
  GrayFunctorData bottom;
  std::array<std::vector<CellId>, 4> generators;
};

/// Square commutes and the generators avoid the image of left.
AxiomReport check_lifting_problem(const LiftingProblem& p);

/// ℓ: B → A' with ℓ∘left = top and right∘ℓ = bottom. Generators get the first
/// preimage with the right boundary; every other cell is reached by closing
/// under the operations. Throws NoLift naming the generator when a preimage
/// class is empty, and Incoherent when the marked set does not present B freely.
GrayFunctorData lift_through_trivial_fibration(const LiftingProblem& p);

/// Where a section sends identity 1-cells.
enum class IdentityImage { Singleton, Empty };

/// Cellwise section ℓ: A → Gr A of ev. 1-cells go to singleton strings (or ∅
/// for identities under IdentityImage::Empty), 2-cells to one generator
/// spanning both strings, 3-cells to themselves between those generators.
struct Section {
  std::shared_ptr<const GrTruncation> trunc;
  IdentityImage ids = IdentityImage::Singleton;
  std::vector<StrId> strings;  // per 1-cell of A
  std::vector<Gr2Id> cells2;   // per 2-cell of A

  GrCell3 cell3(const FiniteGrayCategory& A, CellId G) const {
    return {cells2[A.src(3, G)], cells2[A.tgt(3, G)], G};
  }
};

/// Needs bound ≥ 1.
Section section_of_ev(const CategoryPtr& A, int bound = 1,
                      IdentityImage ids = IdentityImage::Singleton);

/// ev∘ℓ = id on every cell and ℓ preserves boundaries. Tag: SECTION.
AxiomReport check_section(const Section& s);

enum class SearchStatus { Found, NotFound, BudgetExhausted };

const char* to_string(SearchStatus s);

template <class T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<T> value;
  std::size_t explored = 0;  // nodes visited
};

/// Strict H: A → ℙB with S∘H = F and T∘H = G, searched dimension by dimension
/// over cells with the right projections. `budget` bounds visited nodes;
/// exhausting it is reported separately from a complete negative search.
SearchOutcome<GrayFunctorData> right_homotopy_search(const GrayFunctorData& F,
                                                     const GrayFunctorData& G,
                                                     const PathCategory& PB,
                                                     std::size_t budget = 1'000'000);

/// ev_B ∘ Gr F ∘ ℓ with its comparison to F, restricted along ℓ:
///   phi1[f]       Hf ⇒ Ff
///   phi2[α]       Fα ⊗ phi1[src] ⇛ phi1[tgt] ⊗ Hα
///   M[a]          φ_∅ ⇛ ι_a
///   Pi[(g, f)]    as in the Gr icon, where ℓg ⊠ ℓf fits the bound
struct Strictification {
  GrayFunctorData strict;
  PseudoIcon icon;
  AxiomReport report;  // strictness of H plus icon boundaries
};

/// Uses a section with IdentityImage::Empty so that weak unitors reach the
/// icon through φ_∅. Throws MissingConstraint when F lacks constraint data.
Strictification strictify(const WeakFunctorData& F, int bound = 2);

}  // namespace gray
