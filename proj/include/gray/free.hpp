#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gray/functor.hpp"
#include "gray/report.hpp"
#include "gray/search.hpp"
#include "gray/weak.hpp"

namespace gray {

using StrId = std::uint32_t;
using GenId = std::uint32_t;
using Gr2Id = std::uint32_t;

/// A composable string of base 1-cells f_1, ..., f_n from `from` to `to`,
/// f_1 applied first. The empty string on an object is its identity.
struct GrString {
  CellId from = kNoCell;
  CellId to = kNoCell;
  std::vector<CellId> cells;

  std::size_t size() const { return cells.size(); }
  friend bool operator==(const GrString&, const GrString&) = default;
};

/// A generator 2-cell. Positions are 1-based: the payload rewrites the
/// segment f_k..f_{l1} of the source into g_k..g_{l2} of the target; a
/// segment is empty when l = k-1.
struct GrGen {
  StrId src = 0;
  StrId tgt = 0;
  std::uint16_t k = 1;
  std::uint16_t l1 = 0;
  std::uint16_t l2 = 0;
  CellId payload = kNoCell;

  friend bool operator==(const GrGen&, const GrGen&) = default;
};

/// A composable sequence of generators in application order. Empty means
/// the identity on `src`.
struct GrCell2 {
  StrId src = 0;
  StrId tgt = 0;
  std::vector<GenId> gens;

  std::size_t size() const { return gens.size(); }
};

/// A 3-cell: a base 3-cell between the evaluations of two parallel 2-cells.
struct GrCell3 {
  Gr2Id src = 0;
  Gr2Id tgt = 0;
  CellId payload = kNoCell;

  friend bool operator==(const GrCell3&, const GrCell3&) = default;
};

struct GrCounts {
  std::size_t strings = 0;
  std::size_t gens = 0;
  std::size_t cells2 = 0;
  std::uint64_t cells3 = 0;

  friend bool operator==(const GrCounts&, const GrCounts&) = default;
};

/// All cells of Gr A whose strings and generator sequences have length at
/// most L. Composites that would leave the bound are reported as absent.
class GrTruncation {
public:
  /// Throws Error(Budget) when more than `max_cells2` 2-cells would be built.
  GrTruncation(CategoryPtr base, int L, std::size_t max_cells2 = 2'000'000);

  const FiniteGrayCategory& base() const { return *base_; }
  const CategoryPtr& base_ptr() const { return base_; }
  int bound() const { return L_; }
  std::string name() const;

  std::size_t objects() const { return base_->count(0); }
  std::size_t strings() const { return strings_.size(); }
  std::size_t gens() const { return gens_.size(); }
  std::size_t cells2() const { return cells2_.size(); }
  GrCounts counts() const;

  const GrString& string(StrId s) const { return strings_[s]; }
  const GrGen& gen(GenId g) const { return gens_[g]; }
  const GrCell2& cell2(Gr2Id x) const { return cells2_[x]; }

  std::optional<StrId> find_string(CellId from, CellId to, const std::vector<CellId>& cells) const;
  std::optional<GenId> find_gen(const GrGen& g) const;
  std::optional<Gr2Id> find_cell2(StrId src, const std::vector<GenId>& gens) const;

  /// Strings from a to b, 2-cells from s, 2-cells from s to t; ascending id.
  const std::vector<StrId>& strings_between(CellId a, CellId b) const;
  const std::vector<Gr2Id>& cells_from(StrId s) const;
  const std::vector<Gr2Id>& cells_between(StrId s, StrId t) const;

  // Evaluation into the base. kNoCell when the base cannot evaluate.
  CellId ev1(StrId s) const { return ev1_[s]; }
  CellId bracket(GenId g) const { return bracket_[g]; }
  CellId ev2(Gr2Id x) const { return ev2_[x]; }
  /// Base 3-cells between ev2(x) and ev2(y): the 3-cells x ⇛ y.
  const std::vector<CellId>& hom3(Gr2Id x, Gr2Id y) const;

  // Gray structure, nullopt when the result leaves the bound.
  std::optional<StrId> tensor1(StrId y, StrId x) const;
  Gr2Id id2(StrId s) const { return identity_[s]; }
  std::optional<Gr2Id> tensor2(Gr2Id y, Gr2Id x) const;
  std::optional<GenId> whisker_gen(Side side, StrId w, GenId g) const;
  std::optional<Gr2Id> whisker2(Side side, StrId w, Gr2Id x) const;
  GrCell3 id3(Gr2Id x) const;
  GrCell3 circ3(const GrCell3& Y, const GrCell3& X) const;
  std::optional<GrCell3> tensor3(const GrCell3& Y, const GrCell3& X) const;
  std::optional<GrCell3> whisker3(Side side, StrId w, const GrCell3& X) const;
  /// Σ_{ξ,γ} with payload Σ_{ev ξ, ev γ}.
  std::optional<GrCell3> sigma(Gr2Id xi, Gr2Id gamma) const;
  /// Σ for generators, then extended along ⊗ by the composition formulas.
  std::optional<GrCell3> sigma_recursive(Gr2Id xi, Gr2Id gamma) const;

  /// Problems met while evaluating the base (e.g. incoherent 1-cell tables).
  const AxiomReport& build_report() const { return build_; }

private:
  StrId intern_string(GrString s);
  void build_strings();
  void build_gens();
  void build_tables();
  void build_cells2(std::size_t max_cells2);
  std::optional<StrId> concat(StrId y, StrId x) const;
  std::optional<GenId> compute_whisker_gen(Side side, StrId w, GenId g) const;
  CellId fold(CellId obj, const std::vector<CellId>& cells, std::size_t from, std::size_t to);
  CellId object_at(const GrString& s, std::size_t pos) const;
  Gr2Id add_cell2(StrId src, StrId tgt, std::vector<GenId> gens);

  CategoryPtr base_;
  int L_;
  std::vector<GrString> strings_;
  std::vector<GrGen> gens_;
  std::vector<GrCell2> cells2_;
  std::vector<Gr2Id> identity_;
  std::vector<CellId> ev1_, bracket_, ev2_;
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  std::vector<StrId> concat_;  // [y * strings + x] = y ⊠ x
  std::vector<GenId> wgen_;    // [(side * strings + w) * gens + g]

  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const;
  };
  std::unordered_map<std::vector<std::uint32_t>, StrId, VecHash> string_index_;
  std::unordered_map<std::vector<std::uint32_t>, GenId, VecHash> gen_index_;
  // Cells are laid out so that x extended by g is first_child_[x] + gen_pos_[g].
  std::vector<Gr2Id> first_child_;
  std::vector<std::uint32_t> gen_pos_;
  std::vector<std::vector<StrId>> strings_between_;
  std::vector<std::vector<Gr2Id>> cells_from_;
  std::unordered_map<std::uint64_t, std::vector<Gr2Id>> cells_between_;
  AxiomReport build_;
};

/// (C1)–(C6), the hom laws and the functoriality of ev on every in-bound tuple.
/// Laws among 2-cells are checked on Gr cells directly; laws among 3-cells
/// depend only on evaluations and are checked once per distinct evaluation
/// tuple, counting every Gr tuple it stands for. Tags as in check_gray_axioms
/// plus EV (ev not functorial) and BASE (evaluation failed while building).
AxiomReport check_truncation(const GrTruncation& T, Exec exec = Exec::Parallel);

/// Equivalence pseudo-icon (φ, M, Π) filling ev_B ∘ Gr F ⇒ F ∘ ev_A on a truncation.
///   phi1[s]: [F f_i] ⇒ F[f_i] with adjoint data
///   phi2[x]: F(ev x) ⊗ φ_src ⇛ φ_tgt ⊗ ev(Gr F x)
///   M[a]:    φ_∅ ⇛ ι_a (the identity)
///   Pi[(g,f)]: φ_{g⊠f} ⇛ χ_{[g],[f]} ⊗ (φ_g ⊠ φ_f)
struct PseudoIcon {
  std::vector<AdjointEquivalence> phi1;
  std::vector<CellId> phi2;
  std::vector<CellId> M;
  std::map<std::pair<StrId, StrId>, CellId> Pi;
};

/// Gr F between two truncations with the same bound.
struct GrMap {
  std::string name;
  std::shared_ptr<const GrTruncation> source;
  std::shared_ptr<const GrTruncation> target;
  std::vector<CellId> objects;
  std::vector<StrId> strings;
  std::vector<GenId> gens;
  std::vector<Gr2Id> cells2;
  /// Payload of Gr F on the 3-cell (x, y, Γ).
  std::function<CellId(Gr2Id, Gr2Id, CellId)> payload3;
  PseudoIcon icon;
  bool strict = true;

  GrCell3 map3(const GrCell3& X) const { return {cells2[X.src], cells2[X.tgt], payload3(X.src, X.tgt, X.payload)}; }
};

/// Builds Gr F. For strict F every φ component is an identity. Throws
/// MissingConstraint when a φ or Π component has no witness in B.
GrMap gr_map(const WeakFunctorData& F, std::shared_ptr<const GrTruncation> source,
             std::shared_ptr<const GrTruncation> target);
GrMap gr_map(const GrayFunctorData& F, std::shared_ptr<const GrTruncation> source,
             std::shared_ptr<const GrTruncation> target);

/// Cellwise composite of Gr maps.
GrMap compose(const GrMap& G, const GrMap& F);

/// ev ∘ Gr F = F ∘ ev on every cell. Tag HAT2.
AxiomReport check_ev_square(const GrMap& M, const WeakFunctorData& F);

/// Two Gr maps with the same endpoints agree on every cell, 3-cells included.
AxiomReport compare_maps(const GrMap& P, const GrMap& Q, const char* tag);

/// Boundaries and invertibility of the icon components of a Gr map.
AxiomReport check_icon(const GrMap& M, const WeakFunctorData& F);

/// Pseudo-icon between two Gr maps that agree on strings: one invertible
/// 3-cell ev P(x) ⇛ ev Q(x) per 2-cell x. False when some component is missing.
bool find_comparison_icon(const GrMap& P, const GrMap& Q, std::vector<CellId>* out);

/// Properties of Gr on F: A → B and G: B → C over truncations at `bound`.
/// Tags: HAT1 (icon), HAT2 (ev square for strict F and G), HAT3 (Gr id = id),
/// HAT5 (Gr(G∘F) = Gr G ∘ Gr F, strict).
/// HAT4 is reported in the notes ("HAT4: comparison icon found" or not), never as a violation.
AxiomReport check_hat_properties(const WeakFunctorData& F, const WeakFunctorData& G, int bound);

}  // namespace gray
