#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gray/core.hpp"

namespace gray {

/// Dense square-ish lookup table with a "no entry" sentinel.
class Table2D {
public:
  Table2D() = default;
  Table2D(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, kNoCell) {}

  CellId get(CellId r, CellId c) const {
    return (r < rows_ && c < cols_) ? data_[std::size_t(r) * cols_ + c] : kNoCell;
  }
  void set(CellId r, CellId c, CellId v) { data_.at(std::size_t(r) * cols_ + c) = v; }
  void resize(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  friend bool operator==(const Table2D&, const Table2D&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CellId> data_;
};

struct Object {
  std::string name;
  friend bool operator==(const Object&, const Object&) = default;
};

/// A cell of dimension 1..3 with its source and target one dimension down.
struct Cell {
  std::string name;
  CellId src = kNoCell;
  CellId tgt = kNoCell;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A Gray-category given by explicit finite tables.
///
/// Cells of every dimension are numbered densely in declaration order; that
/// order is the identifier order used for all tie-breaking. Identities are
/// declared cells, not synthesized. Composition data:
///   tensor2(y, x)   y ⊗ x for 2-cells x: f⇒g, y: g⇒h
///   circ3(Y, X)     Y ∘ X for 3-cells X: ξ⇛ζ, Y: ζ⇛ω
///   tensor3(Y, X)   Y ⊗ X for 3-cells whose 2-cell boundaries are ⊗-composable
///   whisker(side, d, w, x)  w ⊠ x (Post) or x ⊠ w (Pre) for a d-cell x
///   sigma(ξ, γ)     the interchanger Σ_{ξ,γ}
class FiniteGrayCategory {
public:
  FiniteGrayCategory() = default;
  explicit FiniteGrayCategory(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t count(int dim) const;
  std::size_t objects() const { return objects_.size(); }

  const std::string& cell_name(int dim, CellId id) const;
  std::optional<CellId> find(int dim, std::string_view name) const;

  const Cell& cell(int dim, CellId id) const;  // dim in 1..3
  CellId src(int dim, CellId id) const { return cell(dim, id).src; }
  CellId tgt(int dim, CellId id) const { return cell(dim, id).tgt; }

  /// Object endpoints of a cell of any positive dimension.
  CellId src_obj(int dim, CellId id) const;
  CellId tgt_obj(int dim, CellId id) const;

  CellId identity(int dim, CellId lower) const;  // dim in 1..3: identity d-cell on a (d-1)-cell
  bool is_identity(int dim, CellId id) const;

  // raw table access; kNoCell when absent
  CellId tensor2(CellId y, CellId x) const { return tensor2_.get(y, x); }
  CellId circ3(CellId y, CellId x) const { return circ3_.get(y, x); }
  CellId tensor3(CellId y, CellId x) const { return tensor3_.get(y, x); }
  CellId whisker(Side s, int dim, CellId w, CellId x) const {
    return whisker_[int(s)][dim - 1].get(w, x);
  }
  CellId sigma(CellId xi, CellId gamma) const { return sigma_.get(xi, gamma); }

  // construction / mutation
  CellId add_object(std::string name);
  CellId add_cell(int dim, std::string name, CellId src, CellId tgt);
  void set_identity(int dim, CellId lower, CellId id);
  void set_tensor2(CellId y, CellId x, CellId r) { grow(); tensor2_.set(y, x, r); }
  void set_circ3(CellId y, CellId x, CellId r) { grow(); circ3_.set(y, x, r); }
  void set_tensor3(CellId y, CellId x, CellId r) { grow(); tensor3_.set(y, x, r); }
  void set_whisker(Side s, int dim, CellId w, CellId x, CellId r) {
    grow();
    whisker_[int(s)][dim - 1].set(w, x, r);
  }
  void set_sigma(CellId xi, CellId gamma, CellId r) { grow(); sigma_.set(xi, gamma, r); }

  /// 3-cells with the given 2-cell boundary, ascending id.
  const std::vector<CellId>& hom3(CellId src2, CellId tgt2) const;
  /// 2-cells with the given 1-cell boundary, ascending id.
  const std::vector<CellId>& hom2(CellId src1, CellId tgt1) const;
  /// 1-cells between two objects, ascending id.
  const std::vector<CellId>& hom1(CellId a, CellId b) const;

  /// Sizes tables and builds lookup indices; call before sharing across threads.
  void freeze() const {
    grow();
    index();
  }

  friend bool operator==(const FiniteGrayCategory& l, const FiniteGrayCategory& r);

private:
  void grow() const;
  void index() const;

  std::string name_;
  std::vector<Object> objects_;
  std::vector<Cell> cells_[3];
  std::vector<CellId> identity_[3];

  mutable Table2D tensor2_, circ3_, tensor3_, sigma_;
  mutable Table2D whisker_[2][3];

  mutable bool indexed_ = false;
  mutable std::unordered_map<std::uint64_t, std::vector<CellId>> by_boundary_[3];
  mutable std::unordered_map<std::string, CellId> by_name_[4];
};

// ---------------------------------------------------------------------------
// Checked operations. All throw gray::Error on NotComposable / TableGap.

/// g ⊠ f for 1-cells, read through both whisker tables; they must agree.
CellId tensor1(const FiniteGrayCategory& C, CellId g, CellId f);

/// w ⊠ x (Post) or x ⊠ w (Pre) for a cell x of dimension 1..3.
CellId whisker(const FiniteGrayCategory& C, Side side, CellId w, int dim, CellId x);

CellId compose_in_hom(const FiniteGrayCategory& C, HomOp op, CellId y, CellId x);

/// Σ_{ξ,γ}: (ξ⊠f')⊗(g⊠γ) ⇛ (g'⊠γ)⊗(ξ⊠f)
CellId interchanger(const FiniteGrayCategory& C, CellId xi, CellId gamma);

/// Expected source and target 2-cells of Σ_{ξ,γ}, computed from the tables.
std::pair<CellId, CellId> interchanger_boundary(const FiniteGrayCategory& C, CellId xi,
                                                CellId gamma);

/// Horizontal composite of 3-cell with a 2-cell on either side (via identity 3-cells).
CellId tensor3_with2(const FiniteGrayCategory& C, CellId three, CellId two, bool three_on_left);

}  // namespace gray
