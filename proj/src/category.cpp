#include "gray/category.hpp"
#include "gray/ops.hpp"

#include <algorithm>
#include <sstream>

namespace gray {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::TableGap: return "TableGap";
    case ErrorKind::Incoherent: return "Incoherent";
    case ErrorKind::MissingConstraint: return "MissingConstraint";
    case ErrorKind::ImageNotInPath: return "ImageNotInPath";
    case ErrorKind::AxiomFail: return "AxiomFail";
    case ErrorKind::NoLift: return "NoLift";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Semantic: return "SemanticError";
    case ErrorKind::Budget: return "BudgetExhausted";
  }
  return "?";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

void Table2D::resize(std::size_t rows, std::size_t cols) {
  if (rows == rows_ && cols == cols_) return;
  std::vector<CellId> next(rows * cols, kNoCell);
  for (std::size_t r = 0; r < std::min(rows, rows_); ++r)
    for (std::size_t c = 0; c < std::min(cols, cols_); ++c)
      next[r * cols + c] = data_[r * cols_ + c];
  data_ = std::move(next);
  rows_ = rows;
  cols_ = cols;
}

namespace {

std::uint64_t key(CellId a, CellId b) { return (std::uint64_t(a) << 32) | b; }

}  // namespace

std::size_t FiniteGrayCategory::count(int dim) const {
  return dim == 0 ? objects_.size() : cells_[dim - 1].size();
}

const std::string& FiniteGrayCategory::cell_name(int dim, CellId id) const {
  if (dim == 0) return objects_.at(id).name;
  return cells_[dim - 1].at(id).name;
}

std::optional<CellId> FiniteGrayCategory::find(int dim, std::string_view name) const {
  index();
  auto it = by_name_[dim].find(std::string(name));
  if (it == by_name_[dim].end()) return std::nullopt;
  return it->second;
}

const Cell& FiniteGrayCategory::cell(int dim, CellId id) const {
  if (dim < 1 || dim > 3 || id >= cells_[dim - 1].size())
    fail(ErrorKind::Semantic, "no " + std::to_string(dim) + "-cell #" + std::to_string(id));
  return cells_[dim - 1][id];
}

CellId FiniteGrayCategory::src_obj(int dim, CellId id) const {
  while (dim > 0) {
    id = cell(dim, id).src;
    --dim;
  }
  return id;
}

CellId FiniteGrayCategory::tgt_obj(int dim, CellId id) const {
  while (dim > 1) {
    id = cell(dim, id).src;
    --dim;
  }
  return dim == 1 ? cell(1, id).tgt : id;
}

CellId FiniteGrayCategory::identity(int dim, CellId lower) const {
  const auto& v = identity_[dim - 1];
  return lower < v.size() ? v[lower] : kNoCell;
}

bool FiniteGrayCategory::is_identity(int dim, CellId id) const {
  const Cell& c = cell(dim, id);
  return c.src == c.tgt && identity(dim, c.src) == id;
}

CellId FiniteGrayCategory::add_object(std::string name) {
  objects_.push_back({std::move(name)});
  identity_[0].push_back(kNoCell);
  indexed_ = false;
  return CellId(objects_.size() - 1);
}

CellId FiniteGrayCategory::add_cell(int dim, std::string name, CellId src, CellId tgt) {
  if (dim < 1 || dim > 3) fail(ErrorKind::Semantic, "cell dimension out of range");
  if (src >= count(dim - 1) || tgt >= count(dim - 1))
    fail(ErrorKind::Semantic, "dangling boundary for cell " + name);
  if (dim >= 2) {
    const Cell& s = cell(dim - 1, src);
    const Cell& t = cell(dim - 1, tgt);
    if (s.src != t.src || s.tgt != t.tgt)
      fail(ErrorKind::Semantic, "boundary of " + name + " is not parallel");
  }
  cells_[dim - 1].push_back({std::move(name), src, tgt});
  if (dim < 3) identity_[dim].push_back(kNoCell);
  indexed_ = false;
  return CellId(cells_[dim - 1].size() - 1);
}

void FiniteGrayCategory::set_identity(int dim, CellId lower, CellId id) {
  const Cell& c = cell(dim, id);
  if (c.src != lower || c.tgt != lower)
    fail(ErrorKind::Semantic, "identity " + c.name + " has wrong boundary");
  identity_[dim - 1].at(lower) = id;
}

void FiniteGrayCategory::grow() const {
  const std::size_t n1 = cells_[0].size(), n2 = cells_[1].size(), n3 = cells_[2].size();
  tensor2_.resize(n2, n2);
  circ3_.resize(n3, n3);
  tensor3_.resize(n3, n3);
  sigma_.resize(n2, n2);
  for (int s = 0; s < 2; ++s) {
    whisker_[s][0].resize(n1, n1);
    whisker_[s][1].resize(n1, n2);
    whisker_[s][2].resize(n1, n3);
  }
}

void FiniteGrayCategory::index() const {
  if (indexed_) return;
  for (auto& m : by_boundary_) m.clear();
  for (auto& m : by_name_) m.clear();
  for (CellId i = 0; i < objects_.size(); ++i) by_name_[0].emplace(objects_[i].name, i);
  for (int d = 1; d <= 3; ++d) {
    const auto& cs = cells_[d - 1];
    for (CellId i = 0; i < cs.size(); ++i) {
      by_boundary_[d - 1][key(cs[i].src, cs[i].tgt)].push_back(i);
      by_name_[d].emplace(cs[i].name, i);
    }
  }
  indexed_ = true;
}

namespace {
const std::vector<CellId> kEmpty;
}

const std::vector<CellId>& FiniteGrayCategory::hom3(CellId s, CellId t) const {
  index();
  grow();
  auto it = by_boundary_[2].find(key(s, t));
  return it == by_boundary_[2].end() ? kEmpty : it->second;
}

const std::vector<CellId>& FiniteGrayCategory::hom2(CellId s, CellId t) const {
  index();
  grow();
  auto it = by_boundary_[1].find(key(s, t));
  return it == by_boundary_[1].end() ? kEmpty : it->second;
}

const std::vector<CellId>& FiniteGrayCategory::hom1(CellId a, CellId b) const {
  index();
  grow();
  auto it = by_boundary_[0].find(key(a, b));
  return it == by_boundary_[0].end() ? kEmpty : it->second;
}

bool operator==(const FiniteGrayCategory& l, const FiniteGrayCategory& r) {
  l.grow();
  r.grow();
  for (int d = 0; d < 3; ++d)
    if (l.cells_[d] != r.cells_[d] || l.identity_[d] != r.identity_[d]) return false;
  for (int s = 0; s < 2; ++s)
    for (int d = 0; d < 3; ++d)
      if (!(l.whisker_[s][d] == r.whisker_[s][d])) return false;
  return l.name_ == r.name_ && l.objects_ == r.objects_ && l.tensor2_ == r.tensor2_ &&
         l.circ3_ == r.circ3_ && l.tensor3_ == r.tensor3_ && l.sigma_ == r.sigma_;
}

// ---------------------------------------------------------------------------

namespace {

std::string nm(const FiniteGrayCategory& C, int d, CellId id) {
  return id == kNoCell ? std::string("?") : C.cell_name(d, id);
}

CellId need(CellId r, const FiniteGrayCategory& C, const char* what, int d1, CellId a, int d2,
            CellId b) {
  if (r == kNoCell)
    fail(ErrorKind::TableGap,
         std::string("missing ") + what + " entry (" + nm(C, d1, a) + ", " + nm(C, d2, b) + ")");
  return r;
}

}  // namespace

CellId tensor1(const FiniteGrayCategory& C, CellId g, CellId f) {
  if (C.tgt(1, f) != C.src(1, g))
    fail(ErrorKind::NotComposable, "1-cells " + nm(C, 1, g) + " and " + nm(C, 1, f));
  CellId post = need(C.whisker(Side::Post, 1, g, f), C, "post-whisker", 1, g, 1, f);
  CellId pre = need(C.whisker(Side::Pre, 1, f, g), C, "pre-whisker", 1, f, 1, g);
  if (post != pre)
    fail(ErrorKind::Incoherent, "whisker readings of " + nm(C, 1, g) + "⊠" + nm(C, 1, f) +
                                    " disagree");
  return post;
}

CellId whisker(const FiniteGrayCategory& C, Side side, CellId w, int dim, CellId x) {
  CellId xs = C.src_obj(dim, x), xt = C.tgt_obj(dim, x);
  bool ok = side == Side::Post ? C.src(1, w) == xt : C.tgt(1, w) == xs;
  if (!ok)
    fail(ErrorKind::NotComposable,
         "cannot whisker " + nm(C, dim, x) + " by " + nm(C, 1, w));
  return need(C.whisker(side, dim, w, x), C, side == Side::Post ? "post-whisker" : "pre-whisker",
              1, w, dim, x);
}

CellId compose_in_hom(const FiniteGrayCategory& C, HomOp op, CellId y, CellId x) {
  switch (op) {
    case HomOp::Otimes2:
      if (C.tgt(2, x) != C.src(2, y))
        fail(ErrorKind::NotComposable, "2-cells " + nm(C, 2, y) + " ⊗ " + nm(C, 2, x));
      return need(C.tensor2(y, x), C, "⊗", 2, y, 2, x);
    case HomOp::Circ3:
      if (C.tgt(3, x) != C.src(3, y))
        fail(ErrorKind::NotComposable, "3-cells " + nm(C, 3, y) + " ∘ " + nm(C, 3, x));
      return need(C.circ3(y, x), C, "∘", 3, y, 3, x);
    case HomOp::Otimes3: {
      const Cell& cx = C.cell(3, x);
      const Cell& cy = C.cell(3, y);
      if (C.tgt(2, cx.src) != C.src(2, cy.src))
        fail(ErrorKind::NotComposable, "3-cells " + nm(C, 3, y) + " ⊗ " + nm(C, 3, x));
      return need(C.tensor3(y, x), C, "⊗3", 3, y, 3, x);
    }
  }
  return kNoCell;
}

std::pair<CellId, CellId> interchanger_boundary(const FiniteGrayCategory& C, CellId xi,
                                                CellId gamma) {
  const Cell& x = C.cell(2, xi);     // ξ: g ⇒ g'
  const Cell& c = C.cell(2, gamma);  // γ: f ⇒ f'
  if (C.src(1, x.src) != C.tgt(1, c.src))
    fail(ErrorKind::NotComposable, "Σ of " + nm(C, 2, xi) + ", " + nm(C, 2, gamma));
  CellId xi_f2 = whisker(C, Side::Pre, c.tgt, 2, xi);     // ξ⊠f'
  CellId g_gam = whisker(C, Side::Post, x.src, 2, gamma);  // g⊠γ
  CellId g2_gam = whisker(C, Side::Post, x.tgt, 2, gamma); // g'⊠γ
  CellId xi_f = whisker(C, Side::Pre, c.src, 2, xi);       // ξ⊠f
  return {compose_in_hom(C, HomOp::Otimes2, xi_f2, g_gam),
          compose_in_hom(C, HomOp::Otimes2, g2_gam, xi_f)};
}

CellId interchanger(const FiniteGrayCategory& C, CellId xi, CellId gamma) {
  const Cell& x = C.cell(2, xi);
  const Cell& c = C.cell(2, gamma);
  if (C.src(1, x.src) != C.tgt(1, c.src))
    fail(ErrorKind::NotComposable, "Σ of " + nm(C, 2, xi) + ", " + nm(C, 2, gamma));
  return need(C.sigma(xi, gamma), C, "Σ", 2, xi, 2, gamma);
}

CellId tensor3_with2(const FiniteGrayCategory& C, CellId three, CellId two, bool three_on_left) {
  CellId id = C.identity(3, two);
  if (id == kNoCell) fail(ErrorKind::TableGap, "no identity 3-cell on " + nm(C, 2, two));
  return three_on_left ? compose_in_hom(C, HomOp::Otimes3, three, id)
                       : compose_in_hom(C, HomOp::Otimes3, id, three);
}

}  // namespace gray

namespace gray {

CellId Ops::need(CellId r, int lower_dim, CellId lower) const {
  if (r == kNoCell)
    fail(ErrorKind::TableGap, "no identity on " + C.cell_name(lower_dim, lower));
  return r;
}

}  // namespace gray
