#include "gray/free.hpp"

#include <algorithm>

#include "gray/ops.hpp"

namespace gray {

std::size_t GrTruncation::VecHash::operator()(const std::vector<std::uint32_t>& v) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return std::size_t(h);
}

GrTruncation::GrTruncation(CategoryPtr base, int L, std::size_t max_cells2)
    : base_(std::move(base)), L_(L) {
  if (L < 0) fail(ErrorKind::Semantic, "truncation bound must be non-negative");
  base_->freeze();
  build_strings();
  build_gens();
  build_tables();
  build_cells2(max_cells2);
}

void GrTruncation::build_tables() {
  const std::size_t nS = strings_.size(), nG = gens_.size();
  concat_.assign(nS * nS, kAbsent);
  for (StrId x = 0; x < nS; ++x)
    for (CellId c = 0; c < objects(); ++c)
      for (StrId y : strings_between(strings_[x].to, c))
        if (auto r = concat(y, x)) concat_[std::size_t(y) * nS + x] = *r;
  wgen_.assign(2 * nS * nG, kAbsent);
  for (int sd = 0; sd < 2; ++sd)
    for (GenId g = 0; g < nG; ++g) {
      const GrString& S = strings_[gens_[g].src];
      for (CellId c = 0; c < objects(); ++c) {
        const auto& ws = Side(sd) == Side::Post ? strings_between(S.to, c)
                                                : strings_between(c, S.from);
        for (StrId w : ws)
          if (auto r = compute_whisker_gen(Side(sd), w, g))
            wgen_[(std::size_t(sd) * nS + w) * nG + g] = *r;
      }
    }
}

std::string GrTruncation::name() const {
  return "Gr(" + base_->name() + ")@" + std::to_string(L_);
}

GrCounts GrTruncation::counts() const {
  GrCounts c{strings(), gens(), cells2(), 0};
  // Σ over parallel pairs of |hom3(ev x, ev y)|, by evaluation histogram.
  for (const auto& [key, cells] : cells_between_) {
    std::map<CellId, std::uint64_t> hist;
    for (Gr2Id x : cells) ++hist[ev2_[x]];
    for (const auto& [v, nv] : hist)
      for (const auto& [w, nw] : hist)
        if (v != kNoCell && w != kNoCell) c.cells3 += nv * nw * base_->hom3(v, w).size();
  }
  return c;
}

StrId GrTruncation::intern_string(GrString s) {
  std::vector<std::uint32_t> key{s.from, s.to};
  key.insert(key.end(), s.cells.begin(), s.cells.end());
  auto [it, fresh] = string_index_.try_emplace(std::move(key), StrId(strings_.size()));
  if (fresh) strings_.push_back(std::move(s));
  return it->second;
}

std::optional<StrId> GrTruncation::find_string(CellId from, CellId to,
                                               const std::vector<CellId>& cells) const {
  std::vector<std::uint32_t> key{from, to};
  key.insert(key.end(), cells.begin(), cells.end());
  auto it = string_index_.find(key);
  if (it == string_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<GenId> GrTruncation::find_gen(const GrGen& g) const {
  auto it = gen_index_.find({g.src, g.tgt, g.k, g.l1, g.l2, g.payload});
  if (it == gen_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Gr2Id> GrTruncation::find_cell2(StrId src, const std::vector<GenId>& gens) const {
  Gr2Id x = identity_.at(src);
  for (GenId g : gens) {
    if (gens_.at(g).src != cells2_[x].tgt || first_child_[x] == kAbsent) return std::nullopt;
    x = first_child_[x] + gen_pos_[g];
  }
  return x;
}

const std::vector<StrId>& GrTruncation::strings_between(CellId a, CellId b) const {
  return strings_between_.at(std::size_t(a) * objects() + b);
}

const std::vector<Gr2Id>& GrTruncation::cells_from(StrId s) const { return cells_from_.at(s); }

const std::vector<Gr2Id>& GrTruncation::cells_between(StrId s, StrId t) const {
  static const std::vector<Gr2Id> none;
  auto it = cells_between_.find(std::uint64_t(s) << 32 | t);
  return it == cells_between_.end() ? none : it->second;
}

const std::vector<CellId>& GrTruncation::hom3(Gr2Id x, Gr2Id y) const {
  static const std::vector<CellId> none;
  if (ev2_[x] == kNoCell || ev2_[y] == kNoCell) return none;
  if (cells2_[x].src != cells2_[y].src || cells2_[x].tgt != cells2_[y].tgt) return none;
  return base_->hom3(ev2_[x], ev2_[y]);
}

CellId GrTruncation::object_at(const GrString& s, std::size_t pos) const {
  return pos == 0 ? s.from : base_->tgt(1, s.cells[pos - 1]);
}

CellId GrTruncation::fold(CellId obj, const std::vector<CellId>& cells, std::size_t from,
                          std::size_t to) {
  Ops o{*base_};
  try {
    if (from == to) return o.id1(obj);
    CellId r = cells[from];
    for (std::size_t i = from + 1; i < to; ++i) r = o.t1(cells[i], r);
    return r;
  } catch (const Error& e) {
    std::vector<CellRef> w;
    for (std::size_t i = from; i < to; ++i) w.push_back({1, cells[i]});
    build_.add("BASE", std::move(w), e.what());
    return kNoCell;
  }
}

void GrTruncation::build_strings() {
  const FiniteGrayCategory& A = *base_;
  const std::size_t n0 = A.count(0);
  std::vector<StrId> level;
  for (CellId a = 0; a < n0; ++a) level.push_back(intern_string({a, a, {}}));
  for (int len = 1; len <= L_; ++len) {
    std::vector<StrId> next;
    for (StrId s : level)
      for (CellId f = 0; f < A.count(1); ++f) {
        if (A.src(1, f) != strings_[s].to) continue;
        GrString t = strings_[s];
        t.cells.push_back(f);
        t.to = A.tgt(1, f);
        next.push_back(intern_string(std::move(t)));
      }
    level = std::move(next);
  }
  strings_between_.assign(n0 * n0, {});
  for (StrId s = 0; s < strings_.size(); ++s)
    strings_between_[std::size_t(strings_[s].from) * n0 + strings_[s].to].push_back(s);
  for (auto& v : strings_between_)
    std::stable_sort(v.begin(), v.end(),
                     [&](StrId x, StrId y) { return strings_[x].size() < strings_[y].size(); });
  for (StrId s = 0; s < strings_.size(); ++s)
    ev1_.push_back(fold(strings_[s].from, strings_[s].cells, 0, strings_[s].size()));
}

void GrTruncation::build_gens() {
  const FiniteGrayCategory& A = *base_;
  Ops o{A};
  const std::size_t n0 = A.count(0);
  for (CellId a = 0; a < n0; ++a)
    for (CellId b = 0; b < n0; ++b) {
      const auto& ss = strings_between(a, b);
      for (StrId s : ss)
        for (StrId t : ss) {
          const auto& S = strings_[s].cells;
          const auto& T = strings_[t].cells;
          const long n1 = long(S.size()), n2 = long(T.size());
          for (long l1 = 0; l1 <= n1; ++l1) {
            const long l2 = l1 + n2 - n1;
            if (l2 < 0 || l2 > n2) continue;
            if (!std::equal(S.begin() + l1, S.end(), T.begin() + l2, T.end())) continue;
            for (long k = 1; k <= std::min(l1, l2) + 1; ++k) {
              if (k >= 2 && S[k - 2] != T[k - 2]) break;
              const CellId obj = object_at(strings_[s], std::size_t(k - 1));
              const CellId fs = fold(obj, S, std::size_t(k - 1), std::size_t(l1));
              const CellId ft = fold(obj, T, std::size_t(k - 1), std::size_t(l2));
              if (fs == kNoCell || ft == kNoCell) continue;
              for (CellId alpha : A.hom2(fs, ft)) {
                GrGen g{s, t, std::uint16_t(k), std::uint16_t(l1), std::uint16_t(l2), alpha};
                gen_index_.emplace(std::vector<std::uint32_t>{g.src, g.tgt, g.k, g.l1, g.l2, g.payload},
                                   GenId(gens_.size()));
                gens_.push_back(g);
                // [α] = suffix ⊠ α ⊠ prefix
                CellId r = alpha;
                const CellId pre = k > 1 ? fold(a, S, 0, std::size_t(k - 1)) : kNoCell;
                const CellId suf = l1 < n1 ? fold(object_at(strings_[s], std::size_t(l1)), S,
                                                  std::size_t(l1), std::size_t(n1))
                                           : kNoCell;
                try {
                  if ((k > 1 && pre == kNoCell) || (l1 < n1 && suf == kNoCell))
                    fail(ErrorKind::TableGap, "padding does not evaluate");
                  if (k > 1) r = o.pre(2, r, pre);
                  if (l1 < n1) r = o.post(suf, 2, r);
                } catch (const Error& e) {
                  build_.add("BASE", {{2, alpha}}, e.what());
                  r = kNoCell;
                }
                bracket_.push_back(r);
              }
            }
          }
        }
    }
}

Gr2Id GrTruncation::add_cell2(StrId src, StrId tgt, std::vector<GenId> gens) {
  Gr2Id id = Gr2Id(cells2_.size());
  first_child_.push_back(kAbsent);
  cells2_.push_back({src, tgt, std::move(gens)});
  cells_from_[src].push_back(id);
  cells_between_[std::uint64_t(src) << 32 | tgt].push_back(id);
  return id;
}

void GrTruncation::build_cells2(std::size_t max_cells2) {
  Ops o{*base_};
  cells_from_.assign(strings_.size(), {});
  std::vector<std::vector<GenId>> gens_from(strings_.size());
  gen_pos_.resize(gens_.size());
  for (GenId g = 0; g < gens_.size(); ++g) {
    gen_pos_[g] = std::uint32_t(gens_from[gens_[g].src].size());
    gens_from[gens_[g].src].push_back(g);
  }
  auto budget = [&] {
    if (cells2_.size() > max_cells2)
      fail(ErrorKind::Budget, name() + ": more than " + std::to_string(max_cells2) + " 2-cells");
  };
  for (StrId s = 0; s < strings_.size(); ++s) {
    identity_.push_back(add_cell2(s, s, {}));
    CellId e = ev1_[s];
    ev2_.push_back(e == kNoCell ? kNoCell : base_->identity(2, e));
  }
  budget();
  std::vector<Gr2Id> level;
  for (int len = 1; len <= L_; ++len) {
    std::vector<Gr2Id> next;
    auto extend = [&](Gr2Id x, GenId g) {
      std::vector<GenId> gs = cells2_[x].gens;
      gs.push_back(g);
      CellId ev = kNoCell;
      if (ev2_[x] != kNoCell && bracket_[g] != kNoCell) {
        try {
          ev = len == 1 ? bracket_[g] : o.t2(bracket_[g], ev2_[x]);
        } catch (const Error& e) {
          build_.add("BASE", {{2, ev2_[x]}, {2, bracket_[g]}}, e.what());
        }
      }
      next.push_back(add_cell2(cells2_[x].src, gens_[g].tgt, std::move(gs)));
      ev2_.push_back(ev);
    };
    if (len == 1) level = identity_;
    for (Gr2Id x : level) {
      first_child_[x] = Gr2Id(cells2_.size());
      for (GenId g : gens_from[cells2_[x].tgt]) extend(x, g);
    }
    budget();
    level = std::move(next);
  }
}

// ---------------------------------------------------------------------------

std::optional<StrId> GrTruncation::tensor1(StrId y, StrId x) const {
  if (strings_[x].to != strings_[y].from) fail(ErrorKind::NotComposable, "strings do not compose");
  const StrId r = concat_[std::size_t(y) * strings_.size() + x];
  if (r == kAbsent) return std::nullopt;
  return r;
}

std::optional<StrId> GrTruncation::concat(StrId y, StrId x) const {
  const GrString& X = strings_[x];
  const GrString& Y = strings_[y];
  if (X.to != Y.from) fail(ErrorKind::NotComposable, "strings do not compose");
  std::vector<CellId> c = X.cells;
  c.insert(c.end(), Y.cells.begin(), Y.cells.end());
  return find_string(X.from, Y.to, c);
}

std::optional<Gr2Id> GrTruncation::tensor2(Gr2Id y, Gr2Id x) const {
  if (cells2_[x].tgt != cells2_[y].src) fail(ErrorKind::NotComposable, "2-cells do not compose");
  std::vector<GenId> g = cells2_[x].gens;
  g.insert(g.end(), cells2_[y].gens.begin(), cells2_[y].gens.end());
  return find_cell2(cells2_[x].src, g);
}

std::optional<GenId> GrTruncation::whisker_gen(Side side, StrId w, GenId gi) const {
  const GrString& W = strings_[w];
  const GrString& S = strings_[gens_[gi].src];
  if (side == Side::Post ? W.from != S.to : W.to != S.from)
    fail(ErrorKind::NotComposable, "whisker does not compose");
  const GenId r = wgen_[(std::size_t(side) * strings_.size() + w) * gens_.size() + gi];
  if (r == kAbsent) return std::nullopt;
  return r;
}

std::optional<GenId> GrTruncation::compute_whisker_gen(Side side, StrId w, GenId gi) const {
  const GrGen& g = gens_[gi];
  const GrString& W = strings_[w];
  auto extend = [&](StrId s) -> std::optional<StrId> {
    const GrString& S = strings_[s];
    std::vector<CellId> c;
    if (side == Side::Post) {
      c = S.cells;
      c.insert(c.end(), W.cells.begin(), W.cells.end());
      return find_string(S.from, W.to, c);
    }
    c = W.cells;
    c.insert(c.end(), S.cells.begin(), S.cells.end());
    return find_string(W.from, S.to, c);
  };
  const GrString& S = strings_[g.src];
  if (side == Side::Post ? W.from != S.to : W.to != S.from)
    fail(ErrorKind::NotComposable, "whisker does not compose");
  auto s = extend(g.src), t = extend(g.tgt);
  if (!s || !t) return std::nullopt;
  const std::uint16_t shift = side == Side::Pre ? std::uint16_t(W.size()) : 0;
  return find_gen({*s, *t, std::uint16_t(g.k + shift), std::uint16_t(g.l1 + shift),
                   std::uint16_t(g.l2 + shift), g.payload});
}

std::optional<Gr2Id> GrTruncation::whisker2(Side side, StrId w, Gr2Id x) const {
  const GrCell2& X = cells2_[x];
  if (X.gens.empty()) {
    auto s = side == Side::Post ? tensor1(w, X.src) : tensor1(X.src, w);
    if (!s) return std::nullopt;
    return identity_[*s];
  }
  std::vector<GenId> out;
  for (GenId g : X.gens) {
    auto h = whisker_gen(side, w, g);
    if (!h) return std::nullopt;
    out.push_back(*h);
  }
  return find_cell2(gens_[out.front()].src, out);
}

GrCell3 GrTruncation::id3(Gr2Id x) const {
  Ops o{*base_};
  if (ev2_[x] == kNoCell) fail(ErrorKind::TableGap, "2-cell has no evaluation");
  return {x, x, o.id3(ev2_[x])};
}

GrCell3 GrTruncation::circ3(const GrCell3& Y, const GrCell3& X) const {
  if (X.tgt != Y.src) fail(ErrorKind::NotComposable, "3-cells do not compose");
  Ops o{*base_};
  return {X.src, Y.tgt, o.c3(Y.payload, X.payload)};
}

std::optional<GrCell3> GrTruncation::tensor3(const GrCell3& Y, const GrCell3& X) const {
  Ops o{*base_};
  auto s = tensor2(Y.src, X.src), t = tensor2(Y.tgt, X.tgt);
  if (!s || !t) return std::nullopt;
  return GrCell3{*s, *t, o.t3(Y.payload, X.payload)};
}

std::optional<GrCell3> GrTruncation::whisker3(Side side, StrId w, const GrCell3& X) const {
  Ops o{*base_};
  auto s = whisker2(side, w, X.src), t = whisker2(side, w, X.tgt);
  if (!s || !t) return std::nullopt;
  const CellId ew = ev1_[w];
  return GrCell3{*s, *t,
                 side == Side::Post ? o.post(ew, 3, X.payload) : o.pre(3, X.payload, ew)};
}

std::optional<GrCell3> GrTruncation::sigma(Gr2Id xi, Gr2Id gamma) const {
  Ops o{*base_};
  const GrCell2& X = cells2_[xi];
  const GrCell2& G = cells2_[gamma];
  auto a = whisker2(Side::Pre, G.tgt, xi), b = whisker2(Side::Post, X.src, gamma);
  auto c = whisker2(Side::Post, X.tgt, gamma), d = whisker2(Side::Pre, G.src, xi);
  if (!a || !b || !c || !d) return std::nullopt;
  auto s = tensor2(*a, *b), t = tensor2(*c, *d);
  if (!s || !t) return std::nullopt;
  return GrCell3{*s, *t, o.sig(ev2_[xi], ev2_[gamma])};
}

std::optional<GrCell3> GrTruncation::sigma_recursive(Gr2Id xi, Gr2Id gamma) const {
  const GrCell2& X = cells2_[xi];
  const GrCell2& G = cells2_[gamma];
  if (X.gens.empty() || G.gens.empty()) {
    auto s = sigma(xi, gamma);
    if (!s) return std::nullopt;
    return id3(s->src);
  }
  if (X.gens.size() == 1 && G.gens.size() == 1) return sigma(xi, gamma);
  auto split = [&](const GrCell2& C) {
    std::vector<GenId> rest(C.gens.begin(), C.gens.end() - 1);
    Gr2Id last = *find_cell2(gens_[C.gens.back()].src, {C.gens.back()});
    Gr2Id first = *find_cell2(C.src, rest);
    return std::pair{last, first};
  };
  if (X.gens.size() > 1) {
    // Σ_{ξ'⊗ξ,γ} = (Σ_{ξ',γ} ⊗ (ξ⊠f)) ∘ ((ξ'⊠f') ⊗ Σ_{ξ,γ})
    auto [xl, xf] = split(X);
    auto s1 = sigma_recursive(xl, gamma), s0 = sigma_recursive(xf, gamma);
    auto xf_f = whisker2(Side::Pre, G.src, xf), xl_f2 = whisker2(Side::Pre, G.tgt, xl);
    if (!s1 || !s0 || !xf_f || !xl_f2) return std::nullopt;
    auto top = tensor3(*s1, id3(*xf_f)), bot = tensor3(id3(*xl_f2), *s0);
    if (!top || !bot) return std::nullopt;
    return circ3(*top, *bot);
  }
  // Σ_{ξ,γ'⊗γ} = ((g'⊠γ') ⊗ Σ_{ξ,γ}) ∘ (Σ_{ξ,γ'} ⊗ (g⊠γ))
  auto [gl, gf] = split(G);
  auto s1 = sigma_recursive(xi, gl), s0 = sigma_recursive(xi, gf);
  auto g2_gl = whisker2(Side::Post, X.tgt, gl), g_gf = whisker2(Side::Post, X.src, gf);
  if (!s1 || !s0 || !g2_gl || !g_gf) return std::nullopt;
  auto top = tensor3(id3(*g2_gl), *s0), bot = tensor3(*s1, id3(*g_gf));
  if (!top || !bot) return std::nullopt;
  return circ3(*top, *bot);
}

}  // namespace gray
