#include "gray/model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gray/detail/law.hpp"
#include "gray/ops.hpp"

namespace gray {

using detail::holds;
using detail::law;
using detail::r0;
using detail::r1;
using detail::r2;

namespace {

bool contains(const std::vector<CellId>& v, CellId x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

/// hom3(x, y) → hom3(Fx, Fy) bijective for every parallel pair in the source.
void top_level(AxiomReport& rep, const char* tag, const GrayFunctorData& F) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  for (CellId x = 0; x < A.count(2); ++x)
    for (CellId y : A.hom2(A.src(2, x), A.tgt(2, x)))
      holds(rep, tag, {r2(x), r2(y)}, [&] {
        std::vector<CellId> img;
        for (CellId G : A.hom3(x, y)) img.push_back(F(3, G));
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
        std::vector<CellId> want = B.hom3(F(2, x), F(2, y));
        std::sort(want.begin(), want.end());
        return img == want;
      }, "not bijective on 3-cells");
}

}  // namespace

AxiomReport is_trivial_fibration(const GrayFunctorData& F) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  AxiomReport rep;
  std::vector<bool> hit(B.count(0), false);
  for (CellId a = 0; a < A.count(0); ++a) hit[F(0, a)] = true;
  for (CellId b = 0; b < B.count(0); ++b)
    holds(rep, "TF0", {r0(b)}, [&] { return bool(hit[b]); }, "object not in the image");

  for (CellId a = 0; a < A.count(0); ++a)
    for (CellId a2 = 0; a2 < A.count(0); ++a2)
      for (CellId g : B.hom1(F(0, a), F(0, a2)))
        holds(rep, "TF1", {r0(a), r0(a2), r1(g)}, [&] {
          for (CellId f : A.hom1(a, a2))
            if (F(1, f) == g) return true;
          return false;
        }, "1-cell without a preimage between these objects");

  for (CellId f = 0; f < A.count(1); ++f)
    for (CellId f2 : A.hom1(A.src(1, f), A.tgt(1, f)))
      for (CellId beta : B.hom2(F(1, f), F(1, f2)))
        holds(rep, "TF2", {r1(f), r1(f2), r2(beta)}, [&] {
          for (CellId al : A.hom2(f, f2))
            if (F(2, al) == beta) return true;
          return false;
        }, "2-cell without a preimage between these 1-cells");

  top_level(rep, "TF3", F);
  return rep;
}

AxiomReport is_trivial_fibration(const GrTruncation& T) {
  const FiniteGrayCategory& A = T.base();
  AxiomReport rep;
  // ev is the identity on objects.
  for (CellId a = 0; a < A.count(0); ++a) ++rep.checked;

  for (CellId a = 0; a < A.count(0); ++a)
    for (CellId b = 0; b < A.count(0); ++b)
      for (CellId g : A.hom1(a, b))
        holds(rep, "TF1", {r0(a), r0(b), r1(g)}, [&] {
          for (StrId s : T.strings_between(a, b))
            if (T.ev1(s) == g) return true;
          return false;
        }, "1-cell without a string over it");

  for (StrId s = 0; s < T.strings(); ++s) {
    const GrString& S = T.string(s);
    for (StrId t : T.strings_between(S.from, S.to)) {
      // 2-cells s ⇒ t grouped by their value; 3-cells depend only on it.
      std::map<CellId, std::size_t> classes;
      for (Gr2Id x : T.cells_between(s, t)) ++classes[T.ev2(x)];
      for (CellId beta : A.hom2(T.ev1(s), T.ev1(t)))
        holds(rep, "TF2", {r1(s), r1(t), r2(beta)}, [&] { return classes.count(beta) > 0; },
              "2-cell without a preimage between these strings");
      std::map<CellId, Gr2Id> rep_of;
      for (Gr2Id x : T.cells_between(s, t)) rep_of.emplace(T.ev2(x), x);
      for (const auto& [u, nu] : classes)
        for (const auto& [v, nv] : classes) {
          holds(rep, "TF3", {r2(rep_of[u]), r2(rep_of[v])}, [&] {
            std::vector<CellId> h = T.hom3(rep_of[u], rep_of[v]);
            std::sort(h.begin(), h.end());
            if (std::adjacent_find(h.begin(), h.end()) != h.end()) return false;
            std::vector<CellId> want = A.hom3(u, v);
            std::sort(want.begin(), want.end());
            return h == want;
          }, "not bijective on 3-cells");
          rep.checked += nu * nv - 1;
        }
    }
  }
  return rep;
}

AxiomReport is_triequivalence(const GrayFunctorData& F) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  AxiomReport rep;
  for (CellId b = 0; b < B.count(0); ++b)
    holds(rep, "TE0", {r0(b)}, [&] {
      for (CellId a = 0; a < A.count(0); ++a)
        if (find_biadjoint_biequivalence(B, F(0, a), b)) return true;
      return false;
    }, "object not biequivalent to an image object");

  for (CellId a = 0; a < A.count(0); ++a)
    for (CellId a2 = 0; a2 < A.count(0); ++a2)
      for (CellId g : B.hom1(F(0, a), F(0, a2)))
        holds(rep, "TE1", {r0(a), r0(a2), r1(g)}, [&] {
          for (CellId f : A.hom1(a, a2))
            if (equivalent_1cells(B, F(1, f), g)) return true;
          return false;
        }, "1-cell not equivalent to an image 1-cell");

  for (CellId f = 0; f < A.count(1); ++f)
    for (CellId f2 : A.hom1(A.src(1, f), A.tgt(1, f)))
      for (CellId beta : B.hom2(F(1, f), F(1, f2)))
        holds(rep, "TE2", {r1(f), r1(f2), r2(beta)}, [&] {
          for (CellId al : A.hom2(f, f2))
            if (find_invertible3(B, F(2, al), beta)) return true;
          return false;
        }, "2-cell not isomorphic to an image 2-cell");

  top_level(rep, "TE3", F);
  return rep;
}

AxiomReport check_lifting_problem(const LiftingProblem& p) {
  AxiomReport rep;
  const GrayFunctorData rt = compose(p.right, p.top);
  const GrayFunctorData bl = compose(p.bottom, p.left);
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < p.left.source->count(d); ++x)
      law(rep, "SQUARE", {{d, x}}, [&] { return rt(d, x); }, [&] { return bl(d, x); });
  for (int d = 0; d <= 3; ++d)
    for (CellId x : p.generators[d])
      holds(rep, "SQUARE", {{d, x}}, [&] { return !contains(p.left.map[d], x); },
            "generator in the image of left");
  return rep;
}

namespace {

/// Extends a partial assignment B → A' by closing under every operation.
struct Closure {
  const FiniteGrayCategory& B;
  const FiniteGrayCategory& A;
  GrayFunctorData& L;
  bool changed = false;

  CellId at(int d, CellId x) const { return L.map[d][x]; }

  void set(int d, CellId x, CellId v) {
    CellId& slot = L.map[d][x];
    if (slot == v) return;
    if (slot != kNoCell)
      fail(ErrorKind::Incoherent, "marked cells do not present " + B.name() + " freely: " +
                                      B.cell_name(d, x) + " gets two values");
    slot = v;
    changed = true;
  }

  template <class OpB, class OpA>
  void binary(int dy, int dx, int dr, OpB ob, OpA oa) {
    for (CellId y = 0; y < B.count(dy); ++y) {
      if (at(dy, y) == kNoCell) continue;
      for (CellId x = 0; x < B.count(dx); ++x) {
        if (at(dx, x) == kNoCell) continue;
        CellId r;
        try {
          r = ob(y, x);
        } catch (const Error&) {
          continue;
        }
        if (r != kNoCell) set(dr, r, oa(at(dy, y), at(dx, x)));
      }
    }
  }

  void run() {
    Ops b{B}, a{A};
    do {
      changed = false;
      for (int d = 1; d <= 3; ++d)
        for (CellId x = 0; x < B.count(d - 1); ++x)
          if (at(d - 1, x) != kNoCell && B.identity(d, x) != kNoCell)
            set(d, B.identity(d, x), a.need(A.identity(d, at(d - 1, x)), d - 1, at(d - 1, x)));
      binary(1, 1, 1, [&](CellId g, CellId f) { return b.t1(g, f); },
             [&](CellId g, CellId f) { return a.t1(g, f); });
      for (int d = 2; d <= 3; ++d) {
        binary(1, d, d, [&](CellId w, CellId x) { return b.post(w, d, x); },
               [&](CellId w, CellId x) { return a.post(w, d, x); });
        binary(1, d, d, [&](CellId w, CellId x) { return b.pre(d, x, w); },
               [&](CellId w, CellId x) { return a.pre(d, x, w); });
      }
      binary(2, 2, 2, [&](CellId y, CellId x) { return b.t2(y, x); },
             [&](CellId y, CellId x) { return a.t2(y, x); });
      binary(3, 3, 3, [&](CellId y, CellId x) { return b.c3(y, x); },
             [&](CellId y, CellId x) { return a.c3(y, x); });
      binary(3, 3, 3, [&](CellId y, CellId x) { return b.t3(y, x); },
             [&](CellId y, CellId x) { return a.t3(y, x); });
      binary(2, 2, 3, [&](CellId xi, CellId g) { return b.sig(xi, g); },
             [&](CellId xi, CellId g) { return a.sig(xi, g); });
      // Free Gray-categories have formal inverses of invertible 3-cells.
      for (CellId X = 0; X < B.count(3); ++X) {
        if (at(3, X) == kNoCell) continue;
        auto inv = invert3(B, X);
        if (!inv) continue;
        auto img = invert3(A, at(3, X));
        if (!img)
          fail(ErrorKind::Incoherent, "image of invertible " + B.cell_name(3, X) +
                                          " is not invertible");
        set(3, *inv, *img);
      }
    } while (changed);
  }
};

}  // namespace

GrayFunctorData lift_through_trivial_fibration(const LiftingProblem& p) {
  const FiniteGrayCategory& B = *p.left.target;
  const FiniteGrayCategory& A = *p.right.source;
  GrayFunctorData L{"lift", p.left.target, p.right.source, {}};
  for (int d = 0; d <= 3; ++d) L.map[d].assign(B.count(d), kNoCell);
  Closure close{B, A, L};
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < p.left.source->count(d); ++x) close.set(d, p.left(d, x), p.top(d, x));

  for (int d = 0; d <= 3; ++d) {
    close.run();
    for (CellId x : p.generators[d]) {
      std::vector<CellId> cands;
      if (d == 0) {
        for (CellId c = 0; c < A.count(0); ++c) cands.push_back(c);
      } else {
        CellId s = L(d - 1, B.src(d, x)), t = L(d - 1, B.tgt(d, x));
        if (s == kNoCell || t == kNoCell)
          fail(ErrorKind::Incoherent,
               "boundary of generator " + B.cell_name(d, x) + " is not generated");
        cands = d == 1 ? A.hom1(s, t) : d == 2 ? A.hom2(s, t) : A.hom3(s, t);
      }
      auto it = std::find_if(cands.begin(), cands.end(),
                             [&](CellId c) { return p.right(d, c) == p.bottom(d, x); });
      if (it == cands.end())
        fail(ErrorKind::NoLift, "no preimage for generator " + B.cell_name(d, x));
      close.set(d, x, *it);
    }
  }
  close.run();
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < B.count(d); ++x)
      if (L(d, x) == kNoCell)
        fail(ErrorKind::Incoherent, B.cell_name(d, x) + " is not generated by the marked cells");

  const GrayFunctorData top = compose(L, p.left), bottom = compose(p.right, L);
  if (top.map != p.top.map || bottom.map != p.bottom.map)
    fail(ErrorKind::Incoherent, "lift does not make both triangles commute");
  return L;
}

Section section_of_ev(const CategoryPtr& A, int bound, IdentityImage ids) {
  if (bound < 1) fail(ErrorKind::Semantic, "a section of ev needs bound >= 1");
  auto T = std::make_shared<const GrTruncation>(A, bound);
  Section s{T, ids, {}, {}};
  for (CellId f = 0; f < A->count(1); ++f) {
    std::vector<CellId> cells;
    if (!(ids == IdentityImage::Empty && A->is_identity(1, f))) cells.push_back(f);
    s.strings.push_back(*T->find_string(A->src(1, f), A->tgt(1, f), cells));
  }
  for (CellId al = 0; al < A->count(2); ++al) {
    const StrId src = s.strings[A->src(2, al)], tgt = s.strings[A->tgt(2, al)];
    if (A->is_identity(2, al)) {
      s.cells2.push_back(T->id2(src));
      continue;
    }
    GrGen g{src, tgt, 1, std::uint16_t(T->string(src).size()),
            std::uint16_t(T->string(tgt).size()), al};
    auto gid = T->find_gen(g);
    auto x = gid ? T->find_cell2(src, {*gid}) : std::nullopt;
    if (!x) fail(ErrorKind::Incoherent, "no generator for " + A->cell_name(2, al));
    s.cells2.push_back(*x);
  }
  return s;
}

AxiomReport check_section(const Section& s) {
  const GrTruncation& T = *s.trunc;
  const FiniteGrayCategory& A = T.base();
  AxiomReport rep;
  for (CellId f = 0; f < A.count(1); ++f) {
    law(rep, "SECTION", {r1(f)}, [&] { return T.ev1(s.strings[f]); }, [&] { return f; });
    law(rep, "SECTION", {r1(f)},
        [&] { return std::pair{T.string(s.strings[f]).from, T.string(s.strings[f]).to}; },
        [&] { return std::pair{A.src(1, f), A.tgt(1, f)}; });
  }
  for (CellId al = 0; al < A.count(2); ++al) {
    law(rep, "SECTION", {r2(al)}, [&] { return T.ev2(s.cells2[al]); }, [&] { return al; });
    law(rep, "SECTION", {r2(al)},
        [&] { return std::pair{T.cell2(s.cells2[al]).src, T.cell2(s.cells2[al]).tgt}; },
        [&] { return std::pair{s.strings[A.src(2, al)], s.strings[A.tgt(2, al)]}; });
  }
  for (CellId G = 0; G < A.count(3); ++G)
    holds(rep, "SECTION", {{3, G}}, [&] {
      const GrCell3 X = s.cell3(A, G);
      return contains(T.hom3(X.src, X.tgt), X.payload) && X.payload == G;
    }, "3-cell not between the images of its boundary");
  return rep;
}

}  // namespace gray
