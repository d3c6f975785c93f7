#include "gray/detail/law.hpp"
#include "gray/ops.hpp"
#include "gray/path.hpp"

namespace gray {

using detail::holds;

namespace {

struct Witnesses {
  const PathCategory& P;
  const FiniteGrayCategory& B = *P.base;
  const FiniteGrayCategory& C = *P.cat;
  Ops b{B}, c{C};
  AxiomReport& rep;

  /// Looks a cell up, recording a violation when it is absent.
  template <class Find>
  std::optional<CellId> cell(const char* tag, std::vector<CellRef> w, const std::string& what,
                             Find find) {
    ++rep.checked;
    try {
      if (auto r = find()) return r;
      rep.add(tag, std::move(w), what + " is not a cell of the path object");
    } catch (const Error& e) {
      rep.add(tag, std::move(w), what + ": " + e.what());
    }
    return std::nullopt;
  }

  void adjoint(const char* tag, std::vector<CellRef> w, const std::string& what,
               std::optional<CellId> fwd, std::optional<CellId> bwd, std::optional<CellId> unit,
               std::optional<CellId> counit) {
    if (!fwd || !bwd || !unit || !counit) return;
    holds(rep, tag, std::move(w),
          [&] { return validate_adjoint_equivalence(C, {*fwd, *bwd, *unit, *counit}); },
          what + " is not an adjoint equivalence");
  }

  bool constant(CellId obj) const { return B.is_identity(1, P.arrow(obj)); }

  // C is full and faithful on 3-cells: every ℙ 3-cell Cθ ⇛ Cσ has equal
  // components and comes from B.
  void three() {
    for (CellId th = 0; th < B.count(2); ++th)
      for (CellId sg : B.hom2(B.src(2, th), B.tgt(2, th))) {
        const CellId Cth = P.C(2, th), Csg = P.C(2, sg);
        const auto& ps = C.hom3(Cth, Csg);
        holds(rep, "CW3", {{2, th}, {2, sg}},
              [&] { return ps.size() == B.hom3(th, sg).size(); },
              "C is not bijective on 3-cells");
        for (CellId G : ps)
          holds(rep, "CW3", {{3, G}},
                [&] { return P.cells3[G].S == P.cells3[G].T && P.C(3, P.cells3[G].S) == G; },
                "3-cell between constant 2-cells is not constant");
      }
  }

  // Every ℙ 2-cell x between constant 1-cells is isomorphic to C(Sx) via (id, x⃗).
  void two() {
    for (CellId x = 0; x < P.cells2.size(); ++x) {
      const auto& X = P.cells2[x];
      const auto &F = P.cells1[X.src], &G = P.cells1[X.tgt];
      if (!(constant(F.src) && constant(F.tgt))) continue;
      if (P.C(1, F.S) != X.src || P.C(1, G.S) != X.tgt) continue;
      auto iso = cell("CW2", {{2, x}}, "comparison 3-cell",
                      [&] { return P.find3(P.C(2, X.S), x, b.id3(X.S), X.vec); });
      if (iso)
        holds(rep, "CW2", {{2, x}}, [&] { return is_invertible3(C, *iso); },
              "comparison 3-cell is not invertible");
    }
  }

  // Every ℙ 1-cell f between constant objects is equivalent to C(Sf) via
  // θ = (id, f⃗•, unit) and θ• = (id, f⃗, id).
  void one() {
    for (CellId f = 0; f < P.cells1.size(); ++f) {
      const auto& F = P.cells1[f];
      if (!(constant(F.src) && constant(F.tgt))) continue;
      const CellId Cf = P.C(1, F.S);
      const CellId idS = b.id2(F.S);
      auto th = cell("CW1", {{1, f}}, "θ", [&] { return P.find2(f, Cf, idS, F.ae.bwd, F.ae.unit); });
      auto thb = cell("CW1", {{1, f}}, "θ•", [&] { return P.find2(Cf, f, idS, F.vec, b.id3(F.vec)); });
      if (!th || !thb) continue;
      auto unit = cell("CW1", {{1, f}}, "ε_θ", [&] {
        return P.find3(c.id2(Cf), c.t2(*th, *thb), b.id3(idS), F.ae.unit);
      });
      auto counit = cell("CW1", {{1, f}}, "η_θ", [&] {
        return P.find3(c.t2(*thb, *th), c.id2(f), b.id3(idS), F.ae.counit);
      });
      adjoint("CW1", {{1, f}}, "(θ•, θ, ε_θ, η_θ)", thb, th, unit, counit);
    }
  }

  // Every object a⃗: Sa → Ta is biequivalent to C(Sa).
  void zero() {
    for (CellId a = 0; a < P.witness.size(); ++a) {
      const BiadjointBiequivalence& w = P.witness[a];
      const CellId av = w.fwd, Sa = B.src(1, av), Ta = B.tgt(1, av);
      const CellId ca = P.C(0, Sa);
      const CellId idSa = b.id1(Sa), idTa = b.id1(Ta);
      const std::vector<CellRef> at{{0, a}};
      auto f = cell("CW0", at, "f", [&] { return P.find1(ca, a, idSa, av, b.id2(av)); });
      auto g = cell("CW0", at, "g", [&] { return P.find1(a, ca, idSa, w.bwd, w.m.fwd); });
      if (!f || !g) continue;
      const CellId gf = c.t1(*g, *f), fg = c.t1(*f, *g);
      const CellId id_ca = c.id1(ca), id_a = c.id1(a);
      const CellId ii = b.id2(idSa);

      auto mu = cell("CW0", at, "μ", [&] { return P.find2(id_ca, gf, ii, w.m.fwd, b.id3(w.m.fwd)); });
      auto mub = cell("CW0", at, "μ•", [&] { return P.find2(gf, id_ca, ii, w.m.bwd, w.m.unit); });
      if (mu && mub) {
        auto e = cell("CW0", at, "ε_μ",
                      [&] { return P.find3(c.id2(id_ca), c.t2(*mub, *mu), b.id3(ii), w.m.unit); });
        auto h = cell("CW0", at, "η_μ",
                      [&] { return P.find3(c.t2(*mu, *mub), c.id2(gf), b.id3(ii), w.m.counit); });
        adjoint("CW0", at, "(μ, μ•, ε_μ, η_μ)", mu, mub, e, h);
      }

      // ν_α: a⃗⊠m ⇛ n⊠a⃗, through the counit of n and φ.
      std::optional<CellId> nu_a;
      try {
        auto cinv = invert3(B, w.n.counit);
        if (!cinv) fail(ErrorKind::Incoherent, "counit of n is not invertible");
        nu_a = b.c3(b.t23(b.pre(2, w.n.fwd, av), w.phi),
                    b.t32(b.pre(3, *cinv, av), b.post(av, 2, w.m.fwd)));
      } catch (const Error& e) {
        rep.add("CW0", at, std::string("ν_α: ") + e.what());
      }
      auto phi_inv = invert3(B, w.phi);
      if (!nu_a || !phi_inv) continue;
      auto nu = cell("CW0", at, "ν", [&] { return P.find2(id_a, fg, b.id2(idSa), w.n.fwd, *nu_a); });
      auto nub = cell("CW0", at, "ν•", [&] { return P.find2(fg, id_a, b.id2(idSa), w.n.bwd, *phi_inv); });
      if (nu && nub) {
        const CellId i3 = b.id3(b.id2(idSa));
        auto e = cell("CW0", at, "ε_ν",
                      [&] { return P.find3(c.id2(id_a), c.t2(*nub, *nu), i3, w.n.unit); });
        auto h = cell("CW0", at, "η_ν",
                      [&] { return P.find3(c.t2(*nu, *nub), c.id2(fg), i3, w.n.counit); });
        adjoint("CW0", at, "(ν, ν•, ε_ν, η_ν)", nu, nub, e, h);
      }
      (void)idTa;
    }
  }
};

}  // namespace

AxiomReport check_C_weak_equivalence(const PathCategory& P) {
  AxiomReport rep;
  Witnesses w{.P = P, .rep = rep};
  w.three();
  w.two();
  w.one();
  w.zero();
  return rep;
}

}  // namespace gray
