#include "gray/search.hpp"

#include "gray/ops.hpp"

namespace gray {

std::optional<CellId> invert3(const FiniteGrayCategory& C, CellId gamma) {
  const CellId s = C.src(3, gamma), t = C.tgt(3, gamma);
  const CellId ids = C.identity(3, s), idt = C.identity(3, t);
  if (ids == kNoCell || idt == kNoCell) return std::nullopt;
  for (CellId d : C.hom3(t, s))
    if (C.circ3(d, gamma) == ids && C.circ3(gamma, d) == idt) return d;
  return std::nullopt;
}

bool is_invertible3(const FiniteGrayCategory& C, CellId gamma) {
  return invert3(C, gamma).has_value();
}

bool validate_adjoint_equivalence(const FiniteGrayCategory& C, const AdjointEquivalence& e) {
  Ops o{C};
  try {
    const CellId f = C.src(2, e.fwd), g = C.tgt(2, e.fwd);
    if (C.src(2, e.bwd) != g || C.tgt(2, e.bwd) != f) return false;
    if (C.src(3, e.unit) != o.id2(f) || C.tgt(3, e.unit) != o.t2(e.bwd, e.fwd)) return false;
    if (C.src(3, e.counit) != o.t2(e.fwd, e.bwd) || C.tgt(3, e.counit) != o.id2(g)) return false;
    if (!is_invertible3(C, e.unit) || !is_invertible3(C, e.counit)) return false;
    const CellId zf = o.c3(o.t32(e.counit, e.fwd), o.t23(e.fwd, e.unit));
    const CellId zb = o.c3(o.t23(e.bwd, e.counit), o.t32(e.unit, e.bwd));
    return zf == o.id3(e.fwd) && zb == o.id3(e.bwd);
  } catch (const Error&) {
    return false;
  }
}

std::optional<AdjointEquivalence> find_adjoint_equivalence(const FiniteGrayCategory& C,
                                                           CellId xi, CellId bwd) {
  Ops o{C};
  const CellId f = C.src(2, xi), g = C.tgt(2, xi);
  if (C.src(2, bwd) != g || C.tgt(2, bwd) != f) return std::nullopt;
  CellId uf, ug, bf, fb;
  try {
    uf = o.id2(f);
    ug = o.id2(g);
    bf = o.t2(bwd, xi);
    fb = o.t2(xi, bwd);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (CellId unit : C.hom3(uf, bf)) {
    if (!is_invertible3(C, unit)) continue;
    for (CellId counit : C.hom3(fb, ug)) {
      AdjointEquivalence e{xi, bwd, unit, counit};
      if (validate_adjoint_equivalence(C, e)) return e;
    }
  }
  return std::nullopt;
}

std::optional<AdjointEquivalence> find_adjoint_equivalence(const FiniteGrayCategory& C,
                                                           CellId xi) {
  const CellId f = C.src(2, xi), g = C.tgt(2, xi);
  for (CellId bwd : C.hom2(g, f))
    if (auto e = find_adjoint_equivalence(C, xi, bwd)) return e;
  return std::nullopt;
}

bool validate_biadjoint_biequivalence(const FiniteGrayCategory& C,
                                      const BiadjointBiequivalence& w) {
  Ops o{C};
  try {
    const CellId a = C.src(1, w.fwd), b = C.tgt(1, w.fwd);
    if (C.src(1, w.bwd) != b || C.tgt(1, w.bwd) != a) return false;
    const CellId ba = o.t1(w.bwd, w.fwd), ab = o.t1(w.fwd, w.bwd);
    if (w.m.fwd >= C.count(2) || w.n.fwd >= C.count(2)) return false;
    if (C.src(2, w.m.fwd) != o.id1(a) || C.tgt(2, w.m.fwd) != ba) return false;
    if (C.src(2, w.n.fwd) != o.id1(b) || C.tgt(2, w.n.fwd) != ab) return false;
    if (!validate_adjoint_equivalence(C, w.m) || !validate_adjoint_equivalence(C, w.n))
      return false;
    const CellId phi_s = o.t2(o.pre(2, w.n.bwd, w.fwd), o.post(w.fwd, 2, w.m.fwd));
    const CellId psi_s = o.t2(o.post(w.bwd, 2, w.n.bwd), o.pre(2, w.m.fwd, w.bwd));
    if (C.src(3, w.phi) != phi_s || C.tgt(3, w.phi) != o.id2(w.fwd)) return false;
    if (C.src(3, w.psi) != psi_s || C.tgt(3, w.psi) != o.id2(w.bwd)) return false;
    return is_invertible3(C, w.phi) && is_invertible3(C, w.psi);
  } catch (const Error&) {
    return false;
  }
}

namespace {

std::optional<BiadjointBiequivalence> search_with(const FiniteGrayCategory& C, CellId fwd,
                                                  CellId bwd) {
  Ops o{C};
  const CellId a = C.src(1, fwd), b = C.tgt(1, fwd);
  CellId ida, idb, ba, ab;
  try {
    ida = o.id1(a);
    idb = o.id1(b);
    ba = o.t1(bwd, fwd);
    ab = o.t1(fwd, bwd);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (CellId am : C.hom2(ida, ba)) {
    auto m = find_adjoint_equivalence(C, am);
    if (!m) continue;
    for (CellId an : C.hom2(idb, ab)) {
      auto n = find_adjoint_equivalence(C, an);
      if (!n) continue;
      CellId phi_s, psi_s, idf, idg;
      try {
        phi_s = o.t2(o.pre(2, n->bwd, fwd), o.post(fwd, 2, m->fwd));
        psi_s = o.t2(o.post(bwd, 2, n->bwd), o.pre(2, m->fwd, bwd));
        idf = o.id2(fwd);
        idg = o.id2(bwd);
      } catch (const Error&) {
        continue;
      }
      for (CellId phi : C.hom3(phi_s, idf)) {
        if (!is_invertible3(C, phi)) continue;
        for (CellId psi : C.hom3(psi_s, idg)) {
          if (!is_invertible3(C, psi)) continue;
          return BiadjointBiequivalence{fwd, bwd, *m, *n, phi, psi};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BiadjointBiequivalence> find_biadjoint_biequivalence_for(
    const FiniteGrayCategory& C, CellId fwd) {
  const CellId a = C.src(1, fwd), b = C.tgt(1, fwd);
  for (CellId bwd : C.hom1(b, a))
    if (auto w = search_with(C, fwd, bwd)) return w;
  return std::nullopt;
}

std::optional<BiadjointBiequivalence> find_biadjoint_biequivalence(const FiniteGrayCategory& C,
                                                                   CellId a, CellId b) {
  for (CellId fwd : C.hom1(a, b))
    if (auto w = find_biadjoint_biequivalence_for(C, fwd)) return w;
  return std::nullopt;
}

std::optional<CellId> find_invertible3(const FiniteGrayCategory& C, CellId src, CellId tgt) {
  if (src == tgt) return C.identity(3, src);
  for (CellId g : C.hom3(src, tgt))
    if (is_invertible3(C, g)) return g;
  return std::nullopt;
}

AdjointEquivalence identity_equivalence(const FiniteGrayCategory& C, CellId f) {
  Ops o{C};
  const CellId i = o.id2(f);
  return {i, i, o.id3(i), o.id3(i)};
}

AdjointEquivalence compose_equivalences(const FiniteGrayCategory& C, const AdjointEquivalence& e2,
                                        const AdjointEquivalence& e1) {
  Ops o{C};
  AdjointEquivalence e;
  e.fwd = o.t2(e2.fwd, e1.fwd);
  e.bwd = o.t2(e1.bwd, e2.bwd);
  e.unit = o.c3(o.t23(e1.bwd, o.t32(e2.unit, e1.fwd)), e1.unit);
  e.counit = o.c3(e2.counit, o.t23(e2.fwd, o.t32(e1.counit, e2.bwd)));
  return e;
}

AdjointEquivalence whisker_equivalence(const FiniteGrayCategory& C, Side side, CellId w,
                                       const AdjointEquivalence& e) {
  auto wh = [&](int d, CellId x) { return whisker(C, side, w, d, x); };
  return {wh(2, e.fwd), wh(2, e.bwd), wh(3, e.unit), wh(3, e.counit)};
}

bool equivalent_1cells(const FiniteGrayCategory& C, CellId f, CellId g) {
  for (CellId x : C.hom2(f, g))
    if (find_adjoint_equivalence(C, x)) return true;
  return false;
}

}  // namespace gray
