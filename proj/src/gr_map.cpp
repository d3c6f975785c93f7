#include <map>

#include "gray/detail/law.hpp"
#include "gray/free.hpp"
#include "gray/ops.hpp"
#include "gray/search.hpp"

namespace gray {

using detail::holds;
using detail::law;

namespace {

struct PhiBuilder {
  const WeakFunctorData& F;
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  Ops a{A};
  std::map<std::vector<CellId>, AdjointEquivalence> memo;

  CellId fold(CellId obj, const std::vector<CellId>& cells) const {
    if (cells.empty()) return a.id1(obj);
    CellId r = cells[0];
    for (std::size_t i = 1; i < cells.size(); ++i) r = a.t1(cells[i], r);
    return r;
  }

  /// φ: [F f_n, …, F f_1] ⇒ F[f_n, …, f_1], built as
  /// φ_n = χ_{[f_n..f_2], f_1} ⊗ (φ_{n..2} ⊠ F f_1).
  AdjointEquivalence phi(CellId obj, const std::vector<CellId>& cells) {
    std::vector<CellId> key{obj};
    key.insert(key.end(), cells.begin(), cells.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    AdjointEquivalence e;
    if (cells.empty()) {
      e = F.iota.at(obj);
    } else if (cells.size() == 1) {
      e = identity_equivalence(B, F(1, cells[0]));
    } else {
      const std::vector<CellId> rest(cells.begin() + 1, cells.end());
      const AdjointEquivalence inner =
          whisker_equivalence(B, Side::Pre, F(1, cells[0]), phi(A.tgt(1, cells[0]), rest));
      e = compose_equivalences(B, F.chi_at(fold(A.tgt(1, cells[0]), rest), cells[0]), inner);
    }
    memo.emplace(std::move(key), e);
    return e;
  }

  std::vector<CellId> segment(const GrString& s, std::size_t lo, std::size_t hi) const {
    return {s.cells.begin() + long(lo), s.cells.begin() + long(hi)};
  }
  CellId object_at(const GrString& s, std::size_t pos) const {
    return pos == 0 ? s.from : A.tgt(1, s.cells[pos - 1]);
  }
};

[[noreturn]] void missing(const std::string& what) { fail(ErrorKind::MissingConstraint, what); }

}  // namespace

GrMap gr_map(const WeakFunctorData& F, std::shared_ptr<const GrTruncation> source,
             std::shared_ptr<const GrTruncation> target) {
  const GrTruncation& S = *source;
  const GrTruncation& T = *target;
  if (S.base().name() != F.source->name() || T.base().name() != F.target->name())
    fail(ErrorKind::NotComposable, "truncations do not match the functor " + F.name);
  if (S.bound() != T.bound()) fail(ErrorKind::Semantic, "truncation bounds differ");
  const FiniteGrayCategory& B = T.base();
  Ops b{B};
  PhiBuilder pb{F};

  GrMap M;
  M.name = "Gr(" + F.name + ")";
  M.source = source;
  M.target = target;
  M.strict = has_trivial_constraints(F);
  M.objects = F.map[0];

  auto need = [](auto opt, const char* what) {
    if (!opt) fail(ErrorKind::Incoherent, std::string("image of a ") + what + " leaves the truncation");
    return *opt;
  };
  for (StrId s = 0; s < S.strings(); ++s) {
    const GrString& X = S.string(s);
    std::vector<CellId> c;
    for (CellId f : X.cells) c.push_back(F(1, f));
    M.strings.push_back(need(T.find_string(F(0, X.from), F(0, X.to), c), "string"));
    M.icon.phi1.push_back(pb.phi(X.from, X.cells));
  }
  for (GenId g = 0; g < S.gens(); ++g) {
    const GrGen& G = S.gen(g);
    const GrString &X = S.string(G.src), &Y = S.string(G.tgt);
    const CellId obj = pb.object_at(X, G.k - 1u);
    const AdjointEquivalence ps = pb.phi(obj, pb.segment(X, G.k - 1u, G.l1));
    const AdjointEquivalence pt = pb.phi(obj, pb.segment(Y, G.k - 1u, G.l2));
    const CellId payload = b.t2(pt.bwd, b.t2(F(2, G.payload), ps.fwd));
    M.gens.push_back(
        need(T.find_gen({M.strings[G.src], M.strings[G.tgt], G.k, G.l1, G.l2, payload}), "generator"));
  }

  // φ on 2-cells: identity on identities, searched on generators, and
  // (φ_z ⊗ ev' p) ∘ (F ev z ⊗ φ_p) on a composite z ⊗ p.
  auto& phi2 = M.icon.phi2;
  std::vector<CellId> phi2_inv;
  for (Gr2Id x = 0; x < S.cells2(); ++x) {
    const GrCell2& X = S.cell2(x);
    std::vector<GenId> gs;
    for (GenId g : X.gens) gs.push_back(M.gens[g]);
    const Gr2Id mx = need(T.find_cell2(M.strings[X.src], gs), "2-cell");
    M.cells2.push_back(mx);
    CellId p;
    if (X.gens.empty()) {
      p = b.id3(M.icon.phi1[X.src].fwd);
    } else if (X.size() == 1) {
      const CellId s = b.t2(F(2, S.ev2(x)), M.icon.phi1[X.src].fwd);
      const CellId t = b.t2(M.icon.phi1[X.tgt].fwd, T.ev2(mx));
      auto w = find_invertible3(B, s, t);
      if (!w) missing("no invertible 3-cell for the icon at a generator of " + S.name());
      p = *w;
    } else {
      std::vector<GenId> head(X.gens.begin(), X.gens.end() - 1);
      const Gr2Id px = *S.find_cell2(X.src, head);
      const GenId last = X.gens.back();
      const Gr2Id zx = *S.find_cell2(S.gen(last).src, {last});
      p = b.c3(b.t32(phi2[zx], T.ev2(M.cells2[px])), b.t23(F(2, S.ev2(zx)), phi2[px]));
    }
    phi2.push_back(p);
    auto inv = invert3(B, p);
    if (!inv) missing("icon component at a 2-cell of " + S.name() + " is not invertible");
    phi2_inv.push_back(*inv);
  }
  for (CellId a = 0; a < S.objects(); ++a) M.icon.M.push_back(b.id3(F.iota.at(a).fwd));
  for (StrId f = 0; f < S.strings(); ++f)
    for (CellId c = 0; c < S.objects(); ++c)
      for (StrId g : S.strings_between(S.string(f).to, c)) {
        auto gf = S.tensor1(g, f);
        if (!gf) continue;
        const AdjointEquivalence &pg = M.icon.phi1[g], &pf = M.icon.phi1[f];
        const CellId chi = F.chi_at(S.ev1(g), S.ev1(f)).fwd;
        const CellId tgt = b.t2(chi, b.t2(b.pre(2, pg.fwd, F(1, S.ev1(f))),
                                          b.post(T.ev1(M.strings[g]), 2, pf.fwd)));
        auto w = find_invertible3(B, M.icon.phi1[*gf].fwd, tgt);
        if (!w) missing("no invertible 3-cell for the icon at a pair of strings of " + S.name());
        M.icon.Pi[{g, f}] = *w;
      }

  if (M.strict) {
    auto map3 = F.map[3];
    M.payload3 = [map3](Gr2Id, Gr2Id, CellId G) { return map3[G]; };
    return M;
  }
  // ev' x ⇛ φ•⊗φ⊗ev' x ⇛ φ•⊗F(ev x)⊗φ ⇛ φ•⊗F(ev y)⊗φ ⇛ φ•⊗φ⊗ev' y ⇛ ev' y
  std::vector<CellId> unit_inv;
  for (const auto& e : M.icon.phi1) {
    auto u = invert3(B, e.unit);
    if (!u) missing("icon unit is not invertible");
    unit_inv.push_back(*u);
  }
  struct Conj {
    WeakFunctorData F;
    std::shared_ptr<const GrTruncation> S, T;
    std::vector<AdjointEquivalence> phi1;
    std::vector<CellId> phi2, phi2_inv, unit_inv;
    std::vector<Gr2Id> cells2;
  };
  auto c = std::make_shared<Conj>(
      Conj{F, source, target, M.icon.phi1, phi2, std::move(phi2_inv), std::move(unit_inv), M.cells2});
  M.payload3 = [c](Gr2Id x, Gr2Id y, CellId G) {
    Ops o{c->T->base()};
    const GrCell2& X = c->S->cell2(x);
    const AdjointEquivalence& pt = c->phi1[X.tgt];
    const CellId ps = c->phi1[X.src].fwd;
    const CellId ex = c->T->ev2(c->cells2[x]), ey = c->T->ev2(c->cells2[y]);
    CellId r = o.t32(pt.unit, ex);
    r = o.c3(o.t23(pt.bwd, c->phi2_inv[x]), r);
    r = o.c3(o.t23(pt.bwd, o.t32(c->F(3, G), ps)), r);
    r = o.c3(o.t23(pt.bwd, c->phi2[y]), r);
    return o.c3(o.t32(c->unit_inv[X.tgt], ey), r);
  };
  return M;
}

GrMap gr_map(const GrayFunctorData& F, std::shared_ptr<const GrTruncation> source,
             std::shared_ptr<const GrTruncation> target) {
  return gr_map(weaken(F), std::move(source), std::move(target));
}

GrMap compose(const GrMap& G, const GrMap& F) {
  if (F.target.get() != G.source.get())
    fail(ErrorKind::NotComposable, G.name + " and " + F.name + " do not compose");
  GrMap M;
  M.name = G.name + "." + F.name;
  M.source = F.source;
  M.target = G.target;
  M.strict = F.strict && G.strict;
  for (CellId a : F.objects) M.objects.push_back(G.objects[a]);
  for (StrId s : F.strings) M.strings.push_back(G.strings[s]);
  for (GenId g : F.gens) M.gens.push_back(G.gens[g]);
  for (Gr2Id x : F.cells2) M.cells2.push_back(G.cells2[x]);
  auto f3 = F.payload3, g3 = G.payload3;
  auto fc = F.cells2;
  M.payload3 = [f3, g3, fc](Gr2Id x, Gr2Id y, CellId X) { return g3(fc[x], fc[y], f3(x, y, X)); };
  return M;
}

AxiomReport check_icon(const GrMap& M, const WeakFunctorData& F) {
  const GrTruncation& S = *M.source;
  const GrTruncation& T = *M.target;
  const FiniteGrayCategory& B = T.base();
  Ops b{B};
  AxiomReport rep;
  auto inv = [&](CellId x) { return is_invertible3(B, x); };
  for (StrId s = 0; s < S.strings(); ++s) {
    const AdjointEquivalence& e = M.icon.phi1.at(s);
    holds(rep, "HAT1", {{1, s}}, [&] { return validate_adjoint_equivalence(B, e); },
          "φ on a string is not an adjoint equivalence");
    law(rep, "HAT1", {{1, s}}, [&] { return std::pair{B.src(2, e.fwd), B.tgt(2, e.fwd)}; },
        [&] { return std::pair{T.ev1(M.strings[s]), F(1, S.ev1(s))}; });
  }
  for (Gr2Id x = 0; x < S.cells2(); ++x) {
    const GrCell2& X = S.cell2(x);
    const CellId p = M.icon.phi2.at(x);
    law(rep, "HAT1", {{2, x}}, [&] { return std::pair{B.src(3, p), B.tgt(3, p)}; },
        [&] {
          return std::pair{b.t2(F(2, S.ev2(x)), M.icon.phi1[X.src].fwd),
                           b.t2(M.icon.phi1[X.tgt].fwd, T.ev2(M.cells2[x]))};
        });
    holds(rep, "HAT1", {{2, x}}, [&] { return inv(p); }, "icon component is not invertible");
  }
  for (CellId a = 0; a < S.objects(); ++a) {
    const CellId m = M.icon.M.at(a);
    StrId e = *S.find_string(a, a, {});
    law(rep, "HAT1", {{0, a}}, [&] { return std::pair{B.src(3, m), B.tgt(3, m)}; },
        [&] { return std::pair{M.icon.phi1[e].fwd, F.iota.at(a).fwd}; });
    holds(rep, "HAT1", {{0, a}}, [&] { return inv(m); }, "M is not invertible");
  }
  for (const auto& [gf, p] : M.icon.Pi) {
    auto [g, f] = gf;
    law(rep, "HAT1", {{1, g}, {1, f}}, [&] { return B.src(3, p); },
        [&] { return M.icon.phi1[*S.tensor1(g, f)].fwd; });
    holds(rep, "HAT1", {{1, g}, {1, f}}, [&] { return inv(p); }, "Π is not invertible");
  }
  return rep;
}

namespace {

template <class Fn>
void for_each_3cell(const GrTruncation& T, Fn fn) {
  for (Gr2Id x = 0; x < T.cells2(); ++x)
    for (Gr2Id y : T.cells_between(T.cell2(x).src, T.cell2(x).tgt))
      for (CellId G : T.hom3(x, y)) fn(x, y, G);
}

/// ev ∘ Gr F = F ∘ ev on every cell.
void ev_square(AxiomReport& rep, const GrMap& M, const WeakFunctorData& F) {
  const GrTruncation& S = *M.source;
  const GrTruncation& T = *M.target;
  for (CellId a = 0; a < S.objects(); ++a)
    law(rep, "HAT2", {{0, a}}, [&] { return M.objects[a]; }, [&] { return F(0, a); });
  for (StrId s = 0; s < S.strings(); ++s)
    law(rep, "HAT2", {{1, s}}, [&] { return T.ev1(M.strings[s]); },
        [&] { return F(1, S.ev1(s)); });
  for (Gr2Id x = 0; x < S.cells2(); ++x)
    law(rep, "HAT2", {{2, x}}, [&] { return T.ev2(M.cells2[x]); },
        [&] { return F(2, S.ev2(x)); });
  for_each_3cell(S, [&](Gr2Id x, Gr2Id y, CellId G) {
    law(rep, "HAT2", {{3, G}}, [&] { return M.payload3(x, y, G); }, [&] { return F(3, G); });
  });
}

/// Two Gr maps agree on every cell, 3-cells included.
void same_map(AxiomReport& rep, const char* tag, const GrMap& P, const GrMap& Q) {
  law(rep, tag, {}, [&] { return P.objects; }, [&] { return Q.objects; });
  law(rep, tag, {}, [&] { return P.strings; }, [&] { return Q.strings; });
  law(rep, tag, {}, [&] { return P.gens; }, [&] { return Q.gens; });
  law(rep, tag, {}, [&] { return P.cells2; }, [&] { return Q.cells2; });
  for_each_3cell(*P.source, [&](Gr2Id x, Gr2Id y, CellId G) {
    law(rep, tag, {{3, G}}, [&] { return P.payload3(x, y, G); },
        [&] { return Q.payload3(x, y, G); });
  });
}

}  // namespace

AxiomReport check_ev_square(const GrMap& M, const WeakFunctorData& F) {
  AxiomReport rep;
  ev_square(rep, M, F);
  return rep;
}

AxiomReport compare_maps(const GrMap& P, const GrMap& Q, const char* tag) {
  AxiomReport rep;
  holds(rep, tag, {}, [&] {
    return P.source->name() == Q.source->name() && P.target->name() == Q.target->name();
  }, "different endpoints");
  if (rep.passed()) same_map(rep, tag, P, Q);
  return rep;
}

bool find_comparison_icon(const GrMap& P, const GrMap& Q, std::vector<CellId>* out) {
  if (P.strings != Q.strings) return false;
  const GrTruncation& T = *P.target;
  std::vector<CellId> w;
  for (Gr2Id x = 0; x < P.cells2.size(); ++x) {
    auto c = find_invertible3(T.base(), T.ev2(P.cells2[x]), T.ev2(Q.cells2[x]));
    if (!c) return false;
    w.push_back(*c);
  }
  if (out) *out = std::move(w);
  return true;
}

AxiomReport check_hat_properties(const WeakFunctorData& F, const WeakFunctorData& G, int bound) {
  auto TA = std::make_shared<const GrTruncation>(F.source, bound);
  auto TB = std::make_shared<const GrTruncation>(F.target, bound);
  auto TC = std::make_shared<const GrTruncation>(G.target, bound);
  const WeakFunctorData GF = compose(G, F);
  const GrMap grF = gr_map(F, TA, TB), grG = gr_map(G, TB, TC), grGF = gr_map(GF, TA, TC);

  AxiomReport rep;
  rep.merge(check_icon(grF, F));
  rep.merge(check_icon(grG, G));
  rep.merge(check_icon(grGF, GF));
  if (grF.strict) ev_square(rep, grF, F);
  if (grG.strict) ev_square(rep, grG, G);

  auto identity_map = [](const std::shared_ptr<const GrTruncation>& T) {
    GrMap I;
    I.source = I.target = T;
    for (CellId a = 0; a < T->objects(); ++a) I.objects.push_back(a);
    for (StrId s = 0; s < T->strings(); ++s) I.strings.push_back(s);
    for (GenId g = 0; g < T->gens(); ++g) I.gens.push_back(g);
    for (Gr2Id x = 0; x < T->cells2(); ++x) I.cells2.push_back(x);
    I.payload3 = [](Gr2Id, Gr2Id, CellId G) { return G; };
    return I;
  };
  for (const auto& T : {TA, TB})
    same_map(rep, "HAT3", gr_map(identity_functor(T->base_ptr()), T, T), identity_map(T));

  const GrMap grGgrF = compose(grG, grF);
  if (grF.strict && grG.strict) same_map(rep, "HAT5", grGF, grGgrF);
  rep.notes.push_back(find_comparison_icon(grGF, grGgrF, nullptr)
                          ? "HAT4: comparison icon found"
                          : "HAT4: no comparison icon within budget");
  return rep;
}

}  // namespace gray
