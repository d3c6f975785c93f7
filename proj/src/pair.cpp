#include "gray/ops.hpp"
#include "gray/path.hpp"

namespace gray {

Tritransformation identity_tritransformation(const GrayFunctorData& F, const PathCategory& PB) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *PB.base;
  Ops a{A}, b{B};
  Tritransformation t;
  for (CellId x = 0; x < A.count(0); ++x) {
    t.alpha0.push_back(b.id1(F(0, x)));
    t.M.push_back(b.id3(b.id2(b.id1(F(0, x)))));
  }
  for (CellId f = 0; f < A.count(1); ++f) t.alpha1.push_back(identity_equivalence(B, F(1, f)));
  for (CellId g = 0; g < A.count(1); ++g)
    for (CellId f = 0; f < A.count(1); ++f)
      if (A.src(1, g) == A.tgt(1, f)) t.Pi[{g, f}] = b.id3(b.id2(F(1, a.t1(g, f))));
  for (CellId x = 0; x < A.count(2); ++x) t.alpha2.push_back(b.id3(F(2, x)));
  return t;
}

namespace {

[[noreturn]] void axiom(const std::string& which, const std::string& where) {
  fail(ErrorKind::AxiomFail, which + " fails at " + where);
}

}  // namespace

WeakFunctorData pair_functor(const GrayFunctorData& F, const GrayFunctorData& G,
                             const Tritransformation& alpha, const PathCategory& PB) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *PB.base;
  const FiniteGrayCategory& P = *PB.cat;
  Ops a{A}, b{B}, p{P};
  WeakFunctorData W;
  W.name = "<" + F.name + "," + G.name + ">";
  W.source = F.source;
  W.target = PB.cat;
  auto name = [&](int d, CellId x) { return A.cell_name(d, x); };

  for (CellId x = 0; x < A.count(0); ++x) {
    auto o = PB.object_of(alpha.alpha0.at(x));
    if (!o || B.src(1, alpha.alpha0[x]) != F(0, x) || B.tgt(1, alpha.alpha0[x]) != G(0, x))
      axiom("boundary of α", name(0, x));
    W.map[0].push_back(*o);
  }
  for (CellId f = 0; f < A.count(1); ++f) {
    auto c = PB.find1(W(0, A.src(1, f)), W(0, A.tgt(1, f)), F(1, f), G(1, f),
                      alpha.alpha1.at(f).fwd);
    if (!c) axiom("boundary of α", name(1, f));
    W.map[1].push_back(*c);
  }
  for (CellId x = 0; x < A.count(2); ++x) {
    auto c = PB.find2(W(1, A.src(2, x)), W(1, A.tgt(2, x)), F(2, x), G(2, x), alpha.alpha2.at(x));
    if (!c) axiom("boundary of α", name(2, x));
    W.map[2].push_back(*c);
  }
  for (CellId x = 0; x < A.count(3); ++x) {
    auto c = PB.find3(W(2, A.src(3, x)), W(2, A.tgt(3, x)), F(3, x), G(3, x));
    if (!c) axiom("naturality of α", name(3, x));
    W.map[3].push_back(*c);
  }
  // Identities and ⊗ inside each hom are preserved exactly.
  for (CellId f = 0; f < A.count(1); ++f)
    if (W(2, a.id2(f)) != p.id2(W(1, f))) axiom("naturality of α", "the identity on " + name(1, f));
  for (CellId y = 0; y < A.count(2); ++y)
    for (CellId x = 0; x < A.count(2); ++x)
      if (A.tgt(2, x) == A.src(2, y) && W(2, a.t2(y, x)) != p.t2(W(2, y), W(2, x)))
        axiom("naturality of α", name(2, y) + " ⊗ " + name(2, x));

  // χ and ι: 2-cells of ℙB with identity components.
  for (const auto& [gf, pi] : alpha.Pi) {
    auto [g, f] = gf;
    auto inv = invert3(B, pi);
    if (!inv) axiom("invertibility of Π", name(1, g) + ", " + name(1, f));
    auto c = PB.find2(p.t1(W(1, g), W(1, f)), W(1, a.t1(g, f)), b.id2(b.t1(F(1, g), F(1, f))),
                      b.id2(b.t1(G(1, g), G(1, f))), *inv);
    if (!c) axiom("boundary of Π", name(1, g) + ", " + name(1, f));
    auto e = find_adjoint_equivalence(P, *c);
    if (!e) axiom("invertibility of Π", name(1, g) + ", " + name(1, f));
    W.chi[gf] = *e;
  }
  for (CellId x = 0; x < A.count(0); ++x) {
    const CellId ida = a.id1(x);
    auto c = PB.find2(p.id1(W(0, x)), W(1, ida), b.id2(F(1, ida)), b.id2(G(1, ida)),
                      alpha.M.at(x));
    if (!c) axiom("boundary of M", name(0, x));
    auto e = find_adjoint_equivalence(P, *c);
    if (!e) axiom("invertibility of M", name(0, x));
    W.iota.push_back(*e);
  }
  for (CellId g = 0; g < A.count(1); ++g)
    for (CellId f = 0; f < A.count(1); ++f)
      if (A.src(1, g) == A.tgt(1, f) && !W.chi.count({g, f}))
        axiom("boundary of Π", "missing component " + name(1, g) + ", " + name(1, f));

  // The 3-cell constraints have identity components; they exist exactly when
  // the vectors of their boundaries agree.
  auto constant3 = [&](std::pair<CellId, CellId> st) -> std::optional<CellId> {
    const auto& X = PB.cells2[st.first];
    return PB.find3(st.first, st.second, b.id3(X.S), b.id3(X.T));
  };
  for (CellId s = 0; s < A.count(2); ++s)
    for (CellId t = 0; t < A.count(2); ++t) {
      if (A.src_obj(2, s) != A.tgt_obj(2, t)) continue;
      auto c = constant3(chi_nat_boundary(W, s, t));
      if (!c) axiom("naturality of Π", name(2, s) + ", " + name(2, t));
      W.chi_nat[{s, t}] = *c;
    }
  for (CellId h = 0; h < A.count(1); ++h)
    for (CellId g = 0; g < A.count(1); ++g)
      for (CellId f = 0; f < A.count(1); ++f) {
        if (A.src(1, h) != A.tgt(1, g) || A.src(1, g) != A.tgt(1, f)) continue;
        auto c = constant3(omega_boundary(W, h, g, f));
        if (!c) axiom("associativity of Π", name(1, h) + ", " + name(1, g) + ", " + name(1, f));
        W.omega[{h, g, f}] = *c;
      }
  for (CellId f = 0; f < A.count(1); ++f) {
    auto l = constant3(gamma_boundary(W, f));
    if (!l) axiom("left unitality", name(1, f));
    W.gamma[f] = *l;
    auto r = constant3(delta_boundary(W, f));
    if (!r) axiom("right unitality", name(1, f));
    W.delta[f] = *r;
  }

  for (int d = 0; d <= 3; ++d) {
    for (CellId x = 0; x < A.count(d); ++x) {
      if (PB.S(d, W(d, x)) != F(d, x)) axiom("projection S", name(d, x));
      if (PB.T(d, W(d, x)) != G(d, x)) axiom("projection T", name(d, x));
    }
  }
  return W;
}

}  // namespace gray
