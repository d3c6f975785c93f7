#include "gray/weak.hpp"

#include "gray/detail/law.hpp"
#include "gray/fixtures.hpp"
#include "gray/ops.hpp"

namespace gray {

using detail::holds;
using detail::law;
using detail::r0;
using detail::r1;
using detail::r2;
using detail::r3;

const AdjointEquivalence& WeakFunctorData::chi_at(CellId g, CellId f) const {
  auto it = chi.find({g, f});
  if (it == chi.end())
    fail(ErrorKind::MissingConstraint,
         "no chi entry for (" + source->cell_name(1, g) + ", " + source->cell_name(1, f) + ")");
  return it->second;
}

namespace {

AdjointEquivalence trivial_ae(const FiniteGrayCategory& B, CellId one) {
  Ops o{B};
  CellId x = o.id2(one);
  CellId X = o.id3(x);
  return {x, x, X, X};
}

bool composable1(const FiniteGrayCategory& A, CellId g, CellId f) {
  return A.tgt(1, f) == A.src(1, g);
}

bool whiskerable2(const FiniteGrayCategory& A, CellId sigma, CellId theta) {
  return A.tgt(1, A.src(2, theta)) == A.src(1, A.src(2, sigma));
}

}  // namespace

WeakFunctorData weaken(const GrayFunctorData& F) {
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  A.freeze();
  B.freeze();
  Ops a{A}, b{B};
  WeakFunctorData W{F.name, F.source, F.target, F.map, {}, {}, {}, {}, {}, {}};
  for (CellId g = 0; g < A.count(1); ++g)
    for (CellId f = 0; f < A.count(1); ++f)
      if (composable1(A, g, f)) W.chi[{g, f}] = trivial_ae(B, F(1, a.t1(g, f)));
  for (CellId x = 0; x < A.count(0); ++x) W.iota.push_back(trivial_ae(B, F(1, a.id1(x))));
  for (CellId s = 0; s < A.count(2); ++s)
    for (CellId t = 0; t < A.count(2); ++t)
      if (whiskerable2(A, s, t))
        W.chi_nat[{s, t}] = b.id3(F(2, a.t2(a.pre(2, s, A.tgt(2, t)), a.post(A.src(2, s), 2, t))));
  for (CellId h = 0; h < A.count(1); ++h)
    for (CellId g = 0; g < A.count(1); ++g)
      for (CellId f = 0; f < A.count(1); ++f)
        if (composable1(A, h, g) && composable1(A, g, f))
          W.omega[{h, g, f}] = b.id3(b.id2(F(1, a.t1(h, g, f))));
  for (CellId f = 0; f < A.count(1); ++f) {
    W.gamma[f] = b.id3(b.id2(F(1, f)));
    W.delta[f] = b.id3(b.id2(F(1, f)));
  }
  return W;
}

GrayFunctorData underlying(const WeakFunctorData& W) {
  return {W.name, W.source, W.target, W.map};
}

bool has_trivial_constraints(const WeakFunctorData& W) {
  const FiniteGrayCategory& B = *W.target;
  auto id2 = [&](CellId x) { return B.is_identity(2, x); };
  auto id3 = [&](CellId x) { return B.is_identity(3, x); };
  for (const auto& [k, e] : W.chi)
    if (!id2(e.fwd) || !id2(e.bwd)) return false;
  for (const auto& e : W.iota)
    if (!id2(e.fwd) || !id2(e.bwd)) return false;
  for (const auto& [k, x] : W.chi_nat)
    if (!id3(x)) return false;
  for (const auto& [k, x] : W.omega)
    if (!id3(x)) return false;
  for (const auto& [k, x] : W.gamma)
    if (!id3(x)) return false;
  for (const auto& [k, x] : W.delta)
    if (!id3(x)) return false;
  return true;
}

std::pair<CellId, CellId> chi_nat_boundary(const WeakFunctorData& W, CellId sigma,
                                           CellId theta) {
  const FiniteGrayCategory& A = *W.source;
  Ops a{A}, b{*W.target};
  const CellId g = A.src(2, sigma), g2 = A.tgt(2, sigma);
  const CellId f = A.src(2, theta), f2 = A.tgt(2, theta);
  const CellId st = a.t2(a.pre(2, sigma, f2), a.post(g, 2, theta));
  const CellId Fst = b.t2(b.pre(2, W(2, sigma), W(1, f2)), b.post(W(1, g), 2, W(2, theta)));
  return {b.t2(W.chi_at(g2, f2).fwd, Fst), b.t2(W(2, st), W.chi_at(g, f).fwd)};
}

std::pair<CellId, CellId> omega_boundary(const WeakFunctorData& W, CellId h, CellId g,
                                         CellId f) {
  Ops a{*W.source}, b{*W.target};
  const CellId hg = a.t1(h, g), gf = a.t1(g, f);
  return {b.t2(W.chi_at(hg, f).fwd, b.pre(2, W.chi_at(h, g).fwd, W(1, f))),
          b.t2(W.chi_at(h, gf).fwd, b.post(W(1, h), 2, W.chi_at(g, f).fwd))};
}

std::pair<CellId, CellId> gamma_boundary(const WeakFunctorData& W, CellId f) {
  const FiniteGrayCategory& A = *W.source;
  Ops a{A}, b{*W.target};
  const CellId bo = A.tgt(1, f);
  return {b.t2(W.chi_at(a.id1(bo), f).fwd, b.pre(2, W.iota.at(bo).fwd, W(1, f))),
          b.id2(W(1, f))};
}

std::pair<CellId, CellId> delta_boundary(const WeakFunctorData& W, CellId f) {
  const FiniteGrayCategory& A = *W.source;
  Ops a{A}, b{*W.target};
  const CellId ao = A.src(1, f);
  return {b.id2(W(1, f)),
          b.t2(W.chi_at(f, a.id1(ao)).fwd, b.post(W(1, f), 2, W.iota.at(ao).fwd))};
}

void complete_constraints(WeakFunctorData& W) {
  const FiniteGrayCategory& A = *W.source;
  const FiniteGrayCategory& B = *W.target;
  A.freeze();
  B.freeze();
  auto first_inv = [&](std::pair<CellId, CellId> st) -> CellId {
    return find_invertible3(B, st.first, st.second).value_or(kNoCell);
  };
  auto fill = [&](auto& table, auto key, auto bdry) {
    if (table.count(key)) return;
    try {
      CellId x = first_inv(bdry());
      if (x != kNoCell) table[key] = x;
    } catch (const Error&) {
    }
  };
  for (CellId s = 0; s < A.count(2); ++s)
    for (CellId t = 0; t < A.count(2); ++t)
      if (whiskerable2(A, s, t))
        fill(W.chi_nat, std::pair{s, t}, [&] { return chi_nat_boundary(W, s, t); });
  for (CellId h = 0; h < A.count(1); ++h)
    for (CellId g = 0; g < A.count(1); ++g)
      for (CellId f = 0; f < A.count(1); ++f)
        if (composable1(A, h, g) && composable1(A, g, f))
          fill(W.omega, std::array{h, g, f}, [&] { return omega_boundary(W, h, g, f); });
  for (CellId f = 0; f < A.count(1); ++f) {
    fill(W.gamma, f, [&] { return gamma_boundary(W, f); });
    fill(W.delta, f, [&] { return delta_boundary(W, f); });
  }
}

namespace {

AdjointEquivalence map_equivalence(const WeakFunctorData& G, const AdjointEquivalence& e) {
  return {G(2, e.fwd), G(2, e.bwd), G(3, e.unit), G(3, e.counit)};
}

}  // namespace

WeakFunctorData compose(const WeakFunctorData& G, const WeakFunctorData& F) {
  if (F.target->name() != G.source->name())
    fail(ErrorKind::NotComposable, "functors " + G.name + " and " + F.name + " do not compose");
  const FiniteGrayCategory& C = *G.target;
  C.freeze();
  WeakFunctorData W{G.name + "." + F.name, F.source, G.target, {}, {}, {}, {}, {}, {}, {}};
  for (int d = 0; d <= 3; ++d)
    for (CellId x : F.map[d]) W.map[d].push_back(G(d, x));
  for (const auto& [gf, e] : F.chi)
    W.chi[gf] = compose_equivalences(C, map_equivalence(G, e),
                                     G.chi_at(F(1, gf.first), F(1, gf.second)));
  for (CellId a = 0; a < F.iota.size(); ++a)
    W.iota.push_back(compose_equivalences(C, map_equivalence(G, F.iota[a]), G.iota.at(F(0, a))));
  complete_constraints(W);
  return W;
}

WeakFunctorData compose(const GrayFunctorData& G, const WeakFunctorData& F) {
  return compose(weaken(G), F);
}

AxiomReport check_weak_functor(const WeakFunctorData& W) {
  const FiniteGrayCategory& A = *W.source;
  const FiniteGrayCategory& B = *W.target;
  A.freeze();
  B.freeze();
  Ops a{A}, b{B};
  AxiomReport rep;

  // Cell maps and their boundaries.
  for (int d = 0; d <= 3; ++d) {
    if (W.map[d].size() != A.count(d)) {
      rep.add("BOUNDARY", {}, "map for dimension " + std::to_string(d) + " has wrong length");
      return rep;
    }
    for (CellId x = 0; x < A.count(d); ++x)
      holds(rep, "BOUNDARY", {{d, x}}, [&] {
        CellId y = W(d, x);
        if (y >= B.count(d)) return false;
        return d == 0 || (B.src(d, y) == W(d - 1, A.src(d, x)) &&
                          B.tgt(d, y) == W(d - 1, A.tgt(d, x)));
      });
  }
  if (!rep.passed()) return rep;

  // Local strictness.
  for (int d = 2; d <= 3; ++d)
    for (CellId lo = 0; lo < A.count(d - 1); ++lo) {
      CellId i = A.identity(d, lo);
      if (i == kNoCell) continue;
      law(rep, "LOCAL", {{d, i}}, [&] { return W(d, i); },
          [&] { return b.need(B.identity(d, W(d - 1, lo)), d - 1, W(d - 1, lo)); });
    }
  for (CellId y = 0; y < A.count(2); ++y)
    for (CellId x = 0; x < A.count(2); ++x)
      if (A.tgt(2, x) == A.src(2, y))
        law(rep, "LOCAL", {r2(y), r2(x)}, [&] { return W(2, a.t2(y, x)); },
            [&] { return b.t2(W(2, y), W(2, x)); });
  for (CellId Y = 0; Y < A.count(3); ++Y)
    for (CellId X = 0; X < A.count(3); ++X) {
      if (A.tgt(3, X) == A.src(3, Y))
        law(rep, "LOCAL", {r3(Y), r3(X)}, [&] { return W(3, a.c3(Y, X)); },
            [&] { return b.c3(W(3, Y), W(3, X)); });
      if (A.tgt(2, A.src(3, X)) == A.src(2, A.src(3, Y)))
        law(rep, "LOCAL", {r3(Y), r3(X)}, [&] { return W(3, a.t3(Y, X)); },
            [&] { return b.t3(W(3, Y), W(3, X)); });
    }

  // 2-cell constraints with adjoint data.
  for (CellId g = 0; g < A.count(1); ++g)
    for (CellId f = 0; f < A.count(1); ++f) {
      if (!composable1(A, g, f)) continue;
      auto it = W.chi.find({g, f});
      if (it == W.chi.end()) {
        rep.add("MISSING", {r1(g), r1(f)}, "chi");
        continue;
      }
      holds(rep, "CHI", {r1(g), r1(f)}, [&] {
        const auto& e = it->second;
        return B.src(2, e.fwd) == b.t1(W(1, g), W(1, f)) &&
               B.tgt(2, e.fwd) == W(1, a.t1(g, f)) && validate_adjoint_equivalence(B, e);
      });
    }
  if (W.iota.size() != A.count(0)) {
    rep.add("MISSING", {}, "iota has wrong length");
  } else {
    for (CellId x = 0; x < A.count(0); ++x)
      holds(rep, "IOTA", {r0(x)}, [&] {
        const auto& e = W.iota[x];
        return B.src(2, e.fwd) == b.id1(W(0, x)) && B.tgt(2, e.fwd) == W(1, a.id1(x)) &&
               validate_adjoint_equivalence(B, e);
      });
  }
  if (!rep.passed()) return rep;

  // 3-cell constraints.
  auto three = [&](const char* tag, std::vector<CellRef> w, auto& table, auto key, auto bdry) {
    auto it = table.find(key);
    if (it == table.end()) {
      rep.add("MISSING", std::move(w), tag);
      return;
    }
    holds(rep, tag, std::move(w), [&] {
      auto [s, t] = bdry();
      CellId x = it->second;
      return x < B.count(3) && B.src(3, x) == s && B.tgt(3, x) == t && is_invertible3(B, x);
    });
  };
  for (CellId s = 0; s < A.count(2); ++s)
    for (CellId t = 0; t < A.count(2); ++t)
      if (whiskerable2(A, s, t))
        three("CHI_NAT", {r2(s), r2(t)}, W.chi_nat, std::pair{s, t},
              [&] { return chi_nat_boundary(W, s, t); });
  for (CellId h = 0; h < A.count(1); ++h)
    for (CellId g = 0; g < A.count(1); ++g)
      for (CellId f = 0; f < A.count(1); ++f)
        if (composable1(A, h, g) && composable1(A, g, f))
          three("OMEGA", {r1(h), r1(g), r1(f)}, W.omega, std::array{h, g, f},
                [&] { return omega_boundary(W, h, g, f); });
  for (CellId f = 0; f < A.count(1); ++f) {
    three("GAMMA", {r1(f)}, W.gamma, f, [&] { return gamma_boundary(W, f); });
    three("DELTA", {r1(f)}, W.delta, f, [&] { return delta_boundary(W, f); });
  }
  return rep;
}

namespace fixtures {

std::vector<WeakFunctorData> weak_functors() {
  std::vector<WeakFunctorData> out;
  auto ch = std::make_shared<const FiniteGrayCategory>(chaotic2());
  auto w = weaken(identity_functor(ch));
  w.name = "chaotic2-weak-id";
  out.push_back(std::move(w));

  auto z = std::make_shared<const FiniteGrayCategory>(z2());
  z->freeze();
  WeakFunctorData t{"z2-twisted", z, z, identity_functor(z).map, {}, {}, {}, {}, {}, {}};
  const CellId i = *z->find(1, "1*"), s = *z->find(2, "s");
  const auto e = *find_adjoint_equivalence(*z, s);
  t.chi[{i, i}] = e;
  t.iota.push_back(e);
  complete_constraints(t);
  out.push_back(std::move(t));
  return out;
}

}  // namespace fixtures
}  // namespace gray
