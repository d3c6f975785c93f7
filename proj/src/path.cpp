#include "gray/path.hpp"

#include "gray/detail/law.hpp"
#include "gray/ops.hpp"

namespace gray {

using detail::holds;
using detail::law;

std::optional<CellId> PathCategory::object_of(CellId a) const {
  auto it = objects_by_arrow.find(a);
  if (it == objects_by_arrow.end()) return std::nullopt;
  return it->second;
}

std::optional<CellId> PathCategory::find1(CellId a, CellId b, CellId s, CellId t, CellId v) const {
  auto it = index1.find({a, b, s, t, v});
  if (it == index1.end()) return std::nullopt;
  return it->second;
}

std::optional<CellId> PathCategory::find2(CellId f, CellId g, CellId s, CellId t, CellId v) const {
  auto it = index2.find({f, g, s, t, v});
  if (it == index2.end()) return std::nullopt;
  return it->second;
}

std::optional<CellId> PathCategory::find3(CellId th, CellId sg, CellId s, CellId t) const {
  auto it = index3.find({th, sg, s, t});
  if (it == index3.end()) return std::nullopt;
  return it->second;
}

namespace {

/// The (ℙk) side conditions, shared by the builder and the re-check.
struct Conditions {
  const FiniteGrayCategory& B;
  Ops o{B};

  /// Source and target of f⃗ for a 1-cell a⃗ → b⃗ with components Sf, Tf.
  std::pair<CellId, CellId> vec1(CellId a, CellId b, CellId Sf, CellId Tf) const {
    return {o.t1(b, Sf), o.t1(Tf, a)};
  }
  /// Source and target of θ⃗ for θ: f ⇒ g with components Sθ, Tθ.
  std::pair<CellId, CellId> vec2(CellId a, CellId b, CellId fv, CellId gv, CellId St,
                                 CellId Tt) const {
    return {o.t2(gv, o.post(b, 2, St)), o.t2(o.pre(2, Tt, a), fv)};
  }
  /// Both sides of the 3-cell condition.
  std::pair<CellId, CellId> eq3(CellId a, CellId b, CellId fv, CellId gv, CellId thv, CellId sgv,
                                CellId SG, CellId TG) const {
    return {o.c3(sgv, o.t23(gv, o.post(b, 3, SG))), o.c3(o.t32(o.pre(3, TG, a), fv), thv)};
  }
};

std::string tuple_name(std::initializer_list<std::string> parts) {
  std::string s = "(";
  for (const auto& p : parts) s += (s.size() > 1 ? "," : "") + p;
  return s + ")";
}

struct PathBuilder {
  PathCategory& P;
  const FiniteGrayCategory& B = *P.base;
  Ops o{B};
  Conditions cond{B};
  FiniteGrayCategory C{"P(" + B.name() + ")"};

  CellId arrow(CellId obj) const { return P.arrow(obj); }

  void objects() {
    for (CellId a = 0; a < B.count(1); ++a) {
      auto w = find_biadjoint_biequivalence_for(B, a);
      if (!w) continue;
      P.objects_by_arrow[a] = CellId(P.witness.size());
      P.witness.push_back(*w);
      C.add_object("<" + B.cell_name(1, a) + ">");
    }
  }

  void cells1() {
    const CellId n0 = CellId(P.witness.size());
    for (CellId a = 0; a < n0; ++a)
      for (CellId b = 0; b < n0; ++b) {
        const CellId av = arrow(a), bv = arrow(b);
        for (CellId Sf : B.hom1(B.src(1, av), B.src(1, bv)))
          for (CellId Tf : B.hom1(B.tgt(1, av), B.tgt(1, bv))) {
            auto [s, t] = cond.vec1(av, bv, Sf, Tf);
            for (CellId v : B.hom2(s, t)) {
              auto ae = find_adjoint_equivalence(B, v);
              if (!ae) continue;
              const CellId id = C.add_cell(
                  1, tuple_name({B.cell_name(1, Sf), B.cell_name(1, Tf), B.cell_name(2, v)}), a, b);
              P.cells1.push_back({a, b, Sf, Tf, v, *ae});
              P.index1[{a, b, Sf, Tf, v}] = id;
            }
          }
      }
    for (CellId a = 0; a < n0; ++a) {
      const CellId av = arrow(a);
      C.set_identity(1, a,
                     *P.find1(a, a, o.id1(B.src(1, av)), o.id1(B.tgt(1, av)), o.id2(av)));
    }
  }

  void cells2() {
    for (CellId f = 0; f < P.cells1.size(); ++f)
      for (CellId g = 0; g < P.cells1.size(); ++g) {
        const auto &F = P.cells1[f], &G = P.cells1[g];
        if (F.src != G.src || F.tgt != G.tgt) continue;
        const CellId av = arrow(F.src), bv = arrow(F.tgt);
        for (CellId St : B.hom2(F.S, G.S))
          for (CellId Tt : B.hom2(F.T, G.T)) {
            auto [s, t] = cond.vec2(av, bv, F.vec, G.vec, St, Tt);
            for (CellId v : B.hom3(s, t)) {
              if (!is_invertible3(B, v)) continue;
              const CellId id = C.add_cell(
                  2, tuple_name({B.cell_name(2, St), B.cell_name(2, Tt), B.cell_name(3, v)}), f, g);
              P.cells2.push_back({f, g, St, Tt, v});
              P.index2[{f, g, St, Tt, v}] = id;
            }
          }
      }
    for (CellId f = 0; f < P.cells1.size(); ++f) {
      const auto& F = P.cells1[f];
      C.set_identity(2, f, *P.find2(f, f, o.id2(F.S), o.id2(F.T), o.id3(F.vec)));
    }
  }

  void cells3() {
    for (CellId th = 0; th < P.cells2.size(); ++th)
      for (CellId sg = 0; sg < P.cells2.size(); ++sg) {
        const auto &X = P.cells2[th], &Y = P.cells2[sg];
        if (X.src != Y.src || X.tgt != Y.tgt) continue;
        const auto &F = P.cells1[X.src], &G = P.cells1[X.tgt];
        const CellId av = arrow(F.src), bv = arrow(F.tgt);
        for (CellId SG : B.hom3(X.S, Y.S))
          for (CellId TG : B.hom3(X.T, Y.T)) {
            auto [l, r] = cond.eq3(av, bv, F.vec, G.vec, X.vec, Y.vec, SG, TG);
            if (l != r) continue;
            const CellId id =
                C.add_cell(3, tuple_name({B.cell_name(3, SG), B.cell_name(3, TG)}), th, sg);
            P.cells3.push_back({th, sg, SG, TG});
            P.index3[{th, sg, SG, TG}] = id;
          }
      }
    for (CellId th = 0; th < P.cells2.size(); ++th) {
      const auto& X = P.cells2[th];
      C.set_identity(3, th, *P.find3(th, th, o.id3(X.S), o.id3(X.T)));
    }
  }

  template <class Fn>
  void entry(std::vector<CellRef> w, Fn fn) {
    try {
      if (auto r = fn()) return;
      P.build_report.add("PATH", std::move(w), "composite is not a cell of the path object");
    } catch (const Error& e) {
      P.build_report.add("PATH", std::move(w), e.what());
    }
  }

  void tables() {
    C.freeze();
    Ops c{C};
    const std::size_t n1 = P.cells1.size(), n2 = P.cells2.size(), n3 = P.cells3.size();
    // g ⊠ f with vector (Tg ⊠ f⃗) ⊗ (g⃗ ⊠ Sf)
    for (CellId g = 0; g < n1; ++g)
      for (CellId f = 0; f < n1; ++f) {
        const auto &G = P.cells1[g], &F = P.cells1[f];
        if (F.tgt != G.src) continue;
        entry({{1, g}, {1, f}}, [&]() -> std::optional<CellId> {
          auto r = P.find1(F.src, G.tgt, o.t1(G.S, F.S), o.t1(G.T, F.T),
                           o.t2(o.post(G.T, 2, F.vec), o.pre(2, G.vec, F.S)));
          if (r) {
            C.set_whisker(Side::Post, 1, g, f, *r);
            C.set_whisker(Side::Pre, 1, f, g, *r);
          }
          return r;
        });
      }
    // θ' ⊗ θ with vector (id ⊗ θ⃗) ∘ (θ⃗' ⊗ id)
    for (CellId y = 0; y < n2; ++y)
      for (CellId x = 0; x < n2; ++x) {
        const auto &Y = P.cells2[y], &X = P.cells2[x];
        if (X.tgt != Y.src) continue;
        const auto& F = P.cells1[X.src];
        const CellId av = arrow(F.src), bv = arrow(F.tgt);
        entry({{2, y}, {2, x}}, [&]() -> std::optional<CellId> {
          const CellId v =
              o.c3(o.t23(o.pre(2, Y.T, av), X.vec), o.t32(Y.vec, o.post(bv, 2, X.S)));
          auto r = P.find2(X.src, Y.tgt, o.t2(Y.S, X.S), o.t2(Y.T, X.T), v);
          if (r) C.set_tensor2(y, x, *r);
          return r;
        });
      }
    // Whiskers of 2-cells.
    for (CellId h = 0; h < n1; ++h)
      for (CellId x = 0; x < n2; ++x) {
        const auto& H = P.cells1[h];
        const auto& X = P.cells2[x];
        const auto &F = P.cells1[X.src], &G = P.cells1[X.tgt];
        if (H.src == F.tgt) {
          // h ⊠ θ: ((Th⊠θ⃗) ⊗ id_{h⃗⊠Sf}) ∘ (id_{Th⊠g⃗} ⊗ Σ_{h⃗,Sθ})
          entry({{1, h}, {2, x}}, [&]() -> std::optional<CellId> {
            const CellId v = o.c3(o.t32(o.post(H.T, 3, X.vec), o.pre(2, H.vec, F.S)),
                                  o.t23(o.post(H.T, 2, G.vec), o.sig(H.vec, X.S)));
            auto r = P.find2(c.post(h, 1, X.src), c.post(h, 1, X.tgt), o.post(H.S, 2, X.S),
                             o.post(H.T, 2, X.T), v);
            if (r) C.set_whisker(Side::Post, 2, h, x, *r);
            return r;
          });
        }
        if (H.tgt == F.src) {
          // θ ⊠ k: (Σ⁻¹_{Tθ,k⃗} ⊗ id_{f⃗⊠Sk}) ∘ (id_{Tg⊠k⃗} ⊗ (θ⃗⊠Sk))
          entry({{2, x}, {1, h}}, [&]() -> std::optional<CellId> {
            auto inv = invert3(B, o.sig(X.T, H.vec));
            if (!inv) fail(ErrorKind::Incoherent, "interchanger is not invertible");
            const CellId v = o.c3(o.t32(*inv, o.pre(2, F.vec, H.S)),
                                  o.t23(o.post(G.T, 2, H.vec), o.pre(3, X.vec, H.S)));
            auto r = P.find2(c.pre(1, X.src, h), c.pre(1, X.tgt, h), o.pre(2, X.S, H.S),
                             o.pre(2, X.T, H.T), v);
            if (r) C.set_whisker(Side::Pre, 2, h, x, *r);
            return r;
          });
        }
      }
    // 3-cells, componentwise.
    for (CellId y = 0; y < n3; ++y)
      for (CellId x = 0; x < n3; ++x) {
        const auto &Y = P.cells3[y], &X = P.cells3[x];
        if (X.tgt == Y.src)
          entry({{3, y}, {3, x}}, [&]() -> std::optional<CellId> {
            auto r = P.find3(X.src, Y.tgt, o.c3(Y.S, X.S), o.c3(Y.T, X.T));
            if (r) C.set_circ3(y, x, *r);
            return r;
          });
        if (P.cells2[X.src].tgt == P.cells2[Y.src].src)
          entry({{3, y}, {3, x}}, [&]() -> std::optional<CellId> {
            auto r = P.find3(c.t2(Y.src, X.src), c.t2(Y.tgt, X.tgt), o.t3(Y.S, X.S),
                             o.t3(Y.T, X.T));
            if (r) C.set_tensor3(y, x, *r);
            return r;
          });
      }
    for (CellId h = 0; h < n1; ++h)
      for (CellId x = 0; x < n3; ++x) {
        const auto& H = P.cells1[h];
        const auto& X = P.cells3[x];
        const auto& F = P.cells1[P.cells2[X.src].src];
        if (H.src == F.tgt)
          entry({{1, h}, {3, x}}, [&]() -> std::optional<CellId> {
            auto r = P.find3(c.post(h, 2, X.src), c.post(h, 2, X.tgt), o.post(H.S, 3, X.S),
                             o.post(H.T, 3, X.T));
            if (r) C.set_whisker(Side::Post, 3, h, x, *r);
            return r;
          });
        if (H.tgt == F.src)
          entry({{3, x}, {1, h}}, [&]() -> std::optional<CellId> {
            auto r = P.find3(c.pre(2, X.src, h), c.pre(2, X.tgt, h), o.pre(3, X.S, H.S),
                             o.pre(3, X.T, H.T));
            if (r) C.set_whisker(Side::Pre, 3, h, x, *r);
            return r;
          });
      }
    // Σ, looked up as the ℙB 3-cell with components (Σ_S, Σ_T).
    for (CellId xi = 0; xi < n2; ++xi)
      for (CellId gm = 0; gm < n2; ++gm) {
        const auto &X = P.cells2[xi], &G = P.cells2[gm];
        if (P.cells1[G.src].tgt != P.cells1[X.src].src) continue;
        entry({{2, xi}, {2, gm}}, [&]() -> std::optional<CellId> {
          auto [s, t] = interchanger_boundary(C, xi, gm);
          auto r = P.find3(s, t, o.sig(X.S, G.S), o.sig(X.T, G.T));
          if (r) C.set_sigma(xi, gm, *r);
          return r;
        });
      }
  }

  void functors() {
    auto Cp = P.cat;
    P.S = {"S", Cp, P.base, {}};
    P.T = {"T", Cp, P.base, {}};
    for (CellId a = 0; a < P.witness.size(); ++a) {
      P.S.map[0].push_back(B.src(1, arrow(a)));
      P.T.map[0].push_back(B.tgt(1, arrow(a)));
    }
    for (const auto& f : P.cells1) {
      P.S.map[1].push_back(f.S);
      P.T.map[1].push_back(f.T);
    }
    for (const auto& x : P.cells2) {
      P.S.map[2].push_back(x.S);
      P.T.map[2].push_back(x.T);
    }
    for (const auto& x : P.cells3) {
      P.S.map[3].push_back(x.S);
      P.T.map[3].push_back(x.T);
    }
    P.C = {"C", P.base, Cp, {}};
    auto need = [](std::optional<CellId> v, const std::string& what) {
      if (!v) fail(ErrorKind::Incoherent, "constant path of " + what + " is missing");
      return *v;
    };
    for (CellId a = 0; a < B.count(0); ++a)
      P.C.map[0].push_back(need(P.object_of(o.id1(a)), B.cell_name(0, a)));
    for (CellId f = 0; f < B.count(1); ++f)
      P.C.map[1].push_back(need(P.find1(P.C(0, B.src(1, f)), P.C(0, B.tgt(1, f)), f, f, o.id2(f)),
                                B.cell_name(1, f)));
    for (CellId x = 0; x < B.count(2); ++x)
      P.C.map[2].push_back(need(
          P.find2(P.C(1, B.src(2, x)), P.C(1, B.tgt(2, x)), x, x, o.id3(x)),
          B.cell_name(2, x)));
    for (CellId G = 0; G < B.count(3); ++G)
      P.C.map[3].push_back(
          need(P.find3(P.C(2, B.src(3, G)), P.C(2, B.tgt(3, G)), G, G), B.cell_name(3, G)));
  }
};

}  // namespace

PathCategory build_path(CategoryPtr B) {
  B->freeze();
  PathCategory P;
  P.base = B;
  PathBuilder pb{P};
  pb.objects();
  pb.cells1();
  pb.cells2();
  pb.cells3();
  pb.tables();
  pb.C.freeze();
  P.cat = std::make_shared<const FiniteGrayCategory>(std::move(pb.C));
  pb.functors();
  return P;
}

AxiomReport check_path_cells(const PathCategory& P) {
  const FiniteGrayCategory& B = *P.base;
  Conditions cond{B};
  AxiomReport rep;
  for (CellId a = 0; a < P.witness.size(); ++a)
    holds(rep, "PATH0", {{0, a}}, [&] { return validate_biadjoint_biequivalence(B, P.witness[a]); },
          "object witness is not a biadjoint biequivalence");
  for (CellId f = 0; f < P.cells1.size(); ++f) {
    const auto& F = P.cells1[f];
    law(rep, "PATH1", {{1, f}}, [&] { return std::pair{B.src(2, F.vec), B.tgt(2, F.vec)}; },
        [&] { return cond.vec1(P.arrow(F.src), P.arrow(F.tgt), F.S, F.T); });
    holds(rep, "PATH1", {{1, f}},
          [&] { return F.ae.fwd == F.vec && validate_adjoint_equivalence(B, F.ae); },
          "vector is not an equivalence");
  }
  for (CellId x = 0; x < P.cells2.size(); ++x) {
    const auto& X = P.cells2[x];
    const auto &F = P.cells1[X.src], &G = P.cells1[X.tgt];
    law(rep, "PATH2", {{2, x}}, [&] { return std::pair{B.src(3, X.vec), B.tgt(3, X.vec)}; },
        [&] { return cond.vec2(P.arrow(F.src), P.arrow(F.tgt), F.vec, G.vec, X.S, X.T); });
    holds(rep, "PATH2", {{2, x}}, [&] { return is_invertible3(B, X.vec); },
          "vector is not invertible");
  }
  for (CellId g = 0; g < P.cells3.size(); ++g) {
    const auto& X = P.cells3[g];
    const auto &th = P.cells2[X.src], &sg = P.cells2[X.tgt];
    const auto &F = P.cells1[th.src], &G = P.cells1[th.tgt];
    law(rep, "PATH3", {{3, g}},
        [&] {
          return cond.eq3(P.arrow(F.src), P.arrow(F.tgt), F.vec, G.vec, th.vec, sg.vec, X.S, X.T)
              .first;
        },
        [&] {
          return cond.eq3(P.arrow(F.src), P.arrow(F.tgt), F.vec, G.vec, th.vec, sg.vec, X.S, X.T)
              .second;
        });
  }
  const GrayFunctorData id = identity_functor(P.base);
  law(rep, "PC", {}, [&] { return compose(P.S, P.C).map; }, [&] { return id.map; });
  law(rep, "PC", {}, [&] { return compose(P.T, P.C).map; }, [&] { return id.map; });
  return rep;
}

GrayFunctorData path_map(const GrayFunctorData& F, const PathCategory& PA,
                         const PathCategory& PB) {
  GrayFunctorData M{"P" + F.name, PA.cat, PB.cat, {}};
  auto need = [&](std::optional<CellId> v, int d, CellId x) {
    if (!v)
      fail(ErrorKind::ImageNotInPath, "image of " + PA.cat->cell_name(d, x) + " under " + F.name +
                                          " is not a cell of " + PB.cat->name());
    return *v;
  };
  for (CellId a = 0; a < PA.witness.size(); ++a)
    M.map[0].push_back(need(PB.object_of(F(1, PA.arrow(a))), 0, a));
  for (CellId f = 0; f < PA.cells1.size(); ++f) {
    const auto& X = PA.cells1[f];
    M.map[1].push_back(
        need(PB.find1(M(0, X.src), M(0, X.tgt), F(1, X.S), F(1, X.T), F(2, X.vec)), 1, f));
  }
  for (CellId x = 0; x < PA.cells2.size(); ++x) {
    const auto& X = PA.cells2[x];
    M.map[2].push_back(
        need(PB.find2(M(1, X.src), M(1, X.tgt), F(2, X.S), F(2, X.T), F(3, X.vec)), 2, x));
  }
  for (CellId g = 0; g < PA.cells3.size(); ++g) {
    const auto& X = PA.cells3[g];
    M.map[3].push_back(need(PB.find3(M(2, X.src), M(2, X.tgt), F(3, X.S), F(3, X.T)), 3, g));
  }
  return M;
}

}  // namespace gray
