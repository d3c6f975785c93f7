#include "gray/axioms.hpp"

#include <functional>

#include "gray/detail/law.hpp"
#include "gray/ops.hpp"
#include "gray/search.hpp"

namespace gray {

namespace {

using detail::law;
using detail::r0;
using detail::r1;
using detail::r2;
using detail::r3;

struct Checker {
  const FiniteGrayCategory& C;
  Ops o{C};
  std::size_t n0 = C.count(0), n1 = C.count(1), n2 = C.count(2), n3 = C.count(3);

  // boundaries of cells one level down
  CellId s1(CellId f) const { return C.src(1, f); }
  CellId t1(CellId f) const { return C.tgt(1, f); }
  CellId s2(CellId x) const { return C.src(2, x); }
  CellId t2(CellId x) const { return C.tgt(2, x); }
  CellId s3(CellId X) const { return C.src(3, X); }
  CellId t3(CellId X) const { return C.tgt(3, X); }

  CellId src_obj(int d, CellId x) const { return C.src_obj(d, x); }
  CellId tgt_obj(int d, CellId x) const { return C.tgt_obj(d, x); }
  std::size_t count(int d) const { return C.count(d); }

  // -------------------------------------------------------------------------
  // BOUNDARY / GAP: every table entry has the right shape, and every
  // composable tuple has an entry.

  void entry(AxiomReport& rep, const char* what, std::vector<CellRef> w, int rdim, CellId r,
             bool composable, CellId want_s, CellId want_t) {
    ++rep.checked;
    if (!composable) {
      if (r != kNoCell) rep.add("BOUNDARY", std::move(w), std::string(what) + " on non-composable pair");
      return;
    }
    if (r == kNoCell) {
      rep.add("GAP", std::move(w), std::string("missing ") + what);
      return;
    }
    if (r >= count(rdim)) {
      rep.add("BOUNDARY", std::move(w), std::string(what) + " names an undeclared cell");
      return;
    }
    CellId rs = rdim == 0 ? r : (rdim == 1 ? s1(r) : rdim == 2 ? s2(r) : s3(r));
    CellId rt = rdim == 0 ? r : (rdim == 1 ? t1(r) : rdim == 2 ? t2(r) : t3(r));
    if (rs != want_s || rt != want_t)
      rep.add("BOUNDARY", std::move(w), std::string(what) + " has wrong boundary");
  }

  // Expected boundary of w ⊠ x / x ⊠ w, one level down. Throws when the
  // lower whiskers are themselves missing.
  std::pair<CellId, CellId> whisker_bdry(Side side, CellId w, int d, CellId x) const {
    if (d == 1) {
      return side == Side::Post ? std::pair{s1(x), t1(w)} : std::pair{s1(w), t1(x)};
    }
    CellId xs = C.src(d, x), xt = C.tgt(d, x);
    return {whisker(C, side, w, d - 1, xs), whisker(C, side, w, d - 1, xt)};
  }

  void tables(std::size_t i, AxiomReport& rep) {
    // row i of every table, rows being the first key
    if (i < n2) {
      CellId y = CellId(i);
      for (CellId x = 0; x < n2; ++x) {
        entry(rep, "⊗ entry", {r2(y), r2(x)}, 2, C.tensor2(y, x), t2(x) == s2(y), s2(x), t2(y));
        bool sc = t1(s2(x)) == s1(s2(y));  // ξ = y in C(b,c), γ = x in C(a,b)
        if (!sc) {
          entry(rep, "Σ entry", {r2(y), r2(x)}, 3, C.sigma(y, x), false, 0, 0);
        } else {
          try {
            auto [bs, bt] = interchanger_boundary(C, y, x);
            entry(rep, "Σ entry", {r2(y), r2(x)}, 3, C.sigma(y, x), true, bs, bt);
          } catch (const Error& e) {
            rep.add(e.kind() == ErrorKind::TableGap ? "GAP" : "BOUNDARY", {r2(y), r2(x)},
                    std::string("Σ boundary: ") + e.what());
          }
        }
      }
    }
    if (i < n3) {
      CellId Y = CellId(i);
      for (CellId X = 0; X < n3; ++X) {
        entry(rep, "∘ entry", {r3(Y), r3(X)}, 3, C.circ3(Y, X), t3(X) == s3(Y), s3(X), t3(Y));
        bool hc = t2(s3(X)) == s2(s3(Y));
        if (!hc) {
          entry(rep, "⊗3 entry", {r3(Y), r3(X)}, 3, C.tensor3(Y, X), false, 0, 0);
        } else {
          try {
            CellId bs = o.t2(s3(Y), s3(X)), bt = o.t2(t3(Y), t3(X));
            entry(rep, "⊗3 entry", {r3(Y), r3(X)}, 3, C.tensor3(Y, X), true, bs, bt);
          } catch (const Error& e) {
            rep.add(e.kind() == ErrorKind::TableGap ? "GAP" : "BOUNDARY", {r3(Y), r3(X)},
                    std::string("⊗3 boundary: ") + e.what());
          }
        }
      }
    }
    if (i < n1) {
      CellId w = CellId(i);
      for (int side = 0; side < 2; ++side) {
        Side sd = Side(side);
        const char* nm = sd == Side::Post ? "post-whisker" : "pre-whisker";
        for (int d = 1; d <= 3; ++d) {
          for (CellId x = 0; x < count(d); ++x) {
            bool ok = sd == Side::Post ? s1(w) == tgt_obj(d, x) : t1(w) == src_obj(d, x);
            CellId r = C.whisker(sd, d, w, x);
            if (!ok) {
              entry(rep, nm, {r1(w), {d, x}}, d, r, false, 0, 0);
              continue;
            }
            try {
              auto [bs, bt] = whisker_bdry(sd, w, d, x);
              entry(rep, nm, {r1(w), {d, x}}, d, r, true, bs, bt);
            } catch (const Error& e) {
              rep.add(e.kind() == ErrorKind::TableGap ? "GAP" : "BOUNDARY", {r1(w), {d, x}},
                      std::string(nm) + ": " + e.what());
            }
          }
        }
      }
    }
    if (i < n0) {
      CellId a = CellId(i);
      ++rep.checked;
      if (C.identity(1, a) == kNoCell) rep.add("GAP", {r0(a)}, "missing identity 1-cell");
    }
    if (i < n1) {
      ++rep.checked;
      if (C.identity(2, CellId(i)) == kNoCell) rep.add("GAP", {r1(CellId(i))}, "missing identity 2-cell");
    }
    if (i < n2) {
      ++rep.checked;
      if (C.identity(3, CellId(i)) == kNoCell) rep.add("GAP", {r2(CellId(i))}, "missing identity 3-cell");
    }
  }

  // -------------------------------------------------------------------------
  // HOM: each C(a,b) is a strict 2-category.

  void hom(std::size_t i, AxiomReport& rep) {
    if (i < n2) {
      CellId x = CellId(i);
      law(rep, "HOM", {r2(x)}, [&] { return o.t2(o.id2(t2(x)), x); }, [&] { return x; });
      law(rep, "HOM", {r2(x)}, [&] { return o.t2(x, o.id2(s2(x))); }, [&] { return x; });
      for (CellId y = 0; y < n2; ++y) {
        if (s2(y) != t2(x)) continue;
        law(rep, "HOM", {r2(y), r2(x)}, [&] { return o.t3(o.id3(y), o.id3(x)); },
            [&] { return o.id3(o.t2(y, x)); });
        for (CellId z = 0; z < n2; ++z) {
          if (s2(z) != t2(y)) continue;
          law(rep, "HOM", {r2(z), r2(y), r2(x)}, [&] { return o.t2(o.t2(z, y), x); },
              [&] { return o.t2(z, o.t2(y, x)); });
        }
      }
    }
    if (i < n3) {
      CellId X = CellId(i);
      law(rep, "HOM", {r3(X)}, [&] { return o.c3(o.id3(t3(X)), X); }, [&] { return X; });
      law(rep, "HOM", {r3(X)}, [&] { return o.c3(X, o.id3(s3(X))); }, [&] { return X; });
      // horizontal units: identity on the identity 2-cell of the boundary 1-cells
      law(rep, "HOM", {r3(X)}, [&] { return o.t3(o.id3(o.id2(t2(s3(X)))), X); },
          [&] { return X; });
      law(rep, "HOM", {r3(X)}, [&] { return o.t3(X, o.id3(o.id2(s2(s3(X))))); },
          [&] { return X; });
      for (CellId Y = 0; Y < n3; ++Y) {
        if (s3(Y) == t3(X)) {
          for (CellId Z = 0; Z < n3; ++Z) {
            if (s3(Z) != t3(Y)) continue;
            law(rep, "HOM", {r3(Z), r3(Y), r3(X)}, [&] { return o.c3(o.c3(Z, Y), X); },
                [&] { return o.c3(Z, o.c3(Y, X)); });
          }
        }
        if (t2(s3(X)) == s2(s3(Y))) {
          for (CellId Z = 0; Z < n3; ++Z) {
            if (t2(s3(Y)) != s2(s3(Z))) continue;
            law(rep, "HOM", {r3(Z), r3(Y), r3(X)}, [&] { return o.t3(o.t3(Z, Y), X); },
                [&] { return o.t3(Z, o.t3(Y, X)); });
          }
          // interchange (Y'∘Y)⊗(X'∘X) = (Y'⊗X')∘(Y⊗X) with X: ξ⇛ξ', Y: ζ⇛ζ'
          for (CellId X2 = 0; X2 < n3; ++X2) {
            if (s3(X2) != t3(X)) continue;
            for (CellId Y2 = 0; Y2 < n3; ++Y2) {
              if (s3(Y2) != t3(Y)) continue;
              law(rep, "HOM", {r3(Y2), r3(Y), r3(X2), r3(X)},
                  [&] { return o.t3(o.c3(Y2, Y), o.c3(X2, X)); },
                  [&] { return o.c3(o.t3(Y2, X2), o.t3(Y, X)); });
            }
          }
        }
      }
    }
  }

  // -------------------------------------------------------------------------
  // D4: w_* and w^* are strict 2-functors; D5: Σ invertible.

  void d4(std::size_t i, AxiomReport& rep) {
    if (i >= n1) return;
    CellId w = CellId(i);
    for (int side = 0; side < 2; ++side) {
      Side sd = Side(side);
      auto wh = [&](int d, CellId x) { return whisker(C, sd, w, d, x); };
      auto fits = [&](int d, CellId x) {
        return sd == Side::Post ? s1(w) == tgt_obj(d, x) : t1(w) == src_obj(d, x);
      };
      for (CellId f = 0; f < n1; ++f) {
        if (!fits(1, f)) continue;
        law(rep, "D4", {r1(w), r1(f)}, [&] { return wh(2, o.id2(f)); },
            [&] { return o.id2(wh(1, f)); });
      }
      for (CellId x = 0; x < n2; ++x) {
        if (!fits(2, x)) continue;
        law(rep, "D4", {r1(w), r2(x)}, [&] { return wh(3, o.id3(x)); },
            [&] { return o.id3(wh(2, x)); });
        for (CellId y = 0; y < n2; ++y) {
          if (s2(y) != t2(x)) continue;
          law(rep, "D4", {r1(w), r2(y), r2(x)}, [&] { return wh(2, o.t2(y, x)); },
              [&] { return o.t2(wh(2, y), wh(2, x)); });
        }
      }
      for (CellId X = 0; X < n3; ++X) {
        if (!fits(3, X)) continue;
        for (CellId Y = 0; Y < n3; ++Y) {
          if (s3(Y) == t3(X))
            law(rep, "D4", {r1(w), r3(Y), r3(X)}, [&] { return wh(3, o.c3(Y, X)); },
                [&] { return o.c3(wh(3, Y), wh(3, X)); });
          if (t2(s3(X)) == s2(s3(Y)))
            law(rep, "D4", {r1(w), r3(Y), r3(X)}, [&] { return wh(3, o.t3(Y, X)); },
                [&] { return o.t3(wh(3, Y), wh(3, X)); });
        }
      }
    }
  }

  void d5(std::size_t i, AxiomReport& rep) {
    if (i >= n2) return;
    CellId xi = CellId(i);
    for (CellId g = 0; g < n2; ++g) {
      if (t1(s2(g)) != s1(s2(xi))) continue;
      ++rep.checked;
      CellId S = C.sigma(xi, g);
      if (S == kNoCell || S >= n3) continue;  // reported by the table pass
      if (!is_invertible3(C, S)) rep.add("D5", {r2(xi), r2(g)}, "Σ not invertible");
    }
  }

  // -------------------------------------------------------------------------
  // C1, C2: ⊠ on 1-cells is well defined, unital, associative; whiskering
  // by identities is trivial and whiskering is associative.

  void c12(std::size_t i, AxiomReport& rep) {
    if (i >= n1) return;
    CellId g = CellId(i);
    for (CellId f = 0; f < n1; ++f) {
      if (t1(f) != s1(g)) continue;
      ++rep.checked;
      CellId post = C.whisker(Side::Post, 1, g, f), pre = C.whisker(Side::Pre, 1, f, g);
      if (post == kNoCell || pre == kNoCell)
        rep.add("GAP", {r1(g), r1(f)}, "missing 1-cell whisker");
      else if (post != pre)
        rep.add("C1", {r1(g), r1(f)}, "pre- and post-whisker readings differ");
    }
    // units on 1-cells
    law(rep, "C2", {r1(g)}, [&] { return o.t1(o.id1(t1(g)), g); }, [&] { return g; });
    law(rep, "C2", {r1(g)}, [&] { return o.t1(g, o.id1(s1(g))); }, [&] { return g; });
    // (id_b)_* = id, (id_a)^* = id on 2- and 3-cells
    if (i < n0) {
      CellId a = CellId(i);
      for (int d = 2; d <= 3; ++d)
        for (CellId x = 0; x < count(d); ++x) {
          if (tgt_obj(d, x) == a)
            law(rep, "C2", {r0(a), {d, x}}, [&] { return o.post(o.id1(a), d, x); },
                [&] { return x; });
          if (src_obj(d, x) == a)
            law(rep, "C2", {r0(a), {d, x}}, [&] { return o.pre(d, x, o.id1(a)); },
                [&] { return x; });
        }
    }
    for (CellId h = 0; h < n1; ++h) {
      if (s1(h) != t1(g)) continue;
      for (CellId f = 0; f < n1; ++f) {
        if (t1(f) != s1(g)) continue;
        law(rep, "C2", {r1(h), r1(g), r1(f)}, [&] { return o.t1(o.t1(h, g), f); },
            [&] { return o.t1(h, o.t1(g, f)); });
      }
      // (h⊠g)⊠x = h⊠(g⊠x)
      for (int d = 2; d <= 3; ++d)
        for (CellId x = 0; x < count(d); ++x) {
          if (tgt_obj(d, x) != s1(g)) continue;
          law(rep, "C2", {r1(h), r1(g), {d, x}}, [&] { return o.post(o.t1(h, g), d, x); },
              [&] { return o.post(h, d, o.post(g, d, x)); });
        }
    }
    for (int d = 2; d <= 3; ++d)
      for (CellId x = 0; x < count(d); ++x) {
        // x⊠(g⊠f) = (x⊠g)⊠f
        if (src_obj(d, x) == t1(g))
          for (CellId f = 0; f < n1; ++f) {
            if (t1(f) != s1(g)) continue;
            law(rep, "C2", {{d, x}, r1(g), r1(f)}, [&] { return o.pre(d, x, o.t1(g, f)); },
                [&] { return o.pre(d, o.pre(d, x, g), f); });
          }
        // (g⊠x)⊠f = g⊠(x⊠f)
        if (tgt_obj(d, x) == s1(g))
          for (CellId f = 0; f < n1; ++f) {
            if (t1(f) != src_obj(d, x)) continue;
            law(rep, "C2", {r1(g), {d, x}, r1(f)}, [&] { return o.pre(d, o.post(g, d, x), f); },
                [&] { return o.post(g, d, o.pre(d, x, f)); });
          }
      }
  }

  // -------------------------------------------------------------------------
  // C3..C6 on Σ. ξ: g ⇒ g' in C(b,c), γ: f ⇒ f' in C(a,b).

  bool sc(CellId xi, CellId gamma) const { return t1(s2(gamma)) == s1(s2(xi)); }

  void c3456(std::size_t i, AxiomReport& rep) {
    if (i >= n2) return;
    CellId xi = CellId(i);
    const CellId g = s2(xi), g2 = t2(xi);
    // C3 with γ = id_f and ξ = id_g
    for (CellId f = 0; f < n1; ++f) {
      if (t1(f) != s1(g)) continue;
      if (C.identity(2, f) == kNoCell) continue;
      law(rep, "C3", {r2(xi), r1(f)}, [&] { return o.sig(xi, o.id2(f)); },
          [&] { return o.id3(o.pre(2, xi, f)); });
    }
    if (g == g2 && C.identity(2, g) == xi) {
      for (CellId gam = 0; gam < n2; ++gam) {
        if (!sc(xi, gam)) continue;
        law(rep, "C3", {r1(g), r2(gam)}, [&] { return o.sig(xi, gam); },
            [&] { return o.id3(o.post(g, 2, gam)); });
      }
    }
    for (CellId gam = 0; gam < n2; ++gam) {
      if (!sc(xi, gam)) continue;
      const CellId f = s2(gam), f2 = t2(gam);
      // C4, first variable: ξ' after ξ
      for (CellId xi2 = 0; xi2 < n2; ++xi2) {
        if (s2(xi2) != g2) continue;
        const CellId g3 = t2(xi2);
        (void)g3;
        law(rep, "C4", {r2(xi2), r2(xi), r2(gam)}, [&] { return o.sig(o.t2(xi2, xi), gam); },
            [&] {
              return o.c3(o.t32(o.sig(xi2, gam), o.pre(2, xi, f)),
                          o.t23(o.pre(2, xi2, f2), o.sig(xi, gam)));
            });
      }
      // C4, second variable: γ' after γ
      for (CellId gam2 = 0; gam2 < n2; ++gam2) {
        if (s2(gam2) != f2) continue;
        law(rep, "C4", {r2(xi), r2(gam2), r2(gam)}, [&] { return o.sig(xi, o.t2(gam2, gam)); },
            [&] {
              return o.c3(o.t23(o.post(g2, 2, gam2), o.sig(xi, gam)),
                          o.t32(o.sig(xi, gam2), o.post(g, 2, gam)));
            });
      }
      // C5: naturality in each variable
      for (CellId X = 0; X < n3; ++X) {
        if (s3(X) == xi) {
          CellId xi2 = t3(X);
          law(rep, "C5", {r3(X), r2(gam)},
              [&] { return o.c3(o.sig(xi2, gam), o.t32(o.pre(3, X, f2), o.post(g, 2, gam))); },
              [&] { return o.c3(o.t23(o.post(g2, 2, gam), o.pre(3, X, f)), o.sig(xi, gam)); });
        }
        if (s3(X) == gam) {
          CellId gam2 = t3(X);
          law(rep, "C5", {r2(xi), r3(X)},
              [&] { return o.c3(o.sig(xi, gam2), o.t23(o.pre(2, xi, f2), o.post(g, 3, X))); },
              [&] { return o.c3(o.t32(o.post(g2, 3, X), o.pre(2, xi, f)), o.sig(xi, gam)); });
        }
      }
      // C6
      for (CellId h = 0; h < n1; ++h) {
        if (s1(h) == t1(g)) {
          law(rep, "C6", {r1(h), r2(xi), r2(gam)}, [&] { return o.sig(o.post(h, 2, xi), gam); },
              [&] { return o.post(h, 3, o.sig(xi, gam)); });
        }
        if (t1(h) == s1(f)) {
          law(rep, "C6", {r2(xi), r2(gam), r1(h)}, [&] { return o.sig(xi, o.pre(2, gam, h)); },
              [&] { return o.pre(3, o.sig(xi, gam), h); });
        }
      }
    }
    // Σ_{σ⊠g, γ} = Σ_{σ, g⊠γ} with σ = xi here, g a 1-cell into its source
    for (CellId gg = 0; gg < n1; ++gg) {
      if (t1(gg) != s1(g)) continue;
      for (CellId gam = 0; gam < n2; ++gam) {
        if (t1(s2(gam)) != s1(gg)) continue;
        law(rep, "C6", {r2(xi), r1(gg), r2(gam)}, [&] { return o.sig(o.pre(2, xi, gg), gam); },
            [&] { return o.sig(xi, o.post(gg, 2, gam)); });
      }
    }
  }
};

std::size_t rows(const FiniteGrayCategory& C) {
  std::size_t n = 0;
  for (int d = 0; d <= 3; ++d) n = std::max(n, C.count(d));
  return n;
}

}  // namespace

AxiomReport check_gray_axioms(const FiniteGrayCategory& C, Exec exec) {
  C.freeze();
  Checker k{C};
  const std::size_t n = rows(C);
  AxiomReport rep = for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.tables(i, r); });
  rep.merge(for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.hom(i, r); }));
  rep.merge(for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.d4(i, r); }));
  rep.merge(for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.d5(i, r); }));
  rep.merge(for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.c12(i, r); }));
  rep.merge(for_each_index(n, exec, [&](std::size_t i, AxiomReport& r) { k.c3456(i, r); }));
  return rep;
}

}  // namespace gray
