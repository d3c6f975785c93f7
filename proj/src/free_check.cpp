#include <map>
#include <tuple>

#include "gray/detail/law.hpp"
#include "gray/free.hpp"
#include "gray/ops.hpp"
#include "gray/search.hpp"

namespace gray {

using detail::holds;
using detail::law;

namespace {

constexpr std::optional<Gr2Id> kOut = std::nullopt;

/// Evaluation class of a Gr 2-cell: hom, longest string it passes through,
/// number of generators, evaluation.
struct Cls2 {
  CellId a, b;
  int m, len;
  CellId ev;
  auto key() const { return std::tuple{a, b, m, len, ev}; }
};

struct Cls1 {
  CellId a, b;
  int len;
  CellId ev;
};

struct TruncChecker {
  const GrTruncation& T;
  const FiniteGrayCategory& A = T.base();
  Ops o{A};
  int L = T.bound();

  std::vector<int> mlen_ = longest_strings();

  std::vector<int> longest_strings() const {
    std::vector<int> v(T.cells2());
    for (Gr2Id x = 0; x < T.cells2(); ++x) v[x] = compute_mlen(x);
    return v;
  }
  int mlen(Gr2Id x) const { return mlen_[x]; }
  int compute_mlen(Gr2Id x) const {
    const GrCell2& c = T.cell2(x);
    int m = int(T.string(c.src).size());
    for (GenId g : c.gens)
      m = std::max({m, int(T.string(T.gen(g).src).size()), int(T.string(T.gen(g).tgt).size())});
    return m;
  }
  int len(Gr2Id x) const { return int(T.cell2(x).size()); }
  int slen(StrId s) const { return int(T.string(s).size()); }
  CellId from(Gr2Id x) const { return T.string(T.cell2(x).src).from; }
  CellId to(Gr2Id x) const { return T.string(T.cell2(x).src).to; }

  template <class V>
  static V need(const std::optional<V>& v) {
    if (!v) fail(ErrorKind::Incoherent, "in-bound composite is missing from the truncation");
    return *v;
  }

  // -------------------------------------------------------------------------
  // Explicit laws among strings and 2-cells.

  void strings(AxiomReport& rep) const {
    for (StrId x = 0; x < T.strings(); ++x) {
      const GrString& X = T.string(x);
      for (StrId e : T.strings_between(X.from, X.from))
        if (T.string(e).size() == 0)
          law(rep, "C2", {{1, x}}, [&] { return need(T.tensor1(x, e)); }, [&] { return x; });
      for (StrId y : T.strings_between(X.to, X.to))
        if (T.string(y).size() == 0)
          law(rep, "C2", {{1, x}}, [&] { return need(T.tensor1(y, x)); }, [&] { return x; });
      for (CellId c = 0; c < T.objects(); ++c)
        for (StrId y : T.strings_between(X.to, c)) {
          if (slen(x) + slen(y) > L) {
            ++rep.skipped;
            continue;
          }
          law(rep, "EV", {{1, x}, {1, y}}, [&] { return T.ev1(need(T.tensor1(y, x))); },
              [&] { return o.t1(T.ev1(y), T.ev1(x)); });
          for (CellId d = 0; d < T.objects(); ++d)
            for (StrId z : T.strings_between(c, d)) {
              if (slen(x) + slen(y) + slen(z) > L) {
                ++rep.skipped;
                continue;
              }
              law(rep, "C2", {{1, x}, {1, y}, {1, z}},
                  [&] { return need(T.tensor1(z, need(T.tensor1(y, x)))); },
                  [&] { return need(T.tensor1(need(T.tensor1(z, y)), x)); });
            }
        }
    }
  }

  void cells2(Gr2Id x, AxiomReport& rep) const {
    const GrCell2& X = T.cell2(x);
    law(rep, "HOM", {{2, x}}, [&] { return need(T.tensor2(x, T.id2(X.src))); }, [&] { return x; });
    law(rep, "HOM", {{2, x}}, [&] { return need(T.tensor2(T.id2(X.tgt), x)); }, [&] { return x; });
    const auto& ys = T.cells_from(X.tgt);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const Gr2Id y = ys[i];
      if (len(x) + len(y) > L) {
        rep.skipped += ys.size() - i;
        break;
      }
      law(rep, "EV", {{2, x}, {2, y}}, [&] { return T.ev2(need(T.tensor2(y, x))); },
          [&] { return o.t2(T.ev2(y), T.ev2(x)); });
      const auto& zs = T.cells_from(T.cell2(y).tgt);
      for (std::size_t j = 0; j < zs.size(); ++j) {
        const Gr2Id z = zs[j];
        if (len(x) + len(y) + len(z) > L) {
          rep.skipped += zs.size() - j;
          break;
        }
        law(rep, "HOM", {{2, x}, {2, y}, {2, z}},
            [&] { return need(T.tensor2(z, need(T.tensor2(y, x)))); },
            [&] { return need(T.tensor2(need(T.tensor2(z, y)), x)); });
      }
    }
    const int mx = mlen(x);
    for (int sd = 0; sd < 2; ++sd) {
      const Side side = Side(sd);
      for (CellId c = 0; c < T.objects(); ++c) {
        const auto& ws = side == Side::Post ? T.strings_between(to(x), c)
                                            : T.strings_between(c, from(x));
        for (StrId w : ws) {
          if (slen(w) + mx > L) {
            ++rep.skipped;
            continue;
          }
          const Gr2Id wx_ = need(T.whisker2(side, w, x));
          auto wx = [&] { return wx_; };
          if (slen(w) == 0) law(rep, "C2", {{1, w}, {2, x}}, wx, [&] { return x; });
          law(rep, "EV", {{1, w}, {2, x}}, [&] { return T.ev2(wx()); },
              [&] {
                return side == Side::Post ? o.post(T.ev1(w), 2, T.ev2(x))
                                          : o.pre(2, T.ev2(x), T.ev1(w));
              });
          law(rep, "D4", {{1, w}, {2, x}}, [&] { return need(T.whisker2(side, w, T.id2(X.src))); },
              [&] { return T.id2(side == Side::Post ? need(T.tensor1(w, X.src))
                                                    : need(T.tensor1(X.src, w))); });
          for (Gr2Id y : T.cells_from(X.tgt)) {
            if (len(x) + len(y) > L) break;
            if (slen(w) + std::max(mx, mlen(y)) > L) continue;
            law(rep, "D4", {{1, w}, {2, y}, {2, x}},
                [&] { return need(T.whisker2(side, w, need(T.tensor2(y, x)))); },
                [&] { return need(T.tensor2(need(T.whisker2(side, w, y)), wx())); });
          }
          // (v ⊠ w) ⊠ x = v ⊠ (w ⊠ x) and the mixed form, for a second string v.
          for (CellId d = 0; d < T.objects(); ++d) {
            const auto& vs = side == Side::Post ? T.strings_between(c, d) : T.strings_between(d, c);
            for (StrId v : vs) {
              if (slen(v) + slen(w) + mx > L) continue;
              law(rep, "C2", {{1, v}, {1, w}, {2, x}},
                  [&] { return need(T.whisker2(side, v, wx())); },
                  [&] {
                    StrId vw = side == Side::Post ? need(T.tensor1(v, w)) : need(T.tensor1(w, v));
                    return need(T.whisker2(side, vw, x));
                  });
            }
          }
          if (side == Side::Post)
            for (CellId d = 0; d < T.objects(); ++d)
              for (StrId v : T.strings_between(d, from(x))) {
                if (slen(v) + slen(w) + mx > L) continue;
                law(rep, "C2", {{1, w}, {2, x}, {1, v}},
                    [&] { return need(T.whisker2(Side::Pre, v, wx())); },
                    [&] { return need(T.whisker2(Side::Post, w, need(T.whisker2(Side::Pre, v, x)))); });
              }
        }
      }
    }
  }

  // Σ built generator-wise and extended along ⊗ agrees with Σ of evaluations.
  void sigma_pairs(Gr2Id xi, AxiomReport& rep) const {
    const int mx = mlen(xi);
    for (CellId a = 0; a < T.objects(); ++a)
      for (StrId f : T.strings_between(a, from(xi)))
        for (std::size_t i = 0, n = T.cells_from(f).size(); i < n; ++i) {
          const Gr2Id gm = T.cells_from(f)[i];
          if (len(xi) + len(gm) > L) {
            rep.skipped += n - i;
            break;
          }
          if (mx + mlen(gm) > L) {
            ++rep.skipped;
            continue;
          }
          law(rep, "C4", {{2, xi}, {2, gm}}, [&] { return need(T.sigma_recursive(xi, gm)); },
              [&] { return need(T.sigma(xi, gm)); });
        }
  }

  // -------------------------------------------------------------------------
  // Laws among 3-cells, once per evaluation class.

  std::vector<std::pair<Cls2, std::uint64_t>> classes2() const {
    std::map<std::tuple<CellId, CellId, int, int, CellId>, std::uint64_t> m;
    for (Gr2Id x = 0; x < T.cells2(); ++x)
      ++m[{from(x), to(x), mlen(x), len(x), T.ev2(x)}];
    std::vector<std::pair<Cls2, std::uint64_t>> out;
    for (auto& [k, n] : m) {
      auto [a, b, mm, l, ev] = k;
      out.push_back({{a, b, mm, l, ev}, n});
    }
    return out;
  }

  std::vector<std::pair<Cls1, std::uint64_t>> classes1() const {
    std::map<std::tuple<CellId, CellId, int, CellId>, std::uint64_t> m;
    for (StrId s = 0; s < T.strings(); ++s)
      ++m[{T.string(s).from, T.string(s).to, slen(s), T.ev1(s)}];
    std::vector<std::pair<Cls1, std::uint64_t>> out;
    for (auto& [k, n] : m) {
      auto [a, b, l, ev] = k;
      out.push_back({{a, b, l, ev}, n});
    }
    return out;
  }

  /// Composable pairs y⊗x in bound, classed by (hom, longest string, length, ev y, ev x).
  std::vector<std::pair<std::tuple<CellId, CellId, int, int, CellId, CellId>, std::uint64_t>>
  pair_classes() const {
    std::map<std::tuple<CellId, CellId, int, int, CellId, CellId>, std::uint64_t> m;
    for (Gr2Id x = 0; x < T.cells2(); ++x)
      for (Gr2Id y : T.cells_from(T.cell2(x).tgt)) {
        if (len(x) + len(y) > L) break;
        ++m[{from(x), to(x), std::max(mlen(x), mlen(y)), len(x) + len(y), T.ev2(y), T.ev2(x)}];
      }
    return {m.begin(), m.end()};
  }

  /// Parallel pairs (x, y), classed by (hom, longest string, longest sequence, ev x, ev y).
  std::vector<std::pair<std::tuple<CellId, CellId, int, int, CellId, CellId>, std::uint64_t>>
  parallel_classes() const {
    std::map<std::pair<StrId, StrId>, std::map<std::tuple<int, int, CellId>, std::uint64_t>> hom;
    for (Gr2Id x = 0; x < T.cells2(); ++x)
      ++hom[{T.cell2(x).src, T.cell2(x).tgt}][{mlen(x), len(x), T.ev2(x)}];
    std::map<std::tuple<CellId, CellId, int, int, CellId, CellId>, std::uint64_t> m;
    for (const auto& [st, cls] : hom) {
      const CellId a = T.string(st.first).from, b = T.string(st.first).to;
      for (const auto& [p, np] : cls)
        for (const auto& [q, nq] : cls) {
          auto [pm, pl, pe] = p;
          auto [qm, ql, qe] = q;
          m[{a, b, std::max(pm, qm), std::max(pl, ql), pe, qe}] += np * nq;
        }
    }
    return {m.begin(), m.end()};
  }

  static void weigh(AxiomReport& rep, std::uint64_t n) { rep.checked += n - 1; }

  void classes(AxiomReport& rep) const {
    const auto c2 = classes2();
    const auto c1 = classes1();
    const auto pairs = pair_classes();
    const auto par = parallel_classes();
    auto sg = [&](CellId xi, CellId gm) { return o.sig(xi, gm); };

    // Whiskerable class pairs: D5, C6.
    for (const auto& [X, nx] : c2)
      for (const auto& [G, ng] : c2) {
        if (G.b != X.a) continue;
        if (X.m + G.m > L || X.len + G.len > L) {
          rep.skipped += nx * ng;
          continue;
        }
        holds(rep, "D5", {{2, X.ev}, {2, G.ev}}, [&] { return is_invertible3(A, sg(X.ev, G.ev)); },
              "interchanger is not invertible");
        weigh(rep, nx * ng);
        for (const auto& [H, nh] : c1) {
          // Σ_{h⊠ξ,γ} = h⊠Σ_{ξ,γ}
          if (H.a == X.b && H.len + X.m + G.m <= L) {
            law(rep, "C6", {{1, H.ev}, {2, X.ev}, {2, G.ev}},
                [&] { return sg(o.post(H.ev, 2, X.ev), G.ev); },
                [&] { return o.post(H.ev, 3, sg(X.ev, G.ev)); });
            weigh(rep, nx * ng * nh);
          }
          // Σ_{ξ,γ⊠f} = Σ_{ξ,γ}⊠f
          if (H.b == G.a && H.len + X.m + G.m <= L) {
            law(rep, "C6", {{2, X.ev}, {2, G.ev}, {1, H.ev}},
                [&] { return sg(X.ev, o.pre(2, G.ev, H.ev)); },
                [&] { return o.pre(3, sg(X.ev, G.ev), H.ev); });
            weigh(rep, nx * ng * nh);
          }
        }
      }
    // Σ_{σ⊠g,γ} = Σ_{σ,g⊠γ}
    for (const auto& [S, ns] : c2)
      for (const auto& [H, nh] : c1) {
        if (H.b != S.a) continue;
        for (const auto& [G, ng] : c2) {
          if (G.b != H.a) continue;
          if (S.m + H.len + G.m > L || S.len + G.len > L) {
            rep.skipped += ns * nh * ng;
            continue;
          }
          law(rep, "C6", {{2, S.ev}, {1, H.ev}, {2, G.ev}},
              [&] { return sg(o.pre(2, S.ev, H.ev), G.ev); },
              [&] { return sg(S.ev, o.post(H.ev, 2, G.ev)); });
          weigh(rep, ns * nh * ng);
        }
      }
    // C3
    for (const auto& [X, nx] : c2)
      for (const auto& [H, nh] : c1) {
        if (H.b == X.a) {
          if (X.m + H.len > L) {
            rep.skipped += nx * nh;
          } else {
            law(rep, "C3", {{2, X.ev}, {1, H.ev}}, [&] { return sg(X.ev, o.id2(H.ev)); },
                [&] { return o.id3(o.pre(2, X.ev, H.ev)); });
            weigh(rep, nx * nh);
          }
        }
        if (H.a == X.b) {
          if (X.m + H.len > L) {
            rep.skipped += nx * nh;
          } else {
            law(rep, "C3", {{1, H.ev}, {2, X.ev}}, [&] { return sg(o.id2(H.ev), X.ev); },
                [&] { return o.id3(o.post(H.ev, 2, X.ev)); });
            weigh(rep, nx * nh);
          }
        }
      }
    // C4
    for (const auto& [P, np] : pairs) {
      auto [pa, pb, pm, pl, y, x] = P;
      for (const auto& [G, ng] : c2) {
        if (G.b == pa) {
          if (pm + G.m > L || pl + G.len > L) {
            rep.skipped += np * ng;
          } else {
            const CellId f = A.src(2, G.ev), f2 = A.tgt(2, G.ev);
            law(rep, "C4", {{2, y}, {2, x}, {2, G.ev}}, [&] { return sg(o.t2(y, x), G.ev); },
                [&] {
                  return o.c3(o.t32(sg(y, G.ev), o.pre(2, x, f)),
                              o.t23(o.pre(2, y, f2), sg(x, G.ev)));
                });
            weigh(rep, np * ng);
          }
        }
        if (G.a == pb) {
          if (pm + G.m > L || pl + G.len > L) {
            rep.skipped += np * ng;
          } else {
            const CellId g = A.src(2, G.ev), g2 = A.tgt(2, G.ev);
            law(rep, "C4", {{2, G.ev}, {2, y}, {2, x}}, [&] { return sg(G.ev, o.t2(y, x)); },
                [&] {
                  return o.c3(o.t23(o.post(g2, 2, y), sg(G.ev, x)),
                              o.t32(sg(G.ev, y), o.post(g, 2, x)));
                });
            weigh(rep, np * ng);
          }
        }
      }
    }
    // C5 and the 3-cell part of C2
    for (const auto& [P, np] : par) {
      auto [pa, pb, pm, pl, x, x2] = P;
      const auto& threes = A.hom3(x, x2);
      for (const auto& [G, ng] : c2) {
        for (CellId Xi : threes) {
          if (G.b == pa) {
            if (pm + G.m > L || pl + G.len > L) {
              rep.skipped += np * ng;
            } else {
              const CellId f = A.src(2, G.ev), f2 = A.tgt(2, G.ev);
              const CellId g = A.src(2, x), g2 = A.tgt(2, x);
              law(rep, "C5", {{3, Xi}, {2, G.ev}},
                  [&] { return o.c3(sg(x2, G.ev), o.t32(o.pre(3, Xi, f2), o.post(g, 2, G.ev))); },
                  [&] { return o.c3(o.t23(o.post(g2, 2, G.ev), o.pre(3, Xi, f)), sg(x, G.ev)); });
              weigh(rep, np * ng);
            }
          }
          if (G.a == pb) {
            if (pm + G.m > L || pl + G.len > L) {
              rep.skipped += np * ng;
            } else {
              const CellId g = A.src(2, G.ev), g2 = A.tgt(2, G.ev);
              const CellId f = A.src(2, x), f2 = A.tgt(2, x);
              law(rep, "C5", {{2, G.ev}, {3, Xi}},
                  [&] { return o.c3(sg(G.ev, x2), o.t23(o.pre(2, G.ev, f2), o.post(g, 3, Xi))); },
                  [&] { return o.c3(o.t32(o.post(g2, 3, Xi), o.pre(2, G.ev, f)), sg(G.ev, x)); });
              weigh(rep, np * ng);
            }
          }
        }
      }
      for (CellId Xi : threes)
        for (const auto& [H, nh] : c1) {
          if (pm + H.len > L) {
            rep.skipped += np * nh;
            continue;
          }
          if (H.a == pb) {
            if (H.len == 0)
              law(rep, "C2", {{1, H.ev}, {3, Xi}}, [&] { return o.post(H.ev, 3, Xi); },
                  [&] { return Xi; });
            for (const auto& [K, nk] : c1)
              if (K.a == H.b && pm + H.len + K.len <= L)
                law(rep, "C2", {{1, K.ev}, {1, H.ev}, {3, Xi}},
                    [&] { return o.post(K.ev, 3, o.post(H.ev, 3, Xi)); },
                    [&] { return o.post(o.t1(K.ev, H.ev), 3, Xi); });
          }
          if (H.b == pa) {
            if (H.len == 0)
              law(rep, "C2", {{3, Xi}, {1, H.ev}}, [&] { return o.pre(3, Xi, H.ev); },
                  [&] { return Xi; });
            for (const auto& [K, nk] : c1) {
              if (K.b == H.a && pm + H.len + K.len <= L)
                law(rep, "C2", {{3, Xi}, {1, H.ev}, {1, K.ev}},
                    [&] { return o.pre(3, o.pre(3, Xi, H.ev), K.ev); },
                    [&] { return o.pre(3, Xi, o.t1(H.ev, K.ev)); });
              if (K.a == pb && pm + H.len + K.len <= L)
                law(rep, "C2", {{1, K.ev}, {3, Xi}, {1, H.ev}},
                    [&] { return o.post(K.ev, 3, o.pre(3, Xi, H.ev)); },
                    [&] { return o.pre(3, o.post(K.ev, 3, Xi), H.ev); });
            }
          }
        }
    }
  }
};

}  // namespace

AxiomReport check_truncation(const GrTruncation& T, Exec exec) {
  TruncChecker k{T};
  AxiomReport rep = T.build_report();
  AxiomReport s;
  k.strings(s);
  rep.merge(s);
  rep.merge(for_each_index(T.cells2(), exec, [&](std::size_t x, AxiomReport& r) {
    k.cells2(Gr2Id(x), r);
  }));
  rep.merge(for_each_index(T.cells2(), exec, [&](std::size_t x, AxiomReport& r) {
    if (T.cell2(Gr2Id(x)).size() > 0) k.sigma_pairs(Gr2Id(x), r);
  }));
  AxiomReport c;
  k.classes(c);
  rep.merge(c);
  return rep;
}

}  // namespace gray
