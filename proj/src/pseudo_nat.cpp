#include "gray/loc.hpp"
#include "gray/ops.hpp"

namespace gray {

namespace {

/// Chooses cells of ℙB for ⟨F,G⟩ slot by slot: objects, 1-cells, 2-cells,
/// then the 2-cells carrying M and Π⁻¹. Every slot only offers cells whose
/// S and T projections are the required ones.
struct TritransformationSearch {
  const GrayFunctorData& F;
  const GrayFunctorData& G;
  const PathCategory& P;
  std::size_t budget;

  struct Slot {
    int kind;  // 0..2: cell of that dimension, 3: M at an object, 4: Π at a pair
    CellId x;
    CellId y = kNoCell;
  };
  std::vector<Slot> slots;
  std::array<std::vector<CellId>, 3> W;
  std::vector<CellId> m;
  std::vector<CellId> pi;
  std::size_t explored = 0;
  bool exhausted = false;
  std::optional<Tritransformation> found;

  const FiniteGrayCategory& A() const { return *F.source; }
  const FiniteGrayCategory& B() const { return *P.base; }
  const FiniteGrayCategory& Q() const { return *P.cat; }

  void plan() {
    for (int d = 0; d <= 2; ++d) {
      W[d].assign(A().count(d), kNoCell);
      for (CellId x = 0; x < A().count(d); ++x) slots.push_back({d, x});
    }
    m.assign(A().count(0), kNoCell);
    for (CellId x = 0; x < A().count(0); ++x) slots.push_back({3, x});
    for (CellId g = 0; g < A().count(1); ++g)
      for (CellId f = 0; f < A().count(1); ++f)
        if (A().src(1, g) == A().tgt(1, f)) slots.push_back({4, g, f});
    pi.assign(slots.size(), kNoCell);
  }

  std::vector<CellId> filter(int d, const std::vector<CellId>& pool, CellId s, CellId t) const {
    std::vector<CellId> out;
    for (CellId c : pool)
      if (P.S(d, c) == s && P.T(d, c) == t) out.push_back(c);
    return out;
  }

  std::vector<CellId> candidates(const Slot& sl) const {
    Ops a{A()}, b{B()}, q{Q()};
    switch (sl.kind) {
      case 0: {
        std::vector<CellId> all;
        for (CellId o = 0; o < Q().count(0); ++o) all.push_back(o);
        return filter(0, all, F(0, sl.x), G(0, sl.x));
      }
      case 1:
        return filter(1, Q().hom1(W[0][A().src(1, sl.x)], W[0][A().tgt(1, sl.x)]), F(1, sl.x),
                      G(1, sl.x));
      case 2:
        if (A().is_identity(2, sl.x)) return {q.id2(W[1][A().src(2, sl.x)])};
        return filter(2, Q().hom2(W[1][A().src(2, sl.x)], W[1][A().tgt(2, sl.x)]), F(2, sl.x),
                      G(2, sl.x));
      case 3: {
        const CellId ida = a.id1(sl.x);
        return filter(2, Q().hom2(q.id1(W[0][sl.x]), W[1][ida]), b.id2(F(1, ida)),
                      b.id2(G(1, ida)));
      }
      default: {
        const CellId gf = a.t1(sl.x, sl.y);
        return filter(2, Q().hom2(q.t1(W[1][sl.x], W[1][sl.y]), W[1][gf]),
                      b.id2(b.t1(F(1, sl.x), F(1, sl.y))), b.id2(b.t1(G(1, sl.x), G(1, sl.y))));
      }
    }
  }

  void finish() {
    Tritransformation t;
    for (CellId x = 0; x < A().count(0); ++x) {
      t.alpha0.push_back(P.arrow(W[0][x]));
      t.M.push_back(P.cells2[m[x]].vec);
    }
    for (CellId f = 0; f < A().count(1); ++f) t.alpha1.push_back(P.cells1[W[1][f]].ae);
    for (CellId x = 0; x < A().count(2); ++x) t.alpha2.push_back(P.cells2[W[2][x]].vec);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].kind == 4) {
        auto inv = invert3(B(), P.cells2[pi[i]].vec);
        if (!inv) return;
        t.Pi[{slots[i].x, slots[i].y}] = *inv;
      }
    try {
      if (check_weak_functor(pair_functor(F, G, t, P)).passed()) found = std::move(t);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AxiomFail) throw;
    }
  }

  void run(std::size_t i) {
    if (found || exhausted) return;
    if (++explored > budget) {
      exhausted = true;
      return;
    }
    if (i == slots.size()) {
      finish();
      return;
    }
    const Slot sl = slots[i];
    for (CellId c : candidates(sl)) {
      if (sl.kind <= 2) W[sl.kind][sl.x] = c;
      else if (sl.kind == 3) m[sl.x] = c;
      else pi[i] = c;
      run(i + 1);
      if (found || exhausted) return;
    }
  }
};

}  // namespace

SearchOutcome<Tritransformation> pseudo_nat_equiv_search(const GrayFunctorData& F,
                                                         const GrayFunctorData& G,
                                                         const PathCategory& PB,
                                                         std::size_t budget) {
  TritransformationSearch s{F, G, PB, budget};
  s.plan();
  s.run(0);
  SearchOutcome<Tritransformation> out;
  out.explored = std::min(s.explored, budget);
  if (s.found) {
    out.status = SearchStatus::Found;
    out.value = std::move(s.found);
  } else {
    out.status = s.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
  }
  return out;
}

}  // namespace gray
