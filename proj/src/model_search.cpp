#include "gray/model.hpp"

namespace gray {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget";
  }
  return "?";
}

namespace {

struct HomotopySearch {
  const GrayFunctorData& F;
  const GrayFunctorData& G;
  const PathCategory& P;
  std::size_t budget;
  GrayFunctorData cur;
  std::size_t explored = 0;
  bool exhausted = false;
  std::optional<GrayFunctorData> found;

  const FiniteGrayCategory& A() const { return *F.source; }

  std::vector<CellId> candidates(int d, CellId x) const {
    const FiniteGrayCategory& Q = *P.cat;
    std::vector<CellId> pool;
    if (d == 0) {
      for (CellId o = 0; o < Q.count(0); ++o) pool.push_back(o);
    } else {
      CellId s = cur(d - 1, A().src(d, x)), t = cur(d - 1, A().tgt(d, x));
      pool = d == 1 ? Q.hom1(s, t) : d == 2 ? Q.hom2(s, t) : Q.hom3(s, t);
    }
    std::vector<CellId> out;
    for (CellId c : pool)
      if (P.S(d, c) == F(d, x) && P.T(d, c) == G(d, x)) out.push_back(c);
    return out;
  }

  void run(int d, CellId x) {
    if (found || exhausted) return;
    if (++explored > budget) {
      exhausted = true;
      return;
    }
    if (d == 4) {
      found = cur;
      return;
    }
    if (x == A().count(d)) {
      if (check_gray_functor(cur, d, Exec::Serial).passed()) run(d + 1, 0);
      return;
    }
    if (d > 0 && A().is_identity(d, x)) {
      // Identities are forced; check_gray_functor rejects a bad projection.
      cur.map[d][x] = P.cat->identity(d, cur(d - 1, A().src(d, x)));
      run(d, x + 1);
      return;
    }
    for (CellId c : candidates(d, x)) {
      cur.map[d][x] = c;
      run(d, x + 1);
      if (found || exhausted) return;
    }
  }
};

}  // namespace

SearchOutcome<GrayFunctorData> right_homotopy_search(const GrayFunctorData& F,
                                                     const GrayFunctorData& G,
                                                     const PathCategory& PB, std::size_t budget) {
  HomotopySearch s{F, G, PB, budget, {"H", F.source, PB.cat, {}}};
  for (int d = 0; d <= 3; ++d) s.cur.map[d].assign(F.source->count(d), kNoCell);
  s.run(0, 0);
  SearchOutcome<GrayFunctorData> out;
  out.explored = std::min(s.explored, budget);
  if (s.found) {
    out.status = SearchStatus::Found;
    out.value = std::move(s.found);
  } else {
    out.status = s.exhausted ? SearchStatus::BudgetExhausted : SearchStatus::NotFound;
  }
  return out;
}

Strictification strictify(const WeakFunctorData& F, int bound) {
  const FiniteGrayCategory& A = *F.source;
  const Section l = section_of_ev(F.source, bound, IdentityImage::Empty);
  auto TB = std::make_shared<const GrTruncation>(F.target, bound);
  const GrMap G = gr_map(F, l.trunc, TB);

  Strictification r;
  r.strict = {"strict(" + F.name + ")", F.source, F.target, {}};
  auto& m = r.strict.map;
  m[0] = G.objects;
  for (CellId f = 0; f < A.count(1); ++f) {
    m[1].push_back(TB->ev1(G.strings[l.strings[f]]));
    r.icon.phi1.push_back(G.icon.phi1.at(l.strings[f]));
  }
  for (CellId al = 0; al < A.count(2); ++al) {
    m[2].push_back(TB->ev2(G.cells2[l.cells2[al]]));
    r.icon.phi2.push_back(G.icon.phi2.at(l.cells2[al]));
  }
  for (CellId X = 0; X < A.count(3); ++X) {
    const GrCell3 c = l.cell3(A, X);
    m[3].push_back(G.payload3(c.src, c.tgt, c.payload));
  }
  r.icon.M = G.icon.M;
  for (CellId g = 0; g < A.count(1); ++g)
    for (CellId f = 0; f < A.count(1); ++f) {
      auto it = G.icon.Pi.find({l.strings[g], l.strings[f]});
      if (it != G.icon.Pi.end()) r.icon.Pi[{g, f}] = it->second;
    }

  r.report = check_gray_functor(r.strict);
  r.report.merge(check_icon(G, F));
  return r;
}

}  // namespace gray
