#include "gray/functor.hpp"

#include "gray/detail/law.hpp"
#include "gray/ops.hpp"

namespace gray {

using detail::law;
using detail::r0;
using detail::r1;
using detail::r2;
using detail::r3;

bool operator==(const GrayFunctorData& l, const GrayFunctorData& r) {
  return l.source->name() == r.source->name() && l.target->name() == r.target->name() &&
         l.map == r.map;
}

namespace {

struct FunctorChecker {
  const GrayFunctorData& F;
  const FiniteGrayCategory& A = *F.source;
  const FiniteGrayCategory& B = *F.target;
  Ops a{A};
  Ops b{B};
  int upto;

  CellId m(int d, CellId x) const {
    CellId y = F.map[d][x];
    if (y >= B.count(d)) fail(ErrorKind::Semantic, "image is not a declared cell");
    return y;
  }

  // Source composite, or kNoCell when the source itself cannot form it.
  template <class E>
  CellId src_eval(AxiomReport& rep, E&& e) const {
    try {
      return e();
    } catch (const Error&) {
      ++rep.skipped;
      return kNoCell;
    }
  }

  void boundary(int d, CellId x, AxiomReport& rep) const {
    ++rep.checked;
    CellId y = F.map[d][x];
    if (y >= B.count(d)) {
      rep.add("BOUNDARY", {{d, x}}, "image is not a declared cell");
      return;
    }
    if (d == 0) return;
    CellId s = F.map[d - 1][A.src(d, x)], t = F.map[d - 1][A.tgt(d, x)];
    if (B.src(d, y) != s || B.tgt(d, y) != t)
      rep.add("BOUNDARY", {{d, x}}, "image boundary differs from mapped boundary");
  }

  void identities(int d, CellId lower, AxiomReport& rep) const {
    CellId i = A.identity(d, lower);
    if (i == kNoCell) return;
    law(rep, "ID", {{d, i}}, [&] { return m(d, i); },
        [&] { return b.need(B.identity(d, m(d - 1, lower)), d - 1, m(d - 1, lower)); });
  }

  void tensor1(CellId g, CellId f, AxiomReport& rep) const {
    if (A.tgt(1, f) != A.src(1, g)) return;
    CellId gf = src_eval(rep, [&] { return a.t1(g, f); });
    if (gf == kNoCell) return;
    law(rep, "TENSOR1", {r1(g), r1(f)}, [&] { return m(1, gf); },
        [&] { return b.t1(m(1, g), m(1, f)); });
  }

  void whiskers(int d, CellId w, CellId x, AxiomReport& rep) const {
    if (A.src(1, w) == A.tgt_obj(d, x)) {
      CellId r = src_eval(rep, [&] { return a.post(w, d, x); });
      if (r != kNoCell)
        law(rep, "WHISKER", {r1(w), {d, x}}, [&] { return m(d, r); },
            [&] { return b.post(m(1, w), d, m(d, x)); });
    }
    if (A.tgt(1, w) == A.src_obj(d, x)) {
      CellId r = src_eval(rep, [&] { return a.pre(d, x, w); });
      if (r != kNoCell)
        law(rep, "WHISKER", {{d, x}, r1(w)}, [&] { return m(d, r); },
            [&] { return b.pre(d, m(d, x), m(1, w)); });
    }
  }

  void pair2(CellId y, CellId x, AxiomReport& rep) const {
    if (A.tgt(2, x) == A.src(2, y)) {
      CellId r = src_eval(rep, [&] { return a.t2(y, x); });
      if (r != kNoCell)
        law(rep, "TENSOR2", {r2(y), r2(x)}, [&] { return m(2, r); },
            [&] { return b.t2(m(2, y), m(2, x)); });
    }
    if (upto >= 3 && A.tgt(1, A.src(2, x)) == A.src(1, A.src(2, y))) {
      CellId r = src_eval(rep, [&] { return a.sig(y, x); });
      if (r != kNoCell)
        law(rep, "SIGMA", {r2(y), r2(x)}, [&] { return m(3, r); },
            [&] { return b.sig(m(2, y), m(2, x)); });
    }
  }

  void pair3(CellId Y, CellId X, AxiomReport& rep) const {
    if (A.tgt(3, X) == A.src(3, Y)) {
      CellId r = src_eval(rep, [&] { return a.c3(Y, X); });
      if (r != kNoCell)
        law(rep, "CIRC3", {r3(Y), r3(X)}, [&] { return m(3, r); },
            [&] { return b.c3(m(3, Y), m(3, X)); });
    }
    if (A.tgt(2, A.src(3, X)) == A.src(2, A.src(3, Y))) {
      CellId r = src_eval(rep, [&] { return a.t3(Y, X); });
      if (r != kNoCell)
        law(rep, "TENSOR3", {r3(Y), r3(X)}, [&] { return m(3, r); },
            [&] { return b.t3(m(3, Y), m(3, X)); });
    }
  }
};

}  // namespace

AxiomReport check_gray_functor(const GrayFunctorData& F, int upto, Exec exec) {
  const FiniteGrayCategory& A = *F.source;
  A.freeze();
  F.target->freeze();
  AxiomReport rep;
  for (int d = 0; d <= 3; ++d)
    if (F.map[d].size() != A.count(d)) {
      rep.add("BOUNDARY", {}, "map for dimension " + std::to_string(d) + " has wrong length");
      return rep;
    }
  FunctorChecker k{F, A, *F.target, Ops{A}, Ops{*F.target}, upto};
  for (int d = 0; d <= upto; ++d) {
    rep.merge(for_each_index(A.count(d), exec, [&](std::size_t i, AxiomReport& r) {
      k.boundary(d, CellId(i), r);
    }));
  }
  if (!rep.passed()) return rep;
  for (int d = 1; d <= upto; ++d)
    rep.merge(for_each_index(A.count(d - 1), exec, [&](std::size_t i, AxiomReport& r) {
      k.identities(d, CellId(i), r);
    }));
  if (upto < 1) return rep;
  const std::size_t n1 = A.count(1);
  rep.merge(for_each_index(n1, exec, [&](std::size_t g, AxiomReport& r) {
    for (CellId f = 0; f < n1; ++f) k.tensor1(CellId(g), f, r);
    for (int d = 2; d <= upto; ++d)
      for (CellId x = 0; x < A.count(d); ++x) k.whiskers(d, CellId(g), x, r);
  }));
  if (upto < 2) return rep;
  const std::size_t n2 = A.count(2);
  rep.merge(for_each_index(n2, exec, [&](std::size_t y, AxiomReport& r) {
    for (CellId x = 0; x < n2; ++x) k.pair2(CellId(y), x, r);
  }));
  if (upto < 3) return rep;
  const std::size_t n3 = A.count(3);
  rep.merge(for_each_index(n3, exec, [&](std::size_t Y, AxiomReport& r) {
    for (CellId X = 0; X < n3; ++X) k.pair3(CellId(Y), X, r);
  }));
  return rep;
}

GrayFunctorData identity_functor(const CategoryPtr& C) {
  GrayFunctorData F{"id_" + C->name(), C, C, {}};
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < C->count(d); ++x) F.map[d].push_back(x);
  return F;
}

GrayFunctorData compose(const GrayFunctorData& G, const GrayFunctorData& F) {
  if (F.target->name() != G.source->name())
    fail(ErrorKind::NotComposable, "functors " + F.name + " and " + G.name + " do not compose");
  GrayFunctorData H{G.name + "." + F.name, F.source, G.target, {}};
  for (int d = 0; d <= 3; ++d)
    for (CellId y : F.map[d]) H.map[d].push_back(G.map[d].at(y));
  return H;
}

GrayFunctorData to_terminal(const CategoryPtr& source, const CategoryPtr& terminal) {
  for (int d = 0; d <= 3; ++d)
    if (terminal->count(d) != 1)
      fail(ErrorKind::Semantic, terminal->name() + " is not terminal");
  GrayFunctorData F{"!" + source->name(), source, terminal, {}};
  for (int d = 0; d <= 3; ++d) F.map[d].assign(source->count(d), 0);
  return F;
}

namespace {

struct Enumerator {
  const CategoryPtr& A;
  const CategoryPtr& B;
  std::size_t limit;
  GrayFunctorData cur;
  std::vector<GrayFunctorData> out;

  const std::vector<CellId>& candidates(int d, CellId x) const {
    static const std::vector<CellId> none;
    CellId s = cur.map[d - 1][A->src(d, x)], t = cur.map[d - 1][A->tgt(d, x)];
    if (d == 1) return B->hom1(s, t);
    if (d == 2) return B->hom2(s, t);
    return B->hom3(s, t);
  }

  void run(int d, CellId x) {
    if (out.size() >= limit) return;
    if (d == 4) {
      out.push_back(cur);
      return;
    }
    if (x == A->count(d)) {
      if (check_gray_functor(cur, d, Exec::Serial).passed()) run(d + 1, 0);
      return;
    }
    if (d == 0) {
      for (CellId y = 0; y < B->count(0); ++y) {
        cur.map[0][x] = y;
        run(d, x + 1);
      }
      return;
    }
    // Identities are forced.
    for (CellId lower = 0; lower < A->count(d - 1); ++lower)
      if (A->identity(d, lower) == x) {
        CellId y = B->identity(d, cur.map[d - 1][lower]);
        if (y == kNoCell) return;
        cur.map[d][x] = y;
        run(d, x + 1);
        return;
      }
    for (CellId y : candidates(d, x)) {
      cur.map[d][x] = y;
      run(d, x + 1);
      if (out.size() >= limit) return;
    }
  }
};

}  // namespace

std::vector<GrayFunctorData> enumerate_strict_functors(const CategoryPtr& source,
                                                       const CategoryPtr& target,
                                                       std::size_t limit) {
  source->freeze();
  target->freeze();
  Enumerator e{source, target, limit, {source->name() + "->" + target->name(), source, target, {}}, {}};
  for (int d = 0; d <= 3; ++d) e.cur.map[d].assign(source->count(d), kNoCell);
  e.run(0, 0);
  for (std::size_t i = 0; i < e.out.size(); ++i) e.out[i].name += "#" + std::to_string(i);
  return std::move(e.out);
}

}  // namespace gray
