#pragma once

#include "gray/category.hpp"

namespace gray {

/// Short-hand checked operations over one category. Every call throws
/// gray::Error on a missing or ill-typed entry.
struct Ops {
  const FiniteGrayCategory& C;

  CellId s(int d, CellId x) const { return C.src(d, x); }
  CellId t(int d, CellId x) const { return C.tgt(d, x); }

  CellId id1(CellId a) const { return need(C.identity(1, a), 0, a); }
  CellId id2(CellId f) const { return need(C.identity(2, f), 1, f); }
  CellId id3(CellId x) const { return need(C.identity(3, x), 2, x); }

  CellId t1(CellId g, CellId f) const { return tensor1(C, g, f); }
  CellId t2(CellId y, CellId x) const { return compose_in_hom(C, HomOp::Otimes2, y, x); }
  CellId c3(CellId y, CellId x) const { return compose_in_hom(C, HomOp::Circ3, y, x); }
  CellId t3(CellId y, CellId x) const { return compose_in_hom(C, HomOp::Otimes3, y, x); }

  /// w ⊠ x and x ⊠ w for x of dimension d.
  CellId post(CellId w, int d, CellId x) const { return whisker(C, Side::Post, w, d, x); }
  CellId pre(int d, CellId x, CellId w) const { return whisker(C, Side::Pre, w, d, x); }

  CellId sig(CellId xi, CellId gamma) const { return interchanger(C, xi, gamma); }

  /// 3-cell ⊗ 2-cell and 2-cell ⊗ 3-cell.
  CellId t32(CellId Y, CellId x) const { return t3(Y, id3(x)); }
  CellId t23(CellId y, CellId X) const { return t3(id3(y), X); }

  /// Horizontal composite of 1-cells written outer-first: h⊠g⊠f.
  CellId t1(CellId h, CellId g, CellId f) const { return t1(h, t1(g, f)); }

  CellId need(CellId r, int lower_dim, CellId lower) const;
};

}  // namespace gray
