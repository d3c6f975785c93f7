#include "gray/fixtures.hpp"

#include "gray/ops.hpp"

namespace gray {

void declare_identities(FiniteGrayCategory& C) {
  for (CellId a = 0; a < C.count(0); ++a)
    if (C.identity(1, a) == kNoCell)
      C.set_identity(1, a, C.add_cell(1, "1" + C.cell_name(0, a), a, a));
  for (CellId f = 0; f < C.count(1); ++f)
    if (C.identity(2, f) == kNoCell)
      C.set_identity(2, f, C.add_cell(2, "1" + C.cell_name(1, f), f, f));
  for (CellId x = 0; x < C.count(2); ++x)
    if (C.identity(3, x) == kNoCell)
      C.set_identity(3, x, C.add_cell(3, "1" + C.cell_name(2, x), x, x));
}

namespace {

CellId unique_in(const std::vector<CellId>& v) { return v.size() == 1 ? v[0] : kNoCell; }

template <class Get, class Set, class Want>
void fill(std::size_t rows, std::size_t cols, Get get, Set set, Want want) {
  for (CellId r = 0; r < rows; ++r)
    for (CellId c = 0; c < cols; ++c) {
      if (get(r, c) != kNoCell) continue;
      CellId v = kNoCell;
      try {
        v = want(r, c);
      } catch (const Error&) {
        v = kNoCell;
      }
      if (v != kNoCell) set(r, c, v);
    }
}

}  // namespace

void complete_thin(FiniteGrayCategory& C) {
  C.freeze();
  const std::size_t n1 = C.count(1), n2 = C.count(2), n3 = C.count(3);
  Ops o{C};
  auto post_ok = [&](CellId w, int d, CellId x) { return C.src(1, w) == C.tgt_obj(d, x); };
  auto pre_ok = [&](CellId w, int d, CellId x) { return C.tgt(1, w) == C.src_obj(d, x); };

  // 1-cell whiskers: both tables
  for (int sd = 0; sd < 2; ++sd) {
    Side side = Side(sd);
    fill(
        n1, n1, [&](CellId w, CellId x) { return C.whisker(side, 1, w, x); },
        [&](CellId w, CellId x, CellId v) { C.set_whisker(side, 1, w, x, v); },
        [&](CellId w, CellId x) -> CellId {
          if (side == Side::Post) {
            if (!post_ok(w, 1, x)) return kNoCell;
            return unique_in(C.hom1(C.src(1, x), C.tgt(1, w)));
          }
          if (!pre_ok(w, 1, x)) return kNoCell;
          return unique_in(C.hom1(C.src(1, w), C.tgt(1, x)));
        });
  }
  fill(
      n2, n2, [&](CellId y, CellId x) { return C.tensor2(y, x); },
      [&](CellId y, CellId x, CellId v) { C.set_tensor2(y, x, v); },
      [&](CellId y, CellId x) -> CellId {
        if (C.tgt(2, x) != C.src(2, y)) return kNoCell;
        return unique_in(C.hom2(C.src(2, x), C.tgt(2, y)));
      });
  for (int d = 2; d <= 3; ++d) {
    for (int sd = 0; sd < 2; ++sd) {
      Side side = Side(sd);
      fill(
          n1, C.count(d), [&](CellId w, CellId x) { return C.whisker(side, d, w, x); },
          [&](CellId w, CellId x, CellId v) { C.set_whisker(side, d, w, x, v); },
          [&](CellId w, CellId x) -> CellId {
            bool ok = side == Side::Post ? post_ok(w, d, x) : pre_ok(w, d, x);
            if (!ok) return kNoCell;
            CellId s = whisker(C, side, w, d - 1, C.src(d, x));
            CellId t = whisker(C, side, w, d - 1, C.tgt(d, x));
            return unique_in(d == 2 ? C.hom2(s, t) : C.hom3(s, t));
          });
    }
    if (d == 2) {
      fill(
          n3, n3, [&](CellId y, CellId x) { return C.circ3(y, x); },
          [&](CellId y, CellId x, CellId v) { C.set_circ3(y, x, v); },
          [&](CellId y, CellId x) -> CellId {
            if (C.tgt(3, x) != C.src(3, y)) return kNoCell;
            return unique_in(C.hom3(C.src(3, x), C.tgt(3, y)));
          });
      fill(
          n3, n3, [&](CellId y, CellId x) { return C.tensor3(y, x); },
          [&](CellId y, CellId x, CellId v) { C.set_tensor3(y, x, v); },
          [&](CellId Y, CellId X) -> CellId {
            if (C.tgt(2, C.src(3, X)) != C.src(2, C.src(3, Y))) return kNoCell;
            return unique_in(C.hom3(o.t2(C.src(3, Y), C.src(3, X)),
                                    o.t2(C.tgt(3, Y), C.tgt(3, X))));
          });
    }
  }
  fill(
      n2, n2, [&](CellId y, CellId x) { return C.sigma(y, x); },
      [&](CellId y, CellId x, CellId v) { C.set_sigma(y, x, v); },
      [&](CellId xi, CellId gam) -> CellId {
        if (C.tgt(1, C.src(2, gam)) != C.src(1, C.src(2, xi))) return kNoCell;
        auto [s, t] = interchanger_boundary(C, xi, gam);
        return unique_in(C.hom3(s, t));
      });
}

namespace fixtures {

FiniteGrayCategory terminal() {
  FiniteGrayCategory C("terminal");
  C.add_object("*");
  declare_identities(C);
  complete_thin(C);
  return C;
}

FiniteGrayCategory chaotic2() {
  FiniteGrayCategory C("chaotic2");
  CellId a = C.add_object("a"), b = C.add_object("b");
  C.set_identity(1, a, C.add_cell(1, "1a", a, a));
  C.add_cell(1, "f", a, b);
  C.add_cell(1, "g", b, a);
  C.set_identity(1, b, C.add_cell(1, "1b", b, b));
  declare_identities(C);
  complete_thin(C);
  return C;
}

FiniteGrayCategory discrete2() {
  FiniteGrayCategory C("discrete2");
  C.add_object("a");
  C.add_object("b");
  declare_identities(C);
  complete_thin(C);
  return C;
}

FiniteGrayCategory idem3() {
  FiniteGrayCategory C("idem3");
  C.add_object("*");
  declare_identities(C);
  const CellId ii = 0;
  const CellId iii = 0;
  CellId e = C.add_cell(3, "e", ii, ii);
  C.freeze();
  // Both ∘ and ⊗ on {1, e} are the monoid with e·e = e.
  for (CellId x : {iii, e})
    for (CellId y : {iii, e}) {
      CellId r = (x == e || y == e) ? e : iii;
      C.set_circ3(y, x, r);
      C.set_tensor3(y, x, r);
    }
  const CellId i = 0;
  for (CellId x : {iii, e}) {
    C.set_whisker(Side::Post, 3, i, x, x);
    C.set_whisker(Side::Pre, 3, i, x, x);
  }
  C.set_sigma(ii, ii, iii);
  complete_thin(C);
  return C;
}

FiniteGrayCategory z2() {
  FiniteGrayCategory C("z2");
  CellId o = C.add_object("*");
  CellId i = C.add_cell(1, "1*", o, o);
  C.set_identity(1, o, i);
  CellId ii = C.add_cell(2, "1i", i, i);
  C.set_identity(2, i, ii);
  CellId s = C.add_cell(2, "s", i, i);
  declare_identities(C);
  C.freeze();
  C.set_tensor2(ii, ii, ii);
  C.set_tensor2(s, ii, s);
  C.set_tensor2(ii, s, s);
  C.set_tensor2(s, s, ii);
  for (CellId x : {ii, s}) {
    C.set_whisker(Side::Post, 2, i, x, x);
    C.set_whisker(Side::Pre, 2, i, x, x);
  }
  complete_thin(C);
  return C;
}

std::vector<FiniteGrayCategory> shipped() { return {terminal(), chaotic2(), discrete2(), idem3()}; }

std::vector<FiniteGrayCategory> all() {
  auto v = shipped();
  v.push_back(z2());
  return v;
}

FiniteGrayCategory by_name(const std::string& name) {
  for (auto& c : all())
    if (c.name() == name) return c;
  fail(ErrorKind::Semantic, "unknown fixture " + name);
}

std::vector<Mutation> chaotic2_mutations() {
  const FiniteGrayCategory base = chaotic2();
  auto id = [&](int d, const char* n) { return *base.find(d, n); };
  std::vector<Mutation> out;
  auto mut = [&](std::string name, std::string tag, auto edit) {
    FiniteGrayCategory C = base;
    C.set_name("chaotic2-" + name);
    edit(C);
    out.push_back({std::move(name), std::move(tag), std::move(C)});
  };
  mut("post-g-f", "C1",
      [&](auto& C) { C.set_whisker(Side::Post, 1, id(1, "g"), id(1, "f"), id(1, "1b")); });
  mut("unit-post-1f", "C2",
      [&](auto& C) { C.set_whisker(Side::Post, 2, id(1, "1b"), id(2, "1f"), id(2, "1g")); });
  mut("sigma-1f-11a", "C3",
      [&](auto& C) { C.set_sigma(id(2, "1f"), id(2, "11a"), id(3, "11g")); });
  mut("tensor3-11f", "C4",
      [&](auto& C) { C.set_tensor3(id(3, "11f"), id(3, "11f"), id(3, "111a")); });
  mut("tensor2-1f", "C4",
      [&](auto& C) { C.set_tensor2(id(2, "1f"), id(2, "1f"), id(2, "1g")); });
  mut("circ3-11f", "C4",
      [&](auto& C) { C.set_circ3(id(3, "11f"), id(3, "11f"), id(3, "11g")); });
  mut("pre3-11f-1a", "C5",
      [&](auto& C) { C.set_whisker(Side::Pre, 3, id(1, "1a"), id(3, "11f"), id(3, "11g")); });
  mut("post3-g-11f", "C6",
      [&](auto& C) { C.set_whisker(Side::Post, 3, id(1, "g"), id(3, "11f"), id(3, "111b")); });
  return out;
}

}  // namespace fixtures
}  // namespace gray
