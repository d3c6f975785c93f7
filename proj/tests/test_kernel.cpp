#include "doctest.h"

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/ops.hpp"
#include "gray/search.hpp"

using namespace gray;

namespace {

CellId cell(const FiniteGrayCategory& C, int d, const char* n) { return *C.find(d, n); }

}  // namespace

TEST_CASE("fixtures pass the axiom check") {
  for (const auto& C : fixtures::all()) {
    CAPTURE(C.name());
    AxiomReport r = check_gray_axioms(C);
    INFO(r.summary());
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i)
      MESSAGE((r.violations[i].tag + ": " + r.violations[i].detail));
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("serial and parallel reports are identical") {
  for (const auto& C : fixtures::all())
    CHECK(check_gray_axioms(C, Exec::Serial) == check_gray_axioms(C, Exec::Parallel));
  for (const auto& m : fixtures::chaotic2_mutations())
    CHECK(check_gray_axioms(m.category, Exec::Serial) ==
          check_gray_axioms(m.category, Exec::Parallel));
}

TEST_CASE("mutations of chaotic2 are caught under the expected tag") {
  auto muts = fixtures::chaotic2_mutations();
  CHECK(muts.size() >= 6);
  for (const auto& m : muts) {
    CAPTURE(m.name);
    AxiomReport r = check_gray_axioms(m.category);
    INFO(r.summary());
    CHECK_FALSE(r.passed());
    CHECK(r.has_tag(m.expected_tag));
  }
}

TEST_CASE("tensor1 on chaotic2") {
  auto C = fixtures::chaotic2();
  CHECK(tensor1(C, cell(C, 1, "g"), cell(C, 1, "f")) == cell(C, 1, "1a"));
  CHECK(tensor1(C, cell(C, 1, "1b"), cell(C, 1, "f")) == cell(C, 1, "f"));
  CHECK_THROWS_AS(tensor1(C, cell(C, 1, "f"), cell(C, 1, "f")), Error);
  auto T = fixtures::terminal();
  CHECK(tensor1(T, 0, 0) == 0);
}

TEST_CASE("whisker and interchanger identities") {
  auto C = fixtures::chaotic2();
  Ops o{C};
  CellId g = cell(C, 1, "g"), f = cell(C, 1, "f");
  CHECK(whisker(C, Side::Post, g, 2, o.id2(f)) == o.id2(o.t1(g, f)));
  CellId xi = o.id2(g);
  CHECK(interchanger(C, xi, o.id2(f)) == o.id3(o.pre(2, xi, f)));
  auto Z = fixtures::z2();
  CellId s = cell(Z, 2, "s");
  CHECK(compose_in_hom(Z, HomOp::Otimes2, s, s) == Z.identity(2, 0));
  CHECK(interchanger(Z, s, s) == Z.identity(3, Z.identity(2, 0)));
}

TEST_CASE("compose_in_hom errors") {
  auto C = fixtures::chaotic2();
  CHECK_THROWS_AS(compose_in_hom(C, HomOp::Otimes2, cell(C, 2, "1f"), cell(C, 2, "1g")), Error);
  FiniteGrayCategory G = C;
  G.set_tensor2(cell(C, 2, "1f"), cell(C, 2, "1f"), kNoCell);
  try {
    compose_in_hom(G, HomOp::Otimes2, cell(C, 2, "1f"), cell(C, 2, "1f"));
    FAIL("expected a gap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TableGap);
  }
  CHECK(check_gray_axioms(G).has_tag("GAP"));
}

TEST_CASE("invert3") {
  auto I = fixtures::idem3();
  CellId e = cell(I, 3, "e");
  CHECK_FALSE(invert3(I, e).has_value());
  CHECK(invert3(I, 0) == CellId(0));
  for (const auto& C : fixtures::all())
    for (CellId x = 0; x < C.count(3); ++x)
      if (auto y = invert3(C, x)) CHECK(invert3(C, *y) == x);
}

TEST_CASE("adjoint equivalences") {
  for (const auto& C : fixtures::all())
    for (CellId x = 0; x < C.count(2); ++x) {
      auto e = find_adjoint_equivalence(C, x);
      if (C.is_identity(2, x)) REQUIRE(e.has_value());
      if (e) CHECK(validate_adjoint_equivalence(C, *e));
    }
  auto Z = fixtures::z2();
  auto e = find_adjoint_equivalence(Z, cell(Z, 2, "s"));
  REQUIRE(e);
  CHECK(e->bwd == cell(Z, 2, "s"));
}

TEST_CASE("biadjoint biequivalences") {
  auto C = fixtures::chaotic2();
  auto w = find_biadjoint_biequivalence(C, 0, 1);
  REQUIRE(w);
  CHECK(w->fwd == cell(C, 1, "f"));
  CHECK(w->bwd == cell(C, 1, "g"));
  CHECK(validate_biadjoint_biequivalence(C, *w));
  auto self = find_biadjoint_biequivalence(C, 0, 0);
  REQUIRE(self);
  CHECK(self->fwd == cell(C, 1, "1a"));
  auto D = fixtures::discrete2();
  CHECK_FALSE(find_biadjoint_biequivalence(D, 0, 1).has_value());
}
