#include <doctest.h>

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/ops.hpp"
#include "gray/path.hpp"

using namespace gray;

namespace {

CategoryPtr cat(const std::string& name) {
  return std::make_shared<const FiniteGrayCategory>(fixtures::by_name(name));
}

std::array<std::size_t, 4> counts(const FiniteGrayCategory& C) {
  return {C.count(0), C.count(1), C.count(2), C.count(3)};
}

}  // namespace

TEST_CASE("path object sizes") {
  CHECK(counts(*build_path(cat("terminal")).cat) == std::array<std::size_t, 4>{1, 1, 1, 1});
  // chaotic2: every 1-cell is a biequivalence and every hom is a singleton.
  CHECK(counts(*build_path(cat("chaotic2")).cat) == std::array<std::size_t, 4>{4, 16, 16, 16});
  CHECK(counts(*build_path(cat("discrete2")).cat) == std::array<std::size_t, 4>{2, 2, 2, 2});
  // idem3: e is not invertible, so the only 2-cell vector is the identity; both
  // (1,1) and (e,e) satisfy the 3-cell condition.
  CHECK(counts(*build_path(cat("idem3")).cat) == std::array<std::size_t, 4>{1, 1, 1, 2});
}

TEST_CASE("path objects pass the axioms and their own side conditions") {
  for (const auto& A : fixtures::all()) {
    CAPTURE(A.name());
    PathCategory P = build_path(std::make_shared<const FiniteGrayCategory>(A));
    CHECK(P.build_report.passed());
    AxiomReport ax = check_gray_axioms(*P.cat);
    CHECK_MESSAGE(ax.passed(), ax.summary());
    CHECK(check_path_cells(P).passed());
    CHECK(check_gray_functor(P.S).passed());
    CHECK(check_gray_functor(P.T).passed());
    CHECK(check_gray_functor(P.C).passed());
    const auto id = identity_functor(P.base);
    CHECK(compose(P.S, P.C) == id);
    CHECK(compose(P.T, P.C) == id);
  }
}

TEST_CASE("constant path of a 1-cell") {
  PathCategory P = build_path(cat("chaotic2"));
  const auto& B = *P.base;
  const CellId f = *B.find(1, "f");
  const auto& c = P.cells1[P.C(1, f)];
  CHECK(c.S == f);
  CHECK(c.T == f);
  CHECK(c.vec == B.identity(2, f));
}

TEST_CASE("C is a weak equivalence on every fixture") {
  for (const auto& A : fixtures::all()) {
    CAPTURE(A.name());
    PathCategory P = build_path(std::make_shared<const FiniteGrayCategory>(A));
    AxiomReport r = check_C_weak_equivalence(P);
    CHECK_MESSAGE(r.passed(), r.summary());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("path_map commutes with S, T and C") {
  auto A = cat("chaotic2"), T = cat("terminal");
  PathCategory PA = build_path(A), PT = build_path(T);
  GrayFunctorData F = to_terminal(A, T);
  GrayFunctorData PF = path_map(F, PA, PT);
  CHECK(check_gray_functor(PF).passed());
  CHECK(compose(PF, PA.C) == compose(PT.C, F));
  CHECK(compose(PT.S, PF) == compose(F, PA.S));
  CHECK(compose(PT.T, PF) == compose(F, PA.T));
  GrayFunctorData I = path_map(identity_functor(A), PA, PA);
  CHECK(I.map == identity_functor(PA.cat).map);
}

TEST_CASE("pair functor of the identity tritransformation is C after F") {
  for (const char* name : {"chaotic2", "z2", "idem3"}) {
    CAPTURE(name);
    auto B = cat(name);
    PathCategory P = build_path(B);
    for (const auto& F : enumerate_strict_functors(B, B, 10)) {
      WeakFunctorData H = pair_functor(F, F, identity_tritransformation(F, P), P);
      CHECK(check_weak_functor(H).passed());
      CHECK(H.map == compose(P.C, F).map);
    }
  }
}

TEST_CASE("pair functor names the failing axiom") {
  auto B = cat("z2");
  PathCategory P = build_path(B);
  GrayFunctorData F = identity_functor(B);
  Tritransformation t = identity_tritransformation(F, P);
  // Dropping a component leaves α without a valid boundary.
  t.alpha0[0] = kNoCell;
  CHECK_THROWS_WITH_AS(pair_functor(F, F, t, P), doctest::Contains("boundary of α"), Error);
}
