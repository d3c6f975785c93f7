#include <doctest.h>

#include <algorithm>

#include "gray/fixtures.hpp"
#include "gray/free.hpp"

using namespace gray;

namespace {

CategoryPtr cat(const std::string& name) {
  return std::make_shared<const FiniteGrayCategory>(fixtures::by_name(name));
}

bool has_note(const AxiomReport& r, const std::string& s) {
  return std::find(r.notes.begin(), r.notes.end(), s) != r.notes.end();
}

}  // namespace

TEST_CASE("hat properties for strict endofunctors of chaotic2") {
  auto C = cat("chaotic2");
  auto fs = enumerate_strict_functors(C, C, 100);
  REQUIRE(fs.size() == 4);
  for (const auto& F : fs)
    for (const auto& G : fs) {
      CAPTURE(F.name);
      CAPTURE(G.name);
      AxiomReport r = check_hat_properties(weaken(F), weaken(G), 2);
      CHECK_MESSAGE(r.passed(), r.summary());
      CHECK(has_note(r, "HAT4: comparison icon found"));
    }
}

TEST_CASE("Gr of a strict functor commutes with ev") {
  auto A = cat("chaotic2"), B = cat("discrete2");
  auto TA = std::make_shared<const GrTruncation>(A, 2);
  auto TB = std::make_shared<const GrTruncation>(B, 2);
  for (const auto& F : enumerate_strict_functors(A, B, 10)) {
    GrMap M = gr_map(F, TA, TB);
    CHECK(M.strict);
    for (Gr2Id x = 0; x < TA->cells2(); ++x) CHECK(TB->ev2(M.cells2[x]) == F(2, TA->ev2(x)));
  }
}

TEST_CASE("weak functor with trivial constraints gives the strict Gr map") {
  auto C = cat("z2");
  auto T = std::make_shared<const GrTruncation>(C, 2);
  for (const auto& F : enumerate_strict_functors(C, C, 10)) {
    GrMap s = gr_map(F, T, T), w = gr_map(weaken(F), T, T);
    CHECK(s.gens == w.gens);
    CHECK(s.cells2 == w.cells2);
    CHECK(s.icon.phi2 == w.icon.phi2);
  }
}

TEST_CASE("Gr of the twisted weak functor on z2") {
  WeakFunctorData W;
  for (auto& w : fixtures::weak_functors())
    if (w.name == "z2-twisted") W = w;
  REQUIRE(W.source);
  auto T = std::make_shared<const GrTruncation>(W.source, 2);
  GrMap M = gr_map(W, T, T);
  CHECK_FALSE(M.strict);
  AxiomReport r = check_icon(M, W);
  CHECK_MESSAGE(r.passed(), r.summary());
  // φ on a singleton string is the identity.
  const auto& A = *W.source;
  StrId s = *T->find_string(0, 0, {A.identity(1, 0)});
  CHECK(M.icon.phi1[s].fwd == A.identity(2, A.identity(1, 0)));
  // φ on the empty string is ι.
  StrId e = *T->find_string(0, 0, {});
  CHECK(M.icon.phi1[e] == W.iota[0]);

  AxiomReport h = check_hat_properties(W, W, 2);
  CHECK_MESSAGE(h.passed(), h.summary());
}

TEST_CASE("missing tensorator is reported") {
  WeakFunctorData W = fixtures::weak_functors().front();
  W.chi.clear();
  auto T = std::make_shared<const GrTruncation>(W.source, 2);
  CHECK_THROWS_AS(gr_map(W, T, T), Error);
  try {
    gr_map(W, T, T);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingConstraint);
  }
}
