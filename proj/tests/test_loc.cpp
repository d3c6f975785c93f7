#include <doctest.h>

#include "gray/fixtures.hpp"
#include "gray/loc.hpp"

using namespace gray;

namespace {

CategoryPtr cat(const std::string& name) {
  return std::make_shared<const FiniteGrayCategory>(fixtures::by_name(name));
}

GrayFunctorData functor_with_objects(const CategoryPtr& A, const CategoryPtr& B,
                                     const std::vector<CellId>& objects) {
  for (auto& F : enumerate_strict_functors(A, B))
    if (F.map[0] == objects) return F;
  FAIL("no functor with that object map");
  return {};
}

}  // namespace

TEST_CASE("psi of an identity reduces to the empty zigzag") {
  for (const auto& A : fixtures::all()) {
    CAPTURE(A.name());
    LocContext ctx(1);
    auto pa = std::make_shared<const FiniteGrayCategory>(A);
    Zigzag z = psi(ctx, identity_functor(pa));
    CHECK(check_zigzag(ctx, z).passed());
    CHECK(z.links.size() == 3);
    Zigzag r = zigzag_reduce(ctx, z);
    CHECK(r.links.empty());
    CHECK(r.from == A.name());
  }
}

TEST_CASE("psi of a strict functor reduces to one forward link") {
  auto C = cat("chaotic2"), T = cat("terminal");
  LocContext ctx(1);
  std::vector<GrayFunctorData> fs = enumerate_strict_functors(C, C);
  fs.push_back(to_terminal(C, T));
  for (const auto& F : fs) {
    CAPTURE(F.name);
    Zigzag r = zigzag_reduce(ctx, psi(ctx, F));
    if (F.map == identity_functor(C).map) {
      CHECK(r.links.empty());
      continue;
    }
    REQUIRE(r.links.size() == 1);
    CHECK(r.links[0].forward);
    CHECK(r.links[0].word == std::vector<AtomId>{ctx.strict(F)});
    CHECK(zigzag_reduce(ctx, r) == r);
  }
}

TEST_CASE("psi respects composition after reduction") {
  LocContext ctx(1);
  auto C = cat("chaotic2"), D = cat("discrete2"), T = cat("terminal");
  std::vector<std::pair<GrayFunctorData, GrayFunctorData>> pairs;
  for (const auto& F : enumerate_strict_functors(C, C))
    for (const auto& G : enumerate_strict_functors(C, C)) pairs.emplace_back(F, G);
  for (const auto& F : enumerate_strict_functors(D, C)) pairs.emplace_back(F, to_terminal(C, T));
  for (const auto& [F, G] : pairs) {
    CAPTURE(F.name);
    CAPTURE(G.name);
    Zigzag lhs = zigzag_reduce(ctx, then(psi(ctx, G), psi(ctx, F)));
    Zigzag rhs = zigzag_reduce(ctx, psi(ctx, compose(G, F)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reduction is idempotent and provably equal to its input") {
  LocContext ctx(1);
  auto C = cat("chaotic2");
  for (const auto& F : enumerate_strict_functors(C, C)) {
    Zigzag z = then(psi(ctx, F), psi(ctx, F));
    Zigzag r = zigzag_reduce(ctx, z);
    CHECK(zigzag_reduce(ctx, r) == r);
    auto eq = zigzag_equal_bounded(ctx, z, r, int(z.links.size()) + 8);
    REQUIRE(eq.equal);
    CHECK(replay(ctx, eq));
  }
}

TEST_CASE("tritransformation search") {
  auto C = cat("chaotic2");
  PathCategory P = build_path(C);
  auto fs = enumerate_strict_functors(C, C);
  for (const auto& F : fs)
    for (const auto& G : fs) {
      auto out = pseudo_nat_equiv_search(F, G, P);
      REQUIRE(out.status == SearchStatus::Found);
      WeakFunctorData H = pair_functor(F, G, *out.value, P);
      CHECK(compose(P.S, underlying(H)).map == F.map);
      CHECK(compose(P.T, underlying(H)).map == G.map);
    }
  for (const char* name : {"z2", "idem3", "chaotic2"}) {
    auto B = cat(name);
    PathCategory PB = build_path(B);
    auto id = identity_functor(B);
    auto out = pseudo_nat_equiv_search(id, id, PB);
    REQUIRE(out.value);
    CHECK(*out.value == identity_tritransformation(id, PB));
  }
  auto T = cat("terminal"), D = cat("discrete2");
  PathCategory PD = build_path(D);
  auto out = pseudo_nat_equiv_search(functor_with_objects(T, D, {0}),
                                     functor_with_objects(T, D, {1}), PD);
  CHECK(out.status == SearchStatus::NotFound);
  CHECK(pseudo_nat_equiv_search(identity_functor(C), fs.back(), P, 2).status ==
        SearchStatus::BudgetExhausted);
}

TEST_CASE("pseudo-naturally equivalent functors have equal zigzags") {
  auto C = cat("chaotic2");
  PathCategory P = build_path(C);
  LocContext ctx(1);
  REQUIRE(ctx.add_path(P).passed());
  auto fs = enumerate_strict_functors(C, C);
  for (const auto& F : fs)
    for (const auto& G : fs) {
      CAPTURE(F.name);
      CAPTURE(G.name);
      auto t = pseudo_nat_equiv_search(F, G, P);
      REQUIRE(t.value);
      WeakFunctorData H = pair_functor(F, G, *t.value, P);
      AxiomReport rep = ctx.add_pair(H, P, F, G);
      REQUIRE_MESSAGE(rep.passed(), rep.summary());
      auto eq = zigzag_equal_bounded(ctx, psi(ctx, F), psi(ctx, G), 12);
      REQUIRE(eq.equal);
      CHECK(eq.rules.size() <= 12);
      CHECK(replay(ctx, eq));
    }
}

TEST_CASE("unrelated functors stay apart within depth") {
  auto T = cat("terminal"), D = cat("discrete2");
  LocContext ctx(1);
  auto a = functor_with_objects(T, D, {0}), b = functor_with_objects(T, D, {1});
  auto eq = zigzag_equal_bounded(ctx, psi(ctx, a), psi(ctx, b), 8);
  CHECK_FALSE(eq.equal);
  CHECK(eq.explored > 2);
}
