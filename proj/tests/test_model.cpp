#include <doctest.h>

#include "gray/fixtures.hpp"
#include "gray/model.hpp"

using namespace gray;

namespace {

CategoryPtr cat(const std::string& name) {
  return std::make_shared<const FiniteGrayCategory>(fixtures::by_name(name));
}

CategoryPtr make(FiniteGrayCategory C) {
  declare_identities(C);
  complete_thin(C);
  return std::make_shared<const FiniteGrayCategory>(std::move(C));
}

CategoryPtr empty() { return make(FiniteGrayCategory("empty")); }

/// Free on one 1-cell f: a → b.
CategoryPtr interval() {
  FiniteGrayCategory C("interval");
  CellId a = C.add_object("a"), b = C.add_object("b");
  C.set_identity(1, a, C.add_cell(1, "1a", a, a));
  C.set_identity(1, b, C.add_cell(1, "1b", b, b));
  C.add_cell(1, "f", a, b);
  return make(std::move(C));
}

GrayFunctorData from_empty(const CategoryPtr& B) {
  GrayFunctorData F{"!", empty(), B, {}};
  return F;
}

/// The unique functor with the given object map, if it exists.
GrayFunctorData functor_with_objects(const CategoryPtr& A, const CategoryPtr& B,
                                     const std::vector<CellId>& objects) {
  for (auto& F : enumerate_strict_functors(A, B))
    if (F.map[0] == objects) return F;
  FAIL("no functor with that object map");
  return {};
}

std::vector<std::string> tags(const AxiomReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.violations)
    if (out.empty() || out.back() != v.tag) out.push_back(v.tag);
  return out;
}

}  // namespace

TEST_CASE("trivial fibrations") {
  for (const auto& name : {"terminal", "chaotic2", "discrete2", "idem3", "z2"})
    CHECK(is_trivial_fibration(identity_functor(cat(name))).passed());
  CHECK(is_trivial_fibration(to_terminal(cat("chaotic2"), cat("terminal"))).passed());
  // hom(a, b) is empty in discrete2 but hom(*, *) is not.
  AxiomReport r = is_trivial_fibration(to_terminal(cat("discrete2"), cat("terminal")));
  CHECK(tags(r) == std::vector<std::string>{"TF1"});
  // idem3 → terminal collapses two 3-cells.
  CHECK(tags(is_trivial_fibration(to_terminal(cat("idem3"), cat("terminal")))) ==
        std::vector<std::string>{"TF3"});
}

TEST_CASE("triequivalences") {
  for (const auto& name : {"terminal", "chaotic2", "discrete2", "idem3", "z2"})
    CHECK(is_triequivalence(identity_functor(cat(name))).passed());
  CHECK(is_triequivalence(to_terminal(cat("chaotic2"), cat("terminal"))).passed());
  CHECK(tags(is_triequivalence(to_terminal(cat("discrete2"), cat("terminal")))) ==
        std::vector<std::string>{"TE1"});
  // Not surjective on objects, but b ≃ a.
  GrayFunctorData F = functor_with_objects(cat("terminal"), cat("chaotic2"), {0});
  CHECK_FALSE(is_trivial_fibration(F).passed());
  CHECK(is_triequivalence(F).passed());
}

TEST_CASE("trivial fibration implies triequivalence on fixture functors") {
  const auto all = fixtures::all();
  for (const auto& A : all)
    for (const auto& B : all) {
      auto pa = std::make_shared<const FiniteGrayCategory>(A);
      auto pb = std::make_shared<const FiniteGrayCategory>(B);
      for (const auto& F : enumerate_strict_functors(pa, pb, 8)) {
        CAPTURE(F.name);
        if (is_trivial_fibration(F).passed()) CHECK(is_triequivalence(F).passed());
      }
    }
}

TEST_CASE("ev is a trivial fibration once strings of length one exist") {
  for (const auto& A : fixtures::all())
    for (int L = 1; L <= 2; ++L) {
      CAPTURE(A.name());
      CAPTURE(L);
      GrTruncation T(std::make_shared<const FiniteGrayCategory>(A), L);
      AxiomReport r = is_trivial_fibration(T);
      CHECK_MESSAGE(r.passed(), r.summary());
    }
  GrTruncation T0(cat("chaotic2"), 0);
  CHECK(tags(is_trivial_fibration(T0)) == std::vector<std::string>{"TF1"});
}

TEST_CASE("sections of ev") {
  for (const auto& A : fixtures::all())
    for (auto ids : {IdentityImage::Singleton, IdentityImage::Empty}) {
      CAPTURE(A.name());
      Section s = section_of_ev(std::make_shared<const FiniteGrayCategory>(A), 1, ids);
      AxiomReport r = check_section(s);
      CHECK_MESSAGE(r.passed(), r.summary());
    }
  auto B = cat("chaotic2");
  Section s = section_of_ev(B, 1);
  const CellId f = *B->find(1, "f"), ia = *B->find(1, "1a");
  CHECK(s.trunc->string(s.strings[f]).cells == std::vector<CellId>{f});
  CHECK(s.trunc->string(s.strings[ia]).cells == std::vector<CellId>{ia});
  CHECK(s.trunc->ev1(s.strings[ia]) == ia);
  Section e = section_of_ev(B, 1, IdentityImage::Empty);
  CHECK(e.trunc->string(e.strings[ia]).size() == 0);
  CHECK_THROWS_AS(section_of_ev(B, 0), Error);
}

TEST_CASE("lifting against the identity returns the bottom map") {
  auto B = cat("chaotic2");
  auto fs = enumerate_strict_functors(B, B);
  REQUIRE(fs.size() > 1);
  for (const auto& bottom : fs) {
    LiftingProblem p{from_empty(B), identity_functor(B), from_empty(B), bottom, {}};
    for (int d = 0; d <= 3; ++d)
      for (CellId x = 0; x < B->count(d); ++x) p.generators[d].push_back(x);
    CHECK(check_lifting_problem(p).passed());
    CHECK(lift_through_trivial_fibration(p).map == bottom.map);
  }
}

TEST_CASE("lifting a free 1-cell through a trivial fibration") {
  auto I = interval(), C = cat("chaotic2"), T = cat("terminal");
  LiftingProblem p{from_empty(I), to_terminal(C, T), from_empty(C), to_terminal(I, T), {}};
  p.generators[0] = {0, 1};
  p.generators[1] = {*I->find(1, "f")};
  REQUIRE(check_lifting_problem(p).passed());
  GrayFunctorData L = lift_through_trivial_fibration(p);
  CHECK(check_gray_functor(L).passed());
  CHECK(compose(p.right, L).map == p.bottom.map);
}

TEST_CASE("lifting fails on a map that misses a 1-cell") {
  auto I = interval(), C = cat("chaotic2"), D = cat("discrete2");
  GrayFunctorData incl = functor_with_objects(D, C, {0, 1});
  GrayFunctorData bottom = functor_with_objects(I, C, {0, 1});
  LiftingProblem p{from_empty(I), incl, from_empty(D), bottom, {}};
  p.generators[0] = {0, 1};
  p.generators[1] = {*I->find(1, "f")};
  CHECK_FALSE(is_trivial_fibration(incl).passed());
  CHECK_THROWS_WITH_AS(lift_through_trivial_fibration(p), doctest::Contains("generator f"), Error);
}

TEST_CASE("right homotopy search") {
  for (const char* name : {"terminal", "chaotic2", "z2"}) {
    CAPTURE(name);
    auto B = cat(name);
    PathCategory P = build_path(B);
    for (const auto& F : enumerate_strict_functors(B, B))
      for (const auto& G : enumerate_strict_functors(B, B)) {
        auto out = right_homotopy_search(F, G, P);
        REQUIRE(out.status != SearchStatus::BudgetExhausted);
        // Brute force over every functor into ℙB.
        bool brute = false;
        for (const auto& H : enumerate_strict_functors(B, P.cat))
          brute = brute || (compose(P.S, H).map == F.map && compose(P.T, H).map == G.map);
        CHECK((out.status == SearchStatus::Found) == brute);
        if (out.value) {
          CHECK(check_gray_functor(*out.value).passed());
          CHECK(compose(P.S, *out.value).map == F.map);
          CHECK(compose(P.T, *out.value).map == G.map);
        }
      }
  }
}

TEST_CASE("right homotopy search outcomes") {
  auto T = cat("terminal"), D = cat("discrete2"), C = cat("chaotic2");
  PathCategory PD = build_path(D);
  auto toa = functor_with_objects(T, D, {0}), tob = functor_with_objects(T, D, {1});
  CHECK(right_homotopy_search(toa, tob, PD).status == SearchStatus::NotFound);
  CHECK(right_homotopy_search(toa, toa, PD).status == SearchStatus::Found);
  PathCategory PC = build_path(C);
  auto id = identity_functor(C);
  CHECK(right_homotopy_search(id, id, PC, 3).status == SearchStatus::BudgetExhausted);
  auto out = right_homotopy_search(id, id, PC);
  REQUIRE(out.value);
  CHECK(out.value->map == compose(PC.C, id).map);
}

TEST_CASE("strictify leaves strict functors alone") {
  auto C = cat("chaotic2");
  for (const auto& F : enumerate_strict_functors(C, C)) {
    Strictification s = strictify(weaken(F));
    CHECK_MESSAGE(s.report.passed(), s.report.summary());
    CHECK(s.strict.map == F.map);
    for (const auto& e : s.icon.phi1) CHECK(C->is_identity(2, e.fwd));
  }
  auto Z = cat("z2");
  Strictification s = strictify(weaken(identity_functor(Z)));
  CHECK(s.strict.map == identity_functor(Z).map);
}

TEST_CASE("strictify of weak fixture functors") {
  for (const auto& W : fixtures::weak_functors()) {
    CAPTURE(W.name);
    Strictification s = strictify(W);
    CHECK_MESSAGE(s.report.passed(), s.report.summary());
    CHECK(check_gray_functor(s.strict).passed());
  }
  const WeakFunctorData twisted = fixtures::weak_functors().back();
  Strictification s = strictify(twisted);
  const auto& B = *twisted.target;
  // The unitor reaches the icon on the identity 1-cell.
  CHECK(s.icon.phi1[0].fwd == *B.find(2, "s"));
}
