#include <doctest.h>

#include "gray/fixtures.hpp"
#include "gray/functor.hpp"

using namespace gray;

namespace {
CategoryPtr ptr(FiniteGrayCategory C) { return std::make_shared<const FiniteGrayCategory>(std::move(C)); }
}  // namespace

TEST_CASE("identity and terminal functors pass") {
  auto ch = ptr(fixtures::chaotic2());
  auto t = ptr(fixtures::terminal());
  CHECK(check_gray_functor(identity_functor(ch)).passed());
  CHECK(check_gray_functor(to_terminal(ch, t)).passed());
}

TEST_CASE("object swap with 1-cells fixed breaks boundaries") {
  auto ch = ptr(fixtures::chaotic2());
  auto F = identity_functor(ch);
  std::swap(F.map[0][0], F.map[0][1]);
  auto rep = check_gray_functor(F);
  CHECK(rep.has_tag("BOUNDARY"));
}

TEST_CASE("endofunctors of chaotic2 and z2") {
  auto ch = ptr(fixtures::chaotic2());
  auto fs = enumerate_strict_functors(ch, ch);
  CHECK(fs.size() == 4);
  auto z = ptr(fixtures::z2());
  CHECK(enumerate_strict_functors(z, z).size() == 2);
  auto id3 = ptr(fixtures::idem3());
  CHECK(enumerate_strict_functors(id3, id3).size() == 2);
  auto d2 = ptr(fixtures::discrete2());
  CHECK(enumerate_strict_functors(d2, d2).size() == 4);
  CHECK(enumerate_strict_functors(ch, d2).size() == 2);  // the two constants
}

TEST_CASE("strict functors are closed under composition") {
  auto ch = ptr(fixtures::chaotic2());
  auto fs = enumerate_strict_functors(ch, ch);
  for (auto& F : fs)
    for (auto& G : fs) CHECK(check_gray_functor(compose(G, F), 3, Exec::Serial).passed());
}

#include "gray/weak.hpp"

TEST_CASE("weak functors") {
  for (auto& W : fixtures::weak_functors()) {
    INFO(W.name);
    CHECK(check_weak_functor(W).passed());
  }
  auto ws = fixtures::weak_functors();
  CHECK(has_trivial_constraints(ws[0]));
  CHECK_FALSE(has_trivial_constraints(ws[1]));

  auto z = ws[1];
  z.gamma.clear();
  CHECK(check_weak_functor(z).has_tag("MISSING"));

  // ι trivial but χ twisted: the left unitor has no 3-cell.
  auto bad = ws[1];
  bad.iota[0] = weaken(identity_functor(bad.source)).iota[0];
  bad.gamma.clear();
  bad.delta.clear();
  complete_constraints(bad);
  CHECK(bad.gamma.empty());
}
