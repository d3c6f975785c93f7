#include <doctest.h>

#include "../tests/oracle.hpp"
#include "gray/fixtures.hpp"
#include "gray/free.hpp"
#include "gray/ops.hpp"

using namespace gray;

namespace {

std::shared_ptr<const GrTruncation> trunc(const std::string& name, int L) {
  auto A = std::make_shared<const FiniteGrayCategory>(fixtures::by_name(name));
  return std::make_shared<const GrTruncation>(A, L);
}

GrCounts counts_of(const oracle::Counts& c) { return {c.strings, c.gens, c.cells2, c.cells3}; }

}  // namespace

TEST_CASE("truncation counts for chaotic2") {
  // Frozen from the brute-force oracle.
  CHECK(trunc("chaotic2", 1)->counts() == GrCounts{6, 18, 24, 76});
  CHECK(trunc("chaotic2", 2)->counts() == GrCounts{14, 114, 1114, 33750});
}

TEST_CASE("truncation counts agree with the oracle") {
  for (const auto& A : fixtures::all())
    for (int L = 0; L <= 2; ++L) {
      CAPTURE(A.name());
      CAPTURE(L);
      auto T = GrTruncation(std::make_shared<const FiniteGrayCategory>(A), L);
      CHECK(T.counts() == counts_of(oracle::truncation_counts(A, L)));
    }
}

TEST_CASE("terminal at L=0 has only empty cells") {
  auto T = trunc("terminal", 0);
  CHECK(T->counts() == GrCounts{1, 1, 1, 1});
  CHECK(check_truncation(*T).passed());
}

TEST_CASE("string concatenation and evaluation") {
  auto T = trunc("chaotic2", 2);
  const auto& A = T->base();
  const CellId a = *A.find(0, "a"), b = *A.find(0, "b");
  const CellId f = *A.find(1, "f"), g = *A.find(1, "g");
  StrId sf = *T->find_string(a, b, {f}), sg = *T->find_string(b, a, {g});
  StrId ea = *T->find_string(a, a, {});
  StrId gf = *T->tensor1(sg, sf);
  CHECK(T->string(gf).cells == std::vector<CellId>{f, g});
  CHECK(*T->tensor1(sf, ea) == sf);
  CHECK(T->ev1(ea) == A.identity(1, a));
  CHECK(T->ev1(sf) == f);
  CHECK_FALSE(T->tensor1(sf, *T->tensor1(sg, sf)).has_value());
}

TEST_CASE("post-whisker shifts indices, pre-whisker keeps them") {
  auto T = trunc("chaotic2", 3);
  const auto& A = T->base();
  Ops o{A};
  const CellId a = *A.find(0, "a"), b = *A.find(0, "b");
  const CellId f = *A.find(1, "f"), g = *A.find(1, "g");
  StrId sf = *T->find_string(a, b, {f});
  StrId s1a = *T->find_string(a, a, {A.identity(1, a)});
  StrId sgf = *T->find_string(a, a, {f, g});
  // Generator on {1a} with k = l1 = l2 = 1.
  GrGen gen{s1a, s1a, 1, 1, 1, A.identity(2, A.identity(1, a))};
  GenId g0 = *T->find_gen(gen);
  CHECK(T->bracket(g0) == gen.payload);
  GenId post = *T->whisker_gen(Side::Post, sgf, g0);
  CHECK(T->gen(post).k == 1 + 0);
  GenId pre = *T->whisker_gen(Side::Pre, sgf, g0);
  CHECK(T->gen(pre).k == 3);
  CHECK(T->gen(pre).l1 == 3);
  CHECK(T->gen(post).l1 == 1);
  CHECK(T->bracket(post) == o.post(o.t1(g, f), 2, gen.payload));
  (void)sf;
  (void)b;
}

TEST_CASE("truncation checks pass on every fixture") {
  for (const auto& A : fixtures::all())
    for (int L = 0; L <= 2; ++L) {
      CAPTURE(A.name());
      CAPTURE(L);
      GrTruncation T(std::make_shared<const FiniteGrayCategory>(A), L);
      AxiomReport r = check_truncation(T);
      CHECK_MESSAGE(r.passed(), r.summary());
      CHECK(r.checked > 0);
    }
}

TEST_CASE("serial and parallel truncation checks agree") {
  auto T = trunc("z2", 2);
  CHECK(check_truncation(*T, Exec::Serial) == check_truncation(*T, Exec::Parallel));
}

TEST_CASE("broken base interchanger shows up in the truncation") {
  for (const auto& m : fixtures::chaotic2_mutations()) {
    if (m.expected_tag != "C3") continue;
    GrTruncation T(std::make_shared<const FiniteGrayCategory>(m.category), 2);
    AxiomReport r = check_truncation(T);
    CHECK(r.has_tag("C3"));
  }
}
