#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/surface.hpp"

using namespace gray;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing " << path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixture_file(const std::string& name) {
  return std::string(GRAY_FIXTURE_DIR) + "/" + name;
}

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, {}, "");
}

std::string semantic_error(const std::string& text) {
  try {
    to_category(parse(text));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Semantic);
    return e.what();
  }
  FAIL("no semantic error");
  return {};
}

}  // namespace

TEST_CASE("golden category files round-trip byte for byte") {
  for (const auto& C : fixtures::all()) {
    CAPTURE(C.name());
    const std::string text = slurp(fixture_file(C.name() + ".gray"));
    CHECK(serialize(from_category(C)) == text);
    const FiniteGrayCategory back = to_category(parse(text));
    CHECK(serialize(from_category(back)) == text);
    CHECK(check_gray_axioms(back).passed());
    for (int d = 0; d <= 3; ++d) CHECK(back.count(d) == C.count(d));
  }
}

TEST_CASE("serialize is canonical under entry reordering and comments") {
  const std::string text = slurp(fixture_file("chaotic2.gray"));
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  // Reverse the top-level entries after the header, keeping blocks together.
  std::vector<std::vector<std::string>> groups;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i][0] != ' ') groups.emplace_back();
    groups.back().push_back(lines[i]);
  }
  std::string shuffled = "# reordered copy\n" + lines[0] + "\n";
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    shuffled += (*it)[0] + "   # trailing comment\n\n";
    for (std::size_t j = it->size(); j-- > 1;) shuffled += (*it)[j] + "\n";
  }
  CHECK(serialize(parse(shuffled)) == text);
  CHECK(canonical(parse(shuffled)) == parse(text));
  CHECK(canonical(canonical(parse(shuffled))) == canonical(parse(shuffled)));
}

TEST_CASE("natural order puts digit runs in numeric order") {
  Document d = parse("ZIGZAG z a a 1\nLINK 10 >\nLINK 2 >\nLINK 1 >\n");
  CHECK(serialize(d) == "ZIGZAG z a a 1\nLINK 1 >\nLINK 2 >\nLINK 10 >\n");
}

TEST_CASE("an empty OBJECTS section gives the empty category") {
  FiniteGrayCategory C = to_category(parse("CATEGORY empty\nOBJECTS\n"));
  for (int d = 0; d <= 3; ++d) CHECK(C.count(d) == 0);
  CHECK(check_gray_axioms(C).passed());
  CHECK(serialize(from_category(C)) == "CATEGORY empty\nOBJECTS\n");
}

TEST_CASE("syntax errors carry a position and the expected tokens") {
  {
    auto e = parse_error("FROB x\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
    CHECK(e.expected().count("CATEGORY"));
    CHECK(e.kind() == ErrorKind::Parse);
  }
  {
    auto e = parse_error("CATEGORY c\nOBJECTS a\nSIGMA x y\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
    CHECK(e.expected() == std::set<std::string>{"="});
  }
  {
    auto e = parse_error("CATEGORY c\nOBJECTS a\n  CELL1 f\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(e.expected().count("HOM"));
  }
  {
    auto e = parse_error("CATEGORY c\nOBJECTS a\nHOM a a\n  SIGMA x y = z\n");
    CHECK(e.line() == 4);
    CHECK(e.expected().count("CELL2"));
  }
  {
    auto e = parse_error("FUNCTOR F A B\nMAP1 f g = h\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  {
    auto e = parse_error("WEAKFUNCTOR F A B\nCHI g f = x y z\n");
    CHECK(e.line() == 2);
    CHECK(e.expected() == std::set<std::string>{"<name>"});
  }
  {
    auto e = parse_error("CATEGORY\n");
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
  }
  CHECK(parse_error("").line() == 1);
  CHECK(parse_error("CATEGORY c\nOBJECTS a = b\n").column() == 11);
}

TEST_CASE("semantic errors name the offending entry") {
  const std::string base = "CATEGORY c\nOBJECTS a\nHOM a a\n  CELL1 1a\n  CELL2 11a 1a 1a\n";
  std::string msg = semantic_error(base + "SIGMA 11a 11a = nope\n");
  CHECK(msg.find("line 6: SIGMA 11a 11a") != std::string::npos);
  CHECK(msg.find("unknown 3-cell 'nope'") != std::string::npos);

  msg = semantic_error(base + "HOM a b\n");
  CHECK(msg.find("line 6: HOM a b") != std::string::npos);

  msg = semantic_error("CATEGORY c\nOBJECTS a b\nHOM a b\n  CELL1 f\nHOM a a\n  CELL1 1a\n"
                       "  CELL2 x f f\n");
  CHECK(msg.find("line 7: CELL2 x f f") != std::string::npos);
  CHECK(msg.find("boundary outside HOM") != std::string::npos);

  msg = semantic_error("CATEGORY c\nOBJECTS a a\n");
  CHECK(msg.find("duplicate object") != std::string::npos);

  msg = semantic_error(base + "WHISKER SIDEWAYS 2 1a 11a = 11a\n");
  CHECK(msg.find("POST or PRE") != std::string::npos);
}

TEST_CASE("functor, weak functor and tritransformation documents round-trip") {
  Library lib;
  auto C = lib.category("chaotic2");
  for (const auto& F : enumerate_strict_functors(C, C)) {
    const std::string text = serialize(from_functor(F));
    const GrayFunctorData back = to_functor(parse(text), lib);
    CHECK(back == F);
    CHECK(serialize(from_functor(back)) == text);
  }
  for (const auto& W : fixtures::weak_functors()) {
    CAPTURE(W.name);
    Library l2;
    const std::string text = serialize(from_weak(W));
    const WeakFunctorData back = to_weak(parse(text), l2);
    CHECK(serialize(from_weak(back)) == text);
    CHECK(back.chi.size() == W.chi.size());
    CHECK(check_weak_functor(back).passed());
  }
  const GrayFunctorData F = enumerate_strict_functors(C, C).front();
  const PathCategory PC = build_path(C);
  const Tritransformation id = identity_tritransformation(F, PC);
  lib.functors[F.name] = F;
  const std::string text = serialize(from_trit("idF", id, F, F, *C));
  const Tritransformation back = to_trit(parse(text), lib);
  CHECK(back == id);
  CHECK(serialize(from_trit("idF", back, F, F, *C)) == text);
  CHECK(check_weak_functor(pair_functor(F, F, back, PC)).passed());
}

TEST_CASE("library resolves built-in, enumerated and composite names") {
  Library lib;
  CHECK(lib.category("z2")->name() == "z2");
  CHECK_THROWS_AS(lib.category("nope"), Error);
  const auto& F = lib.functor("chaotic2->chaotic2#1");
  CHECK(F == enumerate_strict_functors(lib.category("chaotic2"), lib.category("chaotic2"))[1]);
  const auto& I = lib.functor("id_chaotic2");
  CHECK(I.map == identity_functor(lib.category("chaotic2")).map);
  const auto& GF = lib.functor("chaotic2->terminal#0.chaotic2->chaotic2#1");
  CHECK(GF.target->name() == "terminal");
  CHECK(lib.weak_functor("z2-twisted").iota.size() == 1);
  CHECK_THROWS_AS(lib.functor("chaotic2->terminal#5"), Error);
}

TEST_CASE("zigzag documents round-trip through a context") {
  Library lib;
  LocContext ctx(1);
  const auto& F = lib.functor("chaotic2->chaotic2#1");
  const Zigzag z = psi(ctx, F);
  const std::string text = serialize(from_zigzag("psiF", ctx, z));
  CHECK(text.find("LINK 0 < ev:chaotic2") != std::string::npos);
  CHECK(to_zigzag(parse(text), lib, ctx) == z);

  const Zigzag r = zigzag_reduce(ctx, z);
  const std::string rt = serialize(from_zigzag("r", ctx, r));
  CHECK(to_zigzag(parse(rt), lib, ctx) == r);

  const Zigzag w = psi(ctx, lib.weak_functor("z2-twisted"));
  const std::string wt = serialize(from_zigzag("w", ctx, w));
  CHECK(to_zigzag(parse(wt), lib, ctx) == w);

  LocContext other(2);
  CHECK_THROWS_AS(to_zigzag(parse(text), lib, other), Error);
  CHECK_THROWS_AS(to_zigzag(parse("ZIGZAG z chaotic2 terminal 1\nLINK 0 > fun:id_z2\n"), lib, ctx),
                  Error);
  CHECK_THROWS_AS(to_zigzag(parse("ZIGZAG z chaotic2 chaotic2 1\nLINK 0 > bogus\n"), lib, ctx),
                  Error);
}
