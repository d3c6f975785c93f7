// gray: command-line front end. Every command prints one JSON report on
// stdout (except `fixture`, which prints a document) and exits with
//   0 pass / found / equal, 1 fail / not found, 2 inconclusive, 3 input error.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/loc.hpp"
#include "gray/model.hpp"
#include "gray/surface.hpp"

using namespace gray;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "gray-report/1";

enum Code { kPass = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

const char* verdict_of(int code) {
  static const char* v[] = {"pass", "fail", "inconclusive", "error"};
  return v[code];
}

/// Thrown by commands for malformed requests that are not library errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kPass;
  json body = json::object();
};

json witnesses(const AxiomReport& r, std::size_t limit = 50) {
  json out = json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i) {
    const Violation& v = r.violations[i];
    json cells = json::array();
    for (const CellRef& c : v.witness) cells.push_back({c.dim, c.id});
    out.push_back({{"tag", v.tag}, {"cells", cells}, {"detail", v.detail}});
  }
  return out;
}

json tags(const AxiomReport& r) {
  std::set<std::string> s;
  for (const auto& v : r.violations) s.insert(v.tag);
  return s;
}

Outcome from_report(const AxiomReport& r) {
  Outcome o{r.passed() ? kPass : kFail, json::object()};
  o.body["witnesses"] = witnesses(r);
  o.body["violation_count"] = r.violations.size();
  o.body["violation_tags"] = tags(r);
  o.body["certificates"] = {{"checked", r.checked}, {"skipped", r.skipped}, {"notes", r.notes}};
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Writes via a temporary file and rename, so readers never see a partial file.
void write_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

/// A file argument is parsed and loaded into the library; anything else is a
/// built-in name.
struct Inputs {
  Library lib;

  Document document(const std::string& arg) {
    if (!is_file(arg)) throw InputError("no such file " + arg);
    return parse(read_file(arg));
  }

  std::string load(const std::string& arg) {
    if (!is_file(arg)) return arg;
    Document d = document(arg);
    if (d.kind == DocKind::Zigzag) throw InputError(arg + " is a zigzag, expected a definition");
    return lib.load(d);
  }

  CategoryPtr category(const std::string& arg) { return lib.category(load(arg)); }
  const GrayFunctorData& functor(const std::string& arg) { return lib.functor(load(arg)); }
  const WeakFunctorData& weak(const std::string& arg) { return lib.weak_functor(load(arg)); }
};

json counts(const FiniteGrayCategory& C) {
  return {C.count(0), C.count(1), C.count(2), C.count(3)};
}

// ---------------------------------------------------------------------------

Outcome cmd_check(Inputs& in, const std::string& arg) {
  if (!is_file(arg)) {
    Outcome o = from_report(check_gray_axioms(*in.category(arg)));
    o.body["kind"] = "category";
    return o;
  }
  const Document d = in.document(arg);
  Outcome o;
  switch (d.kind) {
    case DocKind::Category: {
      const FiniteGrayCategory C = to_category(d);
      o = from_report(check_gray_axioms(C));
      o.body["counts"] = counts(C);
      break;
    }
    case DocKind::Functor:
      o = from_report(check_gray_functor(to_functor(d, in.lib)));
      break;
    case DocKind::WeakFunctor:
      o = from_report(check_weak_functor(to_weak(d, in.lib)));
      break;
    case DocKind::Tritransformation: {
      const GrayFunctorData& F = in.lib.functor(d.params[0]);
      const GrayFunctorData& G = in.lib.functor(d.params[1]);
      const PathCategory P = build_path(F.target);
      try {
        o = from_report(check_weak_functor(pair_functor(F, G, to_trit(d, in.lib), P)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::AxiomFail) throw;
        AxiomReport r;
        r.add("TRIT", {}, e.what());
        o = from_report(r);
      }
      break;
    }
    case DocKind::Zigzag: {
      LocContext ctx(std::stoi(d.params[2]));
      o = from_report(check_zigzag(ctx, to_zigzag(d, in.lib, ctx)));
      break;
    }
  }
  o.body["kind"] = to_string(d.kind);
  return o;
}

Outcome cmd_gr(Inputs& in, const std::string& arg, int bound, bool dump, std::size_t max_cells) {
  const CategoryPtr A = in.category(arg);
  std::shared_ptr<GrTruncation> T;
  try {
    T = std::make_shared<GrTruncation>(A, bound, max_cells);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    Outcome o{kInconclusive, json::object()};
    o.body["reason"] = e.what();
    return o;
  }
  AxiomReport r = T->build_report();
  r.merge(check_truncation(*T));
  Outcome o = from_report(r);
  const GrCounts c = T->counts();
  o.body["truncation"] = T->name();
  o.body["counts"] = {{"objects", T->objects()}, {"strings", c.strings}, {"generators", c.gens},
                      {"cells2", c.cells2}, {"cells3", c.cells3}};
  if (dump) {
    const FiniteGrayCategory& B = T->base();
    json strings = json::array(), gens = json::array(), cells = json::array();
    for (StrId s = 0; s < T->strings(); ++s) {
      json cs = json::array();
      for (CellId f : T->string(s).cells) cs.push_back(B.cell_name(1, f));
      strings.push_back({{"from", B.cell_name(0, T->string(s).from)},
                         {"to", B.cell_name(0, T->string(s).to)}, {"cells", cs}});
    }
    for (GenId g = 0; g < T->gens(); ++g) {
      const GrGen& x = T->gen(g);
      gens.push_back({{"src", x.src}, {"tgt", x.tgt}, {"k", x.k}, {"l1", x.l1}, {"l2", x.l2},
                      {"payload", B.cell_name(2, x.payload)}});
    }
    for (Gr2Id x = 0; x < T->cells2(); ++x)
      cells.push_back({{"src", T->cell2(x).src}, {"tgt", T->cell2(x).tgt}, {"gens", T->cell2(x).gens}});
    o.body["dump"] = {{"strings", strings}, {"generators", gens}, {"cells2", cells}};
  }
  return o;
}

Outcome cmd_ev(Inputs& in, const std::string& arg, int bound) {
  const GrTruncation T(in.category(arg), bound);
  Outcome o = from_report(is_trivial_fibration(T));
  o.body["truncation"] = T.name();
  o.body["property"] = "trivial fibration";
  return o;
}

Outcome cmd_path(Inputs& in, const std::string& mode, const std::string& arg) {
  const PathCategory P = build_path(in.category(arg));
  Outcome o;
  if (mode == "build") {
    o = from_report(P.build_report);
  } else {
    AxiomReport r = check_path_cells(P);
    r.merge(check_gray_axioms(*P.cat));
    r.merge(check_C_weak_equivalence(P));
    for (const auto* F : {&P.S, &P.T, &P.C}) r.merge(check_gray_functor(*F));
    o = from_report(r);
  }
  o.body["path_category"] = P.cat->name();
  o.body["counts"] = counts(*P.cat);
  return o;
}

Outcome cmd_trivfib(Inputs& in, const std::string& arg, bool triequiv) {
  const GrayFunctorData& F = in.functor(arg);
  Outcome o = from_report(triequiv ? is_triequivalence(F) : is_trivial_fibration(F));
  o.body["functor"] = F.name;
  o.body["property"] = triequiv ? "triequivalence" : "trivial fibration";
  return o;
}

Outcome cmd_lift(Inputs& in, const std::string& left, const std::string& right, const std::string& top,
                 const std::string& bottom, const std::vector<std::string>& gens) {
  LiftingProblem p{in.functor(left), in.functor(right), in.functor(top), in.functor(bottom), {}};
  const FiniteGrayCategory& B = *p.left.target;
  for (const std::string& g : gens) {
    const auto colon = g.find(':');
    if (colon != 1 || g[0] < '0' || g[0] > '3') throw InputError("generator must be DIM:NAME, got " + g);
    const int d = g[0] - '0';
    auto id = B.find(d, g.substr(2));
    if (!id) throw InputError("no " + std::to_string(d) + "-cell " + g.substr(2) + " in " + B.name());
    p.generators[d].push_back(*id);
  }
  const AxiomReport sq = check_lifting_problem(p);
  if (!sq.passed()) throw InputError("not a lifting problem: " + sq.summary());
  Outcome o;
  try {
    GrayFunctorData l = lift_through_trivial_fibration(p);
    l.name = "lift";
    o.body["lift"] = serialize(from_functor(l));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoLift && e.kind() != ErrorKind::Incoherent) throw;
    AxiomReport r;
    r.add(e.kind() == ErrorKind::NoLift ? "NOLIFT" : "INCOHERENT", {}, e.what());
    o = from_report(r);
  }
  return o;
}

Outcome cmd_section(Inputs& in, const std::string& arg, int bound, bool empty_ids) {
  const Section s = section_of_ev(in.category(arg), bound,
                                  empty_ids ? IdentityImage::Empty : IdentityImage::Singleton);
  Outcome o = from_report(check_section(s));
  o.body["truncation"] = s.trunc->name();
  o.body["identities"] = empty_ids ? "empty" : "singleton";
  return o;
}

Outcome from_status(SearchStatus s, std::size_t explored, std::size_t budget) {
  Outcome o;
  o.code = s == SearchStatus::Found ? kPass : s == SearchStatus::NotFound ? kFail : kInconclusive;
  o.body["search"] = to_string(s);
  o.body["explored"] = explored;
  o.body["budget"] = budget;
  return o;
}

Outcome cmd_homotopy(Inputs& in, const std::string& f, const std::string& g, std::size_t budget) {
  const GrayFunctorData F = in.functor(f), G = in.functor(g);
  const PathCategory P = build_path(F.target);
  const auto res = right_homotopy_search(F, G, P, budget);
  Outcome o = from_status(res.status, res.explored, budget);
  if (res.value) o.body["homotopy"] = res.value->map;
  return o;
}

Outcome cmd_pneq(Inputs& in, const std::string& f, const std::string& g, std::size_t budget,
                 const std::string& out) {
  const GrayFunctorData F = in.functor(f), G = in.functor(g);
  const PathCategory P = build_path(F.target);
  const auto res = pseudo_nat_equiv_search(F, G, P, budget);
  Outcome o = from_status(res.status, res.explored, budget);
  if (res.value) {
    const std::string text = serialize(from_trit("alpha", *res.value, F, G, *F.target));
    o.body["tritransformation"] = text;
    if (!out.empty()) write_file(out, text);
  }
  return o;
}

Outcome cmd_psi(Inputs& in, const std::string& f, int bound, const std::string& out) {
  LocContext ctx(bound);
  const Zigzag z = psi(ctx, in.weak(f));
  Outcome o = from_report(check_zigzag(ctx, z));
  const std::string text = serialize(from_zigzag("psi", ctx, z));
  o.body["zigzag"] = text;
  o.body["shape"] = to_string(ctx, z);
  if (!out.empty()) write_file(out, text);
  return o;
}

Zigzag read_zigzag(Inputs& in, const std::string& path, std::unique_ptr<LocContext>& ctx) {
  const Document d = in.document(path);
  if (d.kind != DocKind::Zigzag) throw InputError(path + " is not a zigzag");
  const int bound = std::stoi(d.params[2]);
  if (!ctx) ctx = std::make_unique<LocContext>(bound);
  if (ctx->bound() != bound) throw InputError("zigzags use different bounds");
  return to_zigzag(d, in.lib, *ctx);
}

Outcome cmd_zz(Inputs& in, const std::string& mode, const std::vector<std::string>& files, int depth,
               const std::vector<std::pair<std::string, std::string>>& pairs, const std::string& out) {
  std::unique_ptr<LocContext> ctx;
  if (mode == "reduce") {
    if (files.size() != 1) throw InputError("zz reduce takes one zigzag");
    const Zigzag z = read_zigzag(in, files[0], ctx);
    const Zigzag r = zigzag_reduce(*ctx, z);
    Outcome o = from_report(check_zigzag(*ctx, r));
    const std::string text = serialize(from_zigzag("reduced", *ctx, r));
    o.body["zigzag"] = text;
    o.body["shape"] = to_string(*ctx, r);
    o.body["links"] = r.links.size();
    if (!out.empty()) write_file(out, text);
    return o;
  }
  if (files.size() != 2) throw InputError("zz equal takes two zigzags");
  const Zigzag a = read_zigzag(in, files[0], ctx);
  const Zigzag b = read_zigzag(in, files[1], ctx);
  json registered = json::array();
  for (const auto& [f, g] : pairs) {
    const GrayFunctorData F = in.functor(f), G = in.functor(g);
    const PathCategory P = build_path(F.target);
    ctx->add_path(P);
    const auto t = pseudo_nat_equiv_search(F, G, P);
    if (!t.value) {
      registered.push_back({{"pair", {F.name, G.name}}, {"search", to_string(t.status)}});
      continue;
    }
    const AxiomReport r = ctx->add_pair(pair_functor(F, G, *t.value, P), P, F, G);
    registered.push_back(
        {{"pair", {F.name, G.name}}, {"search", "found"}, {"registered", r.passed()}});
  }
  Outcome o;
  o.body["bounds"] = {{"depth", depth}, {"truncation", ctx->bound()}};
  o.body["pairs"] = registered;
  if (a.from != b.from || a.to != b.to) {
    o.code = kFail;
    o.body["equal"] = false;
    o.body["reason"] = "different endpoints";
    return o;
  }
  const EqualityResult res = zigzag_equal_bounded(*ctx, a, b, depth);
  o.body["explored"] = res.explored;
  o.body["equal"] = res.equal;
  if (!res.equal) {
    o.code = kInconclusive;
    o.body["reason"] = "no connecting chain within depth";
    return o;
  }
  json trace = json::array();
  for (const Zigzag& z : res.trace) trace.push_back(to_string(*ctx, z));
  o.body["trace"] = trace;
  o.body["rules"] = res.rules;
  o.body["certificates"] = {{"replay", replay(*ctx, res)}};
  if (!replay(*ctx, res)) o.code = kFail;
  return o;
}

/// Built-in documents: categories, chaotic2-broken, and the weak functors.
std::string fixture_text(const std::string& name) {
  for (const auto& C : fixtures::all())
    if (C.name() == name) return serialize(from_category(C));
  if (name == "chaotic2-broken") {
    FiniteGrayCategory C = fixtures::chaotic2_mutations().front().category;
    C.set_name(name);
    return serialize(from_category(C));
  }
  for (const auto& W : fixtures::weak_functors())
    if (W.name == name) return serialize(from_weak(W));
  throw InputError("unknown fixture " + name);
}

json error_json(const std::exception& e) {
  json j = {{"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["kind"] = "Parse";
    j["line"] = pe->line();
    j["column"] = pe->column();
    j["expected"] = pe->expected();
  } else if (const auto* ge = dynamic_cast<const Error*>(&e)) {
    j["kind"] = to_string(ge->kind());
  } else {
    j["kind"] = "Input";
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("GRAY_THREADS")) {
    const int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Finite Gray-categories: axioms, Gr, path objects, zigzags"};
  app.require_subcommand(1);
  std::vector<std::string> libs;
  app.add_option("--lib", libs, "Definition files to load first")->check(CLI::ExistingFile);

  std::string input, input2, mode, out, fixture;
  int bound = 1, depth = 7;
  bool dump = false, empty_ids = false;
  std::size_t budget = 100'000, max_cells = 2'000'000;
  std::string left, right, top, bottom;
  std::vector<std::string> gens, files;
  std::vector<std::pair<std::string, std::string>> pairs;

  auto* check = app.add_subcommand("check", "Check a category, functor, weak functor, tritransformation or zigzag");
  check->add_option("input", input, "File or built-in category")->required();
  auto* gr = app.add_subcommand("gr", "Truncation of Gr A and its axioms");
  gr->add_option("category", input)->required();
  gr->add_option("--bound", bound, "String length bound L")->check(CLI::Range(0, 8));
  gr->add_option("--max-cells", max_cells, "Give up beyond this many 2-cells");
  gr->add_flag("--dump", dump, "Include every cell");
  auto* ev = app.add_subcommand("ev", "ev_A: Gr A -> A is a trivial fibration");
  ev->add_option("category", input)->required();
  ev->add_option("--bound", bound)->check(CLI::Range(0, 8));
  auto* path = app.add_subcommand("path", "Path object of a category");
  path->add_option("mode", mode)->required()->check(CLI::IsMember({"build", "check"}));
  path->add_option("category", input)->required();
  auto* trivfib = app.add_subcommand("trivfib", "Is a strict functor a trivial fibration");
  trivfib->add_option("functor", input)->required();
  auto* triequiv = app.add_subcommand("triequiv", "Is a strict functor a triequivalence");
  triequiv->add_option("functor", input)->required();
  auto* lift = app.add_subcommand("lift", "Lift a square against a trivial fibration");
  lift->add_option("--left", left)->required();
  lift->add_option("--right", right)->required();
  lift->add_option("--top", top)->required();
  lift->add_option("--bottom", bottom)->required();
  lift->add_option("--gen", gens, "Generator of the bottom-left category, DIM:NAME");
  auto* section = app.add_subcommand("section", "Section of ev_A");
  section->add_option("category", input)->required();
  section->add_option("--bound", bound)->check(CLI::Range(1, 8));
  section->add_flag("--empty-identities", empty_ids, "Send identity 1-cells to empty strings");
  auto* homotopy = app.add_subcommand("homotopy", "Search a right homotopy F ~ G through the path object");
  homotopy->add_option("F", input)->required();
  homotopy->add_option("G", input2)->required();
  homotopy->add_option("--budget", budget);
  auto* pneq = app.add_subcommand("pneq", "Search a tritransformation F => G");
  pneq->add_option("F", input)->required();
  pneq->add_option("G", input2)->required();
  pneq->add_option("--budget", budget);
  pneq->add_option("--out", out, "Write the tritransformation here");
  auto* psi_cmd = app.add_subcommand("psi", "The zigzag A <- Gr A -> Gr B -> B of a functor");
  psi_cmd->add_option("functor", input)->required();
  psi_cmd->add_option("--bound", bound)->check(CLI::Range(1, 8));
  psi_cmd->add_option("--out", out);
  auto* zz = app.add_subcommand("zz", "Reduce zigzags or compare them");
  zz->add_option("mode", mode)->required()->check(CLI::IsMember({"reduce", "equal"}));
  zz->add_option("zigzags", files)->required()->check(CLI::ExistingFile);
  zz->add_option("--depth", depth)->check(CLI::Range(0, 64));
  zz->add_option("--pair", pairs, "Register the tritransformation F => G if one exists");
  zz->add_option("--out", out);
  auto* fix = app.add_subcommand("fixture", "Print a built-in document in canonical form");
  fix->add_option("name", fixture)->required();
  fix->add_option("--out", out);

  std::string command = "?";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  for (auto* s : app.get_subcommands()) command = s->get_name();

  const auto start = std::chrono::steady_clock::now();
  json report = {{"schema", kSchema}, {"command", command}};
  int code = kInputError;
  try {
    Inputs in;
    for (const auto& l : libs) in.load(l);
    Outcome o;
    if (fix->parsed()) {
      const std::string text = fixture_text(fixture);
      if (out.empty()) std::fwrite(text.data(), 1, text.size(), stdout);
      else write_file(out, text);
      return kPass;
    } else if (check->parsed()) o = cmd_check(in, input);
    else if (gr->parsed()) o = cmd_gr(in, input, bound, dump, max_cells);
    else if (ev->parsed()) o = cmd_ev(in, input, bound);
    else if (path->parsed()) o = cmd_path(in, mode, input);
    else if (trivfib->parsed()) o = cmd_trivfib(in, input, false);
    else if (triequiv->parsed()) o = cmd_trivfib(in, input, true);
    else if (lift->parsed()) o = cmd_lift(in, left, right, top, bottom, gens);
    else if (section->parsed()) o = cmd_section(in, input, bound, empty_ids);
    else if (homotopy->parsed()) o = cmd_homotopy(in, input, input2, budget);
    else if (pneq->parsed()) o = cmd_pneq(in, input, input2, budget, out);
    else if (psi_cmd->parsed()) o = cmd_psi(in, input, bound, out);
    else if (zz->parsed()) o = cmd_zz(in, mode, files, depth, pairs, out);
    if (!o.body.contains("witnesses")) o.body["witnesses"] = json::array();
    code = o.code;
    report["verdict"] = verdict_of(code);
    report["exit_code"] = code;
    report["bounds"] = {{"bound", bound}, {"budget", budget}, {"depth", depth}};
    report.update(o.body);
  } catch (const std::exception& e) {
    code = kInputError;
    report["verdict"] = verdict_of(code);
    report["exit_code"] = code;
    report["error"] = error_json(e);
    std::cerr << "gray: " << e.what() << "\n";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["timing"] = {{"seconds", secs}, {"threads", omp_get_max_threads()}};
  const std::string text = report.dump(2) + "\n";
  std::fwrite(text.data(), 1, text.size(), stdout);
  return code;
}
