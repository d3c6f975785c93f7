// Acceptance gates. Prints one line per criterion and exits nonzero if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/loc.hpp"
#include "gray/model.hpp"
#include "gray/surface.hpp"
#include "oracle.hpp"

using namespace gray;
namespace fs = std::filesystem;

namespace {

/// Depth at which every pseudo-naturally equivalent fixture pair is proved equal.
constexpr int kDocumentedDepth = 7;

struct Gate {
  int id;
  const char* name;
  double limit;  // seconds
  std::function<bool(std::ostringstream&)> run;
};

/// Records failures with a short reason; the first few are printed.
struct Tally {
  std::size_t ok = 0, bad = 0;
  std::vector<std::string> first;
  void operator()(bool pass, const std::string& what) {
    if (pass) {
      ++ok;
      return;
    }
    ++bad;
    if (first.size() < 3) first.push_back(what);
  }
  bool passed() const { return bad == 0 && ok > 0; }
  void print(std::ostringstream& d) const {
    d << ok << "/" << ok + bad << " checks";
    for (const auto& f : first) d << "; " << f;
  }
};

CategoryPtr shared(FiniteGrayCategory C) {
  C.freeze();
  return std::make_shared<const FiniteGrayCategory>(std::move(C));
}

std::vector<CategoryPtr> all_fixtures() {
  std::vector<CategoryPtr> out;
  for (auto& C : fixtures::all()) out.push_back(shared(std::move(C)));
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_identity(const GrayFunctorData& F) {
  return F.source->name() == F.target->name() && F.map == identity_functor(F.source).map;
}

// ---------------------------------------------------------------------------

bool gate1(std::ostringstream& d) {
  Tally t;
  double worst = 0;
  auto timed = [&](const FiniteGrayCategory& C) {
    const auto s = std::chrono::steady_clock::now();
    AxiomReport r = check_gray_axioms(C);
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count());
    return r;
  };
  for (const auto& C : fixtures::shipped()) {
    const FiniteGrayCategory G =
        to_category(parse(slurp(fs::path(GRAY_FIXTURE_DIR) / (C.name() + ".gray"))));
    t(timed(G).passed(), C.name() + " golden file fails");
  }
  const auto muts = fixtures::chaotic2_mutations();
  for (const auto& m : muts) {
    const AxiomReport r = timed(m.category);
    t(!r.passed() && r.has_tag(m.expected_tag), m.name + " lacks " + m.expected_tag);
  }
  t(muts.size() >= 6, "fewer than 6 mutations");
  t(worst < 1.0, "a single check took over 1 s");
  t.print(d);
  d << ", " << muts.size() << " mutations, slowest check " << worst << " s";
  return t.passed();
}

bool gate2(std::ostringstream& d) {
  Tally t;
  for (const auto& A : all_fixtures())
    for (int L = 0; L <= 3; ++L) {
      const GrTruncation T(A, L);
      const std::string at = A->name() + "@" + std::to_string(L);
      AxiomReport r = check_truncation(T);
      t(r.passed(), at + " axioms: " + r.summary());
      const oracle::Counts o = oracle::truncation_counts(*A, L);
      t(T.counts() == GrCounts{o.strings, o.gens, o.cells2, o.cells3}, at + " counts differ");
    }
  t.print(d);
  return t.passed();
}

bool gate3(std::ostringstream& d) {
  Tally t;
  std::size_t cells = 0;
  for (const auto& A : all_fixtures())
    for (int L = 1; L <= 3; ++L) {
      const std::string at = A->name() + "@" + std::to_string(L);
      const GrTruncation T(A, L);
      t(is_trivial_fibration(T).passed(), at + " ev is not a trivial fibration");
      for (IdentityImage ids : {IdentityImage::Singleton, IdentityImage::Empty}) {
        const AxiomReport r = check_section(section_of_ev(A, L, ids));
        cells += r.checked;
        t(r.passed(), at + " section: " + r.summary());
      }
    }
  t.print(d);
  d << ", " << cells << " section cells";
  return t.passed();
}

bool has_note(const AxiomReport& r, const std::string& s) {
  return std::find(r.notes.begin(), r.notes.end(), s) != r.notes.end();
}

bool gate4(std::ostringstream& d) {
  Tally t;
  const auto cats = all_fixtures();
  std::size_t pairs = 0;
  for (int L = 1; L <= 2; ++L)
    for (const auto& A : cats)
      for (const auto& B : cats)
        for (const auto& C : cats)
          for (const auto& F : enumerate_strict_functors(A, B))
            for (const auto& G : enumerate_strict_functors(B, C)) {
              ++pairs;
              const AxiomReport r = check_hat_properties(weaken(F), weaken(G), L);
              t(r.passed(), F.name + "," + G.name + ": " + r.summary());
              if (A->name() == "chaotic2" && B->name() == "chaotic2" && C->name() == "chaotic2")
                t(has_note(r, "HAT4: comparison icon found"), "HAT4 not found for " + F.name + "," + G.name);
            }
  // Icon boundaries for the weak fixtures as well.
  for (const auto& W : fixtures::weak_functors())
    for (int L = 1; L <= 2; ++L) {
      const AxiomReport r = check_hat_properties(W, weaken(identity_functor(W.target)), L);
      t(!r.has_tag("HAT1"), W.name + " icon: " + r.summary());
    }
  t.print(d);
  d << " over " << pairs << " strict pairs";
  return t.passed();
}

bool gate5(std::ostringstream& d) {
  Tally t;
  for (const auto& B : all_fixtures()) {
    const PathCategory P = build_path(B);
    const auto id = identity_functor(B).map;
    t(compose(P.S, P.C).map == id, B->name() + " S.C != id");
    t(compose(P.T, P.C).map == id, B->name() + " T.C != id");
    t(check_gray_axioms(*P.cat).passed(), B->name() + " path object fails the axioms");
    t(check_path_cells(P).passed(), B->name() + " path cells");
    const AxiomReport w = check_C_weak_equivalence(P);
    t(w.passed(), B->name() + " C: " + w.summary());
    if (B->name() == "terminal")
      for (int k = 0; k <= 3; ++k) t(P.cat->count(k) == 1, "P(terminal) is not (1,1,1,1)");
  }
  t.print(d);
  return t.passed();
}

struct FoundPair {
  GrayFunctorData F, G;
  Tritransformation alpha;
};

/// Every tritransformation the search finds between strict fixture functors.
std::vector<FoundPair> found_pairs(std::size_t* searched = nullptr) {
  std::vector<FoundPair> out;
  const auto cats = all_fixtures();
  std::size_t n = 0;
  for (const auto& B : cats) {
    const PathCategory P = build_path(B);
    for (const auto& A : cats) {
      const auto fs = enumerate_strict_functors(A, B);
      for (const auto& F : fs)
        for (const auto& G : fs) {
          ++n;
          auto s = pseudo_nat_equiv_search(F, G, P);
          if (s.value) out.push_back({F, G, *s.value});
        }
    }
  }
  if (searched) *searched = n;
  return out;
}

bool gate6(std::ostringstream& d) {
  Tally t;
  std::size_t searched = 0, mismatches = 0;
  const auto found = found_pairs(&searched);
  for (const auto& [F, G, alpha] : found) {
    const PathCategory P = build_path(F.target);
    const WeakFunctorData H = pair_functor(F, G, alpha, P);
    const AxiomReport r = check_weak_functor(H);
    t(r.passed(), F.name + "=>" + G.name + ": " + r.summary());
    const auto S = compose(P.S, underlying(H)).map, T = compose(P.T, underlying(H)).map;
    for (int k = 0; k <= 3; ++k)
      for (std::size_t x = 0; x < F.map[k].size(); ++x)
        mismatches += (S[k][x] != F.map[k][x]) + (T[k][x] != G.map[k][x]);
  }
  t(mismatches == 0, std::to_string(mismatches) + " projection mismatches");
  t.print(d);
  d << ", " << found.size() << " of " << searched << " pairs related";
  return t.passed();
}

bool gate7(std::ostringstream& d) {
  Tally t;
  LocContext ctx(1);
  const auto cats = all_fixtures();
  for (const auto& A : cats) {
    t(zigzag_reduce(ctx, psi(ctx, identity_functor(A))).links.empty(), "psi(id) on " + A->name());
    for (const auto& B : cats)
      for (const auto& F : enumerate_strict_functors(A, B)) {
        const Zigzag r = zigzag_reduce(ctx, psi(ctx, F));
        if (is_identity(F)) {
          t(r.links.empty(), "psi(" + F.name + ") not empty");
          continue;
        }
        t(r.links.size() == 1 && r.links[0].forward &&
              r.links[0].word == std::vector<AtomId>{ctx.strict(F)},
          "psi(" + F.name + ") reduces to " + to_string(ctx, r));
        for (const auto& C : cats)
          for (const auto& G : enumerate_strict_functors(B, C)) {
            const Zigzag lhs = zigzag_reduce(ctx, then(psi(ctx, G), psi(ctx, F)));
            const Zigzag rhs = zigzag_reduce(ctx, psi(ctx, compose(G, F)));
            t(lhs == rhs, "composition " + G.name + " after " + F.name);
          }
      }
  }
  std::size_t max_len = 0;
  for (const auto& B : cats) ctx.add_path(build_path(B));
  for (const auto& [F, G, alpha] : found_pairs()) {
    const PathCategory P = build_path(F.target);
    const AxiomReport reg = ctx.add_pair(pair_functor(F, G, alpha, P), P, F, G);
    t(reg.passed(), "pair " + F.name + "," + G.name + " not registered");
    const auto eq = zigzag_equal_bounded(ctx, psi(ctx, F), psi(ctx, G), kDocumentedDepth);
    t(eq.equal && replay(ctx, eq), F.name + " ~ " + G.name + " not equal within depth");
    max_len = std::max(max_len, eq.rules.size());
  }
  t.print(d);
  d << ", D = " << kDocumentedDepth << ", longest chain " << max_len;
  return t.passed();
}

bool gate8(std::ostringstream& d) {
  Tally t;
  for (const auto& W : fixtures::weak_functors()) {
    const Strictification s = strictify(W);
    t(s.report.passed(), W.name + ": " + s.report.summary());
    t(check_gray_functor(s.strict).passed(), W.name + " strictification is not strict");
  }
  const auto cats = all_fixtures();
  std::size_t compared = 0;
  for (const auto& B : cats) {
    const PathCategory P = build_path(B);
    for (const auto& A : cats) {
      const auto fs = enumerate_strict_functors(A, B);
      for (const auto& F : fs)
        for (const auto& G : fs) {
          const auto h = right_homotopy_search(F, G, P);
          const auto p = pseudo_nat_equiv_search(F, G, P);
          if (h.status == SearchStatus::BudgetExhausted || p.status == SearchStatus::BudgetExhausted)
            continue;
          ++compared;
          t(h.status == p.status, F.name + "," + G.name + ": homotopy " + to_string(h.status) +
                                      ", pneq " + to_string(p.status));
        }
    }
  }
  t.print(d);
  d << ", " << compared << " complete search pairs";
  return t.passed();
}

// --- surface ---------------------------------------------------------------

bool round_trip(const fs::path& p) {
  const std::string text = slurp(p);
  const Document doc = parse(text);
  Library lib;
  switch (doc.kind) {
    case DocKind::Category: return serialize(from_category(to_category(doc))) == text;
    case DocKind::Functor: return serialize(from_functor(to_functor(doc, lib))) == text;
    case DocKind::WeakFunctor: return serialize(from_weak(to_weak(doc, lib))) == text;
    default: return serialize(doc) == text;
  }
}

struct Run {
  int code = -1;
  nlohmann::json report;
  bool has_json = false;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(GRAY_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.report = nlohmann::json::parse(out, nullptr, false);
  r.has_json = !r.report.is_discarded();
  return r;
}

bool gate9(std::ostringstream& d) {
  Tally t;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(GRAY_FIXTURE_DIR)) {
    if (!e.is_regular_file()) continue;
    ++files;
    bool ok = false;
    try {
      ok = round_trip(e.path());
    } catch (const std::exception&) {
    }
    t(ok, e.path().filename().string() + " does not round-trip");
  }

  const fs::path tmp = fs::temp_directory_path() / ("gray-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  {
    std::ofstream bad(tmp / "bad.gray");
    bad << "CATEGORY broken\nOBJECTS a\nSIGMA x\n";
  }
  const std::string F = std::string(GRAY_FIXTURE_DIR) + "/";
  const std::string T = tmp.string() + "/";
  const std::string c0 = "'chaotic2->chaotic2#0'", c1 = "'chaotic2->chaotic2#1'";
  const std::string incl = "'discrete2->chaotic2#1'";
  const std::vector<std::pair<std::string, int>> matrix = {
      {"check " + F + "chaotic2.gray", 0},
      {"check " + F + "terminal.gray", 0},
      {"check " + F + "discrete2.gray", 0},
      {"check " + F + "idem3.gray", 0},
      {"check " + F + "chaotic2-broken.gray", 1},
      {"check " + F + "z2-twisted.grayfun", 0},
      {"gr chaotic2 --bound 2", 0},
      {"gr chaotic2 --bound 3 --max-cells 100", 2},
      {"ev chaotic2 --bound 1", 0},
      {"ev chaotic2 --bound 0", 1},
      {"path build terminal", 0},
      {"path check chaotic2", 0},
      {"trivfib 'chaotic2->terminal#0'", 0},
      {"trivfib 'discrete2->terminal#0'", 1},
      {"triequiv 'terminal->chaotic2#0'", 0},
      {"triequiv 'discrete2->terminal#0'", 1},
      {"lift --left " + incl + " --right 'chaotic2->terminal#0' --top " + incl +
           " --bottom 'chaotic2->terminal#0' --gen 1:f --gen 1:g",
       0},
      {"lift --left " + incl + " --right " + incl + " --top id_discrete2 --bottom id_chaotic2 --gen 1:f --gen 1:g",
       1},
      {"section z2 --bound 2 --empty-identities", 0},
      {"homotopy " + c0 + " " + c1, 0},
      {"homotopy " + c0 + " " + c1 + " --budget 2", 2},
      {"pneq 'discrete2->discrete2#0' 'discrete2->discrete2#1'", 1},
      {"pneq " + c0 + " " + c1 + " --out " + T + "alpha.trit", 0},
      {"check " + T + "alpha.trit", 0},
      {"psi " + c0 + " --out " + T + "f.zz", 0},
      {"psi " + c1 + " --out " + T + "g.zz", 0},
      {"psi z2-twisted --out " + T + "w.zz", 0},
      {"check " + T + "w.zz", 0},
      {"zz reduce " + T + "f.zz --out " + T + "fr.zz", 0},
      {"zz reduce " + T + "g.zz --out " + T + "gr.zz", 0},
      {"zz equal " + T + "fr.zz " + T + "gr.zz --depth 0", 2},
      {"zz equal " + T + "f.zz " + T + "g.zz --depth 7 --pair " + c0 + " " + c1, 0},
      {"zz equal " + T + "f.zz " + T + "w.zz --depth 3", 1},
      {"check nope", 3},
      {"check " + T + "bad.gray", 3},
      {"gr chaotic2 --bound 99", 3},
  };
  static const char* verdicts[] = {"pass", "fail", "inconclusive", "error"};
  for (const auto& [args, want] : matrix) {
    const Run r = run_cli(args);
    t(r.code == want, "`" + args + "` exited " + std::to_string(r.code));
    if (r.code < 0 || r.code > 3) continue;
    if (r.code <= 2 || r.has_json) {
      const bool agree = r.has_json && r.report.value("schema", "") == "gray-report/1" &&
                         r.report.value("verdict", "") == verdicts[r.code] &&
                         r.report.value("exit_code", -1) == r.code;
      t(agree, "`" + args + "` report disagrees with exit code");
    }
  }
  // The broken fixture is witnessed by a C-tagged violation; parse errors carry positions.
  const Run broken = run_cli("check " + F + "chaotic2-broken.gray");
  bool ctag = false;
  for (const auto& tag : broken.report["violation_tags"]) ctag |= tag.get<std::string>()[0] == 'C';
  t(ctag, "broken fixture has no C-tagged witness");
  const Run bad = run_cli("check " + T + "bad.gray");
  t(bad.has_json && bad.report["error"].value("line", 0) == 3, "parse error has no position");
  // Reports are deterministic apart from timing.
  auto strip = [](Run r) {
    r.report.erase("timing");
    return r.report;
  };
  t(strip(run_cli("path check idem3")) == strip(run_cli("path check idem3")), "nondeterministic report");
  fs::remove_all(tmp);
  t.print(d);
  d << ", " << files << " golden files, " << matrix.size() << " CLI invocations";
  return t.passed();
}

}  // namespace

int main() {
  const std::vector<Gate> gates = {
      {1, "axiom gate", 8, gate1},
      {2, "free construction", 30, gate2},
      {3, "trivial fibration", 5, gate3},
      {4, "hat properties", 60, gate4},
      {5, "path object", 30, gate5},
      {6, "pairing functor", 60, gate6},
      {7, "localization", 120, gate7},
      {8, "corollary", 120, gate8},
      {9, "surface", 60, gate9},
  };
  int failed = 0;
  for (const Gate& g : gates) {
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = g.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < g.limit;
    if (!in_time) detail << "; over the " << g.limit << " s budget";
    ok = ok && in_time;
    failed += !ok;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", g.id, ok ? "PASS" : "FAIL", g.name, secs,
                detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
