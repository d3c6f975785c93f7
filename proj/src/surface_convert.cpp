#include <regex>

#include "gray/fixtures.hpp"
#include "gray/surface.hpp"

namespace gray {

namespace {

std::string where(const Entry& e) {
  std::string s = "line " + std::to_string(e.line) + ": " + e.key;
  for (const auto& a : e.args) s += " " + a;
  return s;
}

[[noreturn]] void bad(const Entry& e, const std::string& what) {
  fail(ErrorKind::Semantic, where(e) + ": " + what);
}

const char* dim_word(int d) {
  static const char* w[] = {"object", "1-cell", "2-cell", "3-cell"};
  return w[d];
}

CellId lookup(const FiniteGrayCategory& C, int d, const std::string& n, const Entry& e) {
  if (auto id = C.find(d, n)) return *id;
  bad(e, "unknown " + std::string(dim_word(d)) + " '" + n + "' in " + C.name());
}

void expect_kind(const Document& d, DocKind k) {
  if (d.kind != k)
    fail(ErrorKind::Semantic,
         "expected a " + std::string(to_string(k)) + " document, got " + to_string(d.kind));
}

Entry entry(std::string key, std::vector<std::string> args, std::vector<std::string> result = {}) {
  return Entry{std::move(key), std::move(args), std::move(result), {}, 0, 0};
}

/// Adds cells and tables to C in the order CELL1, CELL2, CELL3 across blocks.
void load_blocks(FiniteGrayCategory& C, const std::vector<Entry>& entries) {
  for (int d = 1; d <= 3; ++d) {
    const std::string key = "CELL" + std::to_string(d);
    for (const Entry& h : entries) {
      if (h.key != "HOM") continue;
      const CellId a = lookup(C, 0, h.args[0], h), b = lookup(C, 0, h.args[1], h);
      for (const Entry& c : h.children) {
        if (c.key != key) continue;
        if (C.find(d, c.args[0])) bad(c, "duplicate " + std::string(dim_word(d)) + " name");
        CellId s = a, t = b;
        if (d >= 2) {
          s = lookup(C, d - 1, c.args[1], c);
          t = lookup(C, d - 1, c.args[2], c);
          if (C.src_obj(d - 1, s) != a || C.tgt_obj(d - 1, s) != b ||
              C.src_obj(d - 1, t) != a || C.tgt_obj(d - 1, t) != b)
            bad(c, "boundary outside HOM " + h.args[0] + " " + h.args[1]);
        }
        C.add_cell(d, c.args[0], s, t);
        C.freeze();
      }
    }
  }
}

template <class T>
std::vector<std::string> names(const FiniteGrayCategory& C, int d, std::initializer_list<T> ids) {
  std::vector<std::string> out;
  for (CellId x : ids) out.push_back(C.cell_name(d, x));
  return out;
}

std::vector<std::string> ae_names(const FiniteGrayCategory& C, const AdjointEquivalence& e) {
  return {C.cell_name(2, e.fwd), C.cell_name(2, e.bwd), C.cell_name(3, e.unit),
          C.cell_name(3, e.counit)};
}

AdjointEquivalence ae_from(const FiniteGrayCategory& C, const Entry& e) {
  return {lookup(C, 2, e.result[0], e), lookup(C, 2, e.result[1], e), lookup(C, 3, e.result[2], e),
          lookup(C, 3, e.result[3], e)};
}

void map_entries(const GrayFunctorData& F, std::vector<Entry>& out) {
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < F.source->count(d); ++x)
      out.push_back(entry("MAP" + std::to_string(d), {F.source->cell_name(d, x)},
                          {F.target->cell_name(d, F(d, x))}));
}

/// Fills map from MAPd entries; every source cell must be mapped exactly once.
void read_maps(const Document& doc, const CategoryPtr& A, const CategoryPtr& B,
               std::array<std::vector<CellId>, 4>& map) {
  for (int d = 0; d <= 3; ++d) map[d].assign(A->count(d), kNoCell);
  for (const Entry& e : doc.entries) {
    if (e.key.rfind("MAP", 0) != 0) continue;
    const int d = e.key[3] - '0';
    const CellId x = lookup(*A, d, e.args[0], e);
    if (map[d][x] != kNoCell) bad(e, "mapped twice");
    map[d][x] = lookup(*B, d, e.result[0], e);
  }
  for (int d = 0; d <= 3; ++d)
    for (CellId x = 0; x < A->count(d); ++x)
      if (map[d][x] == kNoCell)
        fail(ErrorKind::Semantic, doc.name + ": no MAP" + std::to_string(d) + " entry for " +
                                      A->cell_name(d, x));
}

}  // namespace

// ---------------------------------------------------------------------------
// Categories

Document from_category(const FiniteGrayCategory& C) {
  C.freeze();
  Document d{DocKind::Category, C.name(), {}, {}};
  Entry objs = entry("OBJECTS", {});
  for (CellId a = 0; a < C.count(0); ++a) objs.args.push_back(C.cell_name(0, a));
  d.entries.push_back(std::move(objs));

  const std::size_t n0 = C.count(0);
  std::vector<Entry> homs(n0 * n0);
  for (CellId a = 0; a < n0; ++a)
    for (CellId b = 0; b < n0; ++b) homs[a * n0 + b] = entry("HOM", {C.cell_name(0, a), C.cell_name(0, b)});
  auto hom_of = [&](int dim, CellId x) -> Entry& {
    return homs[C.src_obj(dim, x) * n0 + C.tgt_obj(dim, x)];
  };
  for (CellId f = 0; f < C.count(1); ++f) hom_of(1, f).children.push_back(entry("CELL1", {C.cell_name(1, f)}));
  for (int dim = 2; dim <= 3; ++dim)
    for (CellId x = 0; x < C.count(dim); ++x)
      hom_of(dim, x).children.push_back(
          entry("CELL" + std::to_string(dim),
                {C.cell_name(dim, x), C.cell_name(dim - 1, C.src(dim, x)),
                 C.cell_name(dim - 1, C.tgt(dim, x))}));
  for (CellId y = 0; y < C.count(2); ++y)
    for (CellId x = 0; x < C.count(2); ++x)
      if (CellId r = C.tensor2(y, x); r != kNoCell)
        hom_of(2, x).children.push_back(entry("TENSOR", names<CellId>(C, 2, {y, x}), {C.cell_name(2, r)}));
  for (CellId y = 0; y < C.count(3); ++y)
    for (CellId x = 0; x < C.count(3); ++x) {
      if (CellId r = C.tensor3(y, x); r != kNoCell)
        hom_of(3, x).children.push_back(entry("TENSOR3", names<CellId>(C, 3, {y, x}), {C.cell_name(3, r)}));
      if (CellId r = C.circ3(y, x); r != kNoCell)
        hom_of(3, x).children.push_back(entry("COMPOSE", names<CellId>(C, 3, {y, x}), {C.cell_name(3, r)}));
    }
  for (Entry& h : homs)
    if (!h.children.empty()) d.entries.push_back(std::move(h));

  for (int dim = 1; dim <= 3; ++dim)
    for (CellId x = 0; x < C.count(dim - 1); ++x)
      if (CellId i = C.identity(dim, x); i != kNoCell)
        d.entries.push_back(entry("IDENTITY", {std::to_string(dim), C.cell_name(dim - 1, x)},
                                  {C.cell_name(dim, i)}));
  for (int s = 0; s < 2; ++s)
    for (int dim = 1; dim <= 3; ++dim)
      for (CellId w = 0; w < C.count(1); ++w)
        for (CellId x = 0; x < C.count(dim); ++x)
          if (CellId r = C.whisker(Side(s), dim, w, x); r != kNoCell)
            d.entries.push_back(entry("WHISKER",
                                      {s == 0 ? "POST" : "PRE", std::to_string(dim),
                                       C.cell_name(1, w), C.cell_name(dim, x)},
                                      {C.cell_name(dim, r)}));
  for (CellId xi = 0; xi < C.count(2); ++xi)
    for (CellId g = 0; g < C.count(2); ++g)
      if (CellId r = C.sigma(xi, g); r != kNoCell)
        d.entries.push_back(entry("SIGMA", names<CellId>(C, 2, {xi, g}), {C.cell_name(3, r)}));
  return canonical(std::move(d));
}

FiniteGrayCategory to_category(const Document& d) {
  expect_kind(d, DocKind::Category);
  FiniteGrayCategory C(d.name);
  for (const Entry& e : d.entries)
    if (e.key == "OBJECTS")
      for (const auto& a : e.args) {
        if (C.find(0, a)) bad(e, "duplicate object '" + a + "'");
        C.add_object(a);
        C.freeze();
      }
  load_blocks(C, d.entries);

  auto dim_of = [](const Entry& e, const std::string& s) {
    if (s != "1" && s != "2" && s != "3") bad(e, "dimension must be 1, 2 or 3");
    return s[0] - '0';
  };
  for (const Entry& e : d.entries) {
    if (e.key == "IDENTITY") {
      const int dim = dim_of(e, e.args[0]);
      const CellId lower = lookup(C, dim - 1, e.args[1], e);
      const CellId id = lookup(C, dim, e.result[0], e);
      if (C.src(dim, id) != lower || C.tgt(dim, id) != lower) bad(e, "identity has the wrong boundary");
      C.set_identity(dim, lower, id);
    } else if (e.key == "WHISKER") {
      if (e.args[0] != "POST" && e.args[0] != "PRE") bad(e, "side must be POST or PRE");
      const Side s = e.args[0] == "POST" ? Side::Post : Side::Pre;
      const int dim = dim_of(e, e.args[1]);
      C.set_whisker(s, dim, lookup(C, 1, e.args[2], e), lookup(C, dim, e.args[3], e),
                    lookup(C, dim, e.result[0], e));
    } else if (e.key == "SIGMA") {
      C.set_sigma(lookup(C, 2, e.args[0], e), lookup(C, 2, e.args[1], e),
                  lookup(C, 3, e.result[0], e));
    } else if (e.key == "HOM") {
      const CellId a = lookup(C, 0, e.args[0], e), b = lookup(C, 0, e.args[1], e);
      for (const Entry& c : e.children) {
        const int dim = c.key == "TENSOR" ? 2 : c.key == "TENSOR3" || c.key == "COMPOSE" ? 3 : 0;
        if (dim == 0) continue;
        const CellId y = lookup(C, dim, c.args[0], c), x = lookup(C, dim, c.args[1], c);
        for (CellId z : {y, x})
          if (C.src_obj(dim, z) != a || C.tgt_obj(dim, z) != b)
            bad(c, C.cell_name(dim, z) + " is not in HOM " + e.args[0] + " " + e.args[1]);
        const CellId r = lookup(C, dim, c.result[0], c);
        if (c.key == "TENSOR") C.set_tensor2(y, x, r);
        else if (c.key == "TENSOR3") C.set_tensor3(y, x, r);
        else C.set_circ3(y, x, r);
      }
    }
  }
  C.freeze();
  return C;
}

// ---------------------------------------------------------------------------
// Functors

Document from_functor(const GrayFunctorData& F) {
  Document d{DocKind::Functor, F.name, {F.source->name(), F.target->name()}, {}};
  map_entries(F, d.entries);
  return canonical(std::move(d));
}

GrayFunctorData to_functor(const Document& d, const Library& lib) {
  expect_kind(d, DocKind::Functor);
  GrayFunctorData F{d.name, lib.category(d.params[0]), lib.category(d.params[1]), {}};
  read_maps(d, F.source, F.target, F.map);
  return F;
}

Document from_weak(const WeakFunctorData& W) {
  const FiniteGrayCategory &A = *W.source, &B = *W.target;
  Document d{DocKind::WeakFunctor, W.name, {A.name(), B.name()}, {}};
  map_entries(underlying(W), d.entries);
  for (const auto& [k, e] : W.chi)
    d.entries.push_back(entry("CHI", names<CellId>(A, 1, {k.first, k.second}), ae_names(B, e)));
  for (CellId a = 0; a < W.iota.size(); ++a)
    d.entries.push_back(entry("IOTA", {A.cell_name(0, a)}, ae_names(B, W.iota[a])));
  for (const auto& [k, x] : W.chi_nat)
    d.entries.push_back(entry("CHINAT", names<CellId>(A, 2, {k.first, k.second}), {B.cell_name(3, x)}));
  for (const auto& [k, x] : W.omega)
    d.entries.push_back(entry("OMEGA", names<CellId>(A, 1, {k[0], k[1], k[2]}), {B.cell_name(3, x)}));
  for (const auto& [f, x] : W.gamma)
    d.entries.push_back(entry("GAMMA", {A.cell_name(1, f)}, {B.cell_name(3, x)}));
  for (const auto& [f, x] : W.delta)
    d.entries.push_back(entry("DELTA", {A.cell_name(1, f)}, {B.cell_name(3, x)}));
  return canonical(std::move(d));
}

WeakFunctorData to_weak(const Document& d, const Library& lib) {
  expect_kind(d, DocKind::WeakFunctor);
  WeakFunctorData W;
  W.name = d.name;
  W.source = lib.category(d.params[0]);
  W.target = lib.category(d.params[1]);
  const FiniteGrayCategory &A = *W.source, &B = *W.target;
  read_maps(d, W.source, W.target, W.map);
  std::vector<std::optional<AdjointEquivalence>> iota(A.count(0));
  for (const Entry& e : d.entries) {
    if (e.key == "CHI") {
      W.chi[{lookup(A, 1, e.args[0], e), lookup(A, 1, e.args[1], e)}] = ae_from(B, e);
    } else if (e.key == "IOTA") {
      iota[lookup(A, 0, e.args[0], e)] = ae_from(B, e);
    } else if (e.key == "CHINAT") {
      W.chi_nat[{lookup(A, 2, e.args[0], e), lookup(A, 2, e.args[1], e)}] = lookup(B, 3, e.result[0], e);
    } else if (e.key == "OMEGA") {
      W.omega[{lookup(A, 1, e.args[0], e), lookup(A, 1, e.args[1], e), lookup(A, 1, e.args[2], e)}] =
          lookup(B, 3, e.result[0], e);
    } else if (e.key == "GAMMA") {
      W.gamma[lookup(A, 1, e.args[0], e)] = lookup(B, 3, e.result[0], e);
    } else if (e.key == "DELTA") {
      W.delta[lookup(A, 1, e.args[0], e)] = lookup(B, 3, e.result[0], e);
    }
  }
  for (CellId a = 0; a < iota.size(); ++a) {
    if (!iota[a]) fail(ErrorKind::Semantic, d.name + ": no IOTA entry for " + A.cell_name(0, a));
    W.iota.push_back(*iota[a]);
  }
  return W;
}

// ---------------------------------------------------------------------------
// Tritransformations

Document from_trit(const std::string& name, const Tritransformation& t, const GrayFunctorData& F,
                   const GrayFunctorData& G, const FiniteGrayCategory& B) {
  const FiniteGrayCategory& A = *F.source;
  Document d{DocKind::Tritransformation, name, {F.name, G.name}, {}};
  for (CellId a = 0; a < t.alpha0.size(); ++a) {
    d.entries.push_back(entry("ALPHA0", {A.cell_name(0, a)}, {B.cell_name(1, t.alpha0[a])}));
    d.entries.push_back(entry("M", {A.cell_name(0, a)}, {B.cell_name(3, t.M[a])}));
  }
  for (CellId f = 0; f < t.alpha1.size(); ++f)
    d.entries.push_back(entry("ALPHA1", {A.cell_name(1, f)}, ae_names(B, t.alpha1[f])));
  for (const auto& [k, x] : t.Pi)
    d.entries.push_back(entry("PI", names<CellId>(A, 1, {k.first, k.second}), {B.cell_name(3, x)}));
  for (CellId x = 0; x < t.alpha2.size(); ++x)
    d.entries.push_back(entry("ALPHA2", {A.cell_name(2, x)}, {B.cell_name(3, t.alpha2[x])}));
  return canonical(std::move(d));
}

Tritransformation to_trit(const Document& d, const Library& lib) {
  expect_kind(d, DocKind::Tritransformation);
  const GrayFunctorData& F = lib.functor(d.params[0]);
  const GrayFunctorData& G = lib.functor(d.params[1]);
  if (F.source->name() != G.source->name() || F.target->name() != G.target->name())
    fail(ErrorKind::Semantic, d.name + ": " + F.name + " and " + G.name + " are not parallel");
  const FiniteGrayCategory &A = *F.source, &B = *F.target;
  Tritransformation t;
  t.alpha0.assign(A.count(0), kNoCell);
  t.M.assign(A.count(0), kNoCell);
  t.alpha1.assign(A.count(1), {});
  t.alpha2.assign(A.count(2), kNoCell);
  std::vector<bool> have1(A.count(1), false);
  for (const Entry& e : d.entries) {
    if (e.key == "ALPHA0") t.alpha0[lookup(A, 0, e.args[0], e)] = lookup(B, 1, e.result[0], e);
    else if (e.key == "M") t.M[lookup(A, 0, e.args[0], e)] = lookup(B, 3, e.result[0], e);
    else if (e.key == "ALPHA2") t.alpha2[lookup(A, 2, e.args[0], e)] = lookup(B, 3, e.result[0], e);
    else if (e.key == "PI")
      t.Pi[{lookup(A, 1, e.args[0], e), lookup(A, 1, e.args[1], e)}] = lookup(B, 3, e.result[0], e);
    else if (e.key == "ALPHA1") {
      const CellId f = lookup(A, 1, e.args[0], e);
      t.alpha1[f] = ae_from(B, e);
      have1[f] = true;
    }
  }
  auto need = [&](bool ok, const char* key, int dim, CellId x) {
    if (!ok)
      fail(ErrorKind::Semantic, d.name + ": no " + key + " entry for " + A.cell_name(dim, x));
  };
  for (CellId a = 0; a < A.count(0); ++a) {
    need(t.alpha0[a] != kNoCell, "ALPHA0", 0, a);
    need(t.M[a] != kNoCell, "M", 0, a);
  }
  for (CellId f = 0; f < A.count(1); ++f) need(have1[f], "ALPHA1", 1, f);
  for (CellId x = 0; x < A.count(2); ++x) need(t.alpha2[x] != kNoCell, "ALPHA2", 2, x);
  return t;
}

// ---------------------------------------------------------------------------
// Zigzags

Document from_zigzag(const std::string& name, const LocContext& ctx, const Zigzag& z) {
  Document d{DocKind::Zigzag, name, {z.from, z.to, std::to_string(ctx.bound())}, {}};
  for (std::size_t i = 0; i < z.links.size(); ++i) {
    Entry e = entry("LINK", {std::to_string(i), z.links[i].forward ? ">" : "<"});
    for (AtomId a : z.links[i].word) {
      const Atom& at = ctx.atom(a);
      switch (at.kind) {
        case Atom::Kind::Strict:
          e.args.push_back(at.identity ? "id:" + at.src : "fun:" + at.strict.name);
          break;
        case Atom::Kind::Ev: e.args.push_back("ev:" + at.base->name()); break;
        case Atom::Kind::Hat: e.args.push_back("gr:" + at.weak.name); break;
      }
    }
    d.entries.push_back(std::move(e));
  }
  return canonical(std::move(d));
}

Zigzag to_zigzag(const Document& d, const Library& lib, LocContext& ctx) {
  expect_kind(d, DocKind::Zigzag);
  if (d.params[2] != std::to_string(ctx.bound()))
    fail(ErrorKind::Semantic, d.name + ": bound " + d.params[2] + " does not match the context bound " +
                                  std::to_string(ctx.bound()));
  Zigzag z{d.params[0], d.params[1], {}};
  std::vector<const Entry*> order(d.entries.size(), nullptr);
  for (const Entry& e : d.entries) {
    std::size_t i = 0;
    try {
      i = std::stoul(e.args[0]);
    } catch (const std::exception&) {
      bad(e, "link index must be a number");
    }
    if (i >= order.size() || order[i]) bad(e, "link indices must be 0.." + std::to_string(order.size() - 1));
    order[i] = &e;
  }
  std::string at = z.from;
  for (const Entry* e : order) {
    const std::string& dir = e->args[1];
    if (dir != ">" && dir != "<") bad(*e, "direction must be > or <");
    Link l{{}, dir == ">"};
    for (std::size_t k = 2; k < e->args.size(); ++k) {
      const std::string& s = e->args[k];
      const auto colon = s.find(':');
      const std::string kind = colon == std::string::npos ? "" : s.substr(0, colon);
      const std::string n = colon == std::string::npos ? "" : s.substr(colon + 1);
      try {
        if (kind == "ev") l.word.push_back(ctx.ev(lib.category(n)));
        else if (kind == "id") l.word.push_back(ctx.strict(identity_functor(lib.category(n))));
        else if (kind == "fun") l.word.push_back(ctx.strict(lib.functor(n)));
        else if (kind == "gr") l.word.push_back(ctx.hat(lib.weak_functor(n)));
        else bad(*e, "atom '" + s + "' must be fun:, gr:, ev: or id:");
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Semantic) throw;
        if (std::string(err.what()).rfind("line ", 0) == 0) throw;
        bad(*e, err.what());
      }
    }
    if (!l.forward && l.word.size() != 1) bad(*e, "a backward link holds exactly one atom");
    // Backward links run from their atom's target to its source.
    for (std::size_t k = 0; k < l.word.size(); ++k) {
      const Atom& a = ctx.atom(l.word[k]);
      const std::string& in = l.forward ? a.src : a.tgt;
      if (in != at) bad(*e, "atom " + a.name + " does not start at " + at);
      at = l.forward ? a.tgt : a.src;
    }
    z.links.push_back(std::move(l));
  }
  if (at != z.to) fail(ErrorKind::Semantic, d.name + ": zigzag ends at " + at + ", not " + z.to);
  return z;
}

// ---------------------------------------------------------------------------
// Library

CategoryPtr Library::category(const std::string& name) const {
  if (auto it = categories.find(name); it != categories.end()) return it->second;
  auto& slot = builtin_[name];
  if (!slot) {
    auto c = std::make_shared<FiniteGrayCategory>(fixtures::by_name(name));
    c->freeze();
    slot = std::move(c);
  }
  return slot;
}

const GrayFunctorData& Library::functor(const std::string& name) const {
  if (auto it = functors.find(name); it != functors.end()) return it->second;
  if (auto it = derived_.find(name); it != derived_.end()) return it->second;
  static const std::regex enumerated(R"((.+)->(.+)#(\d+))");
  std::smatch m;
  std::optional<GrayFunctorData> F;
  if (name.rfind("id_", 0) == 0 && name.find('.') == std::string::npos) {
    F = identity_functor(category(name.substr(3)));
  } else if (std::regex_match(name, m, enumerated) && m[1].str().find('.') == std::string::npos &&
             m[2].str().find('.') == std::string::npos) {
    const std::size_t i = std::stoul(m[3].str());
    auto all = enumerate_strict_functors(category(m[1].str()), category(m[2].str()), i + 1);
    if (all.size() <= i) fail(ErrorKind::Semantic, "no functor " + name);
    F = std::move(all[i]);
  } else {
    // G.F, trying every split point.
    for (std::size_t p = name.find('.'); p != std::string::npos && !F; p = name.find('.', p + 1)) {
      try {
        F = compose(functor(name.substr(0, p)), functor(name.substr(p + 1)));
      } catch (const Error&) {
      }
    }
  }
  if (!F) fail(ErrorKind::Semantic, "unknown functor " + name);
  F->name = name;
  return derived_.emplace(name, std::move(*F)).first->second;
}

const WeakFunctorData& Library::weak_functor(const std::string& name) const {
  if (auto it = weak.find(name); it != weak.end()) return it->second;
  if (auto it = derived_weak_.find(name); it != derived_weak_.end()) return it->second;
  std::optional<WeakFunctorData> W;
  for (auto& w : fixtures::weak_functors())
    if (w.name == name) W = std::move(w);
  if (!W) {
    try {
      W = weaken(functor(name));
    } catch (const Error&) {
    }
  }
  for (std::size_t p = name.find('.'); p != std::string::npos && !W; p = name.find('.', p + 1)) {
    try {
      W = compose(weak_functor(name.substr(0, p)), weak_functor(name.substr(p + 1)));
    } catch (const Error&) {
    }
  }
  if (!W) fail(ErrorKind::Semantic, "unknown weak functor " + name);
  W->name = name;
  return derived_weak_.emplace(name, std::move(*W)).first->second;
}

std::string Library::load(const Document& d) {
  switch (d.kind) {
    case DocKind::Category: {
      auto c = std::make_shared<FiniteGrayCategory>(to_category(d));
      categories[d.name] = std::move(c);
      break;
    }
    case DocKind::Functor: functors[d.name] = to_functor(d, *this); break;
    case DocKind::WeakFunctor: weak[d.name] = to_weak(d, *this); break;
    case DocKind::Tritransformation: trits[d.name] = to_trit(d, *this); break;
    case DocKind::Zigzag:
      fail(ErrorKind::Semantic, d.name + ": zigzags are read with to_zigzag");
  }
  return d.name;
}

}  // namespace gray
