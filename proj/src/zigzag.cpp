#include <algorithm>

#include "gray/loc.hpp"

namespace gray {

namespace {

bool same_weak(WeakFunctorData a, WeakFunctorData b) {
  a.name.clear();
  b.name.clear();
  return a.source->name() == b.source->name() && a.target->name() == b.target->name() &&
         a.map == b.map && a.chi == b.chi && a.iota == b.iota && a.chi_nat == b.chi_nat &&
         a.omega == b.omega && a.gamma == b.gamma && a.delta == b.delta;
}

bool is_identity_map(const GrayFunctorData& F) {
  return F.source->name() == F.target->name() && F.map == identity_functor(F.source).map;
}

template <class V>
bool iota_vec(const V& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != i) return false;
  return true;
}

}  // namespace

std::shared_ptr<const GrTruncation> LocContext::truncation(const CategoryPtr& A) {
  cats_.emplace(A->name(), A);
  auto& slot = truncs_[A->name()];
  if (!slot) slot = std::make_shared<const GrTruncation>(A, bound_);
  return slot;
}

AtomId LocContext::intern(Atom a) {
  for (AtomId id : by_name_[a.src + "->" + a.tgt]) {
    const Atom& b = atoms_[id];
    if (b.kind != a.kind) continue;
    if (a.kind == Atom::Kind::Strict && b.strict == a.strict) return id;
    if (a.kind == Atom::Kind::Ev) return id;
    if (a.kind == Atom::Kind::Hat && same_weak(a.weak, b.weak)) return id;
  }
  const AtomId id = AtomId(atoms_.size());
  by_name_[a.src + "->" + a.tgt].push_back(id);
  atoms_.push_back(std::move(a));
  return id;
}

AtomId LocContext::strict(const GrayFunctorData& F) {
  cats_.emplace(F.source->name(), F.source);
  cats_.emplace(F.target->name(), F.target);
  Atom a{Atom::Kind::Strict, F.name, F.source->name(), F.target->name(), F, {}, {}, {}, false};
  a.identity = is_identity_map(F);
  return intern(std::move(a));
}

AtomId LocContext::ev(const CategoryPtr& A) {
  auto it = ev_of_.find(A->name());
  if (it != ev_of_.end()) return it->second;
  auto T = truncation(A);
  Atom a{Atom::Kind::Ev, "ev_" + A->name(), T->name(), A->name(), {}, A, {}, {}, false};
  const AtomId id = intern(std::move(a));
  certificates_.emplace(id, is_trivial_fibration(*T));
  ev_of_.emplace(A->name(), id);
  ev_of_.emplace(T->name(), id);
  return id;
}

AtomId LocContext::hat(const WeakFunctorData& F) {
  auto TA = truncation(F.source), TB = truncation(F.target);
  Atom a{Atom::Kind::Hat, "Gr " + F.name, TA->name(), TB->name(), {}, {}, F, {}, false};
  for (AtomId id : by_name_[a.src + "->" + a.tgt])
    if (atoms_[id].kind == Atom::Kind::Hat && same_weak(atoms_[id].weak, F)) return id;
  auto gr = std::make_shared<const GrMap>(gr_map(F, TA, TB));
  a.identity = has_trivial_constraints(F) && is_identity_map(underlying(F)) &&
               iota_vec(gr->strings) && iota_vec(gr->gens) && iota_vec(gr->cells2);
  a.gr = std::move(gr);
  return intern(std::move(a));
}

const AxiomReport* LocContext::certificate(AtomId a) const {
  auto it = certificates_.find(a);
  return it == certificates_.end() ? nullptr : &it->second;
}

std::optional<AtomId> LocContext::ev_for_node(const std::string& n) const {
  auto it = ev_of_.find(n);
  if (it == ev_of_.end()) return std::nullopt;
  return it->second;
}

AxiomReport LocContext::add_path(const PathCategory& P) {
  AxiomReport cert = check_C_weak_equivalence(P);
  cert.merge(check_path_cells(P));
  if (!cert.passed()) return cert;
  const AtomId s = strict(P.S), t = strict(P.T);
  swaps_[s] = t;
  swaps_[t] = s;
  certificates_[strict(P.C)] = cert;
  return cert;
}

AxiomReport LocContext::add_pair(const WeakFunctorData& H, const PathCategory& P,
                                 const GrayFunctorData& F, const GrayFunctorData& G) {
  const AtomId h = hat(H), s = hat(P.S), t = hat(P.T), f = hat(F), g = hat(G);
  AxiomReport rep = compare_maps(*atoms_[f].gr, compose(*atoms_[s].gr, *atoms_[h].gr), "PAIR");
  rep.merge(compare_maps(*atoms_[g].gr, compose(*atoms_[t].gr, *atoms_[h].gr), "PAIR"));
  if (!rep.passed()) return rep;
  auto add = [&](std::vector<AtomId> l, std::vector<AtomId> r) {
    auto& v = equations_[l];
    if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
  };
  add({h, s}, {f});
  add({f}, {h, s});
  add({h, t}, {g});
  add({g}, {h, t});
  return rep;
}

std::optional<std::vector<AtomId>> LocContext::ev_forward(AtomId h, AtomId e) {
  auto key = std::pair{h, e};
  if (auto it = ev_cache_.find(key); it != ev_cache_.end()) return it->second;
  std::optional<std::vector<AtomId>> out;
  const Atom& H = atoms_[h];
  const Atom& E = atoms_[e];
  if (H.kind == Atom::Kind::Hat && E.kind == Atom::Kind::Ev && H.tgt == E.src &&
      has_trivial_constraints(H.weak) && check_ev_square(*H.gr, H.weak).passed()) {
    const WeakFunctorData F = H.weak;
    out = std::vector<AtomId>{ev(F.source), strict(underlying(F))};
  }
  ev_cache_[key] = out;
  return out;
}

std::optional<std::vector<AtomId>> LocContext::ev_backward(AtomId e, AtomId s) {
  const Atom& E = atoms_[e];
  const Atom& S = atoms_[s];
  if (E.kind != Atom::Kind::Ev || S.kind != Atom::Kind::Strict || E.tgt != S.src) return std::nullopt;
  const GrayFunctorData F = S.strict;
  const AtomId h = hat(F);
  const AtomId eb = ev(F.target);
  auto fwd = ev_forward(h, eb);
  if (!fwd || (*fwd)[0] != e || (*fwd)[1] != s) return std::nullopt;
  return std::vector<AtomId>{h, eb};
}

std::optional<AtomId> LocContext::compose_strict(AtomId x, AtomId y) {
  const Atom& X = atoms_[x];
  const Atom& Y = atoms_[y];
  if (X.kind != Atom::Kind::Strict || Y.kind != Atom::Kind::Strict || X.tgt != Y.src)
    return std::nullopt;
  const GrayFunctorData c = compose(Y.strict, X.strict);
  return strict(c);
}

std::optional<AtomId> LocContext::compose_hat(AtomId x, AtomId y) {
  auto key = std::pair{x, y};
  if (auto it = hat_cache_.find(key); it != hat_cache_.end()) return it->second;
  std::optional<AtomId> out;
  const Atom& X = atoms_[x];
  const Atom& Y = atoms_[y];
  if (X.kind == Atom::Kind::Hat && Y.kind == Atom::Kind::Hat && X.tgt == Y.src &&
      has_trivial_constraints(X.weak) && has_trivial_constraints(Y.weak)) {
    const GrMap both = compose(*Y.gr, *X.gr);
    const AtomId c = hat(compose(underlying(atoms_[y].weak), underlying(atoms_[x].weak)));
    if (compare_maps(*atoms_[c].gr, both, "HAT5").passed()) out = c;
  }
  hat_cache_[key] = out;
  return out;
}

namespace {

/// Node reached after traversing one link from `node`.
std::optional<std::string> advance(const LocContext& ctx, const std::string& node, const Link& l) {
  if (l.forward) {
    std::string at = node;
    for (AtomId a : l.word) {
      if (ctx.atom(a).src != at) return std::nullopt;
      at = ctx.atom(a).tgt;
    }
    return at;
  }
  if (l.word.size() != 1 || ctx.atom(l.word[0]).tgt != node) return std::nullopt;
  return ctx.atom(l.word[0]).src;
}

}  // namespace

AxiomReport check_zigzag(const LocContext& ctx, const Zigzag& z) {
  AxiomReport rep;
  std::string at = z.from;
  for (std::size_t i = 0; i < z.links.size(); ++i) {
    const Link& l = z.links[i];
    ++rep.checked;
    auto next = advance(ctx, at, l);
    if (!next) {
      rep.add("ZIGZAG", {{1, CellId(i)}}, "link does not start at " + at);
      return rep;
    }
    if (!l.forward) {
      const AxiomReport* c = ctx.certificate(l.word[0]);
      if (!c || !c->passed())
        rep.add("ZIGZAG", {{1, CellId(i)}}, "backward link without a weak-equivalence certificate");
    }
    at = *next;
  }
  ++rep.checked;
  if (at != z.to) rep.add("ZIGZAG", {}, "ends at " + at + " instead of " + z.to);
  return rep;
}

Zigzag psi(LocContext& ctx, const WeakFunctorData& F) {
  Zigzag z{F.source->name(), F.target->name(), {}};
  z.links.push_back({{ctx.ev(F.source)}, false});
  z.links.push_back({{ctx.hat(F)}, true});
  z.links.push_back({{ctx.ev(F.target)}, true});
  return z;
}

Zigzag psi(LocContext& ctx, const GrayFunctorData& F) { return psi(ctx, weaken(F)); }

Zigzag then(const Zigzag& g, const Zigzag& f) {
  if (f.to != g.from)
    fail(ErrorKind::NotComposable, "zigzag ends at " + f.to + " but the next starts at " + g.from);
  Zigzag z{f.from, g.to, f.links};
  z.links.insert(z.links.end(), g.links.begin(), g.links.end());
  return z;
}

namespace {

/// One rewrite inside a forward word, if any applies. Reduction direction only.
bool reduce_word(LocContext& ctx, std::vector<AtomId>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (ctx.atom(w[i]).identity) {
      w.erase(w.begin() + i);
      return true;
    }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (auto c = ctx.compose_strict(w[i], w[i + 1])) {
      w[i] = *c;
      w.erase(w.begin() + i + 1);
      return true;
    }
    if (auto c = ctx.compose_hat(w[i], w[i + 1])) {
      w[i] = *c;
      w.erase(w.begin() + i + 1);
      return true;
    }
    if (auto r = ctx.ev_forward(w[i], w[i + 1])) {
      w[i] = (*r)[0];
      w[i + 1] = (*r)[1];
      return true;
    }
  }
  return false;
}

bool reduce_step(LocContext& ctx, Zigzag& z) {
  auto& L = z.links;
  for (auto& l : L)
    if (l.forward && reduce_word(ctx, l.word)) return true;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L[i].forward && L[i].word.empty()) {
      L.erase(L.begin() + i);
      return true;
    }
  for (std::size_t i = 0; i + 1 < L.size(); ++i)
    if (L[i].forward && L[i + 1].forward) {
      L[i].word.insert(L[i].word.end(), L[i + 1].word.begin(), L[i + 1].word.end());
      L.erase(L.begin() + i + 1);
      return true;
    }
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    if (!L[i].forward && L[i + 1].forward && L[i + 1].word.front() == L[i].word[0]) {
      L[i + 1].word.erase(L[i + 1].word.begin());
      L.erase(L.begin() + i);
      return true;
    }
    if (L[i].forward && !L[i + 1].forward && L[i].word.back() == L[i + 1].word[0]) {
      L[i].word.pop_back();
      L.erase(L.begin() + i + 1);
      return true;
    }
  }
  return false;
}

}  // namespace

Zigzag zigzag_reduce(LocContext& ctx, const Zigzag& z) {
  Zigzag r = z;
  while (reduce_step(ctx, r)) {
  }
  return r;
}

std::string to_string(const LocContext& ctx, const Zigzag& z) {
  std::string s = z.from;
  std::string at = z.from;
  for (const Link& l : z.links) {
    std::string names;
    for (AtomId a : l.word) names += (names.empty() ? "" : ", ") + ctx.atom(a).name;
    at = l.forward ? (l.word.empty() ? at : ctx.atom(l.word.back()).tgt) : ctx.atom(l.word[0]).src;
    s += l.forward ? " -[" + names + "]-> " + at : " <-[" + names + "]- " + at;
  }
  return s;
}

}  // namespace gray
