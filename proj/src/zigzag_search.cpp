#include <algorithm>
#include <deque>
#include <unordered_map>

#include "gray/loc.hpp"

namespace gray {

namespace {

using Word = std::vector<AtomId>;
using Moves = std::vector<std::pair<std::string, Zigzag>>;

/// Replaces w[i, i+n) by r in link k.
Zigzag replace(const Zigzag& z, std::size_t k, std::size_t i, std::size_t n, const Word& r) {
  Zigzag out = z;
  Word& w = out.links[k].word;
  w.erase(w.begin() + i, w.begin() + i + n);
  w.insert(w.begin() + i, r.begin(), r.end());
  return out;
}

void word_moves(LocContext& ctx, const Zigzag& z, std::size_t k, Moves& out) {
  const Word w = z.links[k].word;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (ctx.atom(w[i]).identity) out.emplace_back("drop", replace(z, k, i, 1, {}));
    if (auto it = ctx.swaps().find(w[i]); it != ctx.swaps().end())
      out.emplace_back("swap", replace(z, k, i, 1, {it->second}));
    if (auto it = ctx.equations().find({w[i]}); it != ctx.equations().end())
      for (const Word& r : it->second) out.emplace_back("pair", replace(z, k, i, 1, r));
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (auto c = ctx.compose_strict(w[i], w[i + 1]))
      out.emplace_back("compose", replace(z, k, i, 2, {*c}));
    if (auto c = ctx.compose_hat(w[i], w[i + 1])) out.emplace_back("hat", replace(z, k, i, 2, {*c}));
    if (auto r = ctx.ev_forward(w[i], w[i + 1])) out.emplace_back("ev", replace(z, k, i, 2, *r));
    if (auto r = ctx.ev_backward(w[i], w[i + 1])) out.emplace_back("ev", replace(z, k, i, 2, *r));
    if (auto it = ctx.equations().find({w[i], w[i + 1]}); it != ctx.equations().end())
      for (const Word& r : it->second) out.emplace_back("pair", replace(z, k, i, 2, r));
  }
}

}  // namespace

std::vector<std::pair<std::string, Zigzag>> zigzag_moves(LocContext& ctx, const Zigzag& z) {
  Moves out;
  const auto& L = z.links;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (!L[k].forward) continue;
    word_moves(ctx, z, k, out);
    if (L[k].word.empty()) {
      Zigzag r = z;
      r.links.erase(r.links.begin() + k);
      out.emplace_back("drop", std::move(r));
      continue;
    }
    for (std::size_t i = 1; i < L[k].word.size(); ++i) {
      Zigzag r = z;
      Link tail{Word(L[k].word.begin() + i, L[k].word.end()), true};
      r.links[k].word.resize(i);
      r.links.insert(r.links.begin() + k + 1, tail);
      out.emplace_back("fuse", std::move(r));
    }
    // Insert ev⁻¹ ev before a word leaving A, or ev ev⁻¹ after a word landing in Gr B.
    const Atom& first = ctx.atom(L[k].word.front());
    if (auto e = ctx.ev_for_node(first.src); e && ctx.atom(*e).tgt == first.src) {
      Zigzag r = z;
      r.links[k].word.insert(r.links[k].word.begin(), *e);
      r.links.insert(r.links.begin() + k, Link{{*e}, false});
      out.emplace_back("cancel", std::move(r));
    }
    const Atom& last = ctx.atom(L[k].word.back());
    if (auto e = ctx.ev_for_node(last.tgt); e && ctx.atom(*e).src == last.tgt) {
      Zigzag r = z;
      r.links[k].word.push_back(*e);
      r.links.insert(r.links.begin() + k + 1, Link{{*e}, false});
      out.emplace_back("cancel", std::move(r));
    }
  }
  for (std::size_t k = 0; k + 1 < L.size(); ++k) {
    if (L[k].forward && L[k + 1].forward) {
      Zigzag r = z;
      r.links[k].word.insert(r.links[k].word.end(), L[k + 1].word.begin(), L[k + 1].word.end());
      r.links.erase(r.links.begin() + k + 1);
      out.emplace_back("fuse", std::move(r));
    }
    if (!L[k].forward && L[k + 1].forward && !L[k + 1].word.empty() &&
        L[k + 1].word.front() == L[k].word[0]) {
      Zigzag r = z;
      r.links[k + 1].word.erase(r.links[k + 1].word.begin());
      r.links.erase(r.links.begin() + k);
      out.emplace_back("cancel", std::move(r));
    }
    if (L[k].forward && !L[k + 1].forward && !L[k].word.empty() &&
        L[k].word.back() == L[k + 1].word[0]) {
      Zigzag r = z;
      r.links[k].word.pop_back();
      r.links.erase(r.links.begin() + k + 1);
      out.emplace_back("cancel", std::move(r));
    }
  }
  return out;
}

namespace {

/// Never empty, so the empty string can mark the root.
std::string key_of(const Zigzag& z) {
  std::string k = "#";
  for (const Link& l : z.links) {
    k += l.forward ? '>' : '<';
    for (AtomId a : l.word) k += std::to_string(a) + ',';
  }
  return k;
}

struct Frontier {
  struct Node {
    Zigzag z;
    std::string parent;
    std::string rule;
    int depth = 0;
  };
  std::unordered_map<std::string, Node> seen;
  std::vector<std::string> frontier;
  int depth = 0;

  void start(const Zigzag& z) {
    const std::string k = key_of(z);
    seen.emplace(k, Node{z, {}, {}, 0});
    frontier = {k};
  }

  std::vector<std::pair<std::string, std::string>> chain(std::string k) const {
    std::vector<std::pair<std::string, std::string>> out;  // (key, rule into it)
    while (!k.empty()) {
      const Node& n = seen.at(k);
      out.emplace_back(k, n.rule);
      k = n.parent;
    }
    return out;
  }
};

}  // namespace

EqualityResult zigzag_equal_bounded(LocContext& ctx, const Zigzag& z1, const Zigzag& z2,
                                    int depth) {
  EqualityResult res;
  if (z1.from != z2.from || z1.to != z2.to) return res;
  Frontier a, b;
  a.start(z1);
  b.start(z2);
  std::string meet;
  if (a.seen.count(key_of(z2))) meet = key_of(z2);

  while (meet.empty() && a.depth + b.depth < depth) {
    if (a.frontier.empty() && b.frontier.empty()) break;
    // Grow the smaller nonempty side.
    const bool pick_a =
        b.frontier.empty() || (!a.frontier.empty() && a.frontier.size() <= b.frontier.size());
    Frontier& s = pick_a ? a : b;
    const Frontier& o = pick_a ? b : a;
    std::vector<std::string> next;
    for (const std::string& k : s.frontier) {
      const Zigzag cur = s.seen.at(k).z;
      for (auto& [rule, z] : zigzag_moves(ctx, cur)) {
        const std::string nk = key_of(z);
        if (s.seen.count(nk)) continue;
        s.seen.emplace(nk, Frontier::Node{std::move(z), k, rule, s.depth + 1});
        next.push_back(nk);
        if (o.seen.count(nk)) {
          meet = nk;
          break;
        }
      }
      if (!meet.empty()) break;
    }
    s.frontier = std::move(next);
    ++s.depth;
  }
  res.explored = a.seen.size() + b.seen.size();
  if (meet.empty()) return res;

  res.equal = true;
  auto ca = a.chain(meet);  // meet back to z1
  std::reverse(ca.begin(), ca.end());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    res.trace.push_back(a.seen.at(ca[i].first).z);
    if (i > 0) res.rules.push_back(ca[i].second);
  }
  auto cb = b.chain(meet);  // meet forward to z2
  for (std::size_t i = 1; i < cb.size(); ++i) {
    res.rules.push_back(cb[i - 1].second);
    res.trace.push_back(b.seen.at(cb[i].first).z);
  }
  return res;
}

bool replay(LocContext& ctx, const EqualityResult& r) {
  if (!r.equal || r.trace.empty() || r.rules.size() + 1 != r.trace.size()) return false;
  for (const Zigzag& z : r.trace)
    if (!check_zigzag(ctx, z).passed()) return false;
  auto related = [&](const Zigzag& x, const Zigzag& y, const std::string& rule) {
    for (const auto& [name, n] : zigzag_moves(ctx, x))
      if (name == rule && n == y) return true;
    return false;
  };
  for (std::size_t i = 0; i < r.rules.size(); ++i)
    if (!related(r.trace[i], r.trace[i + 1], r.rules[i]) &&
        !related(r.trace[i + 1], r.trace[i], r.rules[i]))
      return false;
  return true;
}

}  // namespace gray
