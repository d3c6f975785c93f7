#include "oracle.hpp"

#include <map>
#include <tuple>
#include <vector>

#include "gray/ops.hpp"

namespace oracle {

using gray::CellId;

namespace {

struct Str {
  CellId a, b;
  std::vector<CellId> c;
};

CellId fold(const gray::Ops& o, CellId obj, const std::vector<CellId>& c, std::size_t lo,
            std::size_t hi) {
  if (lo >= hi) return o.id1(obj);
  CellId r = c[lo];
  for (std::size_t i = lo + 1; i < hi; ++i) r = o.t1(c[i], r);
  return r;
}

}  // namespace

Counts truncation_counts(const gray::FiniteGrayCategory& A, int L) {
  gray::Ops o{A};
  std::vector<Str> S;
  for (CellId a = 0; a < A.count(0); ++a) {
    std::vector<Str> frontier{{a, a, {}}};
    for (int len = 0; len <= L; ++len) {
      std::vector<Str> next;
      for (const Str& s : frontier) {
        S.push_back(s);
        if (len == L) continue;
        for (CellId f = 0; f < A.count(1); ++f)
          if (A.src(1, f) == s.b) {
            Str t = s;
            t.b = A.tgt(1, f);
            t.c.push_back(f);
            next.push_back(t);
          }
      }
      frontier = std::move(next);
    }
  }
  Counts out;
  out.strings = S.size();

  // Generators s → t, each recorded with its bracket.
  std::vector<std::vector<std::pair<std::size_t, CellId>>> gens_from(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j) {
      const Str &s = S[i], &t = S[j];
      if (s.a != t.a || s.b != t.b) continue;
      const std::size_t n1 = s.c.size(), n2 = t.c.size();
      for (std::size_t k = 1; k <= std::min(n1, n2) + 1; ++k) {
        bool prefix = true;
        for (std::size_t p = 0; p + 1 < k; ++p) prefix = prefix && s.c[p] == t.c[p];
        if (!prefix) break;
        for (std::size_t l1 = k - 1; l1 <= n1; ++l1) {
          if (n1 - l1 > n2 + 1 - k) continue;
          const std::size_t l2 = n2 - (n1 - l1);
          bool suffix = true;
          for (std::size_t q = 0; q < n1 - l1; ++q) suffix = suffix && s.c[l1 + q] == t.c[l2 + q];
          if (!suffix) continue;
          const CellId lo = k == 1 ? s.a : A.tgt(1, s.c[k - 2]);
          const CellId fs = fold(o, lo, s.c, k - 1, l1), ft = fold(o, lo, t.c, k - 1, l2);
          for (CellId alpha : A.hom2(fs, ft)) {
            CellId br = alpha;
            for (std::size_t p = k - 1; p-- > 0;) br = o.pre(2, br, s.c[p]);
            for (std::size_t q = l1; q < n1; ++q) br = o.post(s.c[q], 2, br);
            gens_from[i].push_back({j, br});
            ++out.gens;
          }
        }
      }
    }

  // count[(src, tgt, ev)] over sequences of each length.
  using Key = std::tuple<std::size_t, std::size_t, CellId>;
  std::map<Key, std::uint64_t> level, total;
  for (std::size_t i = 0; i < S.size(); ++i)
    level[{i, i, o.id2(fold(o, S[i].a, S[i].c, 0, S[i].c.size()))}] = 1;
  for (int len = 0; len <= L; ++len) {
    std::map<Key, std::uint64_t> next;
    for (const auto& [k, n] : level) {
      total[k] += n;
      if (len == L) continue;
      auto [s, t, ev] = k;
      for (auto [u, br] : gens_from[t]) next[{s, u, o.t2(br, ev)}] += n;
    }
    level = std::move(next);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<CellId, std::uint64_t>>> hom;
  for (const auto& [k, n] : total) {
    auto [s, t, ev] = k;
    out.cells2 += n;
    hom[{s, t}].push_back({ev, n});
  }
  for (const auto& [st, v] : hom)
    for (auto [e1, n1] : v)
      for (auto [e2, n2] : v) out.cells3 += n1 * n2 * A.hom3(e1, e2).size();
  return out;
}

}  // namespace oracle
