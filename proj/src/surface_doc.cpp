#include <algorithm>
#include <cctype>
#include <sstream>

#include "gray/surface.hpp"

namespace gray {

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::Category: return "CATEGORY";
    case DocKind::Functor: return "FUNCTOR";
    case DocKind::WeakFunctor: return "WEAKFUNCTOR";
    case DocKind::Tritransformation: return "TRITRANSFORMATION";
    case DocKind::Zigzag: return "ZIGZAG";
  }
  return "?";
}

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
                       const std::string& what)
    : Error(ErrorKind::Parse, [&] {
        std::string e;
        for (const auto& x : expected) e += (e.empty() ? "" : ", ") + x;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what +
               (e.empty() ? "" : " (expected " + e + ")");
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

struct Rule {
  const char* key;
  std::size_t min_args, max_args;
  std::size_t result;
  bool child = false;  // only inside a block
  bool block = false;  // opens a block
  bool sorted = false; // args are a set
};

constexpr std::size_t kMany = 1'000'000;

const std::vector<Rule>& rules(DocKind k) {
  static const std::vector<Rule> category = {
      {"OBJECTS", 0, kMany, 0, false, false, true},
      {"HOM", 2, 2, 0, false, true},
      {"CELL1", 1, 1, 0, true},
      {"CELL2", 3, 3, 0, true},
      {"CELL3", 3, 3, 0, true},
      {"TENSOR", 2, 2, 1, true},
      {"TENSOR3", 2, 2, 1, true},
      {"COMPOSE", 2, 2, 1, true},
      {"IDENTITY", 2, 2, 1},
      {"WHISKER", 4, 4, 1},
      {"SIGMA", 2, 2, 1},
  };
  static const std::vector<Rule> functor = {
      {"MAP0", 1, 1, 1}, {"MAP1", 1, 1, 1}, {"MAP2", 1, 1, 1}, {"MAP3", 1, 1, 1}};
  static const std::vector<Rule> weak = {
      {"MAP0", 1, 1, 1}, {"MAP1", 1, 1, 1},   {"MAP2", 1, 1, 1},  {"MAP3", 1, 1, 1},
      {"CHI", 2, 2, 4},  {"IOTA", 1, 1, 4},   {"CHINAT", 2, 2, 1}, {"OMEGA", 3, 3, 1},
      {"GAMMA", 1, 1, 1}, {"DELTA", 1, 1, 1}};
  static const std::vector<Rule> trit = {
      {"ALPHA0", 1, 1, 1}, {"M", 1, 1, 1}, {"ALPHA1", 1, 1, 4}, {"PI", 2, 2, 1}, {"ALPHA2", 1, 1, 1}};
  static const std::vector<Rule> zigzag = {{"LINK", 2, kMany, 0}};
  switch (k) {
    case DocKind::Category: return category;
    case DocKind::Functor: return functor;
    case DocKind::WeakFunctor: return weak;
    case DocKind::Tritransformation: return trit;
    case DocKind::Zigzag: return zigzag;
  }
  return category;
}

struct Header {
  DocKind kind;
  std::size_t params;
};

const std::map<std::string, Header>& headers() {
  static const std::map<std::string, Header> h = {
      {"CATEGORY", {DocKind::Category, 0}},
      {"FUNCTOR", {DocKind::Functor, 2}},
      {"WEAKFUNCTOR", {DocKind::WeakFunctor, 2}},
      {"TRITRANSFORMATION", {DocKind::Tritransformation, 2}},
      {"ZIGZAG", {DocKind::Zigzag, 3}},
  };
  return h;
}

struct Token {
  std::string text;
  std::size_t column;
};

/// Splits on whitespace; `#` at the start of a token begins a comment.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::set<std::string> keys(DocKind k, bool child) {
  std::set<std::string> s;
  for (const Rule& r : rules(k))
    if (r.child == child) s.insert(r.key);
  return s;
}

const Rule* find_rule(DocKind k, const std::string& key) {
  for (const Rule& r : rules(k))
    if (key == r.key) return &r;
  return nullptr;
}

std::size_t rank(DocKind k, const std::string& key) {
  const auto& rs = rules(k);
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (key == rs[i].key) return i;
  return rs.size();
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      const std::string x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return a.size() - i < b.size() - j;
  return a < b;
}

bool natural_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) { return natural_less(x, y); });
}

void sort_entries(DocKind k, std::vector<Entry>& v) {
  for (Entry& e : v) {
    const Rule* r = find_rule(k, e.key);
    if (r && r->sorted)
      std::sort(e.args.begin(), e.args.end(),
                [](const auto& x, const auto& y) { return natural_less(x, y); });
    sort_entries(k, e.children);
  }
  std::stable_sort(v.begin(), v.end(), [&](const Entry& a, const Entry& b) {
    const std::size_t ra = rank(k, a.key), rb = rank(k, b.key);
    if (ra != rb) return ra < rb;
    if (a.args != b.args) return natural_less(a.args, b.args);
    return natural_less(a.result, b.result);
  });
}

Entry parse_entry(DocKind kind, const std::vector<Token>& toks, std::size_t line, bool child) {
  const Token& k = toks[0];
  const Rule* r = find_rule(kind, k.text);
  if (!r || r->child != child)
    throw ParseError(line, k.column, keys(kind, child),
                     "unexpected " + std::string(child ? "block " : "") + "keyword '" + k.text + "'");
  Entry e{k.text, {}, {}, {}, line, k.column};
  std::size_t i = 1;
  for (; i < toks.size() && toks[i].text != "="; ++i) e.args.push_back(toks[i].text);
  const std::size_t end_col = toks.back().column + toks.back().text.size();
  if (e.args.size() < r->min_args)
    throw ParseError(line, i < toks.size() ? toks[i].column : end_col, {"<name>"},
                     std::string(r->key) + " needs " + std::to_string(r->min_args) + " arguments");
  if (e.args.size() > r->max_args)
    throw ParseError(line, toks[1 + r->max_args].column,
                     r->result ? std::set<std::string>{"="} : std::set<std::string>{"end of line"},
                     "too many arguments to " + std::string(r->key));
  if (r->result == 0) {
    if (i < toks.size()) throw ParseError(line, toks[i].column, {"end of line"}, "unexpected '='");
    return e;
  }
  if (i == toks.size()) throw ParseError(line, end_col, {"="}, "missing '='");
  for (++i; i < toks.size(); ++i) e.result.push_back(toks[i].text);
  if (e.result.size() != r->result)
    throw ParseError(line, e.result.size() < r->result ? end_col : toks[toks.size() - 1].column,
                     {"<name>"},
                     std::string(r->key) + " takes " + std::to_string(r->result) + " result names");
  return e;
}

}  // namespace

Document parse(const std::string& text) {
  Document d;
  bool have_header = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  Entry* block = nullptr;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const bool indented = toks[0].column > 1;
    if (!have_header) {
      auto it = headers().find(toks[0].text);
      std::set<std::string> kinds;
      for (const auto& [k, h] : headers()) kinds.insert(k);
      if (indented || it == headers().end())
        throw ParseError(line, toks[0].column, kinds, "document must start with a header");
      if (toks.size() != 2 + it->second.params)
        throw ParseError(line, toks.size() < 2 ? toks[0].column + toks[0].text.size() : toks[0].column,
                         {"<name>"},
                         it->first + " header takes a name and " +
                             std::to_string(it->second.params) + " parameters");
      d.kind = it->second.kind;
      d.name = toks[1].text;
      for (std::size_t i = 2; i < toks.size(); ++i) d.params.push_back(toks[i].text);
      have_header = true;
      continue;
    }
    if (indented) {
      if (!block)
        throw ParseError(line, toks[0].column, keys(d.kind, false),
                         "indented line outside a block");
      block->children.push_back(parse_entry(d.kind, toks, line, true));
      continue;
    }
    d.entries.push_back(parse_entry(d.kind, toks, line, false));
    block = find_rule(d.kind, d.entries.back().key)->block ? &d.entries.back() : nullptr;
  }
  if (!have_header) {
    std::set<std::string> kinds;
    for (const auto& [k, h] : headers()) kinds.insert(k);
    throw ParseError(line + 1, 1, kinds, "empty document");
  }
  return d;
}

Document canonical(Document d) {
  sort_entries(d.kind, d.entries);
  return d;
}

std::string serialize(const Document& doc) {
  const Document d = canonical(doc);
  std::string out = to_string(d.kind);
  out += " " + d.name;
  for (const auto& p : d.params) out += " " + p;
  out += "\n";
  auto line = [&](const Entry& e, const std::string& indent) {
    out += indent + e.key;
    for (const auto& a : e.args) out += " " + a;
    if (!e.result.empty()) {
      out += " =";
      for (const auto& r : e.result) out += " " + r;
    }
    out += "\n";
  };
  for (const Entry& e : d.entries) {
    line(e, "");
    for (const Entry& c : e.children) line(c, "  ");
  }
  return out;
}

}  // namespace gray
