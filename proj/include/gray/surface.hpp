#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gray/loc.hpp"
#include "gray/path.hpp"
#include "gray/weak.hpp"

namespace gray {

/// One line `KEY args... [= result...]`. Children belong to a block line (HOM).
struct Entry {
  std::string key;
  std::vector<std::string> args;
  std::vector<std::string> result;
  std::vector<Entry> children;
  std::size_t line = 0;
  std::size_t column = 0;

  /// Ignores source positions.
  friend bool operator==(const Entry& l, const Entry& r) {
    return l.key == r.key && l.args == r.args && l.result == r.result && l.children == r.children;
  }
};

enum class DocKind { Category, Functor, WeakFunctor, Tritransformation, Zigzag };

const char* to_string(DocKind k);

/// A parsed file: the header `KIND name params...` and its entries.
struct Document {
  DocKind kind = DocKind::Category;
  std::string name;
  std::vector<std::string> params;
  std::vector<Entry> entries;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Positioned syntax error.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
             const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

private:
  std::size_t line_, column_;
  std::set<std::string> expected_;
};

/// Throws ParseError. Lines are `#`-commented; block children are indented.
Document parse(const std::string& text);

/// Canonical text: entries ordered by keyword rank then by arguments in
/// natural order (digit runs compare numerically).
std::string serialize(const Document& d);

/// Sorts entries the way serialize prints them.
Document canonical(Document d);

/// Categories, functors and tritransformations referenced by name.
struct Library {
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, GrayFunctorData> functors;
  std::map<std::string, WeakFunctorData> weak;
  std::map<std::string, Tritransformation> trits;

  /// A registered category or else a built-in fixture. Throws Semantic.
  CategoryPtr category(const std::string& name) const;
  /// A registered functor, else id_X, an enumerated functor named
  /// `X->Y#i`, or a composite `G.F` of resolvable names.
  const GrayFunctorData& functor(const std::string& name) const;
  /// A registered weak functor, else a built-in one, else a resolvable strict functor.
  const WeakFunctorData& weak_functor(const std::string& name) const;
  /// Loads a category, functor, weak functor or tritransformation; returns its name.
  std::string load(const Document& d);

private:
  mutable std::map<std::string, CategoryPtr> builtin_;
  mutable std::map<std::string, GrayFunctorData> derived_;
  mutable std::map<std::string, WeakFunctorData> derived_weak_;
};

// Semantic conversions. to_* throw Error(Semantic) naming the offending entry.
Document from_category(const FiniteGrayCategory& C);
FiniteGrayCategory to_category(const Document& d);
Document from_functor(const GrayFunctorData& F);
GrayFunctorData to_functor(const Document& d, const Library& lib);
Document from_weak(const WeakFunctorData& F);
WeakFunctorData to_weak(const Document& d, const Library& lib);
Document from_trit(const std::string& name, const Tritransformation& t, const GrayFunctorData& F,
                   const GrayFunctorData& G, const FiniteGrayCategory& B);
Tritransformation to_trit(const Document& d, const Library& lib);
/// Atoms are written fun:NAME, gr:NAME, ev:CATEGORY or id:CATEGORY.
Document from_zigzag(const std::string& name, const LocContext& ctx, const Zigzag& z);
Zigzag to_zigzag(const Document& d, const Library& lib, LocContext& ctx);

}  // namespace gray
