#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gray {

/// Index of a cell within one dimension of a finite category.
using CellId = std::uint32_t;
inline constexpr CellId kNoCell = std::numeric_limits<CellId>::max();

/// A cell reference with explicit dimension (0 = object, ..., 3 = 3-cell).
struct CellRef {
  int dim = 0;
  CellId id = kNoCell;

  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// Which side a 1-cell is whiskered on.
///   Post: w ⊠ x  (the covariant hom-functor w_*)
///   Pre:  x ⊠ w  (the contravariant hom-functor w^*)
enum class Side : std::uint8_t { Post = 0, Pre = 1 };

/// Composition operations internal to a hom 2-category.
enum class HomOp : std::uint8_t {
  Otimes2,  // vertical composite of 2-cells
  Circ3,    // vertical composite of 3-cells
  Otimes3,  // horizontal composite of 3-cells inside a hom
};

enum class ErrorKind {
  NotComposable,
  TableGap,
  Incoherent,
  MissingConstraint,
  ImageNotInPath,
  AxiomFail,
  NoLift,
  Parse,
  Semantic,
  Budget,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace gray
