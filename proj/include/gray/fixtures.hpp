#pragma once

#include <string>
#include <vector>

#include "gray/category.hpp"

namespace gray {

/// Declares missing identity cells, named "1" + the name of the cell below.
void declare_identities(FiniteGrayCategory& C);

/// Fills every absent table entry whose expected boundary has exactly one
/// cell. Identity tables must be set. Entries already present are kept.
void complete_thin(FiniteGrayCategory& C);

namespace fixtures {

/// One cell per dimension.
FiniteGrayCategory terminal();
/// Objects a, b; exactly one cell between any parallel pair in every dimension.
FiniteGrayCategory chaotic2();
/// Objects a, b; identities only.
FiniteGrayCategory discrete2();
/// One object, one 1-cell, one 2-cell; 3-cells {id, e} with e∘e = e.
FiniteGrayCategory idem3();
/// One object, one 1-cell; 2-cells {id, s} with s⊗s = id; identity 3-cells.
FiniteGrayCategory z2();

/// The four fixtures shipped as golden files.
std::vector<FiniteGrayCategory> shipped();
/// shipped() plus z2.
std::vector<FiniteGrayCategory> all();

FiniteGrayCategory by_name(const std::string& name);

struct Mutation {
  std::string name;
  std::string expected_tag;
  FiniteGrayCategory category;
};

/// Single-entry mutations of chaotic2, each paired with the axiom family that
/// must witness the breakage.
std::vector<Mutation> chaotic2_mutations();

}  // namespace fixtures
}  // namespace gray
