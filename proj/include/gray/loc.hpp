#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gray/free.hpp"
#include "gray/model.hpp"
#include "gray/path.hpp"

namespace gray {

using AtomId = std::uint32_t;

/// A primitive functor that can appear in a zigzag.
///   Strict  a strict functor between finite categories
///   Ev      ev_A: Gr A → A
///   Hat     Gr F: Gr A → Gr B for a (possibly weak) F
struct Atom {
  enum class Kind { Strict, Ev, Hat } kind;
  std::string name;
  std::string src, tgt;  // node names
  GrayFunctorData strict;
  CategoryPtr base;       // Ev
  WeakFunctorData weak;   // Hat
  std::shared_ptr<const GrMap> gr;
  bool identity = false;
};

/// One link of a zigzag. A forward link carries a composite, applied from
/// word.front() to word.back(); an empty word is an identity. A backward link
/// carries one atom that must hold a weak-equivalence certificate.
struct Link {
  std::vector<AtomId> word;
  bool forward = true;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

struct Zigzag {
  std::string from, to;
  std::vector<Link> links;

  friend bool operator==(const Zigzag&, const Zigzag&) = default;
};

/// Interns atoms, holds their certificates and the validated word equations
/// used by reduction and bounded equality. All hatted categories use one bound.
class LocContext {
public:
  explicit LocContext(int bound = 1) : bound_(bound) {}
  int bound() const { return bound_; }

  AtomId strict(const GrayFunctorData& F);
  AtomId ev(const CategoryPtr& A);
  AtomId hat(const WeakFunctorData& F);
  AtomId hat(const GrayFunctorData& F) { return hat(weaken(F)); }
  const Atom& atom(AtomId a) const { return atoms_.at(a); }
  std::size_t atoms() const { return atoms_.size(); }

  /// Weak-equivalence certificate of a backward atom, if it has one.
  const AxiomReport* certificate(AtomId a) const;

  /// Registers S and T of ℙB as equal, certified by check_C_weak_equivalence
  /// and S∘C = T∘C = id. Returns the certificate.
  AxiomReport add_path(const PathCategory& P);

  /// Registers Gr S ∘ Gr H = Gr F and Gr T ∘ Gr H = Gr G for H = ⟨F,G⟩ after
  /// checking both cellwise. Returns the combined report; nothing is
  /// registered unless it passes.
  AxiomReport add_pair(const WeakFunctorData& H, const PathCategory& P, const GrayFunctorData& F,
                       const GrayFunctorData& G);

  std::shared_ptr<const GrTruncation> truncation(const CategoryPtr& A);

  // Word equations, all validated when first produced.
  /// Gr F then ev_B  ↔  ev_A then F, for strict F.
  std::optional<std::vector<AtomId>> ev_forward(AtomId hat, AtomId ev);
  std::optional<std::vector<AtomId>> ev_backward(AtomId ev, AtomId strict);
  /// x then y composed into one strict atom.
  std::optional<AtomId> compose_strict(AtomId x, AtomId y);
  /// Gr F then Gr G  →  Gr(G∘F), for strict F and G.
  std::optional<AtomId> compose_hat(AtomId x, AtomId y);
  /// Registered pair equations and S = T substitutions.
  const std::map<std::vector<AtomId>, std::vector<std::vector<AtomId>>>& equations() const {
    return equations_;
  }
  const std::map<AtomId, AtomId>& swaps() const { return swaps_; }

  /// The finite category named n, if registered; used to find ev atoms.
  std::optional<AtomId> ev_for_node(const std::string& n) const;

private:
  AtomId intern(Atom a);

  int bound_;
  std::vector<Atom> atoms_;
  std::map<std::string, std::vector<AtomId>> by_name_;
  std::map<AtomId, AxiomReport> certificates_;
  std::map<std::string, std::shared_ptr<const GrTruncation>> truncs_;
  std::map<std::string, CategoryPtr> cats_;
  std::map<std::string, AtomId> ev_of_;
  std::map<std::pair<AtomId, AtomId>, std::optional<std::vector<AtomId>>> ev_cache_;
  std::map<std::pair<AtomId, AtomId>, std::optional<AtomId>> hat_cache_;
  std::map<std::vector<AtomId>, std::vector<std::vector<AtomId>>> equations_;
  std::map<AtomId, AtomId> swaps_;
};

/// Links connect, backward links hold passing certificates. Tag ZIGZAG.
AxiomReport check_zigzag(const LocContext& ctx, const Zigzag& z);

/// A ←ev_A Gr A →Gr F Gr B →ev_B B.
Zigzag psi(LocContext& ctx, const WeakFunctorData& F);
Zigzag psi(LocContext& ctx, const GrayFunctorData& F);

/// g after f; endpoints must match.
Zigzag then(const Zigzag& g, const Zigzag& f);

/// Normal pass to a fixpoint, scanning left to right: drop identities, compose
/// strict atoms, rewrite Gr F then ev to ev then F and Gr F then Gr G to
/// Gr(G∘F) for strict F and G, fuse forward links, and cancel a backward w
/// against a neighbouring forward word that starts (after it) or ends (before
/// it) with w.
Zigzag zigzag_reduce(LocContext& ctx, const Zigzag& z);

/// Every single-step move and its inverse, with a rule name per neighbour.
std::vector<std::pair<std::string, Zigzag>> zigzag_moves(LocContext& ctx, const Zigzag& z);

struct EqualityResult {
  bool equal = false;
  std::vector<Zigzag> trace;       // z1 = trace.front(), z2 = trace.back()
  std::vector<std::string> rules;  // rules[i] relates trace[i] and trace[i + 1]
  std::size_t explored = 0;
};

/// Bidirectional breadth-first search over zigzag_moves with at most `depth`
/// moves in total. equal = false means nothing was found within depth, not
/// that the zigzags differ.
EqualityResult zigzag_equal_bounded(LocContext& ctx, const Zigzag& z1, const Zigzag& z2,
                                    int depth);

/// Each consecutive pair of the trace is related by the named move in one
/// direction or the other.
bool replay(LocContext& ctx, const EqualityResult& r);

std::string to_string(const LocContext& ctx, const Zigzag& z);

/// Tritransformations F ⇒ G by backtracking over α_a, α_f, α_θ, M and Π in
/// id order, each complete assignment validated through pair_functor and
/// check_weak_functor.
SearchOutcome<Tritransformation> pseudo_nat_equiv_search(const GrayFunctorData& F,
                                                         const GrayFunctorData& G,
                                                         const PathCategory& PB,
                                                         std::size_t budget = 100'000);

}  // namespace gray
