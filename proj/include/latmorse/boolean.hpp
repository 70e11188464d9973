#pragma once

#include "latmorse/common.hpp"
#include "latmorse/lattice.hpp"

#include <string>
#include <vector>

namespace latmorse {

/// Boolean algebra of all subsets of a finite atom list.  Elements are
/// plain bitmasks; only the atom labels are stored.
class BooleanAlgebraOnAtoms {
 public:
  explicit BooleanAlgebraOnAtoms(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  Bitset bottom() const { return Bitset(atoms_.size()); }
  Bitset top() const { return ~Bitset(atoms_.size()); }
  Bitset complement(const Bitset& a) const { return ~a; }
  static Bitset join(const Bitset& a, const Bitset& b) { return a | b; }
  static Bitset meet(const Bitset& a, const Bitset& b) { return a & b; }
  static Bitset diff(const Bitset& a, const Bitset& b) { return a & ~b; }

  std::string notation(const Bitset& a) const { return set_notation(a, atoms_); }

 private:
  std::vector<std::string> atoms_;
};

/// Booleanization of a finite distributive lattice: Set(J(L)) together
/// with the embedding, which in Birkhoff form is the element mask itself.
struct Booleanization {
  BooleanAlgebraOnAtoms algebra;
  /// j(a); image over all elements is exactly the down-set family.
  Bitset embed(const FiniteDistributiveLattice& lattice, std::size_t element) const {
    return lattice.mask(element);
  }
};

Booleanization booleanize(const FiniteDistributiveLattice& lattice);

/// Bounded-lattice homomorphism (or anti-homomorphism) given by an element
/// table; the defining identities are verified exhaustively at
/// construction.
class LatticeHom {
 public:
  static LatticeHom hom(const FiniteDistributiveLattice& source,
                        const FiniteDistributiveLattice& target, std::vector<std::size_t> table);
  static LatticeHom anti_hom(const FiniteDistributiveLattice& source,
                             const FiniteDistributiveLattice& target,
                             std::vector<std::size_t> table);
  static LatticeHom identity(const FiniteDistributiveLattice& lattice);

  const FiniteDistributiveLattice& source() const { return *source_; }
  const FiniteDistributiveLattice& target() const { return *target_; }
  std::size_t apply(std::size_t e) const { return table_.at(e); }
  bool is_anti() const { return anti_; }
  bool is_isomorphism() const;

 private:
  LatticeHom(const FiniteDistributiveLattice* source, const FiniteDistributiveLattice* target,
             std::vector<std::size_t> table, bool anti);

  const FiniteDistributiveLattice* source_;
  const FiniteDistributiveLattice* target_;
  std::vector<std::size_t> table_;
  bool anti_;
};

/// Boolean homomorphism B(h): Set(J(K)) -> Set(J(L)) induced by
/// h: K -> L.  Encoded by the adjoint atom map g: J(L) -> J(K) with
/// B(h)(S) = { b : g(b) in S }, which preserves complement, union and
/// intersection by construction.
class BooleanHom {
 public:
  BooleanHom(const LatticeHom& h);

  Bitset apply(const Bitset& subset_of_source_ji) const;
  const std::vector<std::size_t>& atom_map() const { return atom_map_; }

 private:
  std::size_t source_ji_count_;
  std::vector<std::size_t> atom_map_;  // target ji index -> source ji index
};

BooleanHom booleanize_hom(const LatticeHom& h);

/// Order-convex subset of J(L), i.e. a set of the form j(a) \ j(b).
struct ConvexPiece {
  const FiniteDistributiveLattice* lattice;
  Bitset mask;

  ConvexPiece(const FiniteDistributiveLattice& lat, Bitset m);
};

/// All sets j(a) \ j(b), deduplicated and canonically sorted.  Closed
/// under intersection and contains both the empty set and J(L).
std::vector<ConvexPiece> convex_semilattice(const FiniteDistributiveLattice& lattice);

}  // namespace latmorse
