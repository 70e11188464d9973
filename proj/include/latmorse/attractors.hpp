#pragma once

#include "latmorse/form.hpp"
#include "latmorse/lattice.hpp"
#include "latmorse/relation.hpp"

#include <string>
#include <vector>

namespace latmorse {

/// Attractor lattice of a relation in Birkhoff form together with the
/// atom-set realization of every element.  Join-irreducibles correspond
/// to the recurrent components; the realized family is exactly
/// { A : F(A) = A }.
struct AttractorLattice {
  FiniteDistributiveLattice lattice;
  std::vector<Bitset> sets;  // aligned with lattice elements

  std::size_t index_of_set(const Bitset& s) const;
};

AttractorLattice attractor_lattice(const Relation& f, std::size_t cap = (std::size_t{1} << 20));

/// Attractor lattice of the transpose: { R : F^{-1}(R) = R }.
AttractorLattice repeller_lattice(const Relation& f, std::size_t cap = (std::size_t{1} << 20));

/// A* = alpha(A^c).  Throws NotAnAttractor unless F(A) = A.
Bitset dual_repeller(const Relation& f, const Bitset& attractor);

/// The form (A,A') -> A n A'* on the attractor lattice, valued in the
/// semilattice of Morse sets (meet = Inv of the intersection).
LatticeForm conley_form_att(const Relation& f, const AttractorLattice& att);

/// Inv(U n V) == omega(U) n alpha(V) for forward-invariant U and
/// backward-invariant V; exposed as a named check.
bool inv_intersection_check(const Relation& f, const Bitset& u, const Bitset& v);

/// Morse tile U \ U' of two forward-invariant sets plus the maximal
/// invariant set inside it.
struct MorseTile {
  Bitset tile;
  Bitset invariant_part;
};

MorseTile morse_tiles(const Relation& f, const Bitset& u, const Bitset& u_prime);

/// Poset of disjoint invariant Morse sets.
struct MorseRepresentation {
  std::vector<Bitset> sets;  // aligned with `order`
  FinitePoset order;
};

/// Morse representation of a sublattice of attractors (list of attractor
/// sets containing the empty set and omega(X), closed under union and
/// omega of intersections).
MorseRepresentation morse_representation(const Relation& f,
                                         const std::vector<Bitset>& attractor_family);

struct MorseVerification {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Dynamical verification of a candidate Morse representation:
///  (a) every recurrent component lies in exactly one candidate set,
///  (b) every candidate set is invariant,
///  (c) candidate sets are pairwise disjoint and nonempty,
///  (d) reachability M' -> M forces M < M' in the candidate order.
MorseVerification verify_morse_representation(const Relation& f, const MorseRepresentation& m);

/// Attractor sublattice reconstructed from a Morse representation: one
/// attractor per down-set of the order, canonically sorted.  Round-trips
/// with morse_representation.
std::vector<Bitset> reconstruct_attractors(const Relation& f, const MorseRepresentation& m);

}  // namespace latmorse
