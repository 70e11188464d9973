#pragma once

#include "latmorse/common.hpp"
#include "latmorse/poset.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace latmorse {

/// Finite bounded distributive lattice in Birkhoff normal form: every
/// element IS its down-set bitmask over the join-irreducible poset, so
/// join/meet are mask union/intersection and the embedding into
/// Set(J(L)) is the identity.  Elements are listed in a fixed linear
/// extension (cardinality, then numeric mask), which makes every dump
/// deterministic.
class FiniteDistributiveLattice {
 public:
  FiniteDistributiveLattice(FinitePoset ji_poset, std::vector<Bitset> elements,
                            std::vector<std::string> labels);

  const FinitePoset& ji_poset() const { return ji_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t ji_count() const { return ji_.size(); }

  const Bitset& mask(std::size_t e) const { return elements_.at(e); }
  const std::string& label(std::size_t e) const { return labels_.at(e); }
  std::size_t index_of(const Bitset& mask) const;

  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const { return is_subset(elements_[a], elements_[b]); }

  struct JoinIrreducible {
    std::size_t element;  // index in the element list
    std::size_t pred;     // its unique immediate predecessor
    std::size_t ji;       // index in ji_poset
  };

  /// Every nonzero element with a unique immediate predecessor, listed in
  /// ji_poset order (a linear extension of the lattice order).
  std::vector<JoinIrreducible> join_irreducibles() const;

  /// Maximal join-irreducibles below `e`; the unique irredundant
  /// join-representation.
  std::vector<std::size_t> irredundant_join_rep(std::size_t e) const;

  /// Hasse covers of the element order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  FinitePoset ji_;
  std::vector<Bitset> elements_;
  std::vector<std::string> labels_;
  std::map<Bitset, std::size_t> index_;
};

/// Down-set lattice of a poset.  The join-irreducible poset of the result
/// is the canonicalized copy of `p` (principal down-sets).
FiniteDistributiveLattice downset_lattice(const FinitePoset& p,
                                          std::size_t cap = (std::size_t{1} << 20));

/// A lattice given by explicit operation tables, normalized into Birkhoff
/// form.  `source_index[e]` maps each normalized element back to its row
/// in the input tables.  Throws NotALattice / NotDistributive when the
/// tables do not describe a finite distributive lattice.
struct NormalizedLattice {
  FiniteDistributiveLattice lattice;
  std::vector<std::size_t> source_index;
};

NormalizedLattice lattice_from_tables(const std::vector<std::string>& labels,
                                      const std::vector<std::vector<std::size_t>>& join_table,
                                      const std::vector<std::vector<std::size_t>>& meet_table);

/// Two finite distributive lattices are isomorphic iff their
/// join-irreducible posets are order-isomorphic.
bool lattice_isomorphic(const FiniteDistributiveLattice& a, const FiniteDistributiveLattice& b);

}  // namespace latmorse
