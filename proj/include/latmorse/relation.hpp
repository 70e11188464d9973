#pragma once

#include "latmorse/common.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latmorse {

/// Binary relation F on a finite atom set, stored as per-atom forward
/// bitmask rows; the backward rows are the cached transpose.  Relations
/// need not be total in either direction.
class Relation {
 public:
  Relation(std::vector<std::string> atoms,
           const std::vector<std::pair<std::string, std::string>>& edges);
  Relation(std::vector<std::string> atoms, std::vector<Bitset> forward_rows);

  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const Bitset& forward_row(std::size_t atom) const { return forward_[atom]; }
  const Bitset& backward_row(std::size_t atom) const { return backward_[atom]; }

  Bitset empty_set() const { return Bitset(atoms_.size()); }
  Bitset full_set() const { return ~Bitset(atoms_.size()); }

  Bitset image(const Bitset& u) const;
  Bitset preimage(const Bitset& u) const;

  bool forward_invariant(const Bitset& u) const { return is_subset(image(u), u); }
  bool backward_invariant(const Bitset& u) const { return is_subset(preimage(u), u); }
  bool reflexive() const;
  bool transitive() const;

  Relation transpose() const;
  Relation reflexive_transitive_closure() const;

  /// Edge list sorted by (source, target) index.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::string> atoms_;
  std::vector<Bitset> forward_;
  std::vector<Bitset> backward_;
};

/// Eventual forward image: iterate the image map until the set sequence
/// cycles and return the union over one full cycle.
Bitset omega(const Relation& f, const Bitset& u);

/// omega of the transpose.
Bitset alpha(const Relation& f, const Bitset& u);

/// Maximal invariant subset of `u`: repeatedly drop atoms with no in-u
/// successor or no in-u predecessor.
Bitset inv(const Relation& f, const Bitset& u);

/// Atoms reachable from `u` in >= 0 steps.
Bitset forward_reach(const Relation& f, const Bitset& u);

/// Strongly connected components in Tarjan (reverse topological) order.
std::vector<Bitset> strongly_connected_components(const Relation& f);

/// Components carrying at least one edge (size >= 2 or a self-loop);
/// these are the recurrent components of the dynamics.
std::vector<Bitset> recurrent_components(const Relation& f);

}  // namespace latmorse
