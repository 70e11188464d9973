#pragma once

#include "latmorse/common.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latmorse {

/// Finite partially ordered set.  Immutable after construction; the order
/// relation is validated (reflexive, antisymmetric, transitive) up front.
class FinitePoset {
 public:
  FinitePoset() = default;  // the empty poset

  /// `below[i]` is the full down-set of element i (including i itself).
  FinitePoset(std::vector<std::string> labels, std::vector<Bitset> below);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  const Bitset& down(std::size_t i) const { return below_[i]; }
  const Bitset& up(std::size_t i) const { return above_[i]; }

  /// Hasse covers as (lower, upper) index pairs, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  bool is_downset(const Bitset& mask) const;
  bool is_convex(const Bitset& mask) const;

  /// All down-sets, sorted by (cardinality, numeric mask value).
  /// Throws SizeLimitExceeded if the count would exceed `cap`.
  std::vector<Bitset> downsets(std::size_t cap = (std::size_t{1} << 20)) const;

  /// Kahn order with lexicographic-label tie-breaking; deterministic.
  std::vector<std::size_t> linear_extension() const;

  /// Same poset with elements reindexed along linear_extension().
  FinitePoset canonicalized() const;

  /// Restriction to the elements of `keep`, preserving relative order of
  /// the retained indices.
  FinitePoset restrict(const Bitset& keep) const;

  bool same_order(const FinitePoset& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Bitset> below_;  // below_[i] = {j : j <= i}
  std::vector<Bitset> above_;  // above_[i] = {j : j >= i}
};

/// Reflexive-transitive closure of a cover relation.
/// Throws DuplicateLabel / CycleDetected.
FinitePoset poset_from_cover_pairs(const std::vector<std::string>& labels,
                                   const std::vector<std::pair<std::string, std::string>>& covers);

/// Order-isomorphism test by backtracking (intended for small posets).
bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q);

}  // namespace latmorse
