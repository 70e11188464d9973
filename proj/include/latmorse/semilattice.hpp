#pragma once

#include "latmorse/common.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace latmorse {

/// Finite meet semilattice with an explicit operation table.  The meet is
/// validated (commutative, idempotent, associative) at construction;
/// associativity is exhaustive up to 256 elements and sampled beyond.
/// An optional join table is carried when the elements happen to form a
/// lattice (needed for additivity checks and join decompositions).
class MeetSemilattice {
 public:
  MeetSemilattice(std::vector<std::string> labels, std::vector<std::uint32_t> meet_table,
                  std::optional<std::vector<std::uint32_t>> join_table = std::nullopt);

  /// Elements realized as subsets of a labeled universe; dedup + canonical
  /// sort happen here, the meet table comes from `meet_fn`.  Fails with
  /// NotASemilattice when `meet_fn` leaves the family.
  static MeetSemilattice from_masks(const std::vector<std::string>& universe,
                                    std::vector<Bitset> masks,
                                    const std::function<Bitset(const Bitset&, const Bitset&)>& meet_fn,
                                    bool with_union_join = false);

  /// Full powerset of `atoms` with intersection meet and union join.
  static MeetSemilattice boolean_powerset(const std::vector<std::string>& atoms);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::uint32_t e) const { return labels_.at(e); }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const {
    return meet_table_[a * size() + b];
  }
  bool has_join() const { return join_table_.has_value(); }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    return (*join_table_)[a * size() + b];
  }
  bool leq(std::uint32_t a, std::uint32_t b) const { return meet(a, b) == a; }

  bool has_masks() const { return !masks_.empty(); }
  const Bitset& mask_of(std::uint32_t e) const { return masks_.at(e); }
  std::optional<std::uint32_t> index_of_mask(const Bitset& m) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> meet_table_;
  std::optional<std::vector<std::uint32_t>> join_table_;
  std::vector<Bitset> masks_;  // empty unless built from masks
};

using SemilatticePtr = std::shared_ptr<const MeetSemilattice>;

}  // namespace latmorse
