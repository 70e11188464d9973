#pragma once

#include "latmorse/common.hpp"
#include "latmorse/rational.hpp"

#include <string>
#include <vector>

namespace latmorse {

/// Finite union of rational intervals with open/closed endpoint flags, in
/// a canonical normal form: pieces sorted, pairwise disjoint, and never
/// mergeable (touching pieces whose union is an interval get merged,
/// degenerate open pieces are dropped).  Equality of point sets is
/// exactly equality of the representation.
class IntervalSet {
 public:
  struct Piece {
    Rat lo, hi;
    bool lo_closed, hi_closed;

    bool operator==(const Piece&) const = default;
  };

  IntervalSet() = default;  // empty set
  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet closed(const Rat& lo, const Rat& hi);
  static IntervalSet point(const Rat& x) { return closed(x, x); }
  static IntervalSet open(const Rat& lo, const Rat& hi);
  static IntervalSet from_pieces(std::vector<Piece> pieces);

  bool is_empty() const { return pieces_.empty(); }
  bool is_closed() const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool operator==(const IntervalSet&) const = default;

  bool contains_point(const Rat& x) const;
  bool contains(const IntervalSet& other) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet subtract(const IntervalSet& other) const;
  /// Complement within the closed interval [space_lo, space_hi].
  IntervalSet complement_in(const Rat& space_lo, const Rat& space_hi) const;

  IntervalSet closure() const;
  /// Interior relative to the ambient space [space_lo, space_hi]; the
  /// space boundary points count as interior-boundary of the space.
  IntervalSet interior_in(const Rat& space_lo, const Rat& space_hi) const;
  /// cl int, relative to the space.  Idempotent and monotone.
  IntervalSet regularize_in(const Rat& space_lo, const Rat& space_hi) const;

  std::string to_string() const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace latmorse
