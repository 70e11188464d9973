#pragma once

#include "latmorse/interval_set.hpp"
#include "latmorse/rational.hpp"

#include <vector>

namespace latmorse {

/// Continuous piecewise-affine self-map of a closed interval, time-one map
/// of a discrete-time system.  Pieces are affine on [b_i, b_{i+1}];
/// continuity across breakpoints and invariance of the domain are checked
/// at construction, which keeps every image computation exact.
class PiecewiseAffineMap {
 public:
  struct Piece {
    Rat slope, intercept;
  };

  PiecewiseAffineMap(std::vector<Rat> breakpoints, std::vector<Piece> pieces);

  const Rat& domain_lo() const { return breakpoints_.front(); }
  const Rat& domain_hi() const { return breakpoints_.back(); }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  Rat eval(const Rat& x) const;

  /// Exact image of [lo, hi] as a closed interval union (per-piece
  /// endpoint images).  Throws OutOfDomain.
  IntervalSet exact_image(const Rat& lo, const Rat& hi) const;
  IntervalSet exact_image(const IntervalSet& s) const;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Piece> pieces_;
};

}  // namespace latmorse
