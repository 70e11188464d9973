#include "latmorse/affine_map.hpp"

#include "latmorse/common.hpp"

#include <algorithm>

namespace latmorse {

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<Rat> breakpoints, std::vector<Piece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  require(breakpoints_.size() >= 2, Errc::ValidationError, "map needs at least one piece");
  require(pieces_.size() + 1 == breakpoints_.size(), Errc::ValidationError,
          "piece count must match breakpoint intervals");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    require(breakpoints_[i] < breakpoints_[i + 1], Errc::ValidationError,
            "map breakpoints must be strictly increasing");
  auto piece_at = [this](std::size_t i, const Rat& x) {
    return pieces_[i].slope * x + pieces_[i].intercept;
  };
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
    require(piece_at(i, breakpoints_[i + 1]) == piece_at(i + 1, breakpoints_[i + 1]),
            Errc::ValidationError,
            "map discontinuous at " + format_rational(breakpoints_[i + 1]));
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rat y0 = piece_at(i, breakpoints_[i]);
    const Rat y1 = piece_at(i, breakpoints_[i + 1]);
    require(std::min(y0, y1) >= domain_lo() && std::max(y0, y1) <= domain_hi(),
            Errc::ValidationError, "map image escapes the domain");
  }
}

Rat PiecewiseAffineMap::eval(const Rat& x) const {
  require(x >= domain_lo() && x <= domain_hi(), Errc::OutOfDomain,
          "point outside the map domain");
  std::size_t i = 0;
  while (i + 1 < pieces_.size() && x > breakpoints_[i + 1]) ++i;
  return pieces_[i].slope * x + pieces_[i].intercept;
}

IntervalSet PiecewiseAffineMap::exact_image(const Rat& lo, const Rat& hi) const {
  require(lo <= hi, Errc::ValidationError, "interval endpoints out of order");
  require(lo >= domain_lo() && hi <= domain_hi(), Errc::OutOfDomain,
          "interval outside the map domain");
  IntervalSet out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rat seg_lo = std::max(lo, breakpoints_[i]);
    const Rat seg_hi = std::min(hi, breakpoints_[i + 1]);
    if (seg_lo > seg_hi) continue;
    const Rat y0 = pieces_[i].slope * seg_lo + pieces_[i].intercept;
    const Rat y1 = pieces_[i].slope * seg_hi + pieces_[i].intercept;
    out = out.unite(IntervalSet::closed(std::min(y0, y1), std::max(y0, y1)));
  }
  return out;
}

IntervalSet PiecewiseAffineMap::exact_image(const IntervalSet& s) const {
  IntervalSet out;
  for (const auto& p : s.pieces()) out = out.unite(exact_image(p.lo, p.hi));
  return out;
}

}  // namespace latmorse
