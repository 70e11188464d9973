#include "latmorse/interval_set.hpp"

#include <algorithm>

namespace latmorse {

namespace {

bool piece_nonempty(const IntervalSet::Piece& p) {
  if (p.lo < p.hi) return true;
  return p.lo == p.hi && p.lo_closed && p.hi_closed;
}

// Does the union of a (ending) and b (starting at or after a) cover the
// junction, so that the two pieces form one interval?
bool mergeable(const IntervalSet::Piece& a, const IntervalSet::Piece& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hi_closed || b.lo_closed;
  return false;
}

}  // namespace

IntervalSet IntervalSet::closed(const Rat& lo, const Rat& hi) {
  require(lo <= hi, Errc::ValidationError, "interval endpoints out of order");
  return from_pieces({Piece{lo, hi, true, true}});
}

IntervalSet IntervalSet::open(const Rat& lo, const Rat& hi) {
  return from_pieces({Piece{lo, hi, false, false}});
}

IntervalSet IntervalSet::from_pieces(std::vector<Piece> pieces) {
  pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                              [](const Piece& p) { return !piece_nonempty(p); }),
               pieces.end());
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed start first
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.hi_closed && !b.hi_closed;
  });
  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (!out.empty() && mergeable(out.back(), p)) {
      Piece& last = out.back();
      if (p.hi > last.hi) {
        last.hi = p.hi;
        last.hi_closed = p.hi_closed;
      } else if (p.hi == last.hi) {
        last.hi_closed = last.hi_closed || p.hi_closed;
      }
    } else {
      out.push_back(p);
    }
  }
  IntervalSet s;
  s.pieces_ = std::move(out);
  return s;
}

bool IntervalSet::is_closed() const {
  for (const auto& p : pieces_)
    if (!p.lo_closed || !p.hi_closed) return false;
  return true;
}

bool IntervalSet::contains_point(const Rat& x) const {
  for (const auto& p : pieces_) {
    if (x < p.lo || (x == p.lo && !p.lo_closed)) continue;
    if (x > p.hi || (x == p.hi && !p.hi_closed)) continue;
    return true;
  }
  return false;
}

bool IntervalSet::contains(const IntervalSet& other) const {
  return other.subtract(*this).is_empty();
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Piece> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return from_pieces(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Piece> out;
  for (const auto& a : pieces_)
    for (const auto& b : other.pieces_) {
      Piece p;
      if (a.lo > b.lo) {
        p.lo = a.lo;
        p.lo_closed = a.lo_closed;
      } else if (b.lo > a.lo) {
        p.lo = b.lo;
        p.lo_closed = b.lo_closed;
      } else {
        p.lo = a.lo;
        p.lo_closed = a.lo_closed && b.lo_closed;
      }
      if (a.hi < b.hi) {
        p.hi = a.hi;
        p.hi_closed = a.hi_closed;
      } else if (b.hi < a.hi) {
        p.hi = b.hi;
        p.hi_closed = b.hi_closed;
      } else {
        p.hi = a.hi;
        p.hi_closed = a.hi_closed && b.hi_closed;
      }
      if (p.lo < p.hi || (p.lo == p.hi && p.lo_closed && p.hi_closed)) out.push_back(p);
    }
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  if (pieces_.empty()) return empty();
  // Complement of `other` inside a padded hull of *this, then intersect.
  Rat lo = pieces_.front().lo - 1;
  Rat hi = pieces_.back().hi + 1;
  std::vector<Piece> comp;
  Rat cursor = lo;
  bool cursor_closed = true;
  for (const auto& p : other.pieces_) {
    if (p.hi < lo) continue;
    if (p.lo > hi) break;
    Piece gap{cursor, p.lo, cursor_closed, !p.lo_closed};
    if (gap.lo < gap.hi || (gap.lo == gap.hi && gap.lo_closed && gap.hi_closed))
      comp.push_back(gap);
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  if (cursor < hi || (cursor == hi && cursor_closed)) comp.push_back({cursor, hi, cursor_closed, true});
  return intersect(from_pieces(std::move(comp)));
}

IntervalSet IntervalSet::complement_in(const Rat& space_lo, const Rat& space_hi) const {
  return closed(space_lo, space_hi).subtract(*this);
}

IntervalSet IntervalSet::closure() const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (auto p : pieces_) {
    p.lo_closed = true;
    p.hi_closed = true;
    out.push_back(p);
  }
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::interior_in(const Rat& space_lo, const Rat& space_hi) const {
  // Normal form guarantees distinct pieces never combine into a
  // neighborhood of a junction point, so the interior acts piecewise.
  std::vector<Piece> out;
  for (auto p : pieces_) {
    p.lo_closed = p.lo_closed && p.lo == space_lo;
    p.hi_closed = p.hi_closed && p.hi == space_hi;
    if (piece_nonempty(p)) out.push_back(p);
  }
  return from_pieces(std::move(out));
}

IntervalSet IntervalSet::regularize_in(const Rat& space_lo, const Rat& space_hi) const {
  return interior_in(space_lo, space_hi).closure();
}

std::string IntervalSet::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (i) out += " u ";
    out += (p.lo_closed ? "[" : "(") + format_rational(p.lo) + "," + format_rational(p.hi) +
           (p.hi_closed ? "]" : ")");
  }
  return out;
}

}  // namespace latmorse
