#include "latmorse/grid.hpp"

namespace latmorse {

GridAlgebra1D::GridAlgebra1D(std::vector<Rat> breakpoints) : breakpoints_(std::move(breakpoints)) {
  require(breakpoints_.size() >= 2, Errc::ValidationError, "grid needs at least one cell");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    require(breakpoints_[i] < breakpoints_[i + 1], Errc::ValidationError,
            "breakpoints must be strictly increasing");
}

IntervalSet GridAlgebra1D::cell_interval(std::size_t i) const {
  require(i < cell_count(), Errc::ValidationError, "cell index out of range");
  return IntervalSet::closed(breakpoints_[i], breakpoints_[i + 1]);
}

IntervalSet GridAlgebra1D::evaluate(const Bitset& cells) const {
  require(cells.size() == cell_count(), Errc::GridMismatch, "cell mask width mismatch");
  IntervalSet out;
  for (std::size_t i = cells.find_first(); i != Bitset::npos; i = cells.find_next(i))
    out = out.unite(cell_interval(i));
  return out;
}

std::vector<std::string> GridAlgebra1D::cell_labels() const {
  std::vector<std::string> out;
  out.reserve(cell_count());
  for (std::size_t i = 0; i < cell_count(); ++i) out.push_back(std::to_string(i + 1));
  return out;
}

namespace {
void require_same_grid(const RegularClosedCellSet& u, const RegularClosedCellSet& v) {
  require(u.grid == v.grid || *u.grid == *v.grid, Errc::GridMismatch,
          "cell sets live on different grids");
}
}  // namespace

RegularClosedCellSet rc_join(const RegularClosedCellSet& u, const RegularClosedCellSet& v) {
  require_same_grid(u, v);
  return {u.grid, u.mask | v.mask};
}

RegularClosedCellSet rc_meet(const RegularClosedCellSet& u, const RegularClosedCellSet& v) {
  require_same_grid(u, v);
  return {u.grid, u.mask & v.mask};
}

RegularClosedCellSet rc_complement(const RegularClosedCellSet& u) { return {u.grid, ~u.mask}; }

RegularClosedCellSet rc_diff(const RegularClosedCellSet& u, const RegularClosedCellSet& v) {
  require_same_grid(u, v);
  return {u.grid, u.mask & ~v.mask};
}

bool check_regclhom(const Rat& space_lo, const Rat& space_hi,
                    const std::vector<IntervalSet>& samples) {
  auto reg = [&](const IntervalSet& s) { return s.regularize_in(space_lo, space_hi); };
  for (const auto& u : samples) {
    if (!u.is_closed()) return false;
    for (const auto& v : samples) {
      if (reg(u.unite(v)) != reg(u).unite(reg(v))) return false;
      if (reg(u.intersect(v)) != reg(reg(u).intersect(reg(v)))) return false;
    }
  }
  return true;
}

bool check_difference_lemma(const Rat& space_lo, const Rat& space_hi,
                            const std::vector<IntervalSet>& samples) {
  auto reg = [&](const IntervalSet& s) { return s.regularize_in(space_lo, space_hi); };
  for (const auto& u : samples) {
    if (reg(u) != u) return false;  // samples must be regular closed
    for (const auto& v : samples) {
      IntervalSet sharp = v.complement_in(space_lo, space_hi).closure();
      IntervalSet lhs = reg(u.intersect(sharp));
      IntervalSet rhs = u.subtract(v).closure();
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace latmorse
