#pragma once

#include "latmorse/common.hpp"
#include "latmorse/interval_set.hpp"
#include "latmorse/rational.hpp"

#include <string>
#include <vector>

namespace latmorse {

/// 1D grid of closed cells [x_i, x_{i+1}] spanning [x_0, x_n].  Cell sets
/// evaluate to regular closed interval unions; the Boolean algebra lives
/// at the cell-mask level.
class GridAlgebra1D {
 public:
  explicit GridAlgebra1D(std::vector<Rat> breakpoints);

  std::size_t cell_count() const { return breakpoints_.size() - 1; }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const Rat& space_lo() const { return breakpoints_.front(); }
  const Rat& space_hi() const { return breakpoints_.back(); }
  IntervalSet cell_interval(std::size_t i) const;
  IntervalSet space() const { return IntervalSet::closed(space_lo(), space_hi()); }

  /// |U| = union of the cells' closed intervals.
  IntervalSet evaluate(const Bitset& cells) const;

  /// Cell labels "1".."n" used in relations and notation.
  std::vector<std::string> cell_labels() const;

  bool operator==(const GridAlgebra1D&) const = default;

 private:
  std::vector<Rat> breakpoints_;
};

/// Cell set of a grid; regular closed as a point set by construction.
struct RegularClosedCellSet {
  const GridAlgebra1D* grid;
  Bitset mask;
};

RegularClosedCellSet rc_join(const RegularClosedCellSet& u, const RegularClosedCellSet& v);
RegularClosedCellSet rc_meet(const RegularClosedCellSet& u, const RegularClosedCellSet& v);
RegularClosedCellSet rc_complement(const RegularClosedCellSet& u);
RegularClosedCellSet rc_diff(const RegularClosedCellSet& u, const RegularClosedCellSet& v);

/// Regularization U -> cl int U is a lattice homomorphism from closed
/// sets onto regular closed sets; checked on the given closed samples.
bool check_regclhom(const Rat& space_lo, const Rat& space_hi,
                    const std::vector<IntervalSet>& samples);

/// U - U' := U ^ U'# equals cl(U \ U') for regular closed sets; checked
/// pairwise on the given regular closed samples.
bool check_difference_lemma(const Rat& space_lo, const Rat& space_hi,
                            const std::vector<IntervalSet>& samples);

}  // namespace latmorse
