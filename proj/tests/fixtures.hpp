#pragma once

#include "latmorse/lattice.hpp"
#include "latmorse/poset.hpp"
#include "latmorse/relation.hpp"

namespace fixtures {

/// X = {1,2,3}, F = {(1,1),(1,2),(2,2),(3,2),(3,3)}: two sources feeding a
/// shared sink, all three atoms recurrent.
inline latmorse::Relation fix_f3() {
  std::vector<std::pair<std::string, std::string>> edges = {
      {"1", "1"}, {"1", "2"}, {"2", "2"}, {"3", "2"}, {"3", "3"}};
  return latmorse::Relation({"1", "2", "3"}, edges);
}

/// Three-element chain 0 < a < 1 (down-sets of the 2-chain a < 1).
inline latmorse::FiniteDistributiveLattice fix_c3() {
  return latmorse::downset_lattice(latmorse::poset_from_cover_pairs({"a", "1"}, {{"a", "1"}}));
}

/// Diamond {0, x, y, 1} = Set({x,y}).
inline latmorse::FiniteDistributiveLattice fix_m2() {
  return latmorse::downset_lattice(latmorse::poset_from_cover_pairs({"x", "y"}, {}));
}

}  // namespace fixtures
