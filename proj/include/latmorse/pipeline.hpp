#pragma once

#include "latmorse/affine_map.hpp"
#include "latmorse/attractors.hpp"
#include "latmorse/grid.hpp"
#include "latmorse/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latmorse {

/// Combinatorial outer approximation of a sampled map on a grid: per cell
/// the relation row encloses the exact image inside the interior of the
/// evaluated successors (relative to the phase space).
struct OuterApproximation {
  GridAlgebra1D grid;
  PiecewiseAffineMap map;
  Relation relation;
  std::vector<IntervalSet> images;  // provenance: exact image per cell
};

/// Minimal enclosure relation for the map on the grid.  Certified by
/// construction; check_w re-verifies through the interval machinery.
OuterApproximation build_outer_approximation(const PiecewiseAffineMap& map,
                                             const GridAlgebra1D& grid);

/// Same grid/map with the relation replaced by its reflexive-transitive
/// closure (image enclosure is monotone in the rows, so the enclosure
/// property survives).
OuterApproximation close_outer_approximation(const OuterApproximation& oa);

struct WAtomCertificate {
  std::size_t cell;
  IntervalSet image;
  Bitset enclosure;
  bool pass;
};

struct WCertificate {
  bool pass = true;
  std::vector<WAtomCertificate> atoms;
};

WCertificate check_w(const OuterApproximation& oa);

enum class LStatus { PassByOrder, PassByOracle, Fail, Unverified };

const char* l_status_name(LStatus s);

struct LAtomCertificate {
  std::size_t cell;
  IntervalSet oracle_limit;
  Bitset combinatorial_limit;
  bool pass;
};

struct LCertificate {
  LStatus status = LStatus::Unverified;
  std::vector<LAtomCertificate> atoms;  // populated on the oracle path
};

/// Per-atom limit-set containment.  A reflexive and transitive relation
/// that passes the enclosure check passes structurally; otherwise an
/// analytic per-cell oracle (superset of the true limit set of each cell)
/// is compared against the evaluated combinatorial limit.
LCertificate check_l(const OuterApproximation& oa,
                     const std::optional<std::vector<IntervalSet>>& omega_oracle);

/// Partition of the cell set into set differences over the
/// join-irreducibles of a sublattice of forward-invariant cell sets.
struct MorseTessellation {
  std::vector<Bitset> tiles;        // aligned with `order`
  FinitePoset order;
  std::vector<Bitset> source_sets;  // N_ji per tile
};

MorseTessellation morse_tessellation(const Relation& relation, const std::vector<Bitset>& family);

/// Order-embedding of the Morse representation of A = omega(N) into the
/// Morse tessellation of N with Inv o pi = id.
struct TessellatedMorseDecomposition {
  MorseTessellation tessellation;
  MorseRepresentation morse;
  std::vector<std::size_t> pi;           // morse index -> tile index
  std::vector<std::size_t> empty_tiles;  // tiles with empty invariant part
};

TessellatedMorseDecomposition tessellated_morse_decomposition(const Relation& relation,
                                                              const std::vector<Bitset>& family);

/// One commutativity instance of the attractor square: the analytic limit
/// of |U| against the analytic limit of the evaluated combinatorial
/// attractor of U.
struct SquareInstance {
  Bitset test_set;
  Bitset combinatorial_attractor;
  std::optional<IntervalSet> lhs, rhs;
  bool verified = false;
  bool pass = false;
};

struct ModelReport {
  WCertificate w;
  LCertificate l;
  std::vector<SquareInstance> squares;

  bool all_pass() const;
  bool any_unverified() const;
};

/// Oracle data: per-cell limit supersets plus exact limits for designated
/// forward-invariant test sets (both analytic inputs, never estimated).
struct AnalyticOracle {
  std::vector<IntervalSet> per_cell;
  std::map<Bitset, IntervalSet> per_set;
};

ModelReport verify_commutative_model(const OuterApproximation& oa,
                                     const std::optional<AnalyticOracle>& oracle,
                                     const std::vector<Bitset>& test_sets);

}  // namespace latmorse
