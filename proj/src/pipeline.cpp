#include "latmorse/pipeline.hpp"

#include <algorithm>

namespace latmorse {

namespace {

/// Minimal consecutive cell run i..j with [a,b] inside the relative
/// interior of [x_i, x_{j+1}]: the space boundary counts as interior,
/// interior breakpoints do not.
void cover_component(const GridAlgebra1D& grid, const Rat& a, const Rat& b, Bitset& cells) {
  const auto& bp = grid.breakpoints();
  const std::size_t n = grid.cell_count();
  require(a >= grid.space_lo() && b <= grid.space_hi(), Errc::NotEnclosable,
          "image escapes the phase space");
  std::size_t i = 0;
  if (a > grid.space_lo()) {
    // last breakpoint strictly below a
    i = static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), a) - bp.begin()) - 1;
    i = std::min(i, n - 1);
  }
  std::size_t j = n - 1;
  if (b < grid.space_hi()) {
    // first breakpoint strictly above b bounds the run on the right
    j = static_cast<std::size_t>(std::upper_bound(bp.begin(), bp.end(), b) - bp.begin()) - 1;
    j = std::min(j, n - 1);
  }
  for (std::size_t k = i; k <= j; ++k) cells.set(k);
}

}  // namespace

OuterApproximation build_outer_approximation(const PiecewiseAffineMap& map,
                                             const GridAlgebra1D& grid) {
  require(map.domain_lo() == grid.space_lo() && map.domain_hi() == grid.space_hi(),
          Errc::ValidationError, "map domain must equal the grid space");
  const std::size_t n = grid.cell_count();
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<IntervalSet> images(n);
  for (std::size_t cell = 0; cell < n; ++cell) {
    images[cell] = map.exact_image(grid.breakpoints()[cell], grid.breakpoints()[cell + 1]);
    for (const auto& piece : images[cell].pieces())
      cover_component(grid, piece.lo, piece.hi, rows[cell]);
  }
  OuterApproximation oa{grid, map, Relation(grid.cell_labels(), std::move(rows)),
                        std::move(images)};
  WCertificate w = check_w(oa);
  require(w.pass, Errc::ComputeError, "constructed enclosure fails its own certificate");
  return oa;
}

OuterApproximation close_outer_approximation(const OuterApproximation& oa) {
  return OuterApproximation{oa.grid, oa.map, oa.relation.reflexive_transitive_closure(),
                            oa.images};
}

WCertificate check_w(const OuterApproximation& oa) {
  WCertificate cert;
  const std::size_t n = oa.grid.cell_count();
  for (std::size_t cell = 0; cell < n; ++cell) {
    WAtomCertificate atom;
    atom.cell = cell;
    atom.image =
        oa.map.exact_image(oa.grid.breakpoints()[cell], oa.grid.breakpoints()[cell + 1]);
    atom.enclosure = oa.relation.forward_row(cell);
    IntervalSet interior = oa.grid.evaluate(atom.enclosure)
                               .interior_in(oa.grid.space_lo(), oa.grid.space_hi());
    atom.pass = interior.contains(atom.image);
    cert.pass = cert.pass && atom.pass;
    cert.atoms.push_back(std::move(atom));
  }
  return cert;
}

const char* l_status_name(LStatus s) {
  switch (s) {
    case LStatus::PassByOrder: return "pass-by-order";
    case LStatus::PassByOracle: return "pass-by-oracle";
    case LStatus::Fail: return "fail";
    case LStatus::Unverified: return "unverified";
  }
  return "unknown";
}

LCertificate check_l(const OuterApproximation& oa,
                     const std::optional<std::vector<IntervalSet>>& omega_oracle) {
  LCertificate cert;
  if (oa.relation.reflexive() && oa.relation.transitive() && check_w(oa).pass) {
    cert.status = LStatus::PassByOrder;
    return cert;
  }
  if (!omega_oracle) {
    cert.status = LStatus::Unverified;
    return cert;
  }
  const std::size_t n = oa.grid.cell_count();
  require(omega_oracle->size() == n, Errc::ValidationError,
          "per-cell oracle size must match the cell count");
  bool all = true;
  for (std::size_t cell = 0; cell < n; ++cell) {
    LAtomCertificate atom;
    atom.cell = cell;
    atom.oracle_limit = (*omega_oracle)[cell];
    Bitset seed(n);
    seed.set(cell);
    atom.combinatorial_limit = omega(oa.relation, seed);
    atom.pass = oa.grid.evaluate(atom.combinatorial_limit).contains(atom.oracle_limit);
    all = all && atom.pass;
    cert.atoms.push_back(std::move(atom));
  }
  cert.status = all ? LStatus::PassByOracle : LStatus::Fail;
  return cert;
}

MorseTessellation morse_tessellation(const Relation& relation,
                                     const std::vector<Bitset>& family) {
  const std::size_t n = relation.atom_count();
  std::vector<Bitset> sets = family;
  std::sort(sets.begin(), sets.end(), mask_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  require(!sets.empty(), Errc::NotASublattice, "empty family");

  std::map<Bitset, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < sets.size(); ++e) {
    require(relation.forward_invariant(sets[e]), Errc::NotForwardInvariant,
            set_notation(sets[e], relation.atoms()) + " is not forward invariant");
    index.emplace(sets[e], e);
    labels.push_back(set_notation(sets[e], relation.atoms()));
  }
  require(index.count(relation.empty_set()) && index.count(relation.full_set()),
          Errc::NotASublattice, "family must contain the empty set and the full space");
  const std::size_t m = sets.size();
  std::vector<std::vector<std::size_t>> join(m, std::vector<std::size_t>(m));
  std::vector<std::vector<std::size_t>> meet(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto j = index.find(sets[a] | sets[b]);
      auto mm = index.find(sets[a] & sets[b]);
      require(j != index.end() && mm != index.end(), Errc::NotASublattice,
              "family not closed under union/intersection");
      join[a][b] = j->second;
      meet[a][b] = mm->second;
    }
  NormalizedLattice norm = lattice_from_tables(labels, join, meet);

  MorseTessellation out;
  std::vector<std::string> tile_labels;
  std::vector<Bitset> covered;
  Bitset all(n);
  const auto jis = norm.lattice.join_irreducibles();
  for (const auto& ji : jis) {
    const Bitset& hi = sets[norm.source_index[ji.element]];
    const Bitset& lo = sets[norm.source_index[ji.pred]];
    Bitset tile = hi & ~lo;
    require(tile.any(), Errc::ComputeError, "empty tile");
    require((all & tile).none(), Errc::ComputeError, "tiles overlap");
    all |= tile;
    tile_labels.push_back(set_notation(tile, relation.atoms()));
    out.tiles.push_back(std::move(tile));
    out.source_sets.push_back(hi);
  }
  require(all.count() == n, Errc::ComputeError, "tiles do not cover the space");

  const FinitePoset& jp = norm.lattice.ji_poset();
  std::vector<Bitset> below(jis.size(), Bitset(jis.size()));
  for (std::size_t i = 0; i < jis.size(); ++i)
    for (std::size_t j = 0; j < jis.size(); ++j)
      if (jp.leq(jis[j].ji, jis[i].ji)) below[i].set(j);
  out.order = FinitePoset(tile_labels, std::move(below));
  return out;
}

TessellatedMorseDecomposition tessellated_morse_decomposition(
    const Relation& relation, const std::vector<Bitset>& family) {
  TessellatedMorseDecomposition out{morse_tessellation(relation, family), {}, {}, {}};

  std::vector<Bitset> attractors;
  for (const auto& s : family) attractors.push_back(omega(relation, s));
  out.morse = morse_representation(relation, attractors);

  for (std::size_t m = 0; m < out.morse.sets.size(); ++m) {
    std::size_t hit = out.tessellation.tiles.size();
    for (std::size_t t = 0; t < out.tessellation.tiles.size(); ++t)
      if (is_subset(out.morse.sets[m], out.tessellation.tiles[t])) {
        hit = t;
        break;
      }
    require(hit < out.tessellation.tiles.size(), Errc::EmbeddingFailure,
            "Morse set " + set_notation(out.morse.sets[m], relation.atoms()) +
                " is not contained in a single tile");
    out.pi.push_back(hit);
    require(inv(relation, out.tessellation.tiles[hit]) == out.morse.sets[m],
            Errc::EmbeddingFailure, "Inv of the tile does not recover its Morse set");
  }
  // pi must embed the order.
  for (std::size_t a = 0; a < out.pi.size(); ++a)
    for (std::size_t b = 0; b < out.pi.size(); ++b)
      require(out.morse.order.leq(a, b) == out.tessellation.order.leq(out.pi[a], out.pi[b]),
              Errc::EmbeddingFailure, "tile order does not embed the Morse order");

  for (std::size_t t = 0; t < out.tessellation.tiles.size(); ++t)
    if (inv(relation, out.tessellation.tiles[t]).none()) out.empty_tiles.push_back(t);
  return out;
}

bool ModelReport::all_pass() const {
  if (!w.pass) return false;
  if (l.status != LStatus::PassByOrder && l.status != LStatus::PassByOracle) return false;
  for (const auto& sq : squares)
    if (!sq.verified || !sq.pass) return false;
  return true;
}

bool ModelReport::any_unverified() const {
  if (l.status == LStatus::Unverified) return true;
  for (const auto& sq : squares)
    if (!sq.verified) return true;
  return false;
}

ModelReport verify_commutative_model(const OuterApproximation& oa,
                                     const std::optional<AnalyticOracle>& oracle,
                                     const std::vector<Bitset>& test_sets) {
  ModelReport report;
  report.w = check_w(oa);
  std::optional<std::vector<IntervalSet>> per_cell;
  if (oracle) per_cell = oracle->per_cell;
  report.l = check_l(oa, per_cell);

  for (const auto& u : test_sets) {
    SquareInstance sq;
    sq.test_set = u;
    require(oa.relation.forward_invariant(u), Errc::NotForwardInvariant,
            "test set " + set_notation(u, oa.relation.atoms()) + " is not forward invariant");
    sq.combinatorial_attractor = omega(oa.relation, u);
    if (oracle) {
      auto lhs = oracle->per_set.find(u);
      auto rhs = oracle->per_set.find(sq.combinatorial_attractor);
      if (lhs != oracle->per_set.end() && rhs != oracle->per_set.end()) {
        sq.lhs = lhs->second;
        sq.rhs = rhs->second;
        sq.verified = true;
        sq.pass = *sq.lhs == *sq.rhs;
      }
    }
    report.squares.push_back(std::move(sq));
  }
  return report;
}

}  // namespace latmorse
