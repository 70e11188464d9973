#include "latmorse/pipeline.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace latmorse;

namespace {

Rat rat(long long p, long long q = 1) { return Rat(p, q); }

/// f(x) = x/2 on [0,1].
PiecewiseAffineMap half_map() {
  return PiecewiseAffineMap({rat(0), rat(1)}, {{rat(1, 2), rat(0)}});
}

GridAlgebra1D uniform_grid(std::size_t cells) {
  std::vector<Rat> bp;
  for (std::size_t i = 0; i <= cells; ++i) bp.emplace_back(static_cast<long long>(i), cells);
  return GridAlgebra1D(std::move(bp));
}

}  // namespace

TEST_CASE("exact images of affine maps") {
  auto ident = PiecewiseAffineMap({rat(0), rat(1)}, {{rat(1), rat(0)}});
  CHECK(ident.exact_image(rat(1, 4), rat(1, 2)) == IntervalSet::closed(rat(1, 4), rat(1, 2)));

  auto half = half_map();
  CHECK(half.exact_image(rat(1, 4), rat(1, 2)) == IntervalSet::closed(rat(1, 8), rat(1, 4)));

  // tent-like map spanning a breakpoint: the two endpoint-image intervals merge
  auto tent = PiecewiseAffineMap({rat(0), rat(1, 2), rat(1)},
                                 {{rat(1), rat(0)}, {rat(-1), rat(1)}});
  CHECK(tent.exact_image(rat(1, 4), rat(3, 4)) == IntervalSet::closed(rat(1, 4), rat(1, 2)));
  CHECK(tent.exact_image(rat(0), rat(1)) == IntervalSet::closed(rat(0), rat(1, 2)));

  CHECK_THROWS_AS(half.exact_image(rat(1, 2), rat(2)), Error);
}

TEST_CASE("map construction validates continuity and domain invariance") {
  CHECK_THROWS_AS(PiecewiseAffineMap({rat(0), rat(1)}, {{rat(2), rat(0)}}), Error);  // escapes
  CHECK_THROWS_AS(
      PiecewiseAffineMap({rat(0), rat(1, 2), rat(1)}, {{rat(1, 2), rat(0)}, {rat(1, 2), rat(1, 4)}}),
      Error);  // discontinuous
}

TEST_CASE("the halving map outer approximation at 4 cells is bit-exact") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));
  REQUIRE(oa.relation.atom_count() == 4);
  CHECK(oa.relation.forward_row(0) == make_bitset(4, {0}));
  CHECK(oa.relation.forward_row(1) == make_bitset(4, {0, 1}));
  CHECK(oa.relation.forward_row(2) == make_bitset(4, {0, 1}));
  CHECK(oa.relation.forward_row(3) == make_bitset(4, {1, 2}));
  CHECK(check_w(oa).pass);
}

TEST_CASE("identity map needs both touching neighbours") {
  auto ident = PiecewiseAffineMap({rat(0), rat(1)}, {{rat(1), rat(0)}});
  auto oa = build_outer_approximation(ident, uniform_grid(4));
  CHECK(oa.relation.forward_row(0) == make_bitset(4, {0, 1}));
  CHECK(oa.relation.forward_row(1) == make_bitset(4, {0, 1, 2}));
  CHECK(oa.relation.forward_row(2) == make_bitset(4, {1, 2, 3}));
  CHECK(oa.relation.forward_row(3) == make_bitset(4, {2, 3}));
  CHECK(check_w(oa).pass);
}

TEST_CASE("constant map to an interior grid point") {
  // f == 1/2 lands on a breakpoint: exactly the two adjacent cells.
  auto constant = PiecewiseAffineMap({rat(0), rat(1)}, {{rat(0), rat(1, 2)}});
  auto oa = build_outer_approximation(constant, uniform_grid(4));
  for (std::size_t cell = 0; cell < 4; ++cell)
    CHECK(oa.relation.forward_row(cell) == make_bitset(4, {1, 2}));

  // f == 3/8 lies inside cell 2: a single cell suffices.
  auto constant2 = PiecewiseAffineMap({rat(0), rat(1)}, {{rat(0), rat(3, 8)}});
  auto oa2 = build_outer_approximation(constant2, uniform_grid(4));
  for (std::size_t cell = 0; cell < 4; ++cell)
    CHECK(oa2.relation.forward_row(cell) == make_bitset(4, {1}));
}

TEST_CASE("check_w fails on truncated rows and empty rows") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));

  // truncate cell 2's row to {2}: image [1/8,1/4] is not inside (1/4,1/2)
  std::vector<Bitset> rows;
  for (std::size_t i = 0; i < 4; ++i) rows.push_back(oa.relation.forward_row(i));
  rows[1] = make_bitset(4, {1});
  OuterApproximation bad{oa.grid, oa.map, Relation(oa.grid.cell_labels(), rows), oa.images};
  auto cert = check_w(bad);
  CHECK_FALSE(cert.pass);
  CHECK_FALSE(cert.atoms[1].pass);
  CHECK(cert.atoms[0].pass);

  std::vector<Bitset> empty_rows(4, Bitset(4));
  OuterApproximation worse{oa.grid, oa.map, Relation(oa.grid.cell_labels(), empty_rows),
                           oa.images};
  CHECK_FALSE(check_w(worse).pass);
}

TEST_CASE("monotone refinement shrinks evaluated enclosures") {
  // splitting every cell in two: 4 -> 8 -> 16 -> 64 (via two splits)
  for (std::size_t cells : {4u, 8u, 16u, 32u}) {
    auto coarse = build_outer_approximation(half_map(), uniform_grid(cells));
    auto fine = build_outer_approximation(half_map(), uniform_grid(2 * cells));
    for (std::size_t c = 0; c < cells; ++c) {
      IntervalSet coarse_eval = coarse.grid.evaluate(coarse.relation.forward_row(c));
      for (std::size_t half_cell : {2 * c, 2 * c + 1}) {
        IntervalSet fine_eval = fine.grid.evaluate(fine.relation.forward_row(half_cell));
        CHECK(coarse_eval.contains(fine_eval));
      }
    }
  }
}

TEST_CASE("check_l: oracle path, structural path, unverified") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));

  // analytic limit of every cell under x/2 is {0}
  std::vector<IntervalSet> oracle(4, IntervalSet::point(rat(0)));
  auto cert = check_l(oa, oracle);
  CHECK(cert.status == LStatus::PassByOracle);
  for (const auto& atom : cert.atoms) {
    CHECK(atom.pass);
    CHECK(atom.combinatorial_limit.test(0));  // always contains cell 1
  }

  // no oracle, non-preorder relation: declared semantics
  CHECK(check_l(oa, std::nullopt).status == LStatus::Unverified);

  // reachability closure is a preorder passing the enclosure check
  auto closed = close_outer_approximation(oa);
  CHECK(closed.relation.reflexive());
  CHECK(closed.relation.transitive());
  CHECK(check_w(closed).pass);
  CHECK(check_l(closed, std::nullopt).status == LStatus::PassByOrder);

  // an oracle too big for the evaluated limit fails
  std::vector<IntervalSet> bad(4, IntervalSet::closed(rat(0), rat(1)));
  CHECK(check_l(oa, bad).status == LStatus::Fail);
}

TEST_CASE("morse tessellation of the halving map invariant chains") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));
  const auto& f = oa.relation;

  SUBCASE("trivial family: single tile") {
    std::vector<Bitset> family = {f.empty_set(), f.full_set()};
    auto t = morse_tessellation(f, family);
    REQUIRE(t.tiles.size() == 1);
    CHECK(t.tiles[0] == f.full_set());
    CHECK(t.order.size() == 1);
  }

  SUBCASE("chain of forward invariant sets") {
    std::vector<Bitset> family = {f.empty_set(), make_bitset(4, {0}), make_bitset(4, {0, 1}),
                                  f.full_set()};
    for (const auto& s : family) CHECK(f.forward_invariant(s));
    auto t = morse_tessellation(f, family);
    REQUIRE(t.tiles.size() == 3);
    std::vector<Bitset> expected = {make_bitset(4, {0}), make_bitset(4, {1}),
                                    make_bitset(4, {2, 3})};
    // tiles partition the cells and are ordered as a chain
    Bitset all(4);
    for (const auto& tile : t.tiles) {
      CHECK((all & tile).none());
      all |= tile;
      CHECK(std::find(expected.begin(), expected.end(), tile) != expected.end());
    }
    CHECK(all.count() == 4);
    // tile order mirrors inclusion of the generating invariant sets
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(t.order.leq(i, j) == is_subset(t.source_sets[i], t.source_sets[j]));
  }

  SUBCASE("non-invariant member rejected") {
    std::vector<Bitset> family = {f.empty_set(), make_bitset(4, {3}), f.full_set()};
    CHECK_THROWS_AS(morse_tessellation(f, family), Error);
  }

  SUBCASE("missing bounds rejected") {
    std::vector<Bitset> family = {make_bitset(4, {0}), f.full_set()};
    CHECK_THROWS_AS(morse_tessellation(f, family), Error);
  }
}

TEST_CASE("tessellated Morse decomposition of the halving map") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));
  const auto& f = oa.relation;

  SUBCASE("trivial") {
    std::vector<Bitset> family = {f.empty_set(), f.full_set()};
    auto tmd = tessellated_morse_decomposition(f, family);
    REQUIRE(tmd.morse.sets.size() == 1);
    CHECK(tmd.pi[0] == 0);
    CHECK(tmd.empty_tiles.empty());
  }

  SUBCASE("chain: A = {0,{1},{1,2}}, tile {3,4} has empty Inv") {
    std::vector<Bitset> family = {f.empty_set(), make_bitset(4, {0}), make_bitset(4, {0, 1}),
                                  f.full_set()};
    auto tmd = tessellated_morse_decomposition(f, family);
    // omega(X) = {1,2}: attractors are 0, {1}, {1,2}
    REQUIRE(tmd.morse.sets.size() == 2);
    std::vector<Bitset> morse_sets = tmd.morse.sets;
    std::sort(morse_sets.begin(), morse_sets.end(), mask_less);
    CHECK(morse_sets[0] == make_bitset(4, {0}));
    CHECK(morse_sets[1] == make_bitset(4, {1}));
    // Inv o pi = id
    for (std::size_t m = 0; m < tmd.morse.sets.size(); ++m)
      CHECK(inv(f, tmd.tessellation.tiles[tmd.pi[m]]) == tmd.morse.sets[m]);
    REQUIRE(tmd.empty_tiles.size() == 1);
    CHECK(tmd.tessellation.tiles[tmd.empty_tiles[0]] == make_bitset(4, {2, 3}));
  }
}

TEST_CASE("commutative model verification on the halving map") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));
  const auto& f = oa.relation;

  AnalyticOracle oracle;
  oracle.per_cell.assign(4, IntervalSet::point(rat(0)));
  // omega of any nonempty forward-invariant |U| under x/2 is {0}
  std::vector<Bitset> test_sets;
  for (const auto& u : oracles::all_subsets(4)) {
    if (!f.forward_invariant(u)) continue;
    test_sets.push_back(u);
    oracle.per_set[u] = u.none() ? IntervalSet::empty() : IntervalSet::point(rat(0));
    Bitset w = omega(f, u);
    if (!oracle.per_set.count(w))
      oracle.per_set[w] = w.none() ? IntervalSet::empty() : IntervalSet::point(rat(0));
  }

  auto report = verify_commutative_model(oa, oracle, test_sets);
  CHECK(report.w.pass);
  CHECK(report.l.status == LStatus::PassByOracle);
  CHECK(report.all_pass());
  CHECK_FALSE(report.any_unverified());
  // c({1}) = {0}
  for (const auto& sq : report.squares)
    if (sq.test_set == make_bitset(4, {0})) {
      CHECK(sq.verified);
      CHECK(*sq.rhs == IntervalSet::point(rat(0)));
    }

  SUBCASE("a violated enclosure is reported, commutativity not claimed") {
    std::vector<Bitset> rows;
    for (std::size_t i = 0; i < 4; ++i) rows.push_back(f.forward_row(i));
    rows[1] = make_bitset(4, {1});
    OuterApproximation bad{oa.grid, oa.map, Relation(oa.grid.cell_labels(), rows), oa.images};
    auto bad_report = verify_commutative_model(bad, oracle, {});
    CHECK_FALSE(bad_report.w.pass);
    CHECK_FALSE(bad_report.all_pass());
  }

  SUBCASE("empty test set gives the empty square") {
    auto r = verify_commutative_model(oa, oracle, {f.empty_set()});
    REQUIRE(r.squares.size() == 1);
    CHECK(r.squares[0].verified);
    CHECK(r.squares[0].pass);
  }
}

TEST_CASE("the halving map across resolutions: chain attractors containing the fixed point") {
  for (std::size_t cells : {4u, 8u, 16u, 64u}) {
    auto oa = build_outer_approximation(half_map(), uniform_grid(cells));
    CHECK(check_w(oa).pass);
    auto att = attractor_lattice(oa.relation);
    // chain: every pair comparable
    for (std::size_t a = 0; a < att.sets.size(); ++a)
      for (std::size_t b = 0; b < att.sets.size(); ++b)
        CHECK((is_subset(att.sets[a], att.sets[b]) || is_subset(att.sets[b], att.sets[a])));
    // the minimal nonzero attractor contains 0
    REQUIRE(att.sets.size() >= 2);
    CHECK(oa.grid.evaluate(att.sets[1]).contains_point(rat(0)));

    auto tmd = tessellated_morse_decomposition(
        oa.relation, std::vector<Bitset>{oa.relation.empty_set(), oa.relation.full_set()});
    for (std::size_t m = 0; m < tmd.morse.sets.size(); ++m)
      CHECK(inv(oa.relation, tmd.tessellation.tiles[tmd.pi[m]]) == tmd.morse.sets[m]);
  }
}

TEST_CASE("closure certifies pass-by-order and its tessellation is forward invariant") {
  auto oa = build_outer_approximation(half_map(), uniform_grid(4));
  auto closed = close_outer_approximation(oa);
  CHECK(check_l(closed, std::nullopt).status == LStatus::PassByOrder);

  auto att = attractor_lattice(closed.relation);
  auto t = morse_tessellation(closed.relation, att.sets);
  // every down-set of the tile order evaluates to a forward invariant set
  for (const auto& beta : t.order.downsets()) {
    Bitset cells(closed.relation.atom_count());
    for (std::size_t i = beta.find_first(); i != Bitset::npos; i = beta.find_next(i))
      cells |= t.tiles[i];
    CHECK(closed.relation.forward_invariant(cells));
  }
}
