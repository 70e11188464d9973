#include "latmorse/attractors.hpp"
#include "latmorse/relation.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace latmorse;

namespace {

Relation random_relation(std::mt19937_64& rng, std::size_t n, int density_pct = 30) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::to_string(i + 1));
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(rng() % 100) < density_pct) rows[i].set(j);
  return Relation(std::move(atoms), std::move(rows));
}

Bitset atoms_of(const Relation& f, std::initializer_list<std::size_t> one_based) {
  Bitset b(f.atom_count());
  for (auto i : one_based) b.set(i - 1);
  return b;
}

std::vector<Bitset> sorted_sets(std::vector<Bitset> sets) {
  std::sort(sets.begin(), sets.end(), mask_less);
  return sets;
}

}  // namespace

TEST_CASE("image and preimage on fix_f3") {
  auto f = fixtures::fix_f3();
  CHECK(f.image(f.empty_set()).none());
  CHECK(f.image(atoms_of(f, {3})) == atoms_of(f, {2, 3}));
  CHECK(f.preimage(atoms_of(f, {2})) == atoms_of(f, {1, 2, 3}));
}

TEST_CASE("omega on fix_f3") {
  auto f = fixtures::fix_f3();
  CHECK(omega(f, f.empty_set()).none());
  CHECK(omega(f, atoms_of(f, {1})) == atoms_of(f, {1, 2}));
  CHECK(omega(f, f.full_set()) == atoms_of(f, {1, 2, 3}));
}

TEST_CASE("alpha on fix_f3") {
  auto f = fixtures::fix_f3();
  CHECK(alpha(f, f.empty_set()).none());
  CHECK(alpha(f, atoms_of(f, {1, 3})) == atoms_of(f, {1, 3}));
  CHECK(alpha(f, f.full_set()) == atoms_of(f, {1, 2, 3}));
}

TEST_CASE("maximal invariant subset") {
  auto f = fixtures::fix_f3();
  CHECK(inv(f, f.empty_set()).none());
  CHECK(inv(f, atoms_of(f, {1})) == atoms_of(f, {1}));  // self-loop

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 4);
    for (const auto& u : oracles::all_subsets(r.atom_count()))
      CHECK(inv(r, u) == oracles::brute_inv(r, u));
  }
}

TEST_CASE("omega lands on attractors and is the attractor of forward-invariant sets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 5);
    for (const auto& u : oracles::all_subsets(r.atom_count())) {
      Bitset w = omega(r, u);
      CHECK(r.image(w) == w);
      if (r.forward_invariant(u)) CHECK(is_subset(w, u));
    }
  }
}

TEST_CASE("attractor lattice: edge cases and fix_f3") {
  // no edges: only the empty set satisfies F(A) = A
  Relation none({"1", "2"}, std::vector<std::pair<std::string, std::string>>{});
  auto att0 = attractor_lattice(none);
  CHECK(att0.sets.size() == 1);
  CHECK(att0.sets[0].none());

  std::vector<std::pair<std::string, std::string>> swap_edges = {{"1", "2"}, {"2", "1"}};
  Relation swap({"1", "2"}, swap_edges);
  auto att_swap = attractor_lattice(swap);
  CHECK(att_swap.sets.size() == 2);
  CHECK(att_swap.sets[1] == swap.full_set());
  auto rep_swap = repeller_lattice(swap);
  CHECK(rep_swap.sets.size() == 2);

  auto f3 = fixtures::fix_f3();
  auto att = attractor_lattice(f3);
  std::vector<Bitset> expected = {atoms_of(f3, {}),     atoms_of(f3, {2}),
                                  atoms_of(f3, {1, 2}), atoms_of(f3, {2, 3}),
                                  atoms_of(f3, {1, 2, 3})};
  std::sort(expected.begin(), expected.end(), mask_less);
  CHECK(sorted_sets(att.sets) == expected);
  CHECK(sorted_sets(att.sets) == oracles::brute_attractors(f3));

  auto rep = repeller_lattice(f3);
  std::vector<Bitset> expected_rep = {atoms_of(f3, {}),     atoms_of(f3, {1}),
                                      atoms_of(f3, {3}),    atoms_of(f3, {1, 3}),
                                      atoms_of(f3, {1, 2, 3})};
  std::sort(expected_rep.begin(), expected_rep.end(), mask_less);
  CHECK(sorted_sets(rep.sets) == expected_rep);
  CHECK(sorted_sets(rep.sets) == oracles::brute_repellers(f3));

  // join-irreducibles are {2}, {1,2}, {2,3}
  auto jis = att.lattice.join_irreducibles();
  REQUIRE(jis.size() == 3);
  std::vector<std::string> ji_labels;
  for (const auto& ji : jis) ji_labels.push_back(att.lattice.label(ji.element));
  std::sort(ji_labels.begin(), ji_labels.end());
  CHECK(ji_labels == std::vector<std::string>{"{1,2}", "{2,3}", "{2}"});
}

TEST_CASE("attractor/repeller oracle equivalence on random relations") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 5, 20 + static_cast<int>(rng() % 50));
    CAPTURE(trial);
    CHECK(sorted_sets(attractor_lattice(r).sets) == oracles::brute_attractors(r));
    CHECK(sorted_sets(repeller_lattice(r).sets) == oracles::brute_repellers(r));
  }
}

TEST_CASE("dual repeller on fix_f3") {
  auto f = fixtures::fix_f3();
  CHECK(dual_repeller(f, f.empty_set()) == alpha(f, f.full_set()));
  CHECK(dual_repeller(f, atoms_of(f, {2})) == atoms_of(f, {1, 3}));
  CHECK(dual_repeller(f, atoms_of(f, {1, 2})) == atoms_of(f, {3}));
  CHECK_THROWS_AS(dual_repeller(f, atoms_of(f, {1})), Error);  // not an attractor
}

TEST_CASE("dual is an order-reversing involution onto the repellers") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 5);
    auto att = attractor_lattice(r);
    auto reps = oracles::brute_repellers(r);
    std::vector<Bitset> duals;
    for (const auto& a : att.sets) {
      Bitset d = dual_repeller(r, a);
      CHECK(r.preimage(d) == d);                    // lands in Rep(F)
      CHECK(dual_repeller(r.transpose(), d) == a);  // involution
      CHECK((a & d).none());
      duals.push_back(std::move(d));
    }
    std::sort(duals.begin(), duals.end(), mask_less);
    CHECK(duals == reps);  // bijection onto the repellers
    for (std::size_t x = 0; x < att.sets.size(); ++x)
      for (std::size_t y = 0; y < att.sets.size(); ++y)
        if (is_subset(att.sets[x], att.sets[y]))
          CHECK(is_subset(dual_repeller(r, att.sets[y]), dual_repeller(r, att.sets[x])));
  }
}

TEST_CASE("duality square: omega(U)* = alpha(U^c)") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 4);
    for (const auto& u : oracles::all_subsets(r.atom_count())) {
      if (!r.forward_invariant(u)) continue;
      CHECK(dual_repeller(r, omega(r, u)) == alpha(r, ~u));
    }
  }
}

TEST_CASE("conley form on the attractor lattice of fix_f3") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto form = conley_form_att(f, att);

  auto elem = [&](std::initializer_list<std::size_t> atoms1) {
    return att.index_of_set(atoms_of(f, atoms1));
  };
  auto value_mask = [&](std::size_t a, std::size_t b) {
    return form.target().mask_of(form.value(a, b));
  };
  for (std::size_t a = 0; a < att.lattice.size(); ++a) CHECK(value_mask(a, a).none());
  CHECK(value_mask(elem({1, 2}), elem({2})) == atoms_of(f, {1}));
  CHECK(value_mask(elem({1, 2, 3}), elem({1, 2})) == atoms_of(f, {3}));

  auto ax = check_form_axioms(form);
  CHECK(ax.conley());
  CHECK(ax.exchange);
}

TEST_CASE("C_Att passes the Conley axioms on random relations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 5);
    auto att = attractor_lattice(r);
    auto ax = check_form_axioms(conley_form_att(r, att));
    CAPTURE(trial);
    CHECK(ax.conley());
  }
}

TEST_CASE("gamma of C_Att maps the singleton piece at {1,2} to {1}") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto form = conley_form_att(f, att);
  auto gamma = gamma_from_form(form);
  CHECK(gamma.verified_injective);
  // piece = {ji {1,2}} as a singleton convex set
  const auto& jp = att.lattice.ji_poset();
  auto ji12 = *jp.index_of("{1,2}");
  Bitset piece(jp.size());
  piece.set(ji12);
  CHECK(form.target().mask_of(gamma.value_of(piece)) == atoms_of(f, {1}));
}

TEST_CASE("transition iso between the canonical form and C_Att") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto canonical = canonical_conley_form(att.lattice);
  auto form = conley_form_att(f, att);
  auto g = transition_iso(canonical, form);
  // the singleton piece at ji {1,2} maps to the Morse set {1}, etc.
  const auto& jp = att.lattice.ji_poset();
  auto singleton_value = [&](const char* ji_label) {
    Bitset piece(jp.size());
    piece.set(*jp.index_of(ji_label));
    return g.apply(*canonical.target().index_of_mask(piece));
  };
  CHECK(form.target().mask_of(singleton_value("{1,2}")) == atoms_of(f, {1}));
  CHECK(form.target().mask_of(singleton_value("{2}")) == atoms_of(f, {2}));
  CHECK(form.target().mask_of(singleton_value("{2,3}")) == atoms_of(f, {3}));
  for (std::size_t a = 0; a < att.lattice.size(); ++a)
    for (std::size_t b = 0; b < att.lattice.size(); ++b)
      CHECK(g.apply(canonical.value(a, b)) == form.value(a, b));
}

TEST_CASE("pullback of C_Rep along the duality anti-isomorphism is C_Att") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto rep = attractor_lattice(f.transpose());
  auto rep_form = conley_form_att(f.transpose(), rep);

  // h: Att -> Rep, A -> A*; an anti-isomorphism.
  std::vector<std::size_t> table(att.lattice.size());
  for (std::size_t e = 0; e < att.lattice.size(); ++e)
    table[e] = rep.index_of_set(dual_repeller(f, att.sets[e]));
  auto h = LatticeHom::anti_hom(att.lattice, rep.lattice, table);

  auto pulled = pullback_form(h, rep_form);
  CHECK(check_form_axioms(pulled).conley());

  auto att_form = conley_form_att(f, att);
  for (std::size_t a = 0; a < att.lattice.size(); ++a)
    for (std::size_t b = 0; b < att.lattice.size(); ++b)
      CHECK(pulled.target().mask_of(pulled.value(a, b)) ==
            att_form.target().mask_of(att_form.value(a, b)));
}

TEST_CASE("Inv of intersections against limit sets") {
  auto f = fixtures::fix_f3();
  CHECK(inv_intersection_check(f, f.full_set(), f.full_set()));
  CHECK(inv(f, atoms_of(f, {1, 2}) & atoms_of(f, {1, 3})) == atoms_of(f, {1}));
  CHECK(inv_intersection_check(f, atoms_of(f, {1, 2}), atoms_of(f, {1, 3})));
  CHECK(inv_intersection_check(f, atoms_of(f, {2}), atoms_of(f, {1, 3})));
  CHECK_THROWS_AS(inv_intersection_check(f, atoms_of(f, {1}), f.full_set()), Error);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 4);
    for (const auto& u : oracles::brute_forward_invariant(r))
      for (const auto& v : oracles::brute_backward_invariant(r))
        CHECK(inv_intersection_check(r, u, v));
  }
}

TEST_CASE("morse tiles on fix_f3 and the theta identity") {
  auto f = fixtures::fix_f3();
  auto whole = morse_tiles(f, f.full_set(), f.full_set());
  CHECK(whole.tile.none());
  CHECK(whole.invariant_part.none());

  auto t1 = morse_tiles(f, atoms_of(f, {1, 2}), atoms_of(f, {2}));
  CHECK(t1.tile == atoms_of(f, {1}));
  CHECK(t1.invariant_part == atoms_of(f, {1}));

  auto t2 = morse_tiles(f, f.full_set(), atoms_of(f, {1, 2}));
  CHECK(t2.tile == atoms_of(f, {3}));
  CHECK(t2.invariant_part == atoms_of(f, {3}));

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 4);
    auto att = attractor_lattice(r);
    auto form = conley_form_att(r, att);
    for (const auto& u : oracles::brute_forward_invariant(r))
      for (const auto& v : oracles::brute_forward_invariant(r)) {
        auto tile = morse_tiles(r, u, v);
        auto a = att.index_of_set(omega(r, u));
        auto b = att.index_of_set(omega(r, v));
        CHECK(tile.invariant_part == form.target().mask_of(form.value(a, b)));
      }
  }
}

TEST_CASE("morse representation of fix_f3") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);

  SUBCASE("trivial sublattice gives the top attractor") {
    std::vector<Bitset> family = {f.empty_set(), omega(f, f.full_set())};
    auto m = morse_representation(f, family);
    REQUIRE(m.sets.size() == 1);
    CHECK(m.sets[0] == atoms_of(f, {1, 2, 3}));
  }

  SUBCASE("full attractor lattice gives the three recurrent components") {
    auto m = morse_representation(f, att.sets);
    REQUIRE(m.sets.size() == 3);
    auto find = [&](const Bitset& s) {
      for (std::size_t i = 0; i < m.sets.size(); ++i)
        if (m.sets[i] == s) return i;
      REQUIRE(false);
      return std::size_t{0};
    };
    auto i1 = find(atoms_of(f, {1}));
    auto i2 = find(atoms_of(f, {2}));
    auto i3 = find(atoms_of(f, {3}));
    CHECK(m.order.leq(i2, i1));
    CHECK(m.order.leq(i2, i3));
    CHECK_FALSE(m.order.leq(i1, i3));
    CHECK_FALSE(m.order.leq(i3, i1));
  }

  SUBCASE("coarse sublattice {0, {2}, X}") {
    std::vector<Bitset> family = {f.empty_set(), atoms_of(f, {2}), atoms_of(f, {1, 2, 3})};
    auto m = morse_representation(f, family);
    REQUIRE(m.sets.size() == 2);
    // C_Att(X, {2}) = X n {2}* = {1,3}
    bool found = false;
    for (const auto& s : m.sets) found = found || s == atoms_of(f, {1, 3});
    CHECK(found);
    CHECK(inv(f, atoms_of(f, {1, 3})) == atoms_of(f, {1, 3}));
  }

  SUBCASE("not a sublattice") {
    std::vector<Bitset> family = {f.empty_set(), atoms_of(f, {1, 2})};  // missing top
    CHECK_THROWS_AS(morse_representation(f, family), Error);
  }
}

TEST_CASE("verify_morse_representation accepts outputs and rejects mutations") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto m = morse_representation(f, att.sets);
  CHECK(verify_morse_representation(f, m).ok);

  SUBCASE("swapped order is rejected with diagnostic (d)") {
    // Make {1} < {2} instead of {2} < {1}: relabel the order poset.
    MorseRepresentation bad = m;
    std::vector<Bitset> below(3, Bitset(3));
    std::size_t i1 = 0, i2 = 0, i3 = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.sets[i] == atoms_of(f, {1})) i1 = i;
      if (m.sets[i] == atoms_of(f, {2})) i2 = i;
      if (m.sets[i] == atoms_of(f, {3})) i3 = i;
    }
    for (std::size_t i = 0; i < 3; ++i) below[i].set(i);
    below[i2].set(i1);  // {1} below {2}: wrong direction
    below[i3].set(i2);  // keep a chain so it is still a poset
    below[i3].set(i1);
    bad.order = FinitePoset(m.order.labels(), below);
    auto verdict = verify_morse_representation(f, bad);
    CHECK_FALSE(verdict.ok);
    bool d_diag = false;
    for (const auto& msg : verdict.diagnostics) d_diag = d_diag || msg.find("(d)") == 0;
    CHECK(d_diag);
  }

  SUBCASE("dropping a recurrent atom is rejected with diagnostic (a)") {
    MorseRepresentation bad = m;
    for (auto& s : bad.sets)
      s.reset(2);  // atom "3"
    auto verdict = verify_morse_representation(f, bad);
    CHECK_FALSE(verdict.ok);
    bool a_diag = false;
    for (const auto& msg : verdict.diagnostics) a_diag = a_diag || msg.find("(a)") == 0;
    CHECK(a_diag);
  }
}

TEST_CASE("reconstruction round-trips") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);

  SUBCASE("single Morse set") {
    std::vector<Bitset> family = {f.empty_set(), omega(f, f.full_set())};
    auto m = morse_representation(f, family);
    auto back = reconstruct_attractors(f, m);
    std::sort(family.begin(), family.end(), mask_less);
    CHECK(back == family);
  }

  SUBCASE("full lattice") {
    auto m = morse_representation(f, att.sets);
    CHECK(reconstruct_attractors(f, m) == sorted_sets(att.sets));
  }

  SUBCASE("coarse sublattice") {
    std::vector<Bitset> family = {f.empty_set(), atoms_of(f, {2}), atoms_of(f, {1, 2, 3})};
    auto m = morse_representation(f, family);
    auto back = reconstruct_attractors(f, m);
    std::sort(family.begin(), family.end(), mask_less);
    CHECK(back == family);
  }

  SUBCASE("random relations, random sublattices") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
      auto r = random_relation(rng, 1 + rng() % 5);
      auto a = attractor_lattice(r);
      // sublattice generated by up to 3 random attractors
      std::vector<Bitset> gen = {r.empty_set(), omega(r, r.full_set())};
      for (int k = 0; k < 3; ++k) gen.push_back(a.sets[rng() % a.sets.size()]);
      // closure under union and omega-of-intersection
      std::vector<Bitset> family = gen;
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Bitset> add;
        for (const auto& x : family)
          for (const auto& y : family) {
            for (Bitset cand : {x | y, omega(r, x & y)}) {
              if (std::find(family.begin(), family.end(), cand) == family.end() &&
                  std::find(add.begin(), add.end(), cand) == add.end())
                add.push_back(cand);
            }
          }
        if (!add.empty()) {
          grew = true;
          family.insert(family.end(), add.begin(), add.end());
        }
      }
      auto m = morse_representation(r, family);
      CHECK(verify_morse_representation(r, m).ok);
      auto back = reconstruct_attractors(r, m);
      std::sort(family.begin(), family.end(), mask_less);
      family.erase(std::unique(family.begin(), family.end()), family.end());
      CAPTURE(trial);
      CHECK(back == family);
      // and the Morse representation of the reconstruction is m again
      auto m2 = morse_representation(r, back);
      CHECK(m2.sets == m.sets);
      CHECK(m2.order.same_order(m.order));
    }
  }
}

TEST_CASE("morse sets are invariant and pairwise inv-disjoint") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = random_relation(rng, 1 + rng() % 5);
    auto a = attractor_lattice(r);
    auto m = morse_representation(r, a.sets);
    for (const auto& s : m.sets) {
      CHECK(is_subset(s, r.image(s)));
      CHECK(is_subset(s, r.preimage(s)));
    }
    for (std::size_t i = 0; i < m.sets.size(); ++i)
      for (std::size_t j = i + 1; j < m.sets.size(); ++j)
        CHECK(inv(r, m.sets[i] & m.sets[j]).none());
  }
}

TEST_CASE("theta induced by omega from the forward-invariant lattice") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto att_form = conley_form_att(f, att);

  // K = all forward-invariant sets of fix_f3 under union/intersection.
  std::vector<Bitset> fwd = oracles::brute_forward_invariant(f);
  std::sort(fwd.begin(), fwd.end(), mask_less);
  std::vector<std::string> labels;
  for (const auto& s : fwd) labels.push_back(set_notation(s, f.atoms()));
  const std::size_t n = fwd.size();
  auto locate = [&](const Bitset& s) {
    return static_cast<std::size_t>(
        std::find(fwd.begin(), fwd.end(), s) - fwd.begin());
  };
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      join[a][b] = locate(fwd[a] | fwd[b]);
      meet[a][b] = locate(fwd[a] & fwd[b]);
    }
  auto norm = lattice_from_tables(labels, join, meet);
  auto realized = [&](std::size_t e) { return fwd[norm.source_index[e]]; };

  // C^b(U,U') = U \ U' valued in Set(X): the Morse-tile form.
  auto target = std::make_shared<const MeetSemilattice>(
      MeetSemilattice::boolean_powerset(f.atoms()));
  std::vector<std::uint32_t> table(norm.lattice.size() * norm.lattice.size());
  for (std::size_t a = 0; a < norm.lattice.size(); ++a)
    for (std::size_t b = 0; b < norm.lattice.size(); ++b)
      table[a * norm.lattice.size() + b] =
          *target->index_of_mask(realized(a) & ~realized(b));
  LatticeForm tile_form(norm.lattice, target, std::move(table));
  auto ax = check_form_axioms(tile_form);
  CHECK(ax.absorption);
  REQUIRE(ax.additivity.has_value());
  CHECK(*ax.additivity);

  // h = omega: a surjective lattice homomorphism onto the attractors.
  std::vector<std::size_t> h_table(norm.lattice.size());
  for (std::size_t e = 0; e < norm.lattice.size(); ++e)
    h_table[e] = att.index_of_set(omega(f, realized(e)));
  auto h = LatticeHom::hom(norm.lattice, att.lattice, h_table);

  auto theta = induced_theta(h, tile_form, att_form);
  // theta({1,2} \ {2}) = Inv({1}) = {1}
  auto u = locate(atoms_of(f, {1, 2}));
  auto v = locate(atoms_of(f, {2}));
  std::size_t from = tile_form.value(locate(atoms_of(f, {1, 2})), v);
  CHECK(tile_form.target().mask_of(from) == atoms_of(f, {1}));
  CHECK(att_form.target().mask_of(theta.apply(from)) == atoms_of(f, {1}));
  // and on every pair theta matches Inv of the tile
  for (std::size_t a = 0; a < norm.lattice.size(); ++a)
    for (std::size_t b = 0; b < norm.lattice.size(); ++b)
      CHECK(att_form.target().mask_of(theta.apply(tile_form.value(a, b))) ==
            inv(f, realized(a) & ~realized(b)));
  (void)u;

  // additive decomposition of the top reproduces the full space
  auto parts = decompose_join(norm.lattice, tile_form, norm.lattice.top());
  Bitset acc(3);
  for (auto val : parts) acc |= tile_form.target().mask_of(val);
  CHECK(acc == f.full_set());
}

TEST_CASE("dualize C_Att on fix_f3 and its spectral representation") {
  auto f = fixtures::fix_f3();
  auto att = attractor_lattice(f);
  auto form = conley_form_att(f, att);

  auto d = dualize(form);
  auto e2 = att.index_of_set(atoms_of(f, {2}));
  CHECK(form.target().mask_of(d.dual[e2]) == atoms_of(f, {1, 3}));
  CHECK(form.target().mask_of(d.dual[att.lattice.bottom()]) == alpha(f, f.full_set()));
  CHECK(form.target().mask_of(d.dual[att.lattice.top()]).none());

  auto spec = spectral_representation(att.lattice, form);
  REQUIRE(spec.points.size() == 3);
  std::vector<Bitset> morse;
  for (const auto& [ji, value] : spec.points) morse.push_back(form.target().mask_of(value));
  std::sort(morse.begin(), morse.end(), mask_less);
  CHECK(morse[0] == atoms_of(f, {1}));
  CHECK(morse[1] == atoms_of(f, {2}));
  CHECK(morse[2] == atoms_of(f, {3}));
}
