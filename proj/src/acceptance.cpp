#include "latmorse/acceptance.hpp"

#include "latmorse/attractors.hpp"
#include "latmorse/dot.hpp"
#include "latmorse/form.hpp"
#include "latmorse/json_io.hpp"
#include "latmorse/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace latmorse::acceptance {

namespace {

/// splitmix64: stable across platforms, unlike <random> distributions.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------- corpora

std::vector<FinitePoset> all_labeled_posets(std::size_t n) {
  // Strict-order bit per ordered pair; reflexivity is implicit.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = 0; j < static_cast<int>(n); ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<FinitePoset> out;
  const std::uint64_t total = 1ull << pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::uint32_t row[5] = {0, 0, 0, 0, 0};  // row[i] = strict upper set bits
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits & (1ull << k)) row[pairs[k].first] |= 1u << pairs[k].second;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (row[i] & (1u << i)) ok = false;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (row[i] & (1u << j)) {
          if (row[j] & (1u << i)) ok = false;            // antisymmetry
          if ((row[i] | row[j]) != row[i]) ok = false;   // transitivity
        }
    }
    if (!ok) continue;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      below[i].set(i);
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] & (1u << i)) below[i].set(j);
    }
    out.emplace_back(std::move(labels), std::move(below));
  }
  return out;
}

FinitePoset random_poset(DetRng& rng, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.below(3) == 0) covers.emplace_back(labels[i], labels[j]);
  return poset_from_cover_pairs(labels, covers);
}

Relation random_relation(DetRng& rng, std::size_t n, int density_pct) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::to_string(i + 1));
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(rng.below(100)) < density_pct) rows[i].set(j);
  return Relation(std::move(atoms), std::move(rows));
}

std::vector<Relation> all_relations_on_3() {
  std::vector<Relation> out;
  out.reserve(512);
  for (unsigned bits = 0; bits < 512; ++bits) {
    std::vector<Bitset> rows(3, Bitset(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (bits & (1u << (3 * i + j))) rows[i].set(j);
    out.emplace_back(std::vector<std::string>{"1", "2", "3"}, std::move(rows));
  }
  return out;
}

FiniteDistributiveLattice chain_lattice(std::size_t points) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < points; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return downset_lattice(poset_from_cover_pairs(labels, covers));
}

FiniteDistributiveLattice boolean_lattice(std::size_t atoms) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms; ++i) labels.push_back("b" + std::to_string(i));
  return downset_lattice(poset_from_cover_pairs(labels, {}));
}

struct Corpus {
  std::vector<FiniteDistributiveLattice> lattices;
  std::vector<Relation> relations3;
  std::vector<Relation> relations5;
};

Corpus build_corpus(std::uint64_t seed) {
  Corpus c;
  for (std::size_t k = 0; k <= 5; ++k) c.lattices.push_back(chain_lattice(k));
  for (std::size_t k = 1; k <= 5; ++k) c.lattices.push_back(boolean_lattice(k));
  DetRng rng(seed ^ 0xc0ffee);
  while (c.lattices.size() < 120) {
    auto l = downset_lattice(random_poset(rng, 1 + rng.below(5)));
    if (l.size() <= 32) c.lattices.push_back(std::move(l));
  }
  c.relations3 = all_relations_on_3();
  DetRng rng2(seed ^ 0xdeadbeef);
  for (int i = 0; i < 1000; ++i)
    c.relations5.push_back(random_relation(rng2, 5, 20 + static_cast<int>(rng2.below(50))));
  return c;
}

// ------------------------------------------------------ brute-force oracles

std::vector<Bitset> all_subsets(std::size_t width) {
  std::vector<Bitset> out;
  out.reserve(1ull << width);
  for (unsigned long long bits = 0; bits < (1ull << width); ++bits) {
    Bitset b(width);
    for (std::size_t i = 0; i < width; ++i)
      if (bits & (1ull << i)) b.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Bitset> brute_fixed_families(const Relation& f, bool backward) {
  std::vector<Bitset> out;
  for (auto& s : all_subsets(f.atom_count())) {
    Bitset img = backward ? f.preimage(s) : f.image(s);
    if (img == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

Bitset brute_inv(const Relation& f, const Bitset& u) {
  Bitset out(f.atom_count());
  for (auto& s : all_subsets(f.atom_count()))
    if (is_subset(s, u) && is_subset(s, f.image(s)) && is_subset(s, f.preimage(s))) out |= s;
  return out;
}

std::vector<Bitset> sorted_sets(std::vector<Bitset> sets) {
  std::sort(sets.begin(), sets.end(), mask_less);
  return sets;
}

// ------------------------------------------------------------- criteria

CriterionResult criterion_birkhoff(std::uint64_t seed) {
  CriterionResult r{1, "Birkhoff round-trip (exhaustive <=5, 500 random <=8)", true, ""};
  std::size_t checked = 0;
  static const std::size_t kLabeledPosetCounts[6] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 1; n <= 5; ++n) {
    auto posets = all_labeled_posets(n);
    if (posets.size() != kLabeledPosetCounts[n]) {
      r.pass = false;
      r.detail = "poset generator produced " + std::to_string(posets.size()) + " posets on " +
                 std::to_string(n) + " points";
      return r;
    }
    for (const auto& p : posets) {
      auto l = downset_lattice(p);
      if (!poset_isomorphic(l.ji_poset(), p) || !lattice_isomorphic(downset_lattice(l.ji_poset()), l)) {
        r.pass = false;
        ++checked;
        continue;
      }
      ++checked;
    }
  }
  DetRng rng(seed ^ 0xb1);
  for (int i = 0; i < 500; ++i) {
    auto p = random_poset(rng, 1 + rng.below(8));
    auto l = downset_lattice(p);
    if (!poset_isomorphic(l.ji_poset(), p) || !lattice_isomorphic(downset_lattice(l.ji_poset()), l))
      r.pass = false;
    ++checked;
  }
  r.detail = std::to_string(checked) + " posets, 0 failures expected";
  return r;
}

CriterionResult criterion_canonical_axioms(const Corpus& corpus) {
  CriterionResult r{2, "canonical form axioms exhaustive on corpus lattices (|L| <= 32)", true, ""};
  std::size_t checked = 0;
  for (const auto& l : corpus.lattices) {
    auto ax = check_form_axioms(canonical_conley_form(l));
    if (!(ax.absorption && ax.distributivity && ax.monotonicity && ax.exchange)) r.pass = false;
    ++checked;
  }
  r.detail = std::to_string(checked) + " lattices";
  return r;
}

bool extraprop_holds(const LatticeForm& f) {
  const auto& L = f.source();
  const auto& I = f.target();
  const std::uint32_t zero = f.zero_value();
  const std::uint32_t one = f.one_value();
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (f.value(L.bottom(), a) != zero || f.value(a, L.top()) != zero) return false;
    for (std::size_t b = 0; b < L.size(); ++b) {
      if (!I.leq(zero, f.value(a, b)) || !I.leq(f.value(a, b), one)) return false;
      if ((f.value(a, b) == zero) != L.leq(a, b)) return false;
      for (std::size_t c = 0; c < L.size(); ++c)
        for (std::size_t d = 0; d < L.size(); ++d)
          if (L.leq(a, c) && L.leq(d, b) && !I.leq(f.value(a, b), f.value(c, d))) return false;
    }
  }
  return true;
}

CriterionResult criterion_extraprop(const Corpus& corpus) {
  CriterionResult r{3, "slotwise monotonicity, bounds, kernel of corpus forms", true, ""};
  std::size_t checked = 0;
  for (const auto& l : corpus.lattices) {
    if (!extraprop_holds(canonical_conley_form(l))) r.pass = false;
    if (!extraprop_holds(set_difference_form(l))) r.pass = false;
    checked += 2;
  }
  int att_forms = 0;
  for (const auto& f : corpus.relations3) {
    if (att_forms >= 30) break;
    auto att = attractor_lattice(f);
    if (att.lattice.size() < 2 || att.lattice.size() > 16) continue;
    if (!extraprop_holds(conley_form_att(f, att))) r.pass = false;
    ++att_forms;
    ++checked;
  }
  r.detail = std::to_string(checked) + " forms";
  return r;
}

CriterionResult criterion_uniqueness(const Corpus& corpus) {
  CriterionResult r{4, "transition isomorphism between independent Conley forms", true, ""};
  std::size_t instances = 0;
  auto verify_pair = [&r](const FiniteDistributiveLattice& l, const LatticeForm& f,
                          const LatticeForm& g) {
    auto iso = transition_iso(f, g);
    // bijectivity between the images
    if (iso.forward.size() != iso.inverse.size()) r.pass = false;
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (iso.forward.at(f.value(a, b)) != g.value(a, b)) r.pass = false;
        if (iso.inverse.at(g.value(a, b)) != f.value(a, b)) r.pass = false;
      }
  };
  for (const auto& l : corpus.lattices) {
    auto canonical = canonical_conley_form(l);
    auto boolean = set_difference_form(l);
    verify_pair(l, canonical, boolean);
    ++instances;
  }
  int att_instances = 0;
  for (const auto& f : corpus.relations5) {
    if (att_instances >= 25) break;
    auto att = attractor_lattice(f);
    if (att.lattice.size() < 4) continue;
    auto canonical = canonical_conley_form(att.lattice);
    auto form = conley_form_att(f, att);
    verify_pair(att.lattice, canonical, form);
    ++att_instances;
    ++instances;
  }
  r.detail = std::to_string(instances) + " form pairs (need >= 100)";
  if (instances < 100) r.pass = false;
  return r;
}

CriterionResult criterion_attractor_oracle(const Corpus& corpus) {
  CriterionResult r{5, "attractor/repeller lattices equal the fixed-set families", true, ""};
  std::size_t checked = 0;
  auto check_one = [&](const Relation& f) {
    if (sorted_sets(attractor_lattice(f).sets) != brute_fixed_families(f, false)) r.pass = false;
    if (sorted_sets(repeller_lattice(f).sets) != brute_fixed_families(f, true)) r.pass = false;
    ++checked;
  };
  for (const auto& f : corpus.relations3) check_one(f);
  for (const auto& f : corpus.relations5) check_one(f);
  r.detail = std::to_string(checked) + " relations (512 exhaustive on 3 atoms, 1000 random on 5)";
  return r;
}

CriterionResult criterion_form_on_relations(const Corpus& corpus) {
  CriterionResult r{6, "C_Att axioms, Inv of intersections, tile invariants", true, ""};
  std::size_t relations = 0;
  auto run = [&](const Relation& f, bool exhaustive_pairs) {
    auto att = attractor_lattice(f);
    auto form = conley_form_att(f, att);
    auto ax = check_form_axioms(form);
    if (!(ax.absorption && ax.distributivity && ax.monotonicity)) r.pass = false;

    std::vector<Bitset> fwd, bwd;
    for (auto& s : all_subsets(f.atom_count())) {
      if (f.forward_invariant(s)) fwd.push_back(s);
      if (f.backward_invariant(s)) bwd.push_back(s);
    }
    if (exhaustive_pairs) {
      for (const auto& u : fwd)
        for (const auto& v : bwd) {
          const Bitset expected = omega(f, u) & alpha(f, v);
          if (inv(f, u & v) != expected) r.pass = false;
          if (brute_inv(f, u & v) != expected) r.pass = false;
        }
    }
    for (const auto& u : fwd)
      for (const auto& v : fwd) {
        auto a = att.index_of_set(omega(f, u));
        auto b = att.index_of_set(omega(f, v));
        if (inv(f, u & ~v) != form.target().mask_of(form.value(a, b))) r.pass = false;
      }
    ++relations;
  };
  for (const auto& f : corpus.relations3) run(f, true);
  for (const auto& f : corpus.relations5) run(f, true);
  r.detail = std::to_string(relations) + " relations, exhaustive invariant pairs";
  return r;
}

CriterionResult criterion_duality(const Corpus& corpus) {
  CriterionResult r{7, "duality square and the order-reversing involution", true, ""};
  std::size_t relations = 0;
  auto run = [&](const Relation& f) {
    for (auto& u : all_subsets(f.atom_count())) {
      if (!f.forward_invariant(u)) continue;
      if (dual_repeller(f, omega(f, u)) != alpha(f, ~u)) r.pass = false;
    }
    auto att = attractor_lattice(f);
    auto reps = brute_fixed_families(f, true);
    std::vector<Bitset> duals;
    for (const auto& a : att.sets) {
      Bitset d = dual_repeller(f, a);
      if (dual_repeller(f.transpose(), d) != a) r.pass = false;
      duals.push_back(std::move(d));
    }
    if (sorted_sets(duals) != reps) r.pass = false;
    for (std::size_t x = 0; x < att.sets.size(); ++x)
      for (std::size_t y = 0; y < att.sets.size(); ++y)
        if (is_subset(att.sets[x], att.sets[y]) &&
            !is_subset(dual_repeller(f, att.sets[y]), dual_repeller(f, att.sets[x])))
          r.pass = false;
    ++relations;
  };
  for (const auto& f : corpus.relations3) run(f);
  for (const auto& f : corpus.relations5) run(f);
  r.detail = std::to_string(relations) + " relations";
  return r;
}

CriterionResult criterion_morse_roundtrip(const Corpus& corpus, std::uint64_t seed) {
  CriterionResult r{8, "Morse representation round-trip and mutation rejection", true, ""};
  DetRng rng(seed ^ 0x8888);
  std::size_t roundtrips = 0, order_mutations = 0, atom_mutations = 0;

  auto run = [&](const Relation& f) {
    auto att = attractor_lattice(f);
    // sublattice generated by <= 3 random attractors
    std::vector<Bitset> family = {f.empty_set(), omega(f, f.full_set())};
    for (int k = 0; k < 3; ++k) family.push_back(att.sets[rng.below(att.sets.size())]);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Bitset> add;
      for (const auto& x : family)
        for (const auto& y : family)
          for (Bitset cand : {x | y, omega(f, x & y)})
            if (std::find(family.begin(), family.end(), cand) == family.end() &&
                std::find(add.begin(), add.end(), cand) == add.end())
              add.push_back(cand);
      if (!add.empty()) {
        grew = true;
        family.insert(family.end(), add.begin(), add.end());
      }
    }
    auto m = morse_representation(f, family);
    if (!verify_morse_representation(f, m).ok) r.pass = false;
    std::sort(family.begin(), family.end(), mask_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (reconstruct_attractors(f, m) != family) r.pass = false;
    ++roundtrips;

    // order mutation: swap two sets joined by actual reachability
    for (std::size_t p = 0; p < m.sets.size(); ++p) {
      bool done = false;
      for (std::size_t q = 0; q < m.sets.size() && !done; ++q) {
        if (p == q) continue;
        if ((forward_reach(f, m.sets[p]) & m.sets[q]).any()) {
          MorseRepresentation bad = m;
          std::swap(bad.sets[p], bad.sets[q]);
          auto verdict = verify_morse_representation(f, bad);
          bool d_diag = false;
          for (const auto& msg : verdict.diagnostics)
            if (msg.rfind("(d)", 0) == 0) d_diag = true;
          if (verdict.ok || !d_diag) r.pass = false;
          ++order_mutations;
          done = true;
        }
      }
      if (done) break;
    }

    // atom mutation: drop one recurrent atom from every candidate set
    auto comps = recurrent_components(f);
    if (!comps.empty() && !m.sets.empty()) {
      MorseRepresentation bad = m;
      const std::size_t atom = comps.front().find_first();
      for (auto& s : bad.sets) s.reset(atom);
      bool some_nonempty = true;
      for (const auto& s : bad.sets) some_nonempty = some_nonempty && s.any();
      if (some_nonempty) {
        auto verdict = verify_morse_representation(f, bad);
        bool a_diag = false;
        for (const auto& msg : verdict.diagnostics)
          if (msg.rfind("(a)", 0) == 0) a_diag = true;
        if (verdict.ok || !a_diag) r.pass = false;
        ++atom_mutations;
      }
    }
  };
  for (const auto& f : corpus.relations3) run(f);
  for (const auto& f : corpus.relations5) run(f);
  r.detail = std::to_string(roundtrips) + " round-trips, " + std::to_string(order_mutations) +
             " order mutations, " + std::to_string(atom_mutations) + " atom mutations";
  return r;
}

CriterionResult criterion_regular_closed(std::uint64_t seed) {
  CriterionResult r{9, "regular closed oracle laws and cell/oracle compatibility", true, ""};
  DetRng rng(seed ^ 0x99);
  auto rand_rat = [&rng](long long max_den) {
    long long d = 1 + static_cast<long long>(rng.below(max_den));
    return Rat(static_cast<long long>(rng.below(d + 1)), d);
  };
  std::vector<IntervalSet> closed_samples;
  for (int i = 0; i < 1000; ++i) {
    std::vector<IntervalSet::Piece> pieces;
    const int k = static_cast<int>(rng.below(4));
    for (int p = 0; p < k; ++p) {
      Rat a = rand_rat(64), b = rand_rat(64);
      if (b < a) std::swap(a, b);
      pieces.push_back({a, b, true, true});
    }
    closed_samples.push_back(IntervalSet::from_pieces(std::move(pieces)));
  }
  if (!check_regclhom(Rat(0), Rat(1), closed_samples)) r.pass = false;

  std::vector<IntervalSet> regular_samples;
  for (const auto& s : closed_samples) regular_samples.push_back(s.regularize_in(Rat(0), Rat(1)));
  std::sort(regular_samples.begin(), regular_samples.end(),
            [](const IntervalSet& a, const IntervalSet& b) { return a.to_string() < b.to_string(); });
  regular_samples.erase(std::unique(regular_samples.begin(), regular_samples.end()),
                        regular_samples.end());
  if (!check_difference_lemma(Rat(0), Rat(1), regular_samples)) r.pass = false;

  // Evaluation compatibility, exhaustive over all cell-set pairs of every
  // grid size up to 10 (uneven breakpoints).
  std::size_t pairs = 0;
  for (std::size_t cells = 1; cells <= 10; ++cells) {
    std::vector<Rat> bp;
    for (std::size_t i = 0; i <= cells; ++i)
      bp.emplace_back(static_cast<long long>(i * i + i), static_cast<long long>(cells * cells + cells));
    GridAlgebra1D grid(std::move(bp));
    const Rat lo = grid.space_lo(), hi = grid.space_hi();
    auto masks = all_subsets(cells);
    std::vector<IntervalSet> eval;
    eval.reserve(masks.size());
    for (const auto& m : masks) eval.push_back(grid.evaluate(m));
    for (std::size_t x = 0; x < masks.size(); ++x) {
      if (grid.evaluate(~masks[x]) != eval[x].complement_in(lo, hi).closure()) r.pass = false;
      for (std::size_t y = 0; y < masks.size(); ++y) {
        if (grid.evaluate(masks[x] | masks[y]) != eval[x].unite(eval[y]).regularize_in(lo, hi))
          r.pass = false;
        if (grid.evaluate(masks[x] & masks[y]) != eval[x].intersect(eval[y]).regularize_in(lo, hi))
          r.pass = false;
        if (grid.evaluate(masks[x] & ~masks[y]) != eval[x].subtract(eval[y]).closure())
          r.pass = false;
        ++pairs;
      }
    }
  }
  r.detail = "1000 interval samples, " + std::to_string(pairs) + " cell-set pairs";
  return r;
}

OuterApproximation half_map_approximation(std::size_t cells) {
  PiecewiseAffineMap half({Rat(0), Rat(1)}, {{Rat(1, 2), Rat(0)}});
  std::vector<Rat> bp;
  for (std::size_t i = 0; i <= cells; ++i) bp.emplace_back(static_cast<long long>(i), cells);
  return build_outer_approximation(half, GridAlgebra1D(std::move(bp)));
}

CriterionResult criterion_pipeline_fixture() {
  CriterionResult r{10, "halving-map pipeline at 4/8/16/64 cells", true, ""};
  const auto start = std::chrono::steady_clock::now();

  auto oa4 = half_map_approximation(4);
  const Bitset expected_rows[4] = {make_bitset(4, {0}), make_bitset(4, {0, 1}),
                                   make_bitset(4, {0, 1}), make_bitset(4, {1, 2})};
  for (std::size_t i = 0; i < 4; ++i)
    if (oa4.relation.forward_row(i) != expected_rows[i]) r.pass = false;

  for (std::size_t cells : {4u, 8u, 16u, 64u}) {
    auto oa = half_map_approximation(cells);
    if (!check_w(oa).pass) r.pass = false;

    auto att = attractor_lattice(oa.relation);
    for (std::size_t a = 0; a < att.sets.size(); ++a)
      for (std::size_t b = 0; b < att.sets.size(); ++b)
        if (!is_subset(att.sets[a], att.sets[b]) && !is_subset(att.sets[b], att.sets[a]))
          r.pass = false;  // chain
    if (att.sets.size() < 2 || !oa.grid.evaluate(att.sets[1]).contains_point(Rat(0)))
      r.pass = false;

    std::vector<Bitset> blocks = att.sets;  // attractors are forward invariant
    blocks.push_back(oa.relation.full_set());
    auto tmd = tessellated_morse_decomposition(oa.relation, blocks);
    for (std::size_t m = 0; m < tmd.morse.sets.size(); ++m)
      if (inv(oa.relation, tmd.tessellation.tiles[tmd.pi[m]]) != tmd.morse.sets[m]) r.pass = false;

    AnalyticOracle oracle;
    oracle.per_cell.assign(cells, IntervalSet::point(Rat(0)));
    std::vector<Bitset> test_sets;
    for (const auto& s : att.sets) {
      test_sets.push_back(s);
      oracle.per_set[s] = s.none() ? IntervalSet::empty() : IntervalSet::point(Rat(0));
    }
    if (check_l(oa, oracle.per_cell).status != LStatus::PassByOracle) r.pass = false;
    auto report = verify_commutative_model(oa, oracle, test_sets);
    if (!report.all_pass()) r.pass = false;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (elapsed.count() > 5000) r.pass = false;
  r.detail = "all resolutions in " + std::to_string(elapsed.count()) + " ms (64-cell budget 5 s)";
  return r;
}

CriterionResult criterion_closure() {
  CriterionResult r{11, "reachability closure certifies structurally", true, ""};
  for (std::size_t cells : {4u, 8u}) {
    auto closed = close_outer_approximation(half_map_approximation(cells));
    if (check_l(closed, std::nullopt).status != LStatus::PassByOrder) r.pass = false;
    auto att = attractor_lattice(closed.relation);
    auto t = morse_tessellation(closed.relation, att.sets);
    for (const auto& beta : t.order.downsets()) {
      Bitset atoms(closed.relation.atom_count());
      for (std::size_t i = beta.find_first(); i != Bitset::npos; i = beta.find_next(i))
        atoms |= t.tiles[i];
      if (!closed.relation.forward_invariant(atoms)) r.pass = false;
    }
  }
  r.detail = "4- and 8-cell closures";
  return r;
}

CriterionResult criterion_determinism(std::uint64_t seed) {
  CriterionResult r{12, "self-test artifacts byte-identical across runs", true, ""};
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path();
  const fs::path dir1 = base / ("latmorse_det_a_" + std::to_string(seed));
  const fs::path dir2 = base / ("latmorse_det_b_" + std::to_string(seed));
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  write_artifacts(seed, dir1.string());
  write_artifacts(seed, dir2.string());

  std::vector<fs::path> files1, files2;
  for (const auto& e : fs::recursive_directory_iterator(dir1)) files1.push_back(e.path());
  for (const auto& e : fs::recursive_directory_iterator(dir2)) files2.push_back(e.path());
  std::sort(files1.begin(), files1.end());
  std::sort(files2.begin(), files2.end());
  if (files1.size() != files2.size() || files1.empty()) r.pass = false;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  for (std::size_t i = 0; r.pass && i < files1.size(); ++i) {
    if (files1[i].filename() != files2[i].filename()) r.pass = false;
    else if (slurp(files1[i]) != slurp(files2[i])) r.pass = false;
  }
  r.detail = std::to_string(files1.size()) + " artifact files compared";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  return r;
}

}  // namespace

void write_artifacts(std::uint64_t seed, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto path = [&dir](const std::string& name) { return dir + "/" + name; };
  auto dump = [](const Json& j) { return j.dump(2) + "\n"; };

  std::vector<std::pair<std::string, std::string>> f3_edges = {
      {"1", "1"}, {"1", "2"}, {"2", "2"}, {"3", "2"}, {"3", "3"}};
  Relation f3({"1", "2", "3"}, f3_edges);
  write_text_file(path("fix_f3_relation.json"), dump(relation_to_json(f3)));
  auto att = attractor_lattice(f3);
  write_text_file(path("fix_f3_attractors.json"), dump(lattice_to_json(att.lattice)));
  auto m = morse_representation(f3, att.sets);
  write_text_file(path("fix_f3_morse.json"), dump(morse_representation_to_json(m, f3.atoms())));
  write_text_file(path("fix_f3_morse.dot"), dot_hasse(m.order, "morse_graph"));

  auto chain2 = downset_lattice(poset_from_cover_pairs({"a", "b"}, {{"a", "b"}}));
  write_text_file(path("chain2_lattice.json"), dump(lattice_to_json(chain2)));

  auto oa = half_map_approximation(4);
  write_text_file(path("half4_relation.json"), dump(relation_to_json(oa.relation)));
  AnalyticOracle oracle;
  oracle.per_cell.assign(4, IntervalSet::point(Rat(0)));
  std::vector<Bitset> test_sets;
  auto att_half = attractor_lattice(oa.relation);
  for (const auto& s : att_half.sets) {
    test_sets.push_back(s);
    oracle.per_set[s] = s.none() ? IntervalSet::empty() : IntervalSet::point(Rat(0));
  }
  auto report = verify_commutative_model(oa, oracle, test_sets);
  write_text_file(path("half4_certificates.json"),
                  dump(model_report_to_json(report, oa.relation.atoms())));
  std::vector<Bitset> blocks = att_half.sets;
  blocks.push_back(oa.relation.full_set());
  auto tmd = tessellated_morse_decomposition(oa.relation, blocks);
  write_text_file(path("half4_tessellation.dot"), dot_hasse(tmd.tessellation.order, "tessellation"));
  write_text_file(path("half4_morse.dot"), dot_hasse(tmd.morse.order, "morse_graph"));

  // Seeded corpus digest: pins down the random stream end to end.
  DetRng rng(seed ^ 0xa11ce);
  Json digest;
  digest["seed"] = seed;
  Json entries = Json::array();
  for (int i = 0; i < 20; ++i) {
    auto f = random_relation(rng, 5, 20 + static_cast<int>(rng.below(50)));
    auto a = attractor_lattice(f);
    Json e;
    e["relation"] = relation_to_json(f);
    e["attractor_count"] = a.sets.size();
    Json sets = Json::array();
    for (const auto& s : a.sets) sets.push_back(set_notation(s, f.atoms()));
    e["attractors"] = std::move(sets);
    auto mr = morse_representation(f, a.sets);
    e["morse"] = morse_representation_to_json(mr, f.atoms());
    entries.push_back(std::move(e));
  }
  digest["corpus"] = std::move(entries);
  write_text_file(path("corpus_digest.json"), dump(digest));
}

std::vector<CriterionResult> run_all(const Options& opts, std::ostream& log) {
  Corpus corpus = build_corpus(opts.seed);
  std::vector<CriterionResult> results;
  auto run = [&](CriterionResult r) {
    log << "[" << (r.id < 10 ? " " : "") << r.id << "] " << (r.pass ? "PASS" : "FAIL") << "  "
        << r.name << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    log.flush();
    results.push_back(std::move(r));
  };
  run(criterion_birkhoff(opts.seed));
  run(criterion_canonical_axioms(corpus));
  run(criterion_extraprop(corpus));
  run(criterion_uniqueness(corpus));
  run(criterion_attractor_oracle(corpus));
  run(criterion_form_on_relations(corpus));
  run(criterion_duality(corpus));
  run(criterion_morse_roundtrip(corpus, opts.seed));
  run(criterion_regular_closed(opts.seed));
  run(criterion_pipeline_fixture());
  run(criterion_closure());
  run(criterion_determinism(opts.seed));
  if (!opts.artifact_dir.empty()) write_artifacts(opts.seed, opts.artifact_dir);
  return results;
}

}  // namespace latmorse::acceptance
