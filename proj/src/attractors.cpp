#include "latmorse/attractors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latmorse {

std::size_t AttractorLattice::index_of_set(const Bitset& s) const {
  for (std::size_t e = 0; e < sets.size(); ++e)
    if (sets[e] == s) return e;
  fail(Errc::NotAnAttractor, "set is not a member of the attractor lattice");
}

AttractorLattice attractor_lattice(const Relation& f, std::size_t cap) {
  const std::size_t n = f.atom_count();
  const std::vector<Bitset> comps = recurrent_components(f);
  const std::size_t m = comps.size();

  std::vector<Bitset> reach(m);
  for (std::size_t c = 0; c < m; ++c) reach[c] = forward_reach(f, comps[c]);

  // c <= d  iff  d reaches c; mutual reachability is impossible for
  // distinct components.
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d < m; ++d)
      if ((reach[d] & comps[c]).any()) below[d].set(c);

  std::vector<std::string> comp_labels(m);
  for (std::size_t c = 0; c < m; ++c) comp_labels[c] = set_notation(reach[c], f.atoms());

  FinitePoset comp_poset = FinitePoset(comp_labels, std::move(below)).canonicalized();
  std::vector<std::size_t> comp_of(m);  // canonical ji index -> original component
  for (std::size_t c = 0; c < m; ++c) comp_of[*comp_poset.index_of(comp_labels[c])] = c;

  FiniteDistributiveLattice skeleton = downset_lattice(comp_poset, cap);
  std::vector<Bitset> sets(skeleton.size());
  std::vector<std::string> labels(skeleton.size());
  for (std::size_t e = 0; e < skeleton.size(); ++e) {
    Bitset s(n);
    const Bitset& mask = skeleton.mask(e);
    for (std::size_t j = mask.find_first(); j != Bitset::npos; j = mask.find_next(j))
      s |= reach[comp_of[j]];
    labels[e] = set_notation(s, f.atoms());
    sets[e] = std::move(s);
  }

  std::vector<Bitset> elements;
  elements.reserve(skeleton.size());
  for (std::size_t e = 0; e < skeleton.size(); ++e) elements.push_back(skeleton.mask(e));
  FiniteDistributiveLattice lattice(comp_poset, std::move(elements), std::move(labels));
  return AttractorLattice{std::move(lattice), std::move(sets)};
}

AttractorLattice repeller_lattice(const Relation& f, std::size_t cap) {
  return attractor_lattice(f.transpose(), cap);
}

Bitset dual_repeller(const Relation& f, const Bitset& attractor) {
  require(f.image(attractor) == attractor, Errc::NotAnAttractor,
          "F(A) != A for " + set_notation(attractor, f.atoms()));
  return alpha(f, ~attractor);
}

LatticeForm conley_form_att(const Relation& f, const AttractorLattice& att) {
  const std::size_t n = att.lattice.size();
  std::vector<Bitset> duals(n);
  for (std::size_t e = 0; e < n; ++e) duals[e] = dual_repeller(f, att.sets[e]);

  std::vector<Bitset> values;
  values.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) values.push_back(att.sets[a] & duals[b]);

  auto target = std::make_shared<const MeetSemilattice>(MeetSemilattice::from_masks(
      f.atoms(), values, [&f](const Bitset& x, const Bitset& y) { return inv(f, x & y); }));
  std::map<Bitset, std::uint32_t> index;
  for (std::uint32_t e = 0; e < target->size(); ++e) index.emplace(target->mask_of(e), e);

  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(att.sets[a] & duals[b]);
  return LatticeForm(att.lattice, std::move(target), std::move(table));
}

bool inv_intersection_check(const Relation& f, const Bitset& u, const Bitset& v) {
  require(f.forward_invariant(u), Errc::NotForwardInvariant,
          "U = " + set_notation(u, f.atoms()) + " is not forward invariant");
  require(f.backward_invariant(v), Errc::NotBackwardInvariant,
          "V = " + set_notation(v, f.atoms()) + " is not backward invariant");
  return inv(f, u & v) == (omega(f, u) & alpha(f, v));
}

MorseTile morse_tiles(const Relation& f, const Bitset& u, const Bitset& u_prime) {
  require(f.forward_invariant(u), Errc::NotForwardInvariant,
          "U = " + set_notation(u, f.atoms()) + " is not forward invariant");
  require(f.forward_invariant(u_prime), Errc::NotForwardInvariant,
          "U' = " + set_notation(u_prime, f.atoms()) + " is not forward invariant");
  Bitset tile = u & ~u_prime;
  Bitset invariant_part = inv(f, tile);
  return MorseTile{std::move(tile), std::move(invariant_part)};
}

namespace {

NormalizedLattice normalize_attractor_family(const Relation& f,
                                             const std::vector<Bitset>& family) {
  std::vector<Bitset> sets = family;
  std::sort(sets.begin(), sets.end(), mask_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  require(!sets.empty(), Errc::NotASublattice, "empty attractor family");

  std::map<Bitset, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < sets.size(); ++e) {
    require(f.image(sets[e]) == sets[e], Errc::NotASublattice,
            set_notation(sets[e], f.atoms()) + " is not an attractor");
    index.emplace(sets[e], e);
    labels.push_back(set_notation(sets[e], f.atoms()));
  }
  require(index.count(f.empty_set()), Errc::NotASublattice, "family must contain the empty set");
  require(index.count(omega(f, f.full_set())), Errc::NotASublattice,
          "family must contain omega of the full space");

  const std::size_t n = sets.size();
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto j = index.find(sets[a] | sets[b]);
      require(j != index.end(), Errc::NotASublattice, "family not closed under union");
      auto m = index.find(omega(f, sets[a] & sets[b]));
      require(m != index.end(), Errc::NotASublattice,
              "family not closed under omega of intersections");
      join[a][b] = j->second;
      meet[a][b] = m->second;
    }
  return lattice_from_tables(labels, join, meet);
}

}  // namespace

MorseRepresentation morse_representation(const Relation& f,
                                         const std::vector<Bitset>& attractor_family) {
  NormalizedLattice norm = normalize_attractor_family(f, attractor_family);

  std::vector<Bitset> sorted = attractor_family;
  std::sort(sorted.begin(), sorted.end(), mask_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const auto jis = norm.lattice.join_irreducibles();
  std::vector<Bitset> morse_sets;
  std::vector<std::string> labels;
  for (const auto& ji : jis) {
    const Bitset& a = sorted[norm.source_index[ji.element]];
    const Bitset& pred = sorted[norm.source_index[ji.pred]];
    Bitset m = a & dual_repeller(f, pred);
    require(m.any(), Errc::ComputeError, "empty Morse set");
    labels.push_back(set_notation(m, f.atoms()));
    morse_sets.push_back(std::move(m));
  }
  // Order inherited from the join-irreducible poset of the sublattice.
  const FinitePoset& jp = norm.lattice.ji_poset();
  std::vector<Bitset> below(jis.size(), Bitset(jis.size()));
  for (std::size_t i = 0; i < jis.size(); ++i)
    for (std::size_t j = 0; j < jis.size(); ++j)
      if (jp.leq(jis[j].ji, jis[i].ji)) below[i].set(j);
  return MorseRepresentation{std::move(morse_sets), FinitePoset(labels, std::move(below))};
}

MorseVerification verify_morse_representation(const Relation& f, const MorseRepresentation& m) {
  MorseVerification out;
  auto report = [&out](const std::string& msg) {
    out.ok = false;
    out.diagnostics.push_back(msg);
  };
  const auto& sets = m.sets;
  if (sets.size() != m.order.size()) {
    report("order/set count mismatch");
    return out;
  }

  for (const auto& comp : recurrent_components(f)) {
    std::size_t hits = 0;
    for (const auto& s : sets)
      if (is_subset(comp, s)) ++hits;
    if (hits != 1)
      report("(a) recurrent component " + set_notation(comp, f.atoms()) + " is contained in " +
             std::to_string(hits) + " candidate sets");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].none()) report("(c) candidate " + m.order.label(i) + " is empty");
    if (!is_subset(sets[i], f.image(sets[i])) || !is_subset(sets[i], f.preimage(sets[i])))
      report("(b) candidate " + set_notation(sets[i], f.atoms()) + " is not invariant");
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]).any())
        report("(c) candidates " + set_notation(sets[i], f.atoms()) + " and " +
               set_notation(sets[j], f.atoms()) + " intersect");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Bitset reach = forward_reach(f, sets[i]);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      if ((reach & sets[j]).any() && !(m.order.leq(j, i) && i != j))
        report("(d) reachability " + set_notation(sets[i], f.atoms()) + " -> " +
               set_notation(sets[j], f.atoms()) + " requires the target below the source");
    }
  }
  return out;
}

std::vector<Bitset> reconstruct_attractors(const Relation& f, const MorseRepresentation& m) {
  MorseVerification v = verify_morse_representation(f, m);
  require(v.ok, Errc::InvalidMorseRepresentation,
          v.diagnostics.empty() ? "verification failed" : v.diagnostics.front());

  const std::size_t n = f.atom_count();
  std::vector<Bitset> out;
  for (const Bitset& beta : m.order.downsets()) {
    Bitset s(n);
    for (std::size_t i = beta.find_first(); i != Bitset::npos; i = beta.find_next(i))
      s |= m.sets[i];

    // Atoms all of whose infinite forward paths enter the union: those
    // unable to reach a cycle avoiding it.
    Bitset avoid = ~s;
    std::vector<std::string> sub_labels;
    std::vector<std::size_t> sub_ids;
    for (std::size_t i = avoid.find_first(); i != Bitset::npos; i = avoid.find_next(i))
      sub_ids.push_back(i);
    std::vector<Bitset> sub_rows(sub_ids.size(), Bitset(sub_ids.size()));
    for (std::size_t a = 0; a < sub_ids.size(); ++a) {
      sub_labels.push_back(f.atoms()[sub_ids[a]]);
      for (std::size_t b = 0; b < sub_ids.size(); ++b)
        if (f.forward_row(sub_ids[a]).test(sub_ids[b])) sub_rows[a].set(b);
    }
    Relation sub(sub_labels, std::move(sub_rows));
    Bitset persistent(sub_ids.size());
    for (const auto& comp : recurrent_components(sub)) persistent |= comp;
    // Backward closure within the avoiding subgraph.
    Bitset can_avoid = forward_reach(sub.transpose(), persistent);
    Bitset basin(n);
    for (std::size_t a = 0; a < sub_ids.size(); ++a)
      if (!can_avoid.test(a)) basin.set(sub_ids[a]);

    out.push_back(omega(f, s | basin));
  }
  std::sort(out.begin(), out.end(), mask_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace latmorse
