#include "latmorse/lattice.hpp"

#include <algorithm>

namespace latmorse {

FiniteDistributiveLattice::FiniteDistributiveLattice(FinitePoset ji_poset,
                                                     std::vector<Bitset> elements,
                                                     std::vector<std::string> labels)
    : ji_(std::move(ji_poset)), elements_(std::move(elements)), labels_(std::move(labels)) {
  require(labels_.size() == elements_.size(), Errc::NotALattice, "label/element size mismatch");
  require(!elements_.empty(), Errc::NotALattice, "lattice needs at least one element");
  require(std::is_sorted(elements_.begin(), elements_.end(), mask_less), Errc::NotALattice,
          "elements not in canonical order");
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    require(elements_[e].size() == ji_.size(), Errc::NotALattice, "element mask width mismatch");
    require(ji_.is_downset(elements_[e]), Errc::NotALattice,
            "element " + labels_[e] + " is not a down-set of the join-irreducible poset");
    require(index_.emplace(elements_[e], e).second, Errc::NotALattice,
            "duplicate element mask at " + labels_[e]);
  }
  require(elements_.front().none(), Errc::NotALattice, "missing bottom element");
  require(elements_.back().count() == ji_.size(), Errc::NotALattice, "missing top element");
  // Down-set counting certifies closure; the pairwise sweep is kept for
  // small lattices where it doubles as a sanity check of the encoding.
  require(elements_.size() == ji_.downsets().size(), Errc::NotALattice,
          "element set is not the full down-set family");
  if (elements_.size() <= 512) {
    for (std::size_t a = 0; a < elements_.size(); ++a)
      for (std::size_t b = a + 1; b < elements_.size(); ++b) {
        require(index_.count(elements_[a] | elements_[b]), Errc::NotALattice,
                "element set not closed under join");
        require(index_.count(elements_[a] & elements_[b]), Errc::NotALattice,
                "element set not closed under meet");
      }
  }
}

std::size_t FiniteDistributiveLattice::index_of(const Bitset& mask) const {
  auto it = index_.find(mask);
  require(it != index_.end(), Errc::ValidationError, "mask is not a lattice element");
  return it->second;
}

std::size_t FiniteDistributiveLattice::join(std::size_t a, std::size_t b) const {
  return index_of(elements_.at(a) | elements_.at(b));
}

std::size_t FiniteDistributiveLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(elements_.at(a) & elements_.at(b));
}

std::vector<FiniteDistributiveLattice::JoinIrreducible>
FiniteDistributiveLattice::join_irreducibles() const {
  // In Birkhoff form the join-irreducibles are exactly the principal
  // down-sets; the unique predecessor drops the generating point.
  std::vector<JoinIrreducible> out;
  out.reserve(ji_.size());
  for (std::size_t j = 0; j < ji_.size(); ++j) {
    Bitset principal = ji_.down(j);
    Bitset pred = principal;
    pred.reset(j);
    out.push_back({index_of(principal), index_of(pred), j});
  }
  return out;
}

std::vector<std::size_t> FiniteDistributiveLattice::irredundant_join_rep(std::size_t e) const {
  const Bitset& m = elements_.at(e);
  std::vector<std::size_t> out;
  for (std::size_t j = m.find_first(); j != Bitset::npos; j = m.find_next(j)) {
    Bitset strictly_above = ji_.up(j);
    strictly_above.reset(j);
    if ((strictly_above & m).none()) out.push_back(index_of(ji_.down(j)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteDistributiveLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const Bitset& m = elements_[e];
    // Lower covers drop one maximal point of the down-set.
    for (std::size_t j = m.find_first(); j != Bitset::npos; j = m.find_next(j)) {
      Bitset strictly_above = ji_.up(j);
      strictly_above.reset(j);
      if ((strictly_above & m).any()) continue;
      Bitset lower = m;
      lower.reset(j);
      out.emplace_back(index_of(lower), e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteDistributiveLattice downset_lattice(const FinitePoset& p, std::size_t cap) {
  FinitePoset ji = p.canonicalized();
  std::vector<Bitset> elements = ji.downsets(cap);
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& m : elements) labels.push_back(set_notation(m, ji.labels()));
  return FiniteDistributiveLattice(std::move(ji), std::move(elements), std::move(labels));
}

NormalizedLattice lattice_from_tables(const std::vector<std::string>& labels,
                                      const std::vector<std::vector<std::size_t>>& join_table,
                                      const std::vector<std::vector<std::size_t>>& meet_table) {
  const std::size_t n = labels.size();
  require(n > 0, Errc::NotALattice, "empty element list");
  require(join_table.size() == n && meet_table.size() == n, Errc::NotALattice,
          "table size mismatch");
  auto at = [n](const std::vector<std::vector<std::size_t>>& t, std::size_t a, std::size_t b) {
    require(t[a].size() == n, Errc::NotALattice, "table row size mismatch");
    std::size_t v = t[a][b];
    require(v < n, Errc::NotALattice, "table entry out of range");
    return v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    require(at(join_table, a, a) == a && at(meet_table, a, a) == a, Errc::NotALattice,
            "operations not idempotent at " + labels[a]);
    for (std::size_t b = 0; b < n; ++b) {
      require(at(join_table, a, b) == at(join_table, b, a), Errc::NotALattice,
              "join not commutative");
      require(at(meet_table, a, b) == at(meet_table, b, a), Errc::NotALattice,
              "meet not commutative");
      require(at(join_table, a, at(meet_table, a, b)) == a, Errc::NotALattice,
              "absorption fails");
      require(at(meet_table, a, at(join_table, a, b)) == a, Errc::NotALattice,
              "absorption fails");
    }
  }

  // Order, strict down-sets, immediate-predecessor counts.
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (meet_table[a][b] == a) below[b].set(a);
  std::vector<std::size_t> ji_rows;
  for (std::size_t a = 0; a < n; ++a) {
    if (below[a].count() == 1) continue;  // bottom
    std::size_t preds = 0;
    for (std::size_t b = below[a].find_first(); b != Bitset::npos; b = below[a].find_next(b)) {
      if (b == a) continue;
      bool immediate = true;
      for (std::size_t c = below[a].find_first(); c != Bitset::npos; c = below[a].find_next(c))
        if (c != a && c != b && below[c].test(b)) {
          immediate = false;
          break;
        }
      if (immediate) ++preds;
    }
    if (preds == 1) ji_rows.push_back(a);
  }

  std::vector<std::string> ji_labels;
  const std::size_t m = ji_rows.size();
  std::vector<Bitset> ji_below(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    ji_labels.push_back(labels[ji_rows[i]]);
    for (std::size_t j = 0; j < m; ++j)
      if (below[ji_rows[i]].test(ji_rows[j])) ji_below[i].set(j);
  }
  FinitePoset ji = FinitePoset(std::move(ji_labels), std::move(ji_below)).canonicalized();

  std::vector<std::size_t> ji_row_of(m);  // ji poset index -> input row
  for (std::size_t j = 0; j < m; ++j) {
    auto pos = ji.index_of(labels[ji_rows[j]]);
    ji_row_of[*pos] = ji_rows[j];
  }

  // Element -> down-set of join-irreducibles; Birkhoff demands this is a
  // bijection onto all down-sets compatible with both tables.
  std::vector<Bitset> masks(n, Bitset(m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < m; ++j)
      if (below[a].test(ji_row_of[j])) masks[a].set(j);

  std::vector<std::size_t> order(n);
  for (std::size_t a = 0; a < n; ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mask_less(masks[a], masks[b]); });

  std::vector<Bitset> elements;
  std::vector<std::string> out_labels;
  std::vector<std::size_t> source_index;
  for (std::size_t k = 0; k < n; ++k) {
    elements.push_back(masks[order[k]]);
    out_labels.push_back(labels[order[k]]);
    source_index.push_back(order[k]);
    if (k > 0)
      require(elements[k - 1] != elements[k], Errc::NotDistributive,
              "distinct elements share a join-irreducible profile");
  }
  require(ji.downsets().size() == n, Errc::NotDistributive,
          "element count differs from the down-set count of the join-irreducible poset");

  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[source_index[k]] = k;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      require(elements[rank[join_table[a][b]]] == (masks[a] | masks[b]), Errc::NotDistributive,
              "join table disagrees with down-set union");
      require(elements[rank[meet_table[a][b]]] == (masks[a] & masks[b]), Errc::NotDistributive,
              "meet table disagrees with down-set intersection");
    }

  return NormalizedLattice{
      FiniteDistributiveLattice(std::move(ji), std::move(elements), std::move(out_labels)),
      std::move(source_index)};
}

bool lattice_isomorphic(const FiniteDistributiveLattice& a, const FiniteDistributiveLattice& b) {
  return poset_isomorphic(a.ji_poset(), b.ji_poset());
}

}  // namespace latmorse
