#include "latmorse/boolean.hpp"

#include <algorithm>
#include <set>

namespace latmorse {

Booleanization booleanize(const FiniteDistributiveLattice& lattice) {
  return Booleanization{BooleanAlgebraOnAtoms(lattice.ji_poset().labels())};
}

LatticeHom::LatticeHom(const FiniteDistributiveLattice* source,
                       const FiniteDistributiveLattice* target, std::vector<std::size_t> table,
                       bool anti)
    : source_(source), target_(target), table_(std::move(table)), anti_(anti) {
  const std::size_t n = source_->size();
  require(table_.size() == n, Errc::NotAHomomorphism, "table size mismatch");
  for (std::size_t e = 0; e < n; ++e)
    require(table_[e] < target_->size(), Errc::NotAHomomorphism, "table entry out of range");
  if (!anti_) {
    require(table_[source_->bottom()] == target_->bottom(), Errc::NotAHomomorphism,
            "0 not preserved");
    require(table_[source_->top()] == target_->top(), Errc::NotAHomomorphism, "1 not preserved");
  } else {
    require(table_[source_->bottom()] == target_->top(), Errc::NotAHomomorphism,
            "anti-homomorphism must send 0 to 1");
    require(table_[source_->top()] == target_->bottom(), Errc::NotAHomomorphism,
            "anti-homomorphism must send 1 to 0");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t j = table_[source_->join(a, b)];
      const std::size_t m = table_[source_->meet(a, b)];
      if (!anti_) {
        require(j == target_->join(table_[a], table_[b]), Errc::NotAHomomorphism,
                "join not preserved");
        require(m == target_->meet(table_[a], table_[b]), Errc::NotAHomomorphism,
                "meet not preserved");
      } else {
        require(j == target_->meet(table_[a], table_[b]), Errc::NotAHomomorphism,
                "anti-homomorphism must swap join to meet");
        require(m == target_->join(table_[a], table_[b]), Errc::NotAHomomorphism,
                "anti-homomorphism must swap meet to join");
      }
    }
}

LatticeHom LatticeHom::hom(const FiniteDistributiveLattice& source,
                           const FiniteDistributiveLattice& target,
                           std::vector<std::size_t> table) {
  return LatticeHom(&source, &target, std::move(table), false);
}

LatticeHom LatticeHom::anti_hom(const FiniteDistributiveLattice& source,
                                const FiniteDistributiveLattice& target,
                                std::vector<std::size_t> table) {
  return LatticeHom(&source, &target, std::move(table), true);
}

LatticeHom LatticeHom::identity(const FiniteDistributiveLattice& lattice) {
  std::vector<std::size_t> table(lattice.size());
  for (std::size_t e = 0; e < table.size(); ++e) table[e] = e;
  return LatticeHom(&lattice, &lattice, std::move(table), false);
}

bool LatticeHom::is_isomorphism() const {
  if (source_->size() != target_->size()) return false;
  std::vector<bool> hit(target_->size(), false);
  for (std::size_t e = 0; e < table_.size(); ++e) {
    if (hit[table_[e]]) return false;
    hit[table_[e]] = true;
  }
  return true;
}

BooleanHom::BooleanHom(const LatticeHom& h) {
  require(!h.is_anti(), Errc::NotAHomomorphism, "Booleanization needs a homomorphism");
  const auto& src = h.source();
  const auto& dst = h.target();
  source_ji_count_ = src.ji_count();
  atom_map_.assign(dst.ji_count(), 0);

  // Adjoint of h: g(b) = meet{ a : b <= h(a) }.  Preservation of meets
  // makes the defining family meet-closed, and g lands in J(K).
  for (std::size_t b = 0; b < dst.ji_count(); ++b) {
    Bitset acc(src.ji_count());
    acc.set();
    bool any = false;
    for (std::size_t a = 0; a < src.size(); ++a)
      if (dst.mask(h.apply(a)).test(b)) {
        acc &= src.mask(a);
        any = true;
      }
    require(any, Errc::NotAHomomorphism, "adjoint undefined (1 not preserved)");
    std::size_t g = Bitset::npos;
    for (std::size_t j = acc.find_first(); j != Bitset::npos; j = acc.find_next(j))
      if (src.ji_poset().down(j) == acc) {
        g = j;
        break;
      }
    require(g != Bitset::npos, Errc::NotAHomomorphism, "adjoint image is not join-irreducible");
    atom_map_[b] = g;
  }

  // Postcondition of the universal property: B(h) . j = j . h.
  for (std::size_t a = 0; a < src.size(); ++a)
    require(apply(src.mask(a)) == dst.mask(h.apply(a)), Errc::NotAHomomorphism,
            "Boolean extension does not commute with the embeddings");
}

Bitset BooleanHom::apply(const Bitset& subset_of_source_ji) const {
  require(subset_of_source_ji.size() == source_ji_count_, Errc::ValidationError,
          "subset width mismatch");
  Bitset out(atom_map_.size());
  for (std::size_t b = 0; b < atom_map_.size(); ++b)
    if (subset_of_source_ji.test(atom_map_[b])) out.set(b);
  return out;
}

BooleanHom booleanize_hom(const LatticeHom& h) { return BooleanHom(h); }

ConvexPiece::ConvexPiece(const FiniteDistributiveLattice& lat, Bitset m)
    : lattice(&lat), mask(std::move(m)) {
  require(mask.size() == lat.ji_count(), Errc::NotConvex, "mask width mismatch");
  require(lat.ji_poset().is_convex(mask), Errc::NotConvex,
          "mask is not order-convex in the join-irreducible poset");
}

std::vector<ConvexPiece> convex_semilattice(const FiniteDistributiveLattice& lattice) {
  std::set<Bitset> seen;
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b)
      seen.insert(lattice.mask(a) & ~lattice.mask(b));
  std::vector<Bitset> masks(seen.begin(), seen.end());
  std::sort(masks.begin(), masks.end(), mask_less);
  std::vector<ConvexPiece> out;
  out.reserve(masks.size());
  for (auto& m : masks) out.emplace_back(lattice, std::move(m));
  return out;
}

}  // namespace latmorse
