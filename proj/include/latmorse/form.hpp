#pragma once

#include "latmorse/boolean.hpp"
#include "latmorse/common.hpp"
#include "latmorse/lattice.hpp"
#include "latmorse/semilattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace latmorse {

/// Binary form L x L -> I into a meet semilattice.  Absorption is the
/// defining contract and is enforced at construction; distributivity and
/// monotonicity stay queryable properties rather than constructor
/// requirements because the whole hierarchy (form, distributive form,
/// Conley form) is of interest.  Tables are dense; sources are capped at
/// 1024 elements.
class LatticeForm {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  LatticeForm(const FiniteDistributiveLattice& source, SemilatticePtr target,
              std::vector<std::uint32_t> table);
  /// Skips the absorption check; for building deliberately broken forms.
  LatticeForm(unchecked_t, const FiniteDistributiveLattice& source, SemilatticePtr target,
              std::vector<std::uint32_t> table);

  const FiniteDistributiveLattice& source() const { return *source_; }
  const MeetSemilattice& target() const { return *target_; }
  SemilatticePtr target_ptr() const { return target_; }

  std::uint32_t value(std::size_t a, std::size_t b) const {
    return table_[a * source_->size() + b];
  }
  std::uint32_t zero_value() const { return value(source_->bottom(), source_->top()); }
  std::uint32_t one_value() const { return value(source_->top(), source_->bottom()); }

 private:
  const FiniteDistributiveLattice* source_;
  SemilatticePtr target_;
  std::vector<std::uint32_t> table_;
};

struct FormAxioms {
  bool absorption = false;
  bool distributivity = false;
  bool monotonicity = false;
  bool exchange = false;
  /// Unset when the target carries no join (not a lattice around the
  /// source), in which case additivity is not applicable.
  std::optional<bool> additivity;

  bool conley() const { return absorption && distributivity && monotonicity; }
};

/// Exhaustive evaluation of every axiom quantifier (L^2 for absorption and
/// monotonicity, L^4 for distributivity and exchange).
FormAxioms check_form_axioms(const LatticeForm& f);

/// The canonical form (a,b) -> j(a) \ j(b) valued in the convexity
/// semilattice of L.
LatticeForm canonical_conley_form(const FiniteDistributiveLattice& lattice);

/// Set difference computed inside the ambient Boolean algebra Set(J(L)).
/// Uses the full powerset (with joins) when J(L) has at most 10 points
/// and the convexity value set otherwise.
LatticeForm set_difference_form(const FiniteDistributiveLattice& lattice);

/// gamma: convex pieces -> I obtained by evaluating the form on any
/// representative pair of each piece.
struct SemilatticeInjection {
  std::vector<ConvexPiece> domain;
  SemilatticePtr target;
  std::vector<std::uint32_t> values;  // aligned with domain
  bool verified_injective = false;

  std::uint32_t value_of(const Bitset& piece_mask) const;
};

/// Throws NotWellDefined when two representatives of a piece disagree and
/// NotInjective when a distributive form fails injectivity (it is not
/// monotone).  For monotone distributive forms the result is a verified
/// injective meet semilattice homomorphism.
SemilatticeInjection gamma_from_form(const LatticeForm& f);

/// Meet-semilattice isomorphism between the images of two Conley forms on
/// the same lattice, with f' = g o f pointwise.
struct TransitionIso {
  SemilatticePtr from;
  SemilatticePtr to;
  std::map<std::uint32_t, std::uint32_t> forward;
  std::map<std::uint32_t, std::uint32_t> inverse;

  std::uint32_t apply(std::uint32_t v) const { return forward.at(v); }
};

TransitionIso transition_iso(const LatticeForm& f, const LatticeForm& f_prime);

/// theta(a-b) := h(a)-h(b) induced by a lattice homomorphism.
struct ThetaMap {
  SemilatticePtr from;
  SemilatticePtr to;
  std::map<std::uint32_t, std::uint32_t> table;

  std::uint32_t apply(std::uint32_t v) const { return table.at(v); }
};

ThetaMap induced_theta(const LatticeHom& h, const LatticeForm& form_on_source,
                       const LatticeForm& form_on_target);

/// (h^. f)(a,b) = f(h a, h b) for homomorphisms, f(h b, h a) for
/// anti-homomorphisms.
LatticeForm pullback_form(const LatticeHom& h, const LatticeForm& f);

/// Embedding a -> f(a,0) plus dual elements a* = f(1,a); the dual family
/// carries the reversed order.  Verifies f(a,b) = f(a,0) ^ f(1,b).
struct Dualization {
  std::vector<std::uint32_t> embedding;
  std::vector<std::uint32_t> dual;
};

Dualization dualize(const LatticeForm& f);

/// Poset {f(a, pred a) : a in J(L)} ordered like J(L); values are nonzero
/// and pairwise meet-zero in the image.
struct SpectralRepresentation {
  const FiniteDistributiveLattice* lattice;
  std::vector<std::pair<std::size_t, std::uint32_t>> points;  // (ji index, value)
  FinitePoset order;
  SemilatticePtr target;
};

SpectralRepresentation spectral_representation(const FiniteDistributiveLattice& lattice,
                                               const LatticeForm& f);

/// Values f(a', pred a') over join-irreducibles a' <= a; their join in the
/// target reproduces f(a,0).  Requires an additive form.
std::vector<std::uint32_t> decompose_join(const FiniteDistributiveLattice& lattice,
                                          const LatticeForm& f, std::size_t a);

}  // namespace latmorse
