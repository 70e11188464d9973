#include "latmorse/form.hpp"

#include <algorithm>
#include <map>

namespace latmorse {

namespace {

constexpr std::size_t kFormSourceCap = 1024;

void check_table(const FiniteDistributiveLattice& source, const MeetSemilattice& target,
                 const std::vector<std::uint32_t>& table) {
  require(source.size() <= kFormSourceCap, Errc::SizeLimitExceeded,
          "form source capped at 1024 elements");
  require(table.size() == source.size() * source.size(), Errc::ValidationError,
          "form table size mismatch");
  for (auto v : table)
    require(v < target.size(), Errc::ValidationError, "form value out of range");
}

/// Dense join/meet index tables so the axiom loops are array reads.
struct OpTables {
  std::size_t n;
  std::vector<std::uint32_t> join, meet;

  explicit OpTables(const FiniteDistributiveLattice& l) : n(l.size()), join(n * n), meet(n * n) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        join[a * n + b] = join[b * n + a] = static_cast<std::uint32_t>(l.join(a, b));
        meet[a * n + b] = meet[b * n + a] = static_cast<std::uint32_t>(l.meet(a, b));
      }
  }
};

}  // namespace

LatticeForm::LatticeForm(const FiniteDistributiveLattice& source, SemilatticePtr target,
                         std::vector<std::uint32_t> table)
    : source_(&source), target_(std::move(target)), table_(std::move(table)) {
  check_table(source, *target_, table_);
  const std::size_t n = source.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      require(value(source.join(a, b), a) == value(b, a), Errc::FormAxiomViolated,
              "absorption fails: rho(a v b, a) != rho(b, a)");
      require(value(a, source.meet(a, b)) == value(a, b), Errc::FormAxiomViolated,
              "absorption fails: rho(a, a ^ b) != rho(a, b)");
    }
}

LatticeForm::LatticeForm(unchecked_t, const FiniteDistributiveLattice& source,
                         SemilatticePtr target, std::vector<std::uint32_t> table)
    : source_(&source), target_(std::move(target)), table_(std::move(table)) {
  check_table(source, *target_, table_);
}

FormAxioms check_form_axioms(const LatticeForm& f) {
  const auto& L = f.source();
  const auto& I = f.target();
  const std::size_t n = L.size();
  OpTables ops(L);
  auto val = [&](std::size_t a, std::size_t b) { return f.value(a, b); };

  FormAxioms out;
  out.absorption = true;
  for (std::size_t a = 0; a < n && out.absorption; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (val(ops.join[a * n + b], a) != val(b, a) ||
          val(a, ops.meet[a * n + b]) != val(a, b)) {
        out.absorption = false;
        break;
      }
    }

  const std::uint32_t zero = val(L.bottom(), L.top());
  out.monotonicity = true;
  for (std::size_t a = 0; a < n && out.monotonicity; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (val(a, b) == zero && !L.leq(a, b)) {
        out.monotonicity = false;
        break;
      }

  out.distributivity = true;
  for (std::size_t a = 0; a < n && out.distributivity; ++a)
    for (std::size_t b = 0; b < n && out.distributivity; ++b) {
      const std::uint32_t fab = val(a, b);
      for (std::size_t c = 0; c < n && out.distributivity; ++c) {
        const std::size_t ac = ops.meet[a * n + c];
        for (std::size_t d = 0; d < n; ++d)
          if (val(ac, ops.join[b * n + d]) != I.meet(fab, val(c, d))) {
            out.distributivity = false;
            break;
          }
      }
    }

  out.exchange = true;
  for (std::size_t a = 0; a < n && out.exchange; ++a)
    for (std::size_t b = 0; b < n && out.exchange; ++b)
      for (std::size_t c = 0; c < n && out.exchange; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (I.meet(val(a, b), val(c, d)) != I.meet(val(a, d), val(c, b))) {
            out.exchange = false;
            break;
          }

  if (I.has_join()) {
    bool additive = true;
    for (std::size_t a = 0; a < n && additive; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!L.leq(b, a)) continue;
        if (I.join(val(a, b), val(b, L.bottom())) != val(a, L.bottom())) {
          additive = false;
          break;
        }
      }
    out.additivity = additive;
  }
  return out;
}

LatticeForm canonical_conley_form(const FiniteDistributiveLattice& lattice) {
  const auto pieces = convex_semilattice(lattice);
  std::vector<Bitset> masks;
  masks.reserve(pieces.size());
  for (const auto& p : pieces) masks.push_back(p.mask);
  auto target = std::make_shared<const MeetSemilattice>(MeetSemilattice::from_masks(
      lattice.ji_poset().labels(), masks,
      [](const Bitset& a, const Bitset& b) { return a & b; }));
  std::map<Bitset, std::uint32_t> index;
  for (std::uint32_t e = 0; e < target->size(); ++e) index.emplace(target->mask_of(e), e);
  const std::size_t n = lattice.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(lattice.mask(a) & ~lattice.mask(b));
  return LatticeForm(lattice, std::move(target), std::move(table));
}

LatticeForm set_difference_form(const FiniteDistributiveLattice& lattice) {
  const auto& ji_labels = lattice.ji_poset().labels();
  SemilatticePtr target;
  if (lattice.ji_count() <= 10) {
    target = std::make_shared<const MeetSemilattice>(
        MeetSemilattice::boolean_powerset(ji_labels));
  } else {
    const auto pieces = convex_semilattice(lattice);
    std::vector<Bitset> masks;
    for (const auto& p : pieces) masks.push_back(p.mask);
    target = std::make_shared<const MeetSemilattice>(MeetSemilattice::from_masks(
        ji_labels, masks, [](const Bitset& a, const Bitset& b) { return a & b; }));
  }
  std::map<Bitset, std::uint32_t> index;
  for (std::uint32_t e = 0; e < target->size(); ++e) index.emplace(target->mask_of(e), e);
  const std::size_t n = lattice.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = index.at(lattice.mask(a) & ~lattice.mask(b));
  return LatticeForm(lattice, std::move(target), std::move(table));
}

std::uint32_t SemilatticeInjection::value_of(const Bitset& piece_mask) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i].mask == piece_mask) return values[i];
  fail(Errc::ValidationError, "mask is not a convex piece of the lattice");
}

SemilatticeInjection gamma_from_form(const LatticeForm& f) {
  const auto& L = f.source();
  const std::size_t n = L.size();
  SemilatticeInjection out;
  out.domain = convex_semilattice(L);
  out.target = f.target_ptr();
  std::map<Bitset, std::size_t> piece_index;
  for (std::size_t i = 0; i < out.domain.size(); ++i)
    piece_index.emplace(out.domain[i].mask, i);

  // Representative = lexicographically least (a,b); every later pair with
  // the same piece must agree, otherwise the absorption contract is broken.
  std::vector<bool> assigned(out.domain.size(), false);
  out.values.assign(out.domain.size(), 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t p = piece_index.at(L.mask(a) & ~L.mask(b));
      if (!assigned[p]) {
        assigned[p] = true;
        out.values[p] = f.value(a, b);
      } else {
        require(out.values[p] == f.value(a, b), Errc::NotWellDefined,
                "representatives of piece " +
                    set_notation(out.domain[p].mask, L.ji_poset().labels()) + " disagree");
      }
    }

  const FormAxioms axioms = check_form_axioms(f);
  if (axioms.distributivity) {
    std::map<std::uint32_t, std::size_t> seen;
    for (std::size_t i = 0; i < out.domain.size(); ++i) {
      auto [it, fresh] = seen.emplace(out.values[i], i);
      require(fresh, Errc::NotInjective,
              "pieces " + set_notation(out.domain[it->second].mask, L.ji_poset().labels()) +
                  " and " + set_notation(out.domain[i].mask, L.ji_poset().labels()) +
                  " share the value " + f.target().label(out.values[i]));
    }
    for (std::size_t i = 0; i < out.domain.size(); ++i)
      for (std::size_t j = i; j < out.domain.size(); ++j) {
        const std::size_t m = piece_index.at(out.domain[i].mask & out.domain[j].mask);
        require(f.target().meet(out.values[i], out.values[j]) == out.values[m],
                Errc::NotWellDefined, "gamma does not preserve meets");
      }
    out.verified_injective = true;
  }
  return out;
}

TransitionIso transition_iso(const LatticeForm& f, const LatticeForm& f_prime) {
  require(&f.source() == &f_prime.source(), Errc::ValidationError,
          "transition isomorphism needs forms on the same lattice");
  require(check_form_axioms(f).conley() && check_form_axioms(f_prime).conley(),
          Errc::AxiomsViolated, "both forms must be absorptive, distributive, and monotone");
  TransitionIso g;
  g.from = f.target_ptr();
  g.to = f_prime.target_ptr();
  const std::size_t n = f.source().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t x = f.value(a, b), y = f_prime.value(a, b);
      auto [it, fresh] = g.forward.emplace(x, y);
      require(it->second == y, Errc::ComputeError, "transition map not a function");
      auto [jt, fresh2] = g.inverse.emplace(y, x);
      require(jt->second == x, Errc::ComputeError, "transition map not injective");
    }
  // Meet-isomorphism on the images.
  for (const auto& [x1, y1] : g.forward)
    for (const auto& [x2, y2] : g.forward)
      require(g.forward.at(f.target().meet(x1, x2)) == f_prime.target().meet(y1, y2),
              Errc::ComputeError, "transition map does not preserve meets");
  return g;
}

ThetaMap induced_theta(const LatticeHom& h, const LatticeForm& form_on_source,
                       const LatticeForm& form_on_target) {
  require(&form_on_source.source() == &h.source() && &form_on_target.source() == &h.target(),
          Errc::ValidationError, "theta needs forms on the homomorphism endpoints");
  require(!h.is_anti(), Errc::ValidationError, "theta is induced by homomorphisms");
  const FormAxioms ax_target = check_form_axioms(form_on_target);
  require(ax_target.distributivity, Errc::AxiomsViolated,
          "the form on the target must be distributive");

  ThetaMap theta;
  theta.from = form_on_source.target_ptr();
  theta.to = form_on_target.target_ptr();
  const std::size_t n = h.source().size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t x = form_on_source.value(a, b);
      const std::uint32_t y = form_on_target.value(h.apply(a), h.apply(b));
      auto [it, fresh] = theta.table.emplace(x, y);
      require(it->second == y, Errc::ThetaIllDefined,
              "theta has conflicting values on " + form_on_source.target().label(x));
    }
  require(theta.apply(form_on_source.zero_value()) == form_on_target.zero_value() &&
              theta.apply(form_on_source.one_value()) == form_on_target.one_value(),
          Errc::ComputeError, "theta does not preserve the neutral elements");
  if (check_form_axioms(form_on_source).distributivity) {
    for (const auto& [x1, y1] : theta.table)
      for (const auto& [x2, y2] : theta.table)
        require(theta.apply(form_on_source.target().meet(x1, x2)) ==
                    form_on_target.target().meet(y1, y2),
                Errc::ComputeError, "theta does not preserve meets");
  }
  return theta;
}

LatticeForm pullback_form(const LatticeHom& h, const LatticeForm& f) {
  require(&f.source() == &h.target(), Errc::ValidationError,
          "pullback needs a form on the homomorphism target");
  const std::size_t n = h.source().size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = h.is_anti() ? f.value(h.apply(b), h.apply(a))
                                     : f.value(h.apply(a), h.apply(b));
  return LatticeForm(h.source(), f.target_ptr(), std::move(table));
}

Dualization dualize(const LatticeForm& f) {
  require(check_form_axioms(f).conley(), Errc::AxiomsViolated,
          "dualization needs an absorptive, distributive, monotone form");
  const auto& L = f.source();
  const std::size_t n = L.size();
  Dualization out;
  out.embedding.resize(n);
  out.dual.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    out.embedding[a] = f.value(a, L.bottom());
    out.dual[a] = f.value(L.top(), a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      require(f.value(a, b) == f.target().meet(out.embedding[a], out.dual[b]),
              Errc::ComputeError, "form does not factor as a ^ b*");
  return out;
}

SpectralRepresentation spectral_representation(const FiniteDistributiveLattice& lattice,
                                               const LatticeForm& f) {
  require(&f.source() == &lattice, Errc::ValidationError, "form/lattice mismatch");
  require(check_form_axioms(f).conley(), Errc::AxiomsViolated,
          "spectral representation needs an absorptive, distributive, monotone form");
  SpectralRepresentation out{&lattice, {}, lattice.ji_poset(), f.target_ptr()};
  const std::uint32_t zero = f.zero_value();
  for (const auto& ji : lattice.join_irreducibles()) {
    const std::uint32_t v = f.value(ji.element, ji.pred);
    require(v != zero, Errc::ComputeError, "spectral point is zero");
    out.points.emplace_back(ji.ji, v);
  }
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j)
      require(f.target().meet(out.points[i].second, out.points[j].second) == zero,
              Errc::ComputeError, "spectral points are not pairwise disjoint");
  return out;
}

std::vector<std::uint32_t> decompose_join(const FiniteDistributiveLattice& lattice,
                                          const LatticeForm& f, std::size_t a) {
  require(&f.source() == &lattice, Errc::ValidationError, "form/lattice mismatch");
  const FormAxioms axioms = check_form_axioms(f);
  require(axioms.additivity.has_value(), Errc::AdditivityNotApplicable,
          "form target carries no join");
  require(*axioms.additivity, Errc::AdditivityNotApplicable, "form is not additive");
  std::vector<std::uint32_t> out;
  std::uint32_t acc = f.zero_value();
  for (const auto& ji : lattice.join_irreducibles()) {
    if (!lattice.leq(ji.element, a)) continue;
    out.push_back(f.value(ji.element, ji.pred));
    acc = f.target().join(acc, out.back());
  }
  require(acc == f.value(a, lattice.bottom()), Errc::ComputeError,
          "join of the decomposition does not reproduce the element");
  return out;
}

}  // namespace latmorse
