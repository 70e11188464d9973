#include "latmorse/form.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace latmorse;

namespace {

LatticeForm constant_zero_form(const FiniteDistributiveLattice& l, SemilatticePtr target,
                               std::uint32_t zero) {
  std::vector<std::uint32_t> table(l.size() * l.size(), zero);
  return LatticeForm(l, std::move(target), std::move(table));
}

/// Prop-style check of the basic consequences of distributivity:
/// slotwise monotonicity, bounds, degenerate pairs, and (for monotone
/// forms) the kernel characterization.
void check_extraprop(const LatticeForm& f) {
  const auto& L = f.source();
  const auto& I = f.target();
  const std::uint32_t zero = f.zero_value();
  const std::uint32_t one = f.one_value();
  for (std::size_t a = 0; a < L.size(); ++a) {
    CHECK(f.value(L.bottom(), a) == zero);
    CHECK(f.value(a, L.top()) == zero);
    for (std::size_t b = 0; b < L.size(); ++b) {
      CHECK(I.leq(zero, f.value(a, b)));
      CHECK(I.leq(f.value(a, b), one));
      CHECK((f.value(a, b) == zero) == L.leq(a, b));
      for (std::size_t c = 0; c < L.size(); ++c)
        for (std::size_t d = 0; d < L.size(); ++d)
          if (L.leq(a, c) && L.leq(d, b)) CHECK(I.leq(f.value(a, b), f.value(c, d)));
    }
  }
}

}  // namespace

TEST_CASE("canonical form: fixture values") {
  auto chain = fixtures::fix_c3();
  auto f = canonical_conley_form(chain);
  for (std::size_t a = 0; a < chain.size(); ++a)
    CHECK(f.target().mask_of(f.value(a, a)).none());

  // C(1, a) = {1}: indices 0 = {}, 1 = {a}, 2 = {a,1}.
  auto one_idx = *chain.ji_poset().index_of("1");
  CHECK(f.target().mask_of(f.value(2, 1)) == make_bitset(2, {one_idx}));

  auto diamond = fixtures::fix_m2();
  auto g = canonical_conley_form(diamond);
  auto x_idx = *diamond.ji_poset().index_of("x");
  auto x_elem = diamond.index_of(make_bitset(2, {x_idx}));
  auto y_elem = diamond.index_of(make_bitset(2, {*diamond.ji_poset().index_of("y")}));
  CHECK(g.target().mask_of(g.value(x_elem, y_elem)) == make_bitset(2, {x_idx}));
}

TEST_CASE("canonical form passes the Conley axioms on fixtures") {
  for (auto l : {fixtures::fix_c3(), fixtures::fix_m2()}) {
    auto ax = check_form_axioms(canonical_conley_form(l));
    CHECK(ax.absorption);
    CHECK(ax.distributivity);
    CHECK(ax.monotonicity);
    CHECK(ax.exchange);
    CHECK_FALSE(ax.additivity.has_value());  // convexity target has no join
  }
}

TEST_CASE("constant form: absorptive but not monotone") {
  auto chain = fixtures::fix_c3();
  auto canonical = canonical_conley_form(chain);
  auto f = constant_zero_form(chain, canonical.target_ptr(), canonical.zero_value());
  auto ax = check_form_axioms(f);
  CHECK(ax.absorption);
  CHECK(ax.distributivity);  // meet of the zero value with itself
  CHECK_FALSE(ax.monotonicity);
}

TEST_CASE("set difference on a Boolean algebra satisfies everything incl. additivity") {
  auto diamond = fixtures::fix_m2();
  auto f = set_difference_form(diamond);
  auto ax = check_form_axioms(f);
  CHECK(ax.absorption);
  CHECK(ax.distributivity);
  CHECK(ax.monotonicity);
  CHECK(ax.exchange);
  REQUIRE(ax.additivity.has_value());
  CHECK(*ax.additivity);
}

TEST_CASE("extraprop consequences on fixture forms") {
  for (auto l : {fixtures::fix_c3(), fixtures::fix_m2()}) {
    check_extraprop(canonical_conley_form(l));
    check_extraprop(set_difference_form(l));
  }
}

TEST_CASE("exchange follows from distributivity on random lattices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> labels;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) covers.emplace_back(labels[i], labels[j]);
    auto l = downset_lattice(poset_from_cover_pairs(labels, covers));
    auto ax = check_form_axioms(canonical_conley_form(l));
    CHECK(ax.distributivity);
    CHECK(ax.exchange);
  }
}

TEST_CASE("gamma of the canonical form is the identity injection") {
  for (auto l : {fixtures::fix_c3(), fixtures::fix_m2()}) {
    auto f = canonical_conley_form(l);
    auto gamma = gamma_from_form(f);
    CHECK(gamma.verified_injective);
    for (std::size_t i = 0; i < gamma.domain.size(); ++i)
      CHECK(f.target().mask_of(gamma.values[i]) == gamma.domain[i].mask);
  }
}

TEST_CASE("gamma rejects the constant form") {
  auto chain = fixtures::fix_c3();
  auto canonical = canonical_conley_form(chain);
  auto f = constant_zero_form(chain, canonical.target_ptr(), canonical.zero_value());
  CHECK_THROWS_AS(gamma_from_form(f), Error);
  try {
    gamma_from_form(f);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInjective);
  }
}

TEST_CASE("transition iso: identity and canonical vs set difference") {
  auto chain = fixtures::fix_c3();
  auto f = canonical_conley_form(chain);

  SUBCASE("f against itself") {
    auto g = transition_iso(f, f);
    for (const auto& [from, to] : g.forward) CHECK(from == to);
  }

  SUBCASE("set-difference restriction against the canonical form") {
    auto fb = set_difference_form(chain);
    auto g = transition_iso(fb, f);
    // identity on the common image: the underlying subsets agree
    for (const auto& [from, to] : g.forward)
      CHECK(fb.target().mask_of(from) == f.target().mask_of(to));
    // f = g o fb pointwise
    for (std::size_t a = 0; a < chain.size(); ++a)
      for (std::size_t b = 0; b < chain.size(); ++b)
        CHECK(g.apply(fb.value(a, b)) == f.value(a, b));
  }

  SUBCASE("axiom check is enforced") {
    auto broken = constant_zero_form(chain, f.target_ptr(), f.zero_value());
    CHECK_THROWS_AS(transition_iso(broken, f), Error);
  }
}

TEST_CASE("induced theta") {
  auto chain = fixtures::fix_c3();
  auto f = canonical_conley_form(chain);

  SUBCASE("identity homomorphism gives the identity") {
    auto theta = induced_theta(LatticeHom::identity(chain), f, f);
    for (const auto& [from, to] : theta.table) CHECK(from == to);
  }

  SUBCASE("collapsing the chain merges the two upper pieces") {
    auto two = downset_lattice(poset_from_cover_pairs({"1"}, {}));
    auto h = LatticeHom::hom(chain, two, {0, 1, 1});
    auto f2 = canonical_conley_form(two);
    auto theta = induced_theta(h, f, f2);
    // pieces of the chain: {}, {a}, {1}, {a,1}
    auto piece = [&](std::initializer_list<std::size_t> bits) {
      return *f.target().index_of_mask(make_bitset(2, bits));
    };
    const std::uint32_t nonzero = f2.one_value();
    CHECK(theta.apply(piece({0})) == nonzero);     // {a}
    CHECK(theta.apply(piece({0, 1})) == nonzero);  // {a,1}
    CHECK(theta.apply(piece({1})) == f2.zero_value());
    CHECK(theta.apply(f.zero_value()) == f2.zero_value());
  }

  SUBCASE("a form that conflates pieces cannot induce theta") {
    auto broken = constant_zero_form(chain, f.target_ptr(), f.zero_value());
    CHECK_THROWS_AS(induced_theta(LatticeHom::identity(chain), broken, f), Error);
    try {
      induced_theta(LatticeHom::identity(chain), broken, f);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ThetaIllDefined);
    }
  }
}

TEST_CASE("pullback along identity and along the Boolean complement") {
  auto diamond = fixtures::fix_m2();
  auto f = set_difference_form(diamond);

  SUBCASE("identity") {
    auto back = pullback_form(LatticeHom::identity(diamond), f);
    for (std::size_t a = 0; a < diamond.size(); ++a)
      for (std::size_t b = 0; b < diamond.size(); ++b) CHECK(back.value(a, b) == f.value(a, b));
  }

  SUBCASE("complement anti-isomorphism recovers the same form") {
    // On Set({x,y}) the complement is an anti-isomorphism and
    // (h^. f)(a,b) = b^c \ a^c = a \ b.
    std::vector<std::size_t> table(diamond.size());
    for (std::size_t e = 0; e < diamond.size(); ++e)
      table[e] = diamond.index_of(~diamond.mask(e));
    auto h = LatticeHom::anti_hom(diamond, diamond, table);
    auto back = pullback_form(h, f);
    for (std::size_t a = 0; a < diamond.size(); ++a)
      for (std::size_t b = 0; b < diamond.size(); ++b) CHECK(back.value(a, b) == f.value(a, b));
    auto ax = check_form_axioms(back);
    CHECK(ax.conley());
  }
}

TEST_CASE("dualize bounds and factorization") {
  auto chain = fixtures::fix_c3();
  auto f = canonical_conley_form(chain);
  auto d = dualize(f);
  CHECK(d.dual[chain.bottom()] == f.one_value());
  CHECK(d.dual[chain.top()] == f.zero_value());
  for (std::size_t a = 0; a < chain.size(); ++a)
    CHECK(d.embedding[a] == f.value(a, chain.bottom()));
}

TEST_CASE("spectral representation on the fixtures") {
  auto chain = fixtures::fix_c3();
  auto f = canonical_conley_form(chain);
  auto spec = spectral_representation(chain, f);
  REQUIRE(spec.points.size() == 2);
  // convex singletons {a} < {1}
  CHECK(f.target().mask_of(spec.points[0].second).count() == 1);
  CHECK(f.target().mask_of(spec.points[1].second).count() == 1);
  CHECK(spec.order.leq(spec.points[0].first, spec.points[1].first));

  auto diamond = fixtures::fix_m2();
  auto spec2 = spectral_representation(diamond, canonical_conley_form(diamond));
  REQUIRE(spec2.points.size() == 2);
  CHECK_FALSE(spec2.order.leq(0, 1));
  CHECK_FALSE(spec2.order.leq(1, 0));
}

TEST_CASE("join decomposition") {
  auto diamond = fixtures::fix_m2();
  auto f = set_difference_form(diamond);

  CHECK(decompose_join(diamond, f, diamond.bottom()).empty());

  auto parts = decompose_join(diamond, f, diamond.top());
  REQUIRE(parts.size() == 2);
  Bitset acc(2);
  for (auto v : parts) acc |= f.target().mask_of(v);
  CHECK(acc.count() == 2);  // {x} and {y}

  // the canonical form has no join on its target
  auto chain = fixtures::fix_c3();
  auto fc = canonical_conley_form(chain);
  CHECK_THROWS_AS(decompose_join(chain, fc, chain.top()), Error);
}
