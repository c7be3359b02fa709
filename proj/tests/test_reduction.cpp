#include <catch2/catch_amalgamated.hpp>

#include "latq/latq.hpp"
#include "support/oracles.hpp"

using namespace latq;
namespace oracle = latq::testing;

namespace {

WeightQuadruple constant_quadruple(const LatticePtr& lat, const Rat& c) {
  const auto w = WeightFunction::constant(lat, c);
  return WeightQuadruple(w, w, w, w);
}

// Set-minus hypothesis evaluated directly, for the complement-transform
// equivalence property.
bool setminus_hypothesis_holds(const WeightQuadruple& quad) {
  return check_setminus_lemma(quad).hypothesis.holds;
}

WeightQuadruple random_any_quadruple(const LatticePtr& lat, SplitMix64& rng) {
  auto random_weights = [&] {
    std::vector<Rat> v(lat->size());
    for (auto& x : v) x = Rat((long)rng.below(3), 1 + (long)rng.below(2));
    return WeightFunction(lat, std::move(v));
  };
  return WeightQuadruple(random_weights(), random_weights(), random_weights(), random_weights());
}

}  // namespace

TEST_CASE("extending through the embedding preserves q-polynomials", "[reduction]") {
  SECTION("divisor(12), all-ones over the whole lattice") {
    auto lat = divisor_lattice(12);
    const auto emb = birkhoff_embed(*lat);
    const auto w = WeightFunction::constant(lat, 1);
    const auto extended = extend_via_embedding(emb, w, Selection::all(*lat));
    const auto target = extended.carrier();
    CHECK(target->size() == 8);
    const auto pushed = q_weighted_polynomial(extended, Selection::all(*target));
    CHECK(pushed == QPolynomial({Rat(1), Rat(2), Rat(2), Rat(1)}));
    CHECK(pushed == q_weighted_polynomial(w, Selection::all(*lat)));
    // Exactly the six image subsets carry weight.
    int support = 0;
    for (int e = 0; e < target->size(); ++e)
      if (extended[e] != 0) ++support;
    CHECK(support == 6);
  }
  SECTION("empty selection extends to zero") {
    auto lat = divisor_lattice(12);
    const auto emb = birkhoff_embed(*lat);
    const auto extended = extend_via_embedding(emb, WeightFunction::constant(lat, 1), Selection());
    for (int e = 0; e < extended.lattice().size(); ++e) CHECK(extended[e] == 0);
  }
  SECTION("powerset extends to itself up to relabeling") {
    auto p2 = boolean_lattice(2);
    const auto emb = birkhoff_embed(*p2);
    SplitMix64 rng(8);
    std::vector<Rat> values(p2->size());
    for (auto& v : values) v = Rat((long)rng.below(5));
    const WeightFunction w(p2, values);
    const auto extended = extend_via_embedding(emb, w, Selection::all(*p2));
    const auto tc = boolean_carrier(extended.lattice());
    for (int a = 0; a < p2->size(); ++a)
      CHECK(extended[tc.element(emb.image_mask(a))] == w[a]);
  }
  SECTION("random instances, exact polynomial equality") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
      auto lat = oracle::random_chain_product(rng, 2, 4);
      const auto emb = birkhoff_embed(*lat);
      const auto target = boolean_lattice(emb.n());
      std::vector<Rat> values(lat->size());
      for (auto& v : values) v = Rat((long)rng.below(6), 1 + (long)rng.below(3));
      const WeightFunction w(lat, values);
      const auto s = oracle::random_selection(*lat, rng);
      const auto extended = extend_via_embedding(emb, w, s, target);
      CHECK(q_weighted_polynomial(extended, Selection::all(*target)) == q_weighted_polynomial(w, s));
    }
  }
}

TEST_CASE("interval restriction", "[reduction]") {
  auto p2 = boolean_lattice(2);
  const auto quad = reference_counterexample(p2);
  SECTION("restricting to the full interval is the identity") {
    const auto res = interval_restriction(quad, 0, 3);
    REQUIRE(res.carrier->size() == 4);
    for (int e = 0; e < 4; ++e) {
      const auto tc = boolean_carrier(*res.carrier);
      const auto bc = boolean_carrier(*p2);
      CHECK(res.quad.alpha[e] == quad.alpha[bc.element(tc.mask_of[e])]);
    }
  }
  SECTION("F = {1}, G = {1,2} shifts everything onto ground element 2") {
    const auto res = interval_restriction(quad, 1, 3);
    REQUIRE(res.carrier->size() == 2);
    CHECK(res.ground == std::vector<int>{2});
    // alpha'({}) = alpha({1}) = 0, alpha'({2}->new {1}) = alpha({1,2}) = 0
    CHECK(res.quad.alpha[0] == 0);
    CHECK(res.quad.alpha[1] == 0);
    CHECK(res.quad.beta[0] == 1);   // beta({1})
    CHECK(res.quad.beta[1] == 0);   // beta({1,2})
    CHECK(res.quad.gamma[1] == 1);  // gamma({1,2})
    CHECK(res.quad.delta[0] == 0);  // delta({1})
  }
  SECTION("F = G collapses to one point") {
    const auto res = interval_restriction(quad, 2, 2);
    REQUIRE(res.carrier->size() == 1);
    CHECK(res.quad.alpha[0] == 1);  // alpha({2})
    CHECK(res.quad.delta[0] == 1);  // delta({2})
  }
  SECTION("F must be inside G") {
    CHECK_THROWS_AS(interval_restriction(quad, 2, 1), PreconditionError);
    CHECK_THROWS_AS(interval_restriction(quad, 0, 8), PreconditionError);
  }
}

TEST_CASE("coefficient slices on the counterexample table", "[reduction]") {
  auto p2 = boolean_lattice(2);
  const auto quad = reference_counterexample(p2);
  SECTION("k = 1: only the slice (∅, {2}) contributes") {
    const auto res = coefficient_slice_check(quad, 1);
    CHECK(res.verdict.holds);
    CHECK(res.identity_holds);
    CHECK(res.lhs_total == 1);
    REQUIRE(res.slices.size() == 2);  // (∅,{1}) and (∅,{2})
    Rat nonzero = 0;
    for (const auto& s : res.slices)
      if (s.lhs != 0) {
        CHECK(s.f_mask == 0);
        CHECK(s.g_mask == 2);  // {2} is the second atom
        nonzero = s.lhs;
      }
    CHECK(nonzero == 1);
  }
  SECTION("k = 2: both sides sum to 2") {
    const auto res = coefficient_slice_check(quad, 2);
    CHECK(res.verdict.holds);
    CHECK(res.identity_holds);
    CHECK(res.lhs_total == 2);
    CHECK(res.rhs_total == 2);
  }
  SECTION("k = 2n with all-ones has the single slice F = G = [n]") {
    auto lat = boolean_lattice(2);
    const auto res = coefficient_slice_check(constant_quadruple(lat, 1), 4);
    CHECK(res.verdict.holds);
    CHECK(res.lhs_total == 1);
    CHECK(res.rhs_total == 1);
    REQUIRE(res.slices.size() == 1);
    CHECK(res.slices[0].f_mask == 3);
    CHECK(res.slices[0].g_mask == 3);
  }
  SECTION("the decomposition identity holds for arbitrary quadruples") {
    SplitMix64 rng(1234);
    auto p3 = boolean_lattice(3);
    for (int trial = 0; trial < 25; ++trial) {
      const auto quad_any = random_any_quadruple(p3, rng);
      for (int k = 0; k <= 6; ++k) CHECK(coefficient_slice_check(quad_any, k).identity_holds);
    }
  }
}

TEST_CASE("complement transform", "[reduction]") {
  auto p2 = boolean_lattice(2);
  const auto quad = reference_counterexample(p2);
  SECTION("applying it twice returns the original") {
    const auto twice = complement_transform(complement_transform(quad));
    for (int e = 0; e < p2->size(); ++e) {
      CHECK(twice.alpha[e] == quad.alpha[e]);
      CHECK(twice.beta[e] == quad.beta[e]);
      CHECK(twice.gamma[e] == quad.gamma[e]);
      CHECK(twice.delta[e] == quad.delta[e]);
    }
  }
  SECTION("constants are fixed points") {
    const auto c = constant_quadruple(p2, Rat(3, 7));
    const auto t = complement_transform(c);
    for (int e = 0; e < p2->size(); ++e) CHECK(t.beta[e] == Rat(3, 7));
  }
  SECTION("the table's beta row on complements") {
    const auto t = complement_transform(quad);
    CHECK(t.beta[p2->index_of("{}")] == 0);     // beta({1,2})
    CHECK(t.beta[p2->index_of("{1}")] == 1);    // beta({2})
    CHECK(t.beta[p2->index_of("{2}")] == 1);    // beta({1})
    CHECK(t.beta[p2->index_of("{1,2}")] == 1);  // beta({})
  }
  SECTION("set-minus hypothesis iff the transform satisfies the join/meet hypothesis") {
    SplitMix64 rng(77);
    int equivalences_true = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto q = random_any_quadruple(boolean_lattice(2), rng);
      const bool lhs = setminus_hypothesis_holds(q);
      const bool rhs = check_ad_hypothesis(complement_transform(q)).holds;
      CHECK(lhs == rhs);
      if (lhs) ++equivalences_true;
    }
    CHECK(equivalences_true > 0);  // both branches of the equivalence exercised
  }
}

TEST_CASE("diagonal construction", "[reduction]") {
  auto p2 = boolean_lattice(2);
  SECTION("on the counterexample table") {
    const auto [f, g] = diagonal_construction(reference_counterexample(p2));
    CHECK(f[p2->index_of("{}")] == 0);
    CHECK(f[p2->index_of("{1}")] == 0);
    CHECK(f[p2->index_of("{2}")] == 1);
    CHECK(f[p2->index_of("{1,2}")] == 0);
    CHECK(g[p2->index_of("{}")] == 1);
    CHECK(g[p2->index_of("{1}")] == 0);
    CHECK(g[p2->index_of("{2}")] == 0);
    CHECK(g[p2->index_of("{1,2}")] == 0);
    CHECK(weight_sum(f, Selection::all(*p2)) <= weight_sum(g, Selection::all(*p2)));
  }
  SECTION("all-ones maps to all-ones") {
    const auto [f, g] = diagonal_construction(constant_quadruple(p2, 1));
    for (int e = 0; e < p2->size(); ++e) {
      CHECK(f[e] == 1);
      CHECK(g[e] == 1);
    }
  }
  SECTION("zero alpha forces zero f") {
    const auto zero = WeightFunction::constant(p2, 0);
    const auto one = WeightFunction::constant(p2, 1);
    const auto [f, g] = diagonal_construction(WeightQuadruple(zero, one, one, one));
    for (int e = 0; e < p2->size(); ++e) CHECK(f[e] == 0);
  }
}

TEST_CASE("FKG quadruple assignment by direction", "[reduction]") {
  auto p2 = boolean_lattice(2);
  SECTION("all-ones works in either direction") {
    const auto one = WeightFunction::constant(p2, 1);
    for (Direction dir : {Direction::increasing, Direction::decreasing}) {
      const auto quad = fkg_quadruple(one, one, one, dir);
      CHECK(check_ad_hypothesis(quad).holds);
    }
  }
  SECTION("worked increasing instance") {
    const auto mu = WeightFunction::from_map(
        p2, {{"{}", Rat(1)}, {"{1}", Rat(1)}, {"{2}", Rat(1)}, {"{1,2}", Rat(2)}});
    const auto f = WeightFunction::from_map(
        p2, {{"{}", Rat(0)}, {"{1}", Rat(1)}, {"{2}", Rat(0)}, {"{1,2}", Rat(1)}});
    const auto quad = fkg_quadruple(mu, f, f, Direction::increasing);
    const std::vector<Rat> expected_alpha = {Rat(0), Rat(1), Rat(0), Rat(2)};
    for (int e = 0; e < 4; ++e) {
      CHECK(quad.alpha[e] == expected_alpha[e]);
      CHECK(quad.beta[e] == expected_alpha[e]);
      CHECK(quad.gamma[e] == expected_alpha[e]);  // fg·mu
      CHECK(quad.delta[e] == mu[e]);
    }
    CHECK(check_ad_hypothesis(quad).holds);
  }
  SECTION("printed decreasing assignment passes the pair scan") {
    const auto mu = WeightFunction::from_map(
        p2, {{"{}", Rat(1)}, {"{1}", Rat(1)}, {"{2}", Rat(1)}, {"{1,2}", Rat(2)}});
    const auto f = WeightFunction::from_map(
        p2, {{"{}", Rat(1)}, {"{1}", Rat(0)}, {"{2}", Rat(1)}, {"{1,2}", Rat(0)}});
    const auto quad = fkg_quadruple(mu, f, f, Direction::decreasing);
    for (int e = 0; e < 4; ++e) CHECK(quad.gamma[e] == mu[e]);  // gamma = mu as printed
    CHECK(check_ad_hypothesis(quad).holds);
  }
  SECTION("feeding the quadruple back reproduces the FKG dominance") {
    SplitMix64 rng(31);
    auto p3 = boolean_lattice(3);
    for (int trial = 0; trial < 10; ++trial) {
      const Direction dir = rng.below(2) ? Direction::increasing : Direction::decreasing;
      const auto mu = random_log_supermodular(p3, rng.next());
      const auto f = random_monotone(p3, dir, rng.next());
      const auto g = random_monotone(p3, dir, rng.next());
      const auto quad = fkg_quadruple(mu, f, g, dir);
      const auto via_quad = check_q4ft(quad, Selection::all(*p3), Selection::all(*p3));
      const auto via_fkg = check_fkg_q(mu, f, g, dir);
      CHECK(via_quad.verdict.holds);
      CHECK(via_fkg.verdict.holds);
      CHECK(via_quad.lhs == via_fkg.p_f * via_fkg.p_g);
      CHECK(via_quad.rhs == via_fkg.p_one * via_fkg.p_fg);
    }
  }
  SECTION("precondition violations throw") {
    const auto bad_mu = WeightFunction::from_map(
        p2, {{"{}", Rat(1)}, {"{1}", Rat(2)}, {"{2}", Rat(2)}, {"{1,2}", Rat(1)}});
    const auto one = WeightFunction::constant(p2, 1);
    CHECK_THROWS_AS(fkg_quadruple(bad_mu, one, one, Direction::increasing), PreconditionError);
    const auto inc = WeightFunction::from_map(
        p2, {{"{}", Rat(0)}, {"{1}", Rat(1)}, {"{2}", Rat(0)}, {"{1,2}", Rat(1)}});
    const auto mu = WeightFunction::constant(p2, 1);
    CHECK_THROWS_AS(fkg_quadruple(mu, inc, inc, Direction::decreasing), PreconditionError);
  }
}

TEST_CASE("hypothesis preservation, quantified", "[reduction][property]") {
  SplitMix64 rng(90210);
  int checked_restrictions = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 3;
    auto lat = boolean_lattice(n);
    const auto quad = trial % 2 ? random_ad_quadruple(lat, rng.next())
                                : random_fkg_ad_quadruple(lat, rng.next());
    REQUIRE(check_ad_hypothesis(quad).holds);

    const std::uint64_t full = (1ull << n) - 1;
    for (std::uint64_t g = 0; g <= full; ++g)
      for (std::uint64_t f = 0; f <= g; ++f) {
        if ((f | g) != g) continue;
        const auto res = interval_restriction(quad, f, g);
        REQUIRE(check_ad_hypothesis(res.quad).holds);
        ++checked_restrictions;
      }

    // The diagonal pair obeys f(A)f(B) <= g(B∖A)g(A∖B) under the hypothesis.
    const auto [df, dg] = diagonal_construction(quad);
    const auto bc = boolean_carrier(*lat);
    for (int a = 0; a < lat->size(); ++a)
      for (int b = 0; b < lat->size(); ++b) {
        const int bma = bc.element(bc.mask_of[b] & ~bc.mask_of[a]);
        const int amb = bc.element(bc.mask_of[a] & ~bc.mask_of[b]);
        REQUIRE(df[a] * df[b] <= dg[bma] * dg[amb]);
      }
    REQUIRE(weight_sum(df, Selection::all(*lat)) <= weight_sum(dg, Selection::all(*lat)));

    // A set-minus-hypothesis quadruple turns into a hypothesis-satisfying
    // one under the complement transform.
    const WeightQuadruple diag(df, df, dg, dg);
    REQUIRE(setminus_hypothesis_holds(diag));
    REQUIRE(check_ad_hypothesis(complement_transform(diag)).holds);
  }
  CHECK(checked_restrictions > 1000);
}

TEST_CASE("proof replay agrees with the direct route", "[reduction][property]") {
  SplitMix64 rng(60601);
  for (int trial = 0; trial < 10; ++trial) {
    auto lat = oracle::random_chain_product(rng, 2, 4);
    const auto quad = random_ad_quadruple(lat, rng.next());
    const auto x = oracle::random_selection(*lat, rng);
    const auto y = oracle::random_selection(*lat, rng);
    const auto res = replay_proof(quad, x, y);
    CHECK(res.routes_agree);
    CHECK(res.direct.verdict.holds);
    for (const auto& sc : res.per_coefficient) CHECK(sc.identity_holds);
  }
}
