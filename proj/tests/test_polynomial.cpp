#include <catch2/catch_amalgamated.hpp>

#include "latq/latq.hpp"
#include "support/oracles.hpp"

using namespace latq;
namespace oracle = latq::testing;

TEST_CASE("rational parsing and canonical printing", "[rational]") {
  CHECK(rat_to_string(parse_rational("1/2")) == "1/2");
  CHECK(rat_to_string(parse_rational("2/4")) == "1/2");
  CHECK(rat_to_string(parse_rational("4/2")) == "2");
  CHECK(rat_to_string(parse_rational("0")) == "0");
  CHECK(rat_to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(parse_rational("7") == Rat(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParamError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParamError);
  CHECK_THROWS_AS(parse_rational("abc"), ParamError);
  CHECK_THROWS_AS(parse_rational(""), ParamError);
}

TEST_CASE("polynomial arithmetic and trimming", "[polynomial]") {
  const QPolynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.to_string() == "0");
  CHECK(QPolynomial({Rat(1), Rat(0), Rat(0)}).degree() == 0);

  const QPolynomial p({Rat(1), Rat(2)});        // 1 + 2q
  const QPolynomial r({Rat(0), Rat(1), Rat(1)}); // q + q^2
  CHECK((p + r).to_string() == "1 3 1");
  CHECK((p * r).to_string() == "0 1 3 2");
  CHECK((p - p).is_zero());
  CHECK(p * zero == zero);
  CHECK(p.eval(Rat(1)) == 3);
  CHECK(p.eval(Rat(1, 2)) == 2);
  CHECK(r.eval(Rat(2)) == 6);
}

TEST_CASE("q-weighted polynomials", "[polynomial]") {
  auto p2 = boolean_lattice(2);
  SECTION("all-ones over the whole powerset counts subsets by size") {
    const auto poly = q_weighted_polynomial(WeightFunction::constant(p2, 1), Selection::all(*p2));
    CHECK(poly == QPolynomial({Rat(1), Rat(2), Rat(1)}));
  }
  SECTION("the counterexample table's alpha contributes a single q") {
    const auto quad = reference_counterexample(p2);
    CHECK(q_weighted_polynomial(quad.alpha, Selection::all(*p2)) == QPolynomial({Rat(0), Rat(1)}));
  }
  SECTION("empty selection gives the zero polynomial") {
    CHECK(q_weighted_polynomial(WeightFunction::constant(p2, 1), Selection()).is_zero());
  }
  SECTION("additive over disjoint selections") {
    SplitMix64 rng(7);
    auto lat = divisor_lattice(36);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rat> values(lat->size());
      for (auto& v : values) v = Rat((long)rng.below(8), 1 + (long)rng.below(3));
      const WeightFunction w(lat, values);
      std::vector<int> left, right;
      for (int i = 0; i < lat->size(); ++i) (rng.below(2) ? left : right).push_back(i);
      const auto whole = q_weighted_polynomial(w, Selection::all(*lat));
      CHECK(q_weighted_polynomial(w, Selection(left)) + q_weighted_polynomial(w, Selection(right)) ==
            whole);
    }
  }
}

TEST_CASE("coefficient dominance", "[polynomial]") {
  const QPolynomial p({Rat(0), Rat(1), Rat(2)});          // q + 2q^2
  const QPolynomial r({Rat(0), Rat(1), Rat(2), Rat(1)});  // q + 2q^2 + q^3
  CHECK(poly_dominates(p, r).holds);
  CHECK(poly_dominates(p, p).holds);  // reflexive

  const auto fail = poly_dominates(QPolynomial({Rat(1), Rat(1)}), QPolynomial({Rat(0), Rat(1)}));
  REQUIRE_FALSE(fail.holds);
  CHECK(fail.witness->where == std::vector<std::string>{"q^0"});
  CHECK(fail.witness->lhs == "1");
  CHECK(fail.witness->rhs == "0");
}

TEST_CASE("dominance is a partial order", "[polynomial][property]") {
  SplitMix64 rng(99);
  auto random_poly = [&] {
    std::vector<Rat> coeffs(rng.below(5));
    for (auto& c : coeffs) c = Rat((long)rng.below(7) - 3, 1 + (long)rng.below(2));
    return QPolynomial(std::move(coeffs));
  };
  auto random_nonneg = [&] {
    std::vector<Rat> coeffs(rng.below(5));
    for (auto& c : coeffs) c = Rat((long)rng.below(4), 1 + (long)rng.below(2));
    return QPolynomial(std::move(coeffs));
  };
  int premises_hit = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const QPolynomial p = random_poly();
    const QPolynomial r = rng.below(2) ? p + random_nonneg() : random_poly();
    const QPolynomial s = rng.below(2) ? r + random_nonneg() : random_poly();
    CHECK(poly_dominates(p, p).holds);
    if (poly_dominates(p, r).holds && poly_dominates(r, p).holds) CHECK(p == r);
    if (poly_dominates(p, r).holds && poly_dominates(r, s).holds) {
      ++premises_hit;
      CHECK(poly_dominates(p, s).holds);
    }
  }
  CHECK(premises_hit > 20);  // the transitivity premise must actually fire
}

TEST_CASE("weight function validation", "[weights]") {
  auto p1 = boolean_lattice(1);
  CHECK_THROWS_AS(WeightFunction(p1, {Rat(1)}), ParamError);            // missing value
  CHECK_THROWS_AS(WeightFunction(p1, {Rat(1), Rat(-1)}), ParamError);   // negative
  CHECK_THROWS_AS(WeightFunction::from_map(p1, {{"{}", Rat(1)}}), ParamError);
  CHECK_THROWS_AS(WeightFunction::from_map(p1, {{"{}", Rat(1)}, {"{1}", Rat(1)}, {"zzz", Rat(1)}}),
                  ParamError);
  const auto w = WeightFunction::from_map(p1, {{"{}", Rat(1, 3)}, {"{1}", Rat(2)}});
  CHECK(w[p1->index_of("{}")] == Rat(1, 3));

  auto other = boolean_lattice(1);
  CHECK_THROWS_AS(WeightQuadruple(w, w, w, WeightFunction::constant(other, 1)), ParamError);
}

TEST_CASE("family join and meet are deduplicated sets", "[weights]") {
  auto p2 = boolean_lattice(2);
  const Selection singletons({p2->index_of("{1}"), p2->index_of("{2}")});
  const auto joined = family_join(*p2, singletons, singletons);
  CHECK(joined.members == std::vector<int>{p2->index_of("{1}"), p2->index_of("{2}"), p2->index_of("{1,2}")});
  const auto met = family_meet(*p2, singletons, singletons);
  CHECK(met.members == std::vector<int>{p2->index_of("{}"), p2->index_of("{1}"), p2->index_of("{2}")});
}
