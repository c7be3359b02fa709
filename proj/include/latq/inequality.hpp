#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latq/boolean.hpp"
#include "latq/errors.hpp"
#include "latq/lattice.hpp"
#include "latq/polynomial.hpp"
#include "latq/rational.hpp"
#include "latq/verdict.hpp"
#include "latq/weights.hpp"

namespace latq {

// α(x)β(y) <= γ(x∨y)δ(x∧y) over all ordered pairs, including x = y.
inline Verdict check_ad_hypothesis(const WeightQuadruple& quad) {
  const Lattice& lat = quad.lattice();
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y) {
      const Rat lhs = quad.alpha[x] * quad.beta[y];
      const Rat rhs = quad.gamma[lat.join(x, y)] * quad.delta[lat.meet(x, y)];
      if (lhs > rhs)
        return Verdict::fail({"ad-hypothesis", {lat.id(x), lat.id(y)}, rat_to_string(lhs), rat_to_string(rhs)});
    }
  return Verdict::ok();
}

struct FourFunctionsResult {
  Verdict verdict;
  Rat alpha_sum, beta_sum, gamma_sum, delta_sum;
  Selection join_xy, meet_xy;
};

// α(X)β(Y) <= γ(X∨Y)δ(X∧Y) with the families combined as sets.
inline FourFunctionsResult check_4ft_conclusion(const WeightQuadruple& quad, const Selection& x,
                                                const Selection& y) {
  const Lattice& lat = quad.lattice();
  FourFunctionsResult res;
  res.join_xy = family_join(lat, x, y);
  res.meet_xy = family_meet(lat, x, y);
  res.alpha_sum = weight_sum(quad.alpha, x);
  res.beta_sum = weight_sum(quad.beta, y);
  res.gamma_sum = weight_sum(quad.gamma, res.join_xy);
  res.delta_sum = weight_sum(quad.delta, res.meet_xy);
  const Rat lhs = res.alpha_sum * res.beta_sum;
  const Rat rhs = res.gamma_sum * res.delta_sum;
  if (lhs > rhs)
    res.verdict = Verdict::fail({"family-inequality", {}, rat_to_string(lhs), rat_to_string(rhs)});
  res.verdict.vacuous = x.empty() || y.empty();
  return res;
}

// Σ_{x∈S} w(x)·q^{r(x)}: coefficient k collects the weight of the
// rank-k elements of the selection.
inline QPolynomial q_weighted_polynomial(const WeightFunction& w, const Selection& s) {
  QPolynomial poly;
  for (int i : s.members) poly.add_term(w.lattice().rank(i), w[i]);
  return poly;
}

struct QFourFunctionsResult {
  Verdict verdict;
  QPolynomial lhs, rhs;
};

// Coefficient-dominance form on a distributive carrier:
//   P_α(X)·P_β(Y) << P_γ(X∨Y)·P_δ(X∧Y)
// where P_w(S) = Σ_{x∈S} w(x) q^{r(x)}. Evaluating both sides at q = 1
// recovers the plain family inequality.
inline QFourFunctionsResult check_q4ft(const WeightQuadruple& quad, const Selection& x,
                                       const Selection& y) {
  const Lattice& lat = quad.lattice();
  if (!lat.distributive())
    throw NotDistributiveError("the dominance form needs a distributive carrier");
  QFourFunctionsResult res;
  res.lhs = q_weighted_polynomial(quad.alpha, x) * q_weighted_polynomial(quad.beta, y);
  res.rhs = q_weighted_polynomial(quad.gamma, family_join(lat, x, y)) *
            q_weighted_polynomial(quad.delta, family_meet(lat, x, y));
  res.verdict = poly_dominates(res.lhs, res.rhs);
  res.verdict.vacuous = x.empty() || y.empty();
  return res;
}

struct ComplementSumResult {
  Verdict verdict;
  Rat lhs, rhs;
};

// Σ_A α(A)β(Aᶜ) <= Σ_C γ(C)δ(Cᶜ) on a powerset carrier.
inline ComplementSumResult check_q4ft_stronger(const WeightQuadruple& quad) {
  const BooleanCarrier bc = boolean_carrier(quad.lattice());
  ComplementSumResult res{Verdict::ok(), Rat(0), Rat(0)};
  for (int a = 0; a < quad.lattice().size(); ++a) {
    res.lhs += quad.alpha[a] * quad.beta[bc.complement(a)];
    res.rhs += quad.gamma[a] * quad.delta[bc.complement(a)];
  }
  if (res.lhs > res.rhs)
    res.verdict = Verdict::fail({"complement-sum", {}, rat_to_string(res.lhs), rat_to_string(res.rhs)});
  return res;
}

struct SetminusResult {
  Verdict hypothesis;  // α(A)β(B) <= γ(B∖A)δ(A∖B) over all ordered pairs
  Verdict conclusion;  // α(P)β(P) <= γ(P)δ(P) over the whole powerset
  Rat alpha_total, beta_total, gamma_total, delta_total;
};

// Both parts of the set-minus variant, reported independently (the lemma
// asserts hypothesis ⇒ conclusion).
inline SetminusResult check_setminus_lemma(const WeightQuadruple& quad) {
  const Lattice& lat = quad.lattice();
  const BooleanCarrier bc = boolean_carrier(lat);
  SetminusResult res;
  for (int a = 0; a < lat.size() && res.hypothesis.holds; ++a)
    for (int b = 0; b < lat.size(); ++b) {
      const Rat lhs = quad.alpha[a] * quad.beta[b];
      const int b_minus_a = bc.element(bc.mask_of[b] & ~bc.mask_of[a]);
      const int a_minus_b = bc.element(bc.mask_of[a] & ~bc.mask_of[b]);
      const Rat rhs = quad.gamma[b_minus_a] * quad.delta[a_minus_b];
      if (lhs > rhs) {
        res.hypothesis =
            Verdict::fail({"setminus-hypothesis", {lat.id(a), lat.id(b)}, rat_to_string(lhs), rat_to_string(rhs)});
        break;
      }
    }
  const Selection everything = Selection::all(lat);
  res.alpha_total = weight_sum(quad.alpha, everything);
  res.beta_total = weight_sum(quad.beta, everything);
  res.gamma_total = weight_sum(quad.gamma, everything);
  res.delta_total = weight_sum(quad.delta, everything);
  const Rat lhs = res.alpha_total * res.beta_total;
  const Rat rhs = res.gamma_total * res.delta_total;
  if (lhs > rhs)
    res.conclusion = Verdict::fail({"setminus-conclusion", {}, rat_to_string(lhs), rat_to_string(rhs)});
  return res;
}

// μ(x)μ(y) <= μ(x∨y)μ(x∧y) over all ordered pairs.
inline Verdict is_log_supermodular(const WeightFunction& mu) {
  const Lattice& lat = mu.lattice();
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y) {
      const Rat lhs = mu[x] * mu[y];
      const Rat rhs = mu[lat.join(x, y)] * mu[lat.meet(x, y)];
      if (lhs > rhs)
        return Verdict::fail({"log-supermodularity", {lat.id(x), lat.id(y)}, rat_to_string(lhs), rat_to_string(rhs)});
    }
  return Verdict::ok();
}

enum class Direction { increasing, decreasing };

inline const char* direction_name(Direction d) {
  return d == Direction::increasing ? "increasing" : "decreasing";
}

// increasing: f(x) <= f(y) whenever x <= y; decreasing: the reverse.
inline Verdict is_monotone(const WeightFunction& f, Direction dir) {
  const Lattice& lat = f.lattice();
  for (int x = 0; x < lat.size(); ++x)
    for (int y = 0; y < lat.size(); ++y) {
      if (!lat.lt(x, y)) continue;
      const Rat& lo = dir == Direction::increasing ? f[x] : f[y];
      const Rat& hi = dir == Direction::increasing ? f[y] : f[x];
      if (lo > hi)
        return Verdict::fail({direction_name(dir), {lat.id(x), lat.id(y)}, rat_to_string(f[x]), rat_to_string(f[y])});
    }
  return Verdict::ok();
}

struct FkgResult {
  Verdict verdict;
  QPolynomial p_f, p_g, p_one, p_fg;  // P_μ(f;q), P_μ(g;q), P_μ(1;q), P_μ(fg;q)
  Direction direction;                // direction actually used
};

// q-analogue of the FKG inequality: P_μ(f)·P_μ(g) << P_μ(1)·P_μ(fg) for
// log-supermodular μ and f, g monotone in a common direction. Constants
// count as monotone both ways. With `required` unset the direction is
// auto-detected; mixed strict directions are rejected.
inline FkgResult check_fkg_q(const WeightFunction& mu, const WeightFunction& f,
                             const WeightFunction& g,
                             std::optional<Direction> required = std::nullopt) {
  if (mu.carrier() != f.carrier() || mu.carrier() != g.carrier())
    throw ParamError("mu, f, g must share one carrier");
  const Lattice& lat = mu.lattice();
  if (!lat.distributive())
    throw NotDistributiveError("the FKG inequality needs a distributive carrier");

  const Verdict lsm = is_log_supermodular(mu);
  if (!lsm.holds)
    throw PreconditionError("mu is not log-supermodular; " + lsm.witness->describe());

  auto direction_ok = [&](const WeightFunction& w, Direction d, const char* name) {
    const Verdict v = is_monotone(w, d);
    if (required && *required == d && !v.holds)
      throw PreconditionError(std::string(name) + " is not " + direction_name(d) + "; " +
                              v.witness->describe());
    return v.holds;
  };
  const bool f_inc = direction_ok(f, Direction::increasing, "f");
  const bool f_dec = direction_ok(f, Direction::decreasing, "f");
  const bool g_inc = direction_ok(g, Direction::increasing, "g");
  const bool g_dec = direction_ok(g, Direction::decreasing, "g");
  if (!f_inc && !f_dec) {
    const Verdict v = is_monotone(f, Direction::increasing);
    throw PreconditionError("f is neither increasing nor decreasing; " + v.witness->describe());
  }
  if (!g_inc && !g_dec) {
    const Verdict v = is_monotone(g, Direction::increasing);
    throw PreconditionError("g is neither increasing nor decreasing; " + v.witness->describe());
  }

  Direction dir;
  if (required) {
    dir = *required;
  } else if (f_inc && g_inc) {
    dir = Direction::increasing;
  } else if (f_dec && g_dec) {
    dir = Direction::decreasing;
  } else {
    throw PreconditionError("f and g have mixed monotonicity directions");
  }

  FkgResult res;
  res.direction = dir;
  const Selection everything = Selection::all(lat);
  res.p_f = q_weighted_polynomial(multiply(f, mu), everything);
  res.p_g = q_weighted_polynomial(multiply(g, mu), everything);
  res.p_one = q_weighted_polynomial(mu, everything);
  res.p_fg = q_weighted_polynomial(multiply(multiply(f, g), mu), everything);
  res.verdict = poly_dominates(res.p_f * res.p_g, res.p_one * res.p_fg);
  return res;
}

}  // namespace latq
