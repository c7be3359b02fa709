#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latq/birkhoff.hpp"
#include "latq/boolean.hpp"
#include "latq/errors.hpp"
#include "latq/inequality.hpp"
#include "latq/lattice.hpp"
#include "latq/weights.hpp"

namespace latq {

// Pushes a weight function through the embedding: the result lives on
// the powerset target, equals w(x) on the image of each x in S, and is 0
// elsewhere. Rank preservation makes the q-polynomials of (w, S) and of
// the result (over the whole target) identical.
inline WeightFunction extend_via_embedding(const BirkhoffEmbedding& emb, const WeightFunction& w,
                                           const Selection& s, const LatticePtr& target) {
  const BooleanCarrier bc = boolean_carrier(*target);
  if (bc.ground_size != emb.n())
    throw ParamError("embedding target has the wrong ground-set size");
  std::vector<Rat> values(target->size(), Rat(0));
  for (int x : s.members) values[bc.element(emb.image_mask(x))] = w[x];
  return WeightFunction(target, std::move(values));
}

inline WeightFunction extend_via_embedding(const BirkhoffEmbedding& emb, const WeightFunction& w,
                                           const Selection& s) {
  return extend_via_embedding(emb, w, s, boolean_lattice(emb.n()));
}

struct RestrictedQuadruple {
  LatticePtr carrier;        // powerset over G∖F, ground set renamed 1..k
  std::vector<int> ground;   // original 1-based atom indices, ascending
  WeightQuadruple quad;
};

// Restriction to the interval [F, G]: new ground set G∖F, and
// α'(A) = α(A ∪ F) (β', γ', δ' analogously). Preserves the hypothesis.
inline RestrictedQuadruple interval_restriction(const WeightQuadruple& quad, std::uint64_t f_mask,
                                                std::uint64_t g_mask) {
  const BooleanCarrier bc = boolean_carrier(quad.lattice());
  if ((f_mask | g_mask) != g_mask)
    throw PreconditionError("interval restriction needs F to be a subset of G");
  if ((g_mask & ~bc.full_mask()) != 0)
    throw PreconditionError("G is not a subset of the ground set");

  std::vector<int> ground;
  for (int i = 0; i < bc.ground_size; ++i)
    if ((g_mask & ~f_mask) & (1ull << i)) ground.push_back(i + 1);
  const int k = (int)ground.size();

  LatticePtr target = boolean_lattice(k);
  const BooleanCarrier tc = boolean_carrier(*target);
  auto spread = [&](std::uint64_t small) {
    std::uint64_t big = f_mask;
    for (int t = 0; t < k; ++t)
      if (small & (1ull << t)) big |= 1ull << (ground[t] - 1);
    return big;
  };
  auto restrict_one = [&](const WeightFunction& w) {
    std::vector<Rat> values(target->size());
    for (int e = 0; e < target->size(); ++e) values[e] = w[bc.element(spread(tc.mask_of[e]))];
    return WeightFunction(target, std::move(values));
  };
  WeightQuadruple restricted(restrict_one(quad.alpha), restrict_one(quad.beta),
                             restrict_one(quad.gamma), restrict_one(quad.delta));
  return RestrictedQuadruple{target, std::move(ground), std::move(restricted)};
}

struct SliceEntry {
  std::uint64_t f_mask, g_mask;
  Rat lhs, rhs;  // Σ α(A)β(B) and Σ γ(C)δ(D) over the slice
  bool holds;
};

struct SliceCheckResult {
  Verdict verdict;      // coefficient-k inequality: lhs_total <= rhs_total
  Rat lhs_total, rhs_total;
  bool identity_holds;  // slice sums add up to the direct double sums
  std::vector<SliceEntry> slices;         // (F, G) with F ⊆ G and |F|+|G| = k
  long long skipped_not_nested = 0;       // F ⊄ G
  long long skipped_wrong_size = 0;       // |F|+|G| != k
};

// Decomposes the coefficient-k inequality by slices (F, G) = (A∩B, A∪B).
// Each slice reduces to the complement-sum inequality on the interval
// [F, G]; the decomposition identity itself holds for every quadruple.
//
// A pair (A, B) with |A|+|B| = k lands in the slice (A∩B, A∪B) with
// |A∩B| + |A∪B| = k, so only slices with |F|+|G| = k can contribute.
inline SliceCheckResult coefficient_slice_check(const WeightQuadruple& quad, int k) {
  const Lattice& lat = quad.lattice();
  const BooleanCarrier bc = boolean_carrier(lat);
  if (k < 0 || k > 2 * bc.ground_size)
    throw ParamError("coefficient index out of range");
  SliceCheckResult res;
  res.lhs_total = res.rhs_total = Rat(0);

  auto size_of = [&](int e) { return __builtin_popcountll(bc.mask_of[e]); };
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      if (size_of(a) + size_of(b) != k) continue;
      res.lhs_total += quad.alpha[a] * quad.beta[b];
      res.rhs_total += quad.gamma[a] * quad.delta[b];
    }

  Rat lhs_from_slices(0), rhs_from_slices(0);
  const std::uint64_t end = bc.full_mask();
  for (std::uint64_t f = 0;; ++f) {
    for (std::uint64_t g = 0;; ++g) {
      const int total = __builtin_popcountll(f) + __builtin_popcountll(g);
      if (total != k) {
        ++res.skipped_wrong_size;
      } else if ((f | g) != g) {
        ++res.skipped_not_nested;
      } else {
        const RestrictedQuadruple restricted = interval_restriction(quad, f, g);
        const ComplementSumResult slice = check_q4ft_stronger(restricted.quad);
        lhs_from_slices += slice.lhs;
        rhs_from_slices += slice.rhs;
        res.slices.push_back({f, g, slice.lhs, slice.rhs, slice.verdict.holds});
      }
      if (g == end) break;
    }
    if (f == end) break;
  }
  res.identity_holds = lhs_from_slices == res.lhs_total && rhs_from_slices == res.rhs_total;
  if (res.lhs_total > res.rhs_total)
    res.verdict = Verdict::fail({"coefficient", {"q^" + std::to_string(k)},
                                 rat_to_string(res.lhs_total), rat_to_string(res.rhs_total)});
  return res;
}

// (α, β', γ', δ) with β'(B) = β(Bᶜ) and γ'(C) = γ(Cᶜ). An involution on
// the (β, γ) pair; it exchanges the set-minus hypothesis with the
// join/meet hypothesis.
inline WeightQuadruple complement_transform(const WeightQuadruple& quad) {
  const BooleanCarrier bc = boolean_carrier(quad.lattice());
  auto flip = [&](const WeightFunction& w) {
    std::vector<Rat> values(quad.lattice().size());
    for (int e = 0; e < quad.lattice().size(); ++e) values[e] = w[bc.complement(e)];
    return WeightFunction(quad.carrier(), std::move(values));
  };
  return WeightQuadruple(quad.alpha, flip(quad.beta), flip(quad.gamma), quad.delta);
}

// f(A) = α(A)β(Aᶜ) and g(A) = γ(Aᶜ)δ(A): the diagonal pair used to
// reduce the complement-sum inequality to the set-minus lemma.
inline std::pair<WeightFunction, WeightFunction> diagonal_construction(const WeightQuadruple& quad) {
  const BooleanCarrier bc = boolean_carrier(quad.lattice());
  std::vector<Rat> f_values(quad.lattice().size()), g_values(quad.lattice().size());
  for (int a = 0; a < quad.lattice().size(); ++a) {
    const int ac = bc.complement(a);
    f_values[a] = quad.alpha[a] * quad.beta[ac];
    g_values[a] = quad.gamma[ac] * quad.delta[a];
  }
  return {WeightFunction(quad.carrier(), std::move(f_values)),
          WeightFunction(quad.carrier(), std::move(g_values))};
}

// The quadruple that turns an FKG instance into a four-functions
// instance: (fμ, gμ, ·, ·). The (γ, δ) assignment depends on the
// monotonicity direction: decreasing pairs push fg onto the meet side,
// increasing pairs onto the join side. Either way the conclusion is
// P_μ(f)P_μ(g) << P_μ(1)P_μ(fg).
inline WeightQuadruple fkg_quadruple(const WeightFunction& mu, const WeightFunction& f,
                                     const WeightFunction& g, Direction dir) {
  if (mu.carrier() != f.carrier() || mu.carrier() != g.carrier())
    throw ParamError("mu, f, g must share one carrier");
  const Verdict lsm = is_log_supermodular(mu);
  if (!lsm.holds)
    throw PreconditionError("mu is not log-supermodular; " + lsm.witness->describe());
  const Verdict f_mono = is_monotone(f, dir);
  if (!f_mono.holds)
    throw PreconditionError(std::string("f is not ") + direction_name(dir) + "; " +
                            f_mono.witness->describe());
  const Verdict g_mono = is_monotone(g, dir);
  if (!g_mono.holds)
    throw PreconditionError(std::string("g is not ") + direction_name(dir) + "; " +
                            g_mono.witness->describe());
  WeightFunction f_mu = multiply(f, mu);
  WeightFunction g_mu = multiply(g, mu);
  WeightFunction fg_mu = multiply(multiply(f, g), mu);
  if (dir == Direction::decreasing)
    return WeightQuadruple(std::move(f_mu), std::move(g_mu), mu, std::move(fg_mu));
  return WeightQuadruple(std::move(f_mu), std::move(g_mu), std::move(fg_mu), mu);
}

struct ProofReplayResult {
  QFourFunctionsResult direct;              // check_q4ft on the original carrier
  LatticePtr target;                        // powerset the quadruple was pushed to
  std::vector<SliceCheckResult> per_coefficient;  // k = 0 .. 2n
  bool routes_agree;                        // verdict and every coefficient match
};

// Runs the whole reduction pipeline — embed, extend, decompose into
// slices — and compares it coefficient by coefficient against the direct
// dominance check.
inline ProofReplayResult replay_proof(const WeightQuadruple& quad, const Selection& x,
                                      const Selection& y) {
  const Lattice& lat = quad.lattice();
  ProofReplayResult res;
  res.direct = check_q4ft(quad, x, y);

  const BirkhoffEmbedding emb = birkhoff_embed(lat);
  res.target = boolean_lattice(emb.n());
  const WeightQuadruple pushed(
      extend_via_embedding(emb, quad.alpha, x, res.target),
      extend_via_embedding(emb, quad.beta, y, res.target),
      extend_via_embedding(emb, quad.gamma, family_join(lat, x, y), res.target),
      extend_via_embedding(emb, quad.delta, family_meet(lat, x, y), res.target));

  res.routes_agree = true;
  bool all_hold = true;
  for (int k = 0; k <= 2 * emb.n(); ++k) {
    res.per_coefficient.push_back(coefficient_slice_check(pushed, k));
    const SliceCheckResult& sc = res.per_coefficient.back();
    all_hold = all_hold && sc.verdict.holds;
    if (sc.lhs_total != res.direct.lhs.coeff(k) || sc.rhs_total != res.direct.rhs.coeff(k))
      res.routes_agree = false;
  }
  if (all_hold != res.direct.verdict.holds) res.routes_agree = false;
  return res;
}

}  // namespace latq
