#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latq/boolean.hpp"
#include "latq/errors.hpp"
#include "latq/inequality.hpp"
#include "latq/io.hpp"
#include "latq/lattice.hpp"
#include "latq/prng.hpp"
#include "latq/reduction.hpp"
#include "latq/weights.hpp"

namespace latq {

// Symmetrized pairwise inequality over unordered pairs {A, B} (A = B
// included): α(A)β(B) + α(B)β(A) <= γ(A)δ(B) + γ(B)δ(A).
inline Verdict check_conjecture9(const WeightQuadruple& quad) {
  const Lattice& lat = quad.lattice();
  for (int a = 0; a < lat.size(); ++a)
    for (int b = a; b < lat.size(); ++b) {
      const Rat lhs = quad.alpha[a] * quad.beta[b] + quad.alpha[b] * quad.beta[a];
      const Rat rhs = quad.gamma[a] * quad.delta[b] + quad.gamma[b] * quad.delta[a];
      if (lhs > rhs)
        return Verdict::fail(
            {"pairwise-sum", {lat.id(a), lat.id(b)}, rat_to_string(lhs), rat_to_string(rhs)});
    }
  return Verdict::ok();
}

struct SearchConfig {
  enum class Mode { exhaustive, random };

  int n = 2;
  std::vector<Rat> value_grid = {Rat(0), Rat(1)};
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;        // random mode only
  std::uint64_t limit = 1 << 20; // max candidates examined
};

struct Counterexample {
  std::uint64_t candidate_index;  // exhaustive: lexicographic rank; random: sample number
  WeightQuadruple quad;
  Verdict hypothesis;   // holds
  Verdict conjecture;   // fails, with witness
};

struct SearchOutcome {
  LatticePtr carrier;
  std::uint64_t examined = 0;
  std::vector<Counterexample> found;
};

namespace detail {

// Emission gate: rebuild the candidate from its serialized text and
// re-run both checks through the standard evaluators. A disagreement
// with the fast scan is an internal bug, never a silent emission.
inline Counterexample recheck_candidate(const LatticePtr& lat, std::uint64_t index,
                                        const WeightQuadruple& quad) {
  auto reparse = [&](const WeightFunction& w) {
    std::istringstream in(weights_to_text(w));
    return parse_weights(lat, in, "<candidate>");
  };
  WeightQuadruple fresh(reparse(quad.alpha), reparse(quad.beta), reparse(quad.gamma),
                        reparse(quad.delta));
  Verdict hyp = check_ad_hypothesis(fresh);
  Verdict conj = check_conjecture9(fresh);
  if (!hyp.holds || conj.holds)
    throw std::logic_error("counterexample candidate failed re-verification");
  return Counterexample{index, std::move(fresh), std::move(hyp), std::move(conj)};
}

}  // namespace detail

// Enumerates (exhaustive) or samples (random, seeded) quadruples with
// values from the grid, keeping those that satisfy the four-functions
// hypothesis yet violate the pairwise-sum inequality. `on_found` streams
// each counterexample as it is emitted.
//
// Exhaustive candidates are ordered lexicographically over the
// concatenated (α, β, γ, δ) value vectors, elements in carrier input
// order (subset size, then lexicographic), α of the first element most
// significant. Grid values keep their given order.
inline SearchOutcome search_counterexamples(
    const SearchConfig& cfg,
    const std::function<void(const Counterexample&)>& on_found = nullptr) {
  if (cfg.n < 0 || cfg.n > 4) throw ParamError("search supports 0 <= n <= 4");
  if (cfg.value_grid.empty()) throw ParamError("value grid must not be empty");
  for (const Rat& v : cfg.value_grid)
    if (v < 0) throw ParamError("grid values must be non-negative");

  SearchOutcome out;
  out.carrier = boolean_lattice(cfg.n);
  const Lattice& lat = *out.carrier;
  const int m = lat.size();
  const int digits = 4 * m;
  const std::uint64_t g = cfg.value_grid.size();

  std::uint64_t total = 1;
  if (cfg.mode == SearchConfig::Mode::exhaustive) {
    for (int i = 0; i < digits; ++i) {
      if (total > cfg.limit / g)  // total * g would exceed the limit
        throw BudgetError("exhaustive space |grid|^(4*2^n) exceeds the candidate limit");
      total *= g;
    }
  } else {
    total = cfg.limit;
  }

  auto hypothesis_holds = [&](const std::vector<Rat>* v) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (v[0][x] * v[1][y] > v[2][lat.join(x, y)] * v[3][lat.meet(x, y)]) return false;
    return true;
  };
  auto conjecture_holds = [&](const std::vector<Rat>* v) {
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        if (v[0][a] * v[1][b] + v[0][b] * v[1][a] > v[2][a] * v[3][b] + v[2][b] * v[3][a])
          return false;
    return true;
  };

  SplitMix64 rng(cfg.seed);
  std::vector<Rat> values[4];
  for (auto& v : values) v.assign(m, Rat(0));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (cfg.mode == SearchConfig::Mode::exhaustive) {
      std::uint64_t rest = idx;
      for (int pos = digits - 1; pos >= 0; --pos) {
        values[pos / m][pos % m] = cfg.value_grid[rest % g];
        rest /= g;
      }
    } else {
      for (int pos = 0; pos < digits; ++pos) values[pos / m][pos % m] = rng.pick(cfg.value_grid);
    }
    ++out.examined;
    if (!hypothesis_holds(values) || conjecture_holds(values)) continue;
    WeightQuadruple quad(WeightFunction(out.carrier, values[0]), WeightFunction(out.carrier, values[1]),
                         WeightFunction(out.carrier, values[2]), WeightFunction(out.carrier, values[3]));
    out.found.push_back(detail::recheck_candidate(out.carrier, idx, quad));
    if (on_found) on_found(out.found.back());
  }
  return out;
}

struct LogSupermodularParams {
  std::vector<Rat> unary_grid = {Rat(0), Rat(1), Rat(1), Rat(2), Rat(1, 2), Rat(3)};  // u_i >= 0
  std::vector<Rat> pair_grid = {Rat(1), Rat(1), Rat(2), Rat(3, 2), Rat(3)};           // w_ij >= 1
};

// μ(A) = Π_{i∈A} u_i · Π_{{i,j}⊆A} w_ij on a powerset carrier. With
// u_i >= 0 and w_ij >= 1 this is always log-supermodular: unary factors
// balance exactly between {A,B} and {A∪B, A∩B}, pair factors only gain.
inline WeightFunction random_log_supermodular(const LatticePtr& lat, std::uint64_t seed,
                                              const LogSupermodularParams& params = {}) {
  const BooleanCarrier bc = boolean_carrier(*lat);
  for (const Rat& v : params.unary_grid)
    if (v < 0) throw ParamError("unary grid values must be non-negative");
  for (const Rat& v : params.pair_grid)
    if (v < 1) throw ParamError("pair grid values must be at least 1");

  SplitMix64 rng(seed);
  const int n = bc.ground_size;
  std::vector<Rat> unary(n);
  for (auto& u : unary) u = rng.pick(params.unary_grid);
  std::vector<std::vector<Rat>> pairwise(n, std::vector<Rat>(n, Rat(1)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairwise[i][j] = rng.pick(params.pair_grid);

  std::vector<Rat> values(lat->size(), Rat(1));
  for (int e = 0; e < lat->size(); ++e) {
    const std::uint64_t mask = bc.mask_of[e];
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1ull << i))) continue;
      values[e] *= unary[i];
      for (int j = i + 1; j < n; ++j)
        if (mask & (1ull << j)) values[e] *= pairwise[i][j];
    }
  }
  WeightFunction mu(lat, std::move(values));
  if (!is_log_supermodular(mu).holds)
    throw std::logic_error("generated measure is not log-supermodular");
  return mu;
}

struct MonotoneParams {
  int thresholds = 3;
  std::vector<Rat> value_grid = {Rat(0), Rat(1), Rat(2), Rat(1, 2), Rat(3)};
};

// Increasing: f(x) = max{v_t : threshold element t <= x} (0 when none);
// decreasing mirrors with >=. Works on any finite lattice.
inline WeightFunction random_monotone(const LatticePtr& lat, Direction dir, std::uint64_t seed,
                                      const MonotoneParams& params = {}) {
  for (const Rat& v : params.value_grid)
    if (v < 0) throw ParamError("monotone value grid must be non-negative");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, Rat>> thresholds;
  for (int t = 0; t < params.thresholds; ++t)
    thresholds.emplace_back((int)rng.below(lat->size()), rng.pick(params.value_grid));

  std::vector<Rat> values(lat->size(), Rat(0));
  for (int x = 0; x < lat->size(); ++x)
    for (const auto& [elem, val] : thresholds) {
      const bool active = dir == Direction::increasing ? lat->leq(elem, x) : lat->leq(x, elem);
      if (active && values[x] < val) values[x] = val;
    }
  WeightFunction f(lat, std::move(values));
  if (!is_monotone(f, dir).holds) throw std::logic_error("generated function is not monotone");
  return f;
}

// Generator family (a): an FKG-shaped hypothesis-satisfying quadruple
// from a random measure and a matching monotone pair.
inline WeightQuadruple random_fkg_ad_quadruple(const LatticePtr& lat, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const Direction dir = rng.below(2) == 0 ? Direction::increasing : Direction::decreasing;
  WeightFunction mu = random_log_supermodular(lat, rng.next());
  WeightFunction f = random_monotone(lat, dir, rng.next());
  WeightFunction g = random_monotone(lat, dir, rng.next());
  WeightQuadruple quad = fkg_quadruple(mu, f, g, dir);
  if (!check_ad_hypothesis(quad).holds)
    throw std::logic_error("FKG quadruple violates the four-functions hypothesis");
  return quad;
}

struct RejectionParams {
  std::vector<Rat> alpha_beta_grid = {Rat(0), Rat(0), Rat(0), Rat(1), Rat(2)};
  std::vector<Rat> gamma_delta_grid = {Rat(1, 2), Rat(1), Rat(2), Rat(4)};
  int max_attempts = 1000000;
};

// Generator family (b): plain rejection sampling until the hypothesis
// holds. Sparse α, β against generous γ, δ keeps the acceptance rate
// workable while leaving the filter with real work to do.
inline WeightQuadruple random_ad_quadruple(const LatticePtr& lat, std::uint64_t seed,
                                           const RejectionParams& params = {}) {
  SplitMix64 rng(seed);
  const int m = lat->size();
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<Rat> a(m), b(m), c(m), d(m);
    for (int i = 0; i < m; ++i) {
      a[i] = rng.pick(params.alpha_beta_grid);
      b[i] = rng.pick(params.alpha_beta_grid);
      c[i] = rng.pick(params.gamma_delta_grid);
      d[i] = rng.pick(params.gamma_delta_grid);
    }
    WeightQuadruple quad(WeightFunction(lat, std::move(a)), WeightFunction(lat, std::move(b)),
                         WeightFunction(lat, std::move(c)), WeightFunction(lat, std::move(d)));
    if (check_ad_hypothesis(quad).holds) return quad;
  }
  throw BudgetError("rejection sampling exhausted its attempt budget");
}

// The n = 2 counterexample table: the hypothesis holds at every ordered
// pair, yet the pairwise-sum inequality fails at ({1}, {2}) with 1 > 0.
inline WeightQuadruple reference_counterexample(const LatticePtr& p2) {
  auto weights = [&](Rat empty, Rat one, Rat two, Rat both) {
    return WeightFunction::from_map(
        p2, {{"{}", std::move(empty)}, {"{1}", std::move(one)}, {"{2}", std::move(two)}, {"{1,2}", std::move(both)}});
  };
  return WeightQuadruple(weights(0, 0, 1, 0),   // alpha
                         weights(1, 1, 1, 0),   // beta
                         weights(0, 0, 1, 1),   // gamma
                         weights(1, 0, 1, 0));  // delta
}

struct ReferenceCounterexampleReport {
  LatticePtr carrier;
  std::optional<WeightQuadruple> quad;
  Verdict hypothesis;           // expected: holds
  Verdict conjecture;           // expected: fails at ({1}, {2}) with 1 > 0
  QFourFunctionsResult q4ft;    // expected: q + 2q^2 << q + 2q^2 + q^3
  bool as_expected = false;
  std::vector<std::string> mismatches;
};

inline ReferenceCounterexampleReport verify_paper_counterexample() {
  ReferenceCounterexampleReport rep;
  rep.carrier = boolean_lattice(2);
  rep.quad = reference_counterexample(rep.carrier);
  rep.hypothesis = check_ad_hypothesis(*rep.quad);
  rep.conjecture = check_conjecture9(*rep.quad);
  const Selection everything = Selection::all(*rep.carrier);
  rep.q4ft = check_q4ft(*rep.quad, everything, everything);

  if (!rep.hypothesis.holds) rep.mismatches.push_back("hypothesis does not hold");
  if (rep.conjecture.holds) {
    rep.mismatches.push_back("pairwise-sum inequality unexpectedly holds");
  } else {
    const Witness& w = *rep.conjecture.witness;
    if (w.where != std::vector<std::string>{"{1}", "{2}"} || w.lhs != "1" || w.rhs != "0")
      rep.mismatches.push_back("violation differs from ({1},{2}) with 1 > 0: " + w.describe());
  }
  if (!rep.q4ft.verdict.holds) rep.mismatches.push_back("dominance form fails");
  if (rep.q4ft.lhs != QPolynomial({Rat(0), Rat(1), Rat(2)}))
    rep.mismatches.push_back("lhs polynomial is " + rep.q4ft.lhs.to_string() + ", want 0 1 2");
  if (rep.q4ft.rhs != QPolynomial({Rat(0), Rat(1), Rat(2), Rat(1)}))
    rep.mismatches.push_back("rhs polynomial is " + rep.q4ft.rhs.to_string() + ", want 0 1 2 1");
  rep.as_expected = rep.mismatches.empty();
  return rep;
}

}  // namespace latq
