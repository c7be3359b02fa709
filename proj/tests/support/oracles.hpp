#pragma once

// Test-only oracles, deliberately coded against the definitions rather
// than the library's tables, DP passes, or polynomial arithmetic.

#include <optional>
#include <vector>

#include "latq/latq.hpp"

namespace latq::testing {

// Least upper bound recomputed from the order relation alone: collect
// all common upper bounds, keep the minimal ones, demand exactly one.
inline std::optional<int> brute_force_join(const Lattice& lat, int a, int b) {
  std::vector<int> ub;
  for (int z = 0; z < lat.size(); ++z)
    if (lat.leq(a, z) && lat.leq(b, z)) ub.push_back(z);
  std::vector<int> minimal;
  for (int z : ub) {
    bool is_min = true;
    for (int w : ub)
      if (w != z && lat.leq(w, z)) is_min = false;
    if (is_min) minimal.push_back(z);
  }
  if (minimal.size() != 1) return std::nullopt;
  return minimal[0];
}

inline std::optional<int> brute_force_meet(const Lattice& lat, int a, int b) {
  std::vector<int> lb;
  for (int z = 0; z < lat.size(); ++z)
    if (lat.leq(z, a) && lat.leq(z, b)) lb.push_back(z);
  std::vector<int> maximal;
  for (int z : lb) {
    bool is_max = true;
    for (int w : lb)
      if (w != z && lat.leq(z, w)) is_max = false;
    if (is_max) maximal.push_back(z);
  }
  if (maximal.size() != 1) return std::nullopt;
  return maximal[0];
}

// Longest strictly increasing chain ending at x, straight from the
// definition over the order relation (no cover digraph involved).
inline int longest_chain_rank(const Lattice& lat, int x) {
  std::vector<int> memo(lat.size(), -1);
  auto rec = [&](auto&& self, int v) -> int {
    if (memo[v] >= 0) return memo[v];
    int best = 0;
    for (int u = 0; u < lat.size(); ++u)
      if (lat.lt(u, v)) best = std::max(best, self(self, u) + 1);
    return memo[v] = best;
  };
  return rec(rec, x);
}

// Coefficient k of P_a(X)·P_b(Y) as a plain double sum over pairs whose
// ranks add up to k, independent of QPolynomial multiplication.
inline std::vector<Rat> rank_pair_coefficients(const WeightFunction& a, const Selection& x,
                                               const WeightFunction& b, const Selection& y) {
  const Lattice& lat = a.lattice();
  std::vector<Rat> coeffs(2 * lat.height() + 1, Rat(0));
  for (int u : x.members)
    for (int v : y.members) coeffs[lat.rank(u) + lat.rank(v)] += a[u] * b[v];
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

// Small random distributive lattice: a product of chains.
inline LatticePtr random_chain_product(SplitMix64& rng, int max_parts = 3, int max_len = 4) {
  const int parts = 2 + (int)rng.below(max_parts - 1);
  LatticePtr lat = chain_lattice(2 + (int)rng.below(max_len - 1));
  for (int i = 1; i < parts; ++i)
    lat = product_lattice(*lat, *chain_lattice(2 + (int)rng.below(max_len - 1)));
  return lat;
}

// Uniformly random subset of the carrier.
inline Selection random_selection(const Lattice& lat, SplitMix64& rng) {
  std::vector<int> members;
  for (int i = 0; i < lat.size(); ++i)
    if (rng.below(2)) members.push_back(i);
  return Selection(std::move(members));
}

}  // namespace latq::testing
