#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latq/errors.hpp"
#include "latq/verdict.hpp"

namespace latq {

using Bits = boost::dynamic_bitset<>;

// Finite poset given by elements (kept in input order) and an
// irredundant cover relation. `up[a]` / `down[a]` are the reflexive
// up-set and down-set of `a` as bitsets over element indices.
struct Poset {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> covers;
  std::vector<Bits> up;
  std::vector<Bits> down;

  int size() const { return (int)ids.size(); }
  bool leq(int a, int b) const { return up[a].test(b); }
  int index_of(std::string_view id) const {
    auto it = index.find(std::string(id));
    return it == index.end() ? -1 : it->second;
  }
};

struct LatticeBuilder;

// Finite lattice with dense join/meet tables, ranks (longest chain from
// the bottom), and a structural distributivity flag. Immutable after
// construction; safe to share across concurrent readers.
class Lattice {
 public:
  int size() const { return poset_.size(); }
  const std::vector<std::string>& element_ids() const { return poset_.ids; }
  const std::string& id(int a) const { return poset_.ids[a]; }
  int index_of(std::string_view id) const { return poset_.index_of(id); }

  const Poset& poset() const { return poset_; }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  bool lt(int a, int b) const { return a != b && poset_.leq(a, b); }

  int join(int a, int b) const { return join_[(std::size_t)a * size() + b]; }
  int meet(int a, int b) const { return meet_[(std::size_t)a * size() + b]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Length of the longest chain having `a` as maximal element.
  int rank(int a) const { return ranks_[a]; }
  const std::vector<int>& ranks() const { return ranks_; }
  int height() const { return ranks_[top_]; }

  const std::vector<std::pair<int, int>>& covers() const { return poset_.covers; }
  const std::vector<std::vector<int>>& lower_covers() const { return lower_covers_; }
  const std::vector<std::vector<int>>& upper_covers() const { return upper_covers_; }

  // Structural flag computed at build time via join-irreducible images;
  // agrees with the definitional triple scan in is_distributive().
  bool distributive() const { return distributive_; }

  // Ingestion notes (redundant or duplicate covers that were dropped).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend struct LatticeBuilder;

  Poset poset_;
  std::vector<int> join_;
  std::vector<int> meet_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> ranks_;
  int bottom_ = 0;
  int top_ = 0;
  bool distributive_ = false;
  std::vector<std::string> warnings_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

struct LatticeBuilder {
  static LatticePtr build(std::vector<std::string> ids,
                          const std::vector<std::pair<std::string, std::string>>& cover_ids) {
    if (ids.empty()) throw ParamError("lattice needs at least one element");
    Lattice lat;
    Poset& p = lat.poset_;
    p.ids = std::move(ids);
    const int m = p.size();
    for (int i = 0; i < m; ++i)
      if (!p.index.emplace(p.ids[i], i).second)
        throw ParamError("duplicate element id '" + p.ids[i] + "'");

    std::vector<std::pair<int, int>> raw;
    raw.reserve(cover_ids.size());
    for (const auto& [lo, hi] : cover_ids) {
      const int a = p.index_of(lo);
      const int b = p.index_of(hi);
      if (a < 0) throw ParamError("cover references unknown element '" + lo + "'");
      if (b < 0) throw ParamError("cover references unknown element '" + hi + "'");
      if (a == b) throw CycleError("cover '" + lo + " " + hi + "' is a self-loop");
      raw.emplace_back(a, b);
    }

    std::vector<std::vector<int>> adj_up(m), adj_down(m);
    std::vector<int> indeg(m, 0);
    for (auto [a, b] : raw) {
      adj_up[a].push_back(b);
      adj_down[b].push_back(a);
      ++indeg[b];
    }

    // Topological order, smallest input index first. Existence proves the
    // cover digraph is acyclic, hence the closure is a partial order.
    std::vector<int> topo;
    topo.reserve(m);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < m; ++i)
      if (indeg[i] == 0) ready.push(i);
    while (!ready.empty()) {
      const int v = ready.top();
      ready.pop();
      topo.push_back(v);
      for (int w : adj_up[v])
        if (--indeg[w] == 0) ready.push(w);
    }
    if ((int)topo.size() != m) throw CycleError("covers contain a cycle");

    p.up.assign(m, Bits(m));
    p.down.assign(m, Bits(m));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      p.up[*it].set(*it);
      for (int w : adj_up[*it]) p.up[*it] |= p.up[w];
    }
    for (int v : topo) {
      p.down[v].set(v);
      for (int u : adj_down[v]) p.down[v] |= p.down[u];
    }

    // Drop duplicate covers and covers implied through a third element.
    std::vector<bool> keep(raw.size(), true);
    std::vector<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      const auto [a, b] = raw[k];
      if (std::find(seen.begin(), seen.end(), raw[k]) != seen.end()) {
        keep[k] = false;
        lat.warnings_.push_back("duplicate cover '" + p.ids[a] + " " + p.ids[b] + "' ignored");
        continue;
      }
      seen.push_back(raw[k]);
      if ((p.up[a] & p.down[b]).count() > 2) {
        keep[k] = false;
        lat.warnings_.push_back("redundant cover '" + p.ids[a] + " " + p.ids[b] +
                                "' dropped (implied by transitivity)");
      }
    }
    for (std::size_t k = 0; k < raw.size(); ++k)
      if (keep[k]) p.covers.push_back(raw[k]);

    lat.lower_covers_.assign(m, {});
    lat.upper_covers_.assign(m, {});
    for (auto [a, b] : p.covers) {
      lat.upper_covers_[a].push_back(b);
      lat.lower_covers_[b].push_back(a);
    }

    std::vector<int> topo_pos(m);
    for (int i = 0; i < m; ++i) topo_pos[topo[i]] = i;

    lat.join_.assign((std::size_t)m * m, -1);
    lat.meet_.assign((std::size_t)m * m, -1);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        const int jo = bound(lat, p, topo_pos, i, j, /*join=*/true);
        const int me = bound(lat, p, topo_pos, i, j, /*join=*/false);
        lat.join_[(std::size_t)i * m + j] = lat.join_[(std::size_t)j * m + i] = jo;
        lat.meet_[(std::size_t)i * m + j] = lat.meet_[(std::size_t)j * m + i] = me;
      }
    }

    int n_minimal = 0, n_maximal = 0;
    for (int v = 0; v < m; ++v) {
      if (lat.lower_covers_[v].empty()) {
        lat.bottom_ = v;
        ++n_minimal;
      }
      if (lat.upper_covers_[v].empty()) {
        lat.top_ = v;
        ++n_maximal;
      }
    }
    if (n_minimal != 1 || n_maximal != 1)
      throw NotALatticeError("lattice must have a unique bottom and top");

    lat.ranks_.assign(m, 0);
    for (int v : topo) {
      int r = 0;
      for (int u : lat.lower_covers_[v]) r = std::max(r, lat.ranks_[u] + 1);
      lat.ranks_[v] = r;
    }

    lat.distributive_ = compute_distributive(lat);
    return std::make_shared<const Lattice>(std::move(lat));
  }

 private:
  // Unique least upper bound (or greatest lower bound) of the pair,
  // throwing NotALatticeError naming the pair when it does not exist.
  static int bound(const Lattice& lat, const Poset& p, const std::vector<int>& topo_pos,
                   int i, int j, bool join) {
    if (p.leq(i, j)) return join ? j : i;
    if (p.leq(j, i)) return join ? i : j;
    const auto& rows = join ? p.up : p.down;
    Bits common = rows[i] & rows[j];
    if (common.none())
      throw NotALatticeError("pair (" + lat.id(i) + ", " + lat.id(j) + ") has no common " +
                             (join ? "upper" : "lower") + " bound");
    // The topologically first (resp. last) element of the bound set is
    // extremal in it; it is the unique bound iff it bounds the whole set.
    int best = -1;
    for (auto v = common.find_first(); v != Bits::npos; v = common.find_next(v)) {
      if (best < 0 || (join ? topo_pos[v] < topo_pos[best] : topo_pos[v] > topo_pos[best]))
        best = (int)v;
    }
    if (common.is_subset_of(rows[best])) return best;

    std::vector<std::string> extremal;
    const auto& opp = join ? p.down : p.up;
    for (auto v = common.find_first(); v != Bits::npos; v = common.find_next(v))
      if ((opp[v] & common).count() == 1) extremal.push_back(lat.id((int)v));
    std::string msg = "pair (" + lat.id(i) + ", " + lat.id(j) + ") has " +
                      std::to_string(extremal.size()) +
                      (join ? " minimal upper" : " maximal lower") + " bounds:";
    for (const auto& e : extremal) msg += " " + e;
    throw NotALatticeError(msg);
  }

  // A finite lattice is distributive iff the map a -> {join-irreducibles
  // below a} turns every join into a set union (it always turns meets
  // into intersections and is always injective).
  static bool compute_distributive(const Lattice& lat) {
    const int m = lat.size();
    std::vector<int> irr;
    for (int v = 0; v < m; ++v)
      if (lat.lower_covers_[v].size() == 1) irr.push_back(v);
    const std::size_t n = irr.size();
    std::vector<Bits> image(m, Bits(n));
    for (int a = 0; a < m; ++a)
      for (std::size_t t = 0; t < n; ++t)
        if (lat.leq(irr[t], a)) image[a].set(t);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (image[lat.join(a, b)] != (image[a] | image[b])) return false;
    return true;
  }
};

// Builds a lattice from element ids and cover pairs (lower, upper).
// Redundant covers are dropped with a warning; a cycle or a pair without
// unique bounds is an error.
inline LatticePtr build_lattice(std::vector<std::string> ids,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
  return LatticeBuilder::build(std::move(ids), covers);
}

// Definitional distributivity check: x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)
// over all ordered triples, witnessing the first failure in input order.
inline Verdict is_distributive(const Lattice& lat) {
  const int m = lat.size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        const int lhs = lat.meet(x, lat.join(y, z));
        const int rhs = lat.join(lat.meet(x, y), lat.meet(x, z));
        if (lhs != rhs)
          return Verdict::fail(
              {"distributivity", {lat.id(x), lat.id(y), lat.id(z)}, lat.id(lhs), lat.id(rhs)});
      }
  return Verdict::ok();
}

// Rank of every element: length of the longest chain ending there.
// Defined for every finite lattice, graded or not.
inline const std::vector<int>& rank_function(const Lattice& lat) { return lat.ranks(); }

// r(x) + r(y) = r(x∨y) + r(x∧y) over all ordered pairs. Holds in every
// distributive lattice; the witness carries all four ranks.
inline Verdict check_rank_modularity(const Lattice& lat) {
  const int m = lat.size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int jo = lat.join(x, y);
      const int me = lat.meet(x, y);
      const int lhs = lat.rank(x) + lat.rank(y);
      const int rhs = lat.rank(jo) + lat.rank(me);
      if (lhs != rhs)
        return Verdict::fail({"rank-modularity",
                              {lat.id(x), lat.id(y), lat.id(jo), lat.id(me)},
                              std::to_string(lat.rank(x)) + "+" + std::to_string(lat.rank(y)),
                              std::to_string(lat.rank(jo)) + "+" + std::to_string(lat.rank(me))});
    }
  return Verdict::ok();
}

namespace detail {

inline std::string subset_id(const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

}  // namespace detail

// Powerset of {1..n} ordered by inclusion. Elements are named "{}",
// "{1}", "{1,2}", ... and listed by (size, then lexicographic on the
// sorted member list).
inline LatticePtr boolean_lattice(int n) {
  if (n < 0) throw ParamError("boolean lattice needs n >= 0");
  if (n > 20) throw ParamError("boolean lattice limited to n <= 20");
  const std::uint32_t total = 1u << n;
  std::vector<std::vector<int>> subsets(total);
  for (std::uint32_t mask = 0; mask < total; ++mask)
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subsets[mask].push_back(i + 1);
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (subsets[a].size() != subsets[b].size()) return subsets[a].size() < subsets[b].size();
    return subsets[a] < subsets[b];
  });
  std::vector<std::string> ids;
  ids.reserve(total);
  for (std::uint32_t mask : order) ids.push_back(detail::subset_id(subsets[mask]));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::uint32_t mask = 0; mask < total; ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i)))
        covers.emplace_back(detail::subset_id(subsets[mask]),
                            detail::subset_id(subsets[mask | (1u << i)]));
  return build_lattice(std::move(ids), covers);
}

// Total order c0 < c1 < ... with `length` elements.
inline LatticePtr chain_lattice(int length) {
  if (length < 1) throw ParamError("chain needs length >= 1");
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < length; ++i) ids.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < length; ++i) covers.emplace_back(ids[i], ids[i + 1]);
  return build_lattice(std::move(ids), covers);
}

// Divisors of m under divisibility; join is lcm, meet is gcd.
inline LatticePtr divisor_lattice(long long m) {
  if (m < 1) throw ParamError("divisor lattice needs m >= 1");
  std::vector<long long> divs;
  for (long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  auto is_prime = [](long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  std::vector<std::string> ids;
  for (long long d : divs) ids.push_back(std::to_string(d));
  std::vector<std::pair<std::string, std::string>> covers;
  for (long long a : divs)
    for (long long b : divs)
      if (b % a == 0 && is_prime(b / a)) covers.emplace_back(std::to_string(a), std::to_string(b));
  return build_lattice(std::move(ids), covers);
}

// Coordinatewise order on pairs; element "(a,b)" for a in lhs, b in rhs.
inline LatticePtr product_lattice(const Lattice& lhs, const Lattice& rhs) {
  std::vector<std::string> ids;
  ids.reserve((std::size_t)lhs.size() * rhs.size());
  auto pair_id = [&](int a, int b) { return "(" + lhs.id(a) + "," + rhs.id(b) + ")"; };
  for (int a = 0; a < lhs.size(); ++a)
    for (int b = 0; b < rhs.size(); ++b) ids.push_back(pair_id(a, b));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int a = 0; a < lhs.size(); ++a)
    for (int b = 0; b < rhs.size(); ++b) {
      for (int a2 : lhs.upper_covers()[a]) covers.emplace_back(pair_id(a, b), pair_id(a2, b));
      for (int b2 : rhs.upper_covers()[b]) covers.emplace_back(pair_id(a, b), pair_id(a, b2));
    }
  return build_lattice(std::move(ids), covers);
}

}  // namespace latq
