#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "latq/errors.hpp"
#include "latq/lattice.hpp"
#include "latq/verdict.hpp"

namespace latq {

// Rank-preserving embedding of a distributive lattice into the powerset
// of its join-irreducibles: image(a) = {i : irreducible x_i <= a}. The
// irreducible indexing is a linear extension (x_i < x_j implies i < j).
struct BirkhoffEmbedding {
  std::vector<int> irreducibles;       // lattice element indices, x_1.. as [0..n)
  std::vector<std::vector<int>> image; // per element, sorted 0-based irreducible indices

  int n() const { return (int)irreducibles.size(); }

  std::uint64_t image_mask(int a) const {
    std::uint64_t m = 0;
    for (int i : image[a]) m |= 1ull << i;
    return m;
  }

  // 1-based index-set notation, e.g. "{1,3}".
  static std::string set_name(const std::vector<int>& indices) {
    std::string s = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(indices[i] + 1);
    }
    return s + "}";
  }
};

// x is join-irreducible when a ∨ b < x for all a, b < x (x not bottom).
inline bool join_irreducible_definitional(const Lattice& lat, int x) {
  if (x == lat.bottom()) return false;
  for (int a = 0; a < lat.size(); ++a) {
    if (!lat.lt(a, x)) continue;
    for (int b = 0; b < lat.size(); ++b) {
      if (!lat.lt(b, x)) continue;
      if (lat.join(a, b) == x) return false;
    }
  }
  return true;
}

// Equivalent characterization: exactly one lower cover.
inline bool join_irreducible_by_covers(const Lattice& lat, int x) {
  return lat.lower_covers()[x].size() == 1;
}

// All join-irreducibles ordered by (rank, input order) — a linear
// extension of the lattice order. Both characterizations are evaluated
// and must agree.
inline std::vector<int> join_irreducibles(const Lattice& lat) {
  std::vector<int> irr;
  for (int x = 0; x < lat.size(); ++x) {
    const bool def = join_irreducible_definitional(lat, x);
    const bool cov = join_irreducible_by_covers(lat, x);
    if (def != cov)
      throw std::logic_error("join-irreducibility characterizations disagree at '" + lat.id(x) + "'");
    if (def) irr.push_back(x);
  }
  std::stable_sort(irr.begin(), irr.end(),
                   [&](int a, int b) { return lat.rank(a) < lat.rank(b); });
  return irr;
}

inline BirkhoffEmbedding birkhoff_embed(const Lattice& lat) {
  if (!lat.distributive())
    throw NotDistributiveError("cannot embed a non-distributive lattice into a powerset");
  BirkhoffEmbedding emb;
  emb.irreducibles = join_irreducibles(lat);
  emb.image.assign(lat.size(), {});
  for (int a = 0; a < lat.size(); ++a)
    for (int i = 0; i < emb.n(); ++i)
      if (lat.leq(emb.irreducibles[i], a)) emb.image[a].push_back(i);
  return emb;
}

// Checks injectivity and the three embedding conditions:
//   meet: image(a∧b) = image(a) ∩ image(b)
//   join: image(a∨b) = image(a) ∪ image(b)
//   rank: r(a) = |image(a)|
// Works on arbitrary (possibly corrupted) embeddings.
inline Verdict verify_embedding(const Lattice& lat, const BirkhoffEmbedding& emb) {
  std::map<std::vector<int>, int> seen;
  for (int a = 0; a < lat.size(); ++a) {
    auto [it, fresh] = seen.emplace(emb.image[a], a);
    if (!fresh)
      return Verdict::fail({"injective",
                            {lat.id(it->second), lat.id(a)},
                            BirkhoffEmbedding::set_name(emb.image[it->second]),
                            BirkhoffEmbedding::set_name(emb.image[a])});
  }
  auto set_union = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  auto set_inter = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      const auto want_meet = set_inter(emb.image[a], emb.image[b]);
      if (emb.image[lat.meet(a, b)] != want_meet)
        return Verdict::fail({"meet",
                              {lat.id(a), lat.id(b)},
                              BirkhoffEmbedding::set_name(emb.image[lat.meet(a, b)]),
                              BirkhoffEmbedding::set_name(want_meet)});
      const auto want_join = set_union(emb.image[a], emb.image[b]);
      if (emb.image[lat.join(a, b)] != want_join)
        return Verdict::fail({"join",
                              {lat.id(a), lat.id(b)},
                              BirkhoffEmbedding::set_name(emb.image[lat.join(a, b)]),
                              BirkhoffEmbedding::set_name(want_join)});
    }
  for (int a = 0; a < lat.size(); ++a)
    if (lat.rank(a) != (int)emb.image[a].size())
      return Verdict::fail({"rank",
                            {lat.id(a)},
                            std::to_string(lat.rank(a)),
                            std::to_string(emb.image[a].size())});
  return Verdict::ok();
}

}  // namespace latq
