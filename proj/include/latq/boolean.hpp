#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latq/errors.hpp"
#include "latq/lattice.hpp"

namespace latq {

// View of a lattice that is structurally a powerset: every element
// corresponds to a set of atoms (bit i = i-th atom in input order), the
// correspondence is bijective, and joins/meets are unions/intersections
// of those sets. Complements are then defined lattice-theoretically, so
// the view works for file-loaded carriers too, whatever the element ids.
struct BooleanCarrier {
  const Lattice* lat = nullptr;
  int ground_size = 0;                       // n: number of atoms
  std::vector<int> atoms;                    // lattice indices, input order
  std::vector<std::uint64_t> mask_of;        // element -> atom set
  std::unordered_map<std::uint64_t, int> element_of;

  std::uint64_t full_mask() const {
    return ground_size == 64 ? ~0ull : (1ull << ground_size) - 1;
  }
  int element(std::uint64_t mask) const { return element_of.at(mask); }
  int complement(int x) const { return element_of.at(full_mask() & ~mask_of[x]); }

  // Members of the mask as 1-based ground-set indices, e.g. "{1,3}".
  std::string subset_name(std::uint64_t mask) const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < ground_size; ++i)
      if (mask & (1ull << i)) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
      }
    return s + "}";
  }
};

inline std::optional<BooleanCarrier> try_boolean_carrier(const Lattice& lat) {
  BooleanCarrier bc;
  bc.lat = &lat;
  for (int v : lat.upper_covers()[lat.bottom()]) bc.atoms.push_back(v);
  std::sort(bc.atoms.begin(), bc.atoms.end());
  bc.ground_size = (int)bc.atoms.size();
  if (bc.ground_size > 20) return std::nullopt;
  if ((std::size_t)lat.size() != (std::size_t)1 << bc.ground_size) return std::nullopt;

  bc.mask_of.assign(lat.size(), 0);
  for (int a = 0; a < lat.size(); ++a) {
    for (int i = 0; i < bc.ground_size; ++i)
      if (lat.leq(bc.atoms[i], a)) bc.mask_of[a] |= 1ull << i;
    if (!bc.element_of.emplace(bc.mask_of[a], a).second) return std::nullopt;
  }
  // Atom sets must turn joins into unions; meets then follow, and the
  // lattice is isomorphic to the powerset of its atoms.
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      if (bc.mask_of[lat.join(a, b)] != (bc.mask_of[a] | bc.mask_of[b])) return std::nullopt;
  return bc;
}

inline BooleanCarrier boolean_carrier(const Lattice& lat) {
  auto bc = try_boolean_carrier(lat);
  if (!bc) throw NotBooleanError("carrier is not a powerset lattice; complements are undefined");
  return *bc;
}

}  // namespace latq
