#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latq/errors.hpp"
#include "latq/lattice.hpp"
#include "latq/rational.hpp"

namespace latq {

// Non-negative exact rational weight per carrier element. The carrier is
// shared; pointer identity is what "same carrier" means downstream.
class WeightFunction {
 public:
  WeightFunction(LatticePtr lat, std::vector<Rat> values)
      : lat_(std::move(lat)), values_(std::move(values)) {
    if ((int)values_.size() != lat_->size())
      throw ParamError("weight function must assign a value to every element");
    for (int i = 0; i < lat_->size(); ++i)
      if (values_[i] < 0)
        throw ParamError("negative weight at element '" + lat_->id(i) + "'");
  }

  static WeightFunction constant(const LatticePtr& lat, const Rat& c) {
    return WeightFunction(lat, std::vector<Rat>(lat->size(), c));
  }

  static WeightFunction from_map(const LatticePtr& lat, const std::map<std::string, Rat>& values) {
    std::vector<Rat> v(lat->size(), Rat(0));
    std::vector<bool> present(lat->size(), false);
    for (const auto& [id, val] : values) {
      const int i = lat->index_of(id);
      if (i < 0) throw ParamError("weight names unknown element '" + id + "'");
      v[i] = val;
      present[i] = true;
    }
    for (int i = 0; i < lat->size(); ++i)
      if (!present[i]) throw ParamError("weight missing for element '" + lat->id(i) + "'");
    return WeightFunction(lat, std::move(v));
  }

  const LatticePtr& carrier() const { return lat_; }
  const Lattice& lattice() const { return *lat_; }
  const Rat& operator[](int i) const { return values_[i]; }
  const std::vector<Rat>& values() const { return values_; }

 private:
  LatticePtr lat_;
  std::vector<Rat> values_;
};

// Pointwise product; both factors must live on the same carrier.
inline WeightFunction multiply(const WeightFunction& a, const WeightFunction& b) {
  if (a.carrier() != b.carrier()) throw ParamError("weight functions live on different carriers");
  std::vector<Rat> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * b[i];
  return WeightFunction(a.carrier(), std::move(v));
}

// The four functions of an Ahlswede–Daykin style hypothesis, on one
// shared carrier.
struct WeightQuadruple {
  WeightFunction alpha, beta, gamma, delta;

  WeightQuadruple(WeightFunction a, WeightFunction b, WeightFunction c, WeightFunction d)
      : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d)) {
    if (alpha.carrier() != beta.carrier() || alpha.carrier() != gamma.carrier() ||
        alpha.carrier() != delta.carrier())
      throw ParamError("all four weight functions must share one carrier");
  }

  const LatticePtr& carrier() const { return alpha.carrier(); }
  const Lattice& lattice() const { return alpha.lattice(); }
};

// A family of carrier elements (a subset of the lattice), kept as
// sorted, de-duplicated element indices.
struct Selection {
  std::vector<int> members;

  Selection() = default;
  explicit Selection(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  static Selection all(const Lattice& lat) {
    std::vector<int> m(lat.size());
    for (int i = 0; i < lat.size(); ++i) m[i] = i;
    return Selection(std::move(m));
  }

  static Selection of_ids(const Lattice& lat, const std::vector<std::string>& ids) {
    std::vector<int> m;
    for (const auto& id : ids) {
      const int i = lat.index_of(id);
      if (i < 0) throw ParamError("selection names unknown element '" + id + "'");
      m.push_back(i);
    }
    return Selection(std::move(m));
  }

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

// {x ∨ y : x ∈ X, y ∈ Y} as a set (no multiplicity).
inline Selection family_join(const Lattice& lat, const Selection& x, const Selection& y) {
  std::set<int> out;
  for (int a : x.members)
    for (int b : y.members) out.insert(lat.join(a, b));
  return Selection(std::vector<int>(out.begin(), out.end()));
}

// {x ∧ y : x ∈ X, y ∈ Y} as a set.
inline Selection family_meet(const Lattice& lat, const Selection& x, const Selection& y) {
  std::set<int> out;
  for (int a : x.members)
    for (int b : y.members) out.insert(lat.meet(a, b));
  return Selection(std::vector<int>(out.begin(), out.end()));
}

// Sum of weights over a selection.
inline Rat weight_sum(const WeightFunction& w, const Selection& s) {
  Rat total(0);
  for (int i : s.members) total += w[i];
  return total;
}

}  // namespace latq
