#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latq {

// A witness pins down where a check failed: the condition name, the
// elements (or indices) involved, and both sides of the violated
// comparison in canonical text form, so the violation can be re-derived
// from the report alone.
struct Witness {
  std::string condition;
  std::vector<std::string> where;
  std::string lhs;
  std::string rhs;

  std::string describe() const {
    std::string out = condition;
    if (!where.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < where.size(); ++i) {
        if (i) out += ", ";
        out += where[i];
      }
      out += ")";
    }
    out += ": " + lhs + " vs " + rhs;
    return out;
  }
};

// Outcome of a single checked condition. A witness is present exactly
// when the condition fails. `vacuous` marks inequalities that hold only
// because a quantified set was empty.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  bool vacuous = false;

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(Witness w) { return Verdict{false, std::move(w), false}; }
  explicit operator bool() const { return holds; }
};

}  // namespace latq
