#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "latq/errors.hpp"
#include "latq/lattice.hpp"
#include "latq/rational.hpp"
#include "latq/weights.hpp"

namespace latq {

namespace detail {

inline std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace detail

// Lattice text format:
//   lattice
//   elements: e1 e2 e3 ...
//   cover: lo hi
// Blank lines and lines starting with '#' are ignored.
inline LatticePtr parse_lattice(std::istream& in, const std::string& filename) {
  std::string line;
  int lineno = 0;
  bool saw_header = false, saw_elements = false;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = detail::strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (!saw_header) {
      if (s != "lattice") throw ParseError(filename, lineno, "expected 'lattice' header, got '" + s + "'");
      saw_header = true;
      continue;
    }
    if (s.rfind("elements:", 0) == 0) {
      if (saw_elements) throw ParseError(filename, lineno, "duplicate 'elements:' line");
      ids = detail::tokens(s.substr(9));
      if (ids.empty()) throw ParseError(filename, lineno, "'elements:' line lists no elements");
      saw_elements = true;
      continue;
    }
    if (s.rfind("cover:", 0) == 0) {
      if (!saw_elements) throw ParseError(filename, lineno, "'cover:' before 'elements:'");
      const auto t = detail::tokens(s.substr(6));
      if (t.size() != 2) throw ParseError(filename, lineno, "'cover:' needs exactly two elements");
      covers.emplace_back(t[0], t[1]);
      continue;
    }
    throw ParseError(filename, lineno, "unrecognized line '" + s + "'");
  }
  if (!saw_header) throw ParseError(filename, lineno, "missing 'lattice' header");
  if (!saw_elements) throw ParseError(filename, lineno, "missing 'elements:' line");
  try {
    return build_lattice(std::move(ids), covers);
  } catch (const Error& e) {
    throw ParseError(filename, 0, e.what());
  }
}

inline LatticePtr load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_lattice(in, path);
}

inline std::string lattice_to_text(const Lattice& lat) {
  std::string out = "lattice\nelements:";
  for (const auto& id : lat.element_ids()) out += " " + id;
  out += "\n";
  for (auto [a, b] : lat.covers()) out += "cover: " + lat.id(a) + " " + lat.id(b) + "\n";
  return out;
}

// Weight file format: one `element value` line per carrier element,
// value a non-negative `p/q` or integer literal. Every element must be
// assigned exactly once.
inline WeightFunction parse_weights(const LatticePtr& lat, std::istream& in,
                                    const std::string& filename) {
  std::string line;
  int lineno = 0;
  std::map<std::string, Rat> values;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = detail::strip(line);
    if (s.empty() || s[0] == '#') continue;
    const auto t = detail::tokens(s);
    if (t.size() != 2) throw ParseError(filename, lineno, "expected 'element value'");
    if (values.count(t[0])) throw ParseError(filename, lineno, "duplicate weight for element '" + t[0] + "'");
    Rat v;
    try {
      v = parse_rational(t[1]);
    } catch (const Error& e) {
      throw ParseError(filename, lineno, e.what());
    }
    if (v < 0) throw ParseError(filename, lineno, "weights must be non-negative, got '" + t[1] + "'");
    values.emplace(t[0], std::move(v));
  }
  try {
    return WeightFunction::from_map(lat, values);
  } catch (const Error& e) {
    throw ParseError(filename, 0, e.what());
  }
}

inline WeightFunction load_weights(const LatticePtr& lat, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_weights(lat, in, path);
}

inline std::string weights_to_text(const WeightFunction& w) {
  std::string out;
  for (int i = 0; i < w.lattice().size(); ++i)
    out += w.lattice().id(i) + " " + rat_to_string(w[i]) + "\n";
  return out;
}

// Selection specs: "all", "@file" (whitespace-separated ids), or a
// comma-separated id list. Commas inside braces do not split, so
// powerset ids like {1,2} can be listed directly.
inline std::vector<std::string> split_selection_list(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(detail::strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!detail::strip(cur).empty() || !out.empty()) out.push_back(detail::strip(cur));
  return out;
}

inline Selection parse_selection(const LatticePtr& lat, const std::string& spec) {
  if (spec == "all") return Selection::all(*lat);
  if (spec.empty()) return Selection();
  if (spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParseError(spec.substr(1), 0, "cannot open selection file");
    std::vector<std::string> ids;
    std::string t;
    while (in >> t) ids.push_back(t);
    return Selection::of_ids(*lat, ids);
  }
  return Selection::of_ids(*lat, split_selection_list(spec));
}

}  // namespace latq
