#pragma once

#include <stdexcept>
#include <string>

namespace latq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cover input contains a directed cycle, so it is not a poset.
struct CycleError : Error {
  using Error::Error;
};

// Some pair of elements has no unique least upper bound or greatest
// lower bound.
struct NotALatticeError : Error {
  using Error::Error;
};

struct NotDistributiveError : Error {
  using Error::Error;
};

// The carrier is not isomorphic to a powerset lattice, so complements
// are undefined.
struct NotBooleanError : Error {
  using Error::Error;
};

struct ParamError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::string file_, int line_, const std::string& cause)
      : Error(file_ + ":" + std::to_string(line_) + ": " + cause),
        file(std::move(file_)),
        line(line_) {}
  std::string file;
  int line;
};

}  // namespace latq
