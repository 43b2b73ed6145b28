#pragma once

#include <cstdint>
#include <stdexcept>

namespace treeinv {

// All weights, bounds, costs and targets are fixed-point scaled integers
// (decimal scale chosen at parse time). Every comparison the solvers make is
// exact; no floating point enters the core.
using Value = std::int64_t;
using NodeId = std::int32_t;
using EdgeId = std::int32_t;

// Magnitude guard: with |value| <= 2^40 and at most 2^20 nodes, every path
// sum and every delta computed by the solvers stays inside int64.
inline constexpr Value kValueLimit = Value{1} << 40;
inline constexpr int kNodeLimit = 1 << 20;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed tree: duplicate children, cycles, extra roots, disconnected nodes.
struct StructureError : Error {
  using Error::Error;
};

// Per-edge data violating l <= w <= u, c > 0 or the magnitude limit.
struct AttributeError : Error {
  using Error::Error;
};

// Argument outside an operation's domain (bad index, missing t0, ...).
struct InputError : Error {
  using Error::Error;
};

// Malformed instance document.
struct ParseError : Error {
  using Error::Error;
};

// Operation invoked outside its contract, e.g. constructing a solution from
// an infeasible cost level.
struct ContractError : Error {
  using Error::Error;
};

// Brute-force enumeration would exceed its combination budget.
struct OracleScaleError : Error {
  using Error::Error;
};

enum class SolveStatus { Solved, Infeasible, AlreadyOptimal };

inline const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solved:
      return "solved";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::AlreadyOptimal:
      return "already_optimal";
  }
  return "unknown";
}

}  // namespace treeinv
