#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "boundsyn/logic.hpp"

namespace boundsyn::sat {

enum class Status { Sat, Unsat, Unknown };

struct Limits {
  /// Negative means unlimited.
  std::int64_t max_conflicts = -1;
  /// Polled between conflicts; a set flag yields Status::Unknown.
  const std::atomic<bool>* stop = nullptr;
};

/// CDCL solver: two watched literals, 1-UIP learning with local
/// minimization, VSIDS, phase saving, Luby restarts, activity-based
/// learnt-clause deletion. Literals use DIMACS conventions.
class Solver {
 public:
  Solver();
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  /// Makes variables 1..n available.
  void reserve_vars(int n);
  int num_vars() const;
  /// Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(const std::vector<int>& literals);

  Status solve(const Limits& limits = {});
  /// Model value of a 1-based variable after Status::Sat.
  bool value(int var) const;

  std::uint64_t conflicts() const;
  std::uint64_t decisions() const;

 private:
  struct Impl;
  Impl* impl_;
};

struct SatResult {
  Status status = Status::Unknown;
  /// Indexed by variable id; entry 0 unused.
  std::vector<bool> model;
};

/// Solves a CNF; on Sat the model is checked clause by clause in debug builds.
SatResult solve_cnf(const logic::Cnf& cnf, const Limits& limits = {});

}  // namespace boundsyn::sat
