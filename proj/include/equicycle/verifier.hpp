#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicycle/system.hpp"

namespace equicycle {

// Construction-agnostic checking of a CycleSystem against its declared host
// graph.  The checks trust nothing about how the system was built; the host's
// edge enumeration is the single source of truth.

struct CheckResult {
  std::string name;     // "edge-partition", "cycle-lengths", ...
  bool pass = false;
  std::string witness;  // empty when passing; a concrete offender otherwise
};

struct Verdict {
  std::vector<CheckResult> checks;
  bool pass = false;  // conjunction of the checks

  const CheckResult* find(const std::string& name) const;
  std::string describe() const;  // one line per check
};

// Optional sharpenings; when a field is unset the corresponding comparison is
// skipped (the structural checks always run).
struct Expectations {
  std::optional<std::pair<long, long>> class_sizes;  // (red, blue)
  std::optional<long> cycle_count;
  std::optional<long> per_part_red;  // blown hosts: red vertices in each {g} x Z_l
};

// Runs every check and reports them all, pass or fail:
//   edge-partition   cycle edges = host edges, each exactly once
//   cycle-lengths    every cycle simple, of length system.ell
//   cycle-balance    every cycle carries (l-1)/2 / (l+1)/2 of the colours
//   colour-classes   colouring total on the host, sizes as expected
//   part-quotas      blown hosts: per-part red counts (default (l+1)/2)
Verdict verify(const CycleSystem& system, const Expectations& expectations = {});

// True iff the colour counts over c are {(l-1)/2, (l+1)/2}.  Throws
// std::invalid_argument on an uncoloured vertex.
bool verify_equitable_cycle(const Cycle& c, const Colouring& phi, long ell);

}  // namespace equicycle
