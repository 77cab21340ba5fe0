#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "equicycle/graph.hpp"
#include "equicycle/system.hpp"

// Brute-force ground truth at desk scale.  Everything in here is deliberately
// naive; none of it shares counting logic with the verifier, which is the
// point of having it.
namespace equicycle::oracle {

// All graceful labellings of the h-vertex path, as label sequences; both
// traversal directions are listed.  Optional filter keeps those with `leaf`
// at an endpoint.  h capped at 12.
std::vector<std::vector<long>> enumerate_graceful(long h, std::optional<long> leaf = {});

// Complete backtracking search for a partition of the host's edges into
// cycles of the given lengths.  Returns std::nullopt when exhaustion proves
// there is none.  Hosts capped at 12 vertices / 40 edges.
std::optional<std::vector<Cycle>> exact_cover_decompose(const GraphSpec& host,
                                                        const std::vector<long>& lengths);

// Independent tallies over a candidate system.
struct Recount {
  long covered_once = 0;   // host edges hit exactly once
  long covered_more = 0;   // host edges hit at least twice
  long uncovered = 0;      // host edges never hit
  long foreign = 0;        // cycle edges that are not host edges
  std::vector<std::pair<long, long>> cycle_profiles;  // (red, blue) per cycle
  std::pair<long, long> class_sizes{0, 0};            // (red, blue) overall
};
Recount recount(const CycleSystem& system);

}  // namespace equicycle::oracle
