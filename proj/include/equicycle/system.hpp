#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equicycle/colouring.hpp"
#include "equicycle/cycle.hpp"
#include "equicycle/graph.hpp"

namespace equicycle {

// Where a system came from: which construction route, its parameters, and the
// named base cycles (for routes built by development).  Searched routes record
// the seed that reproduces them.
struct Provenance {
  std::string route;
  long ell = 0;
  long v = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, Cycle>> base_cycles;
};

// A (candidate) ell-cycle decomposition of a host graph together with a total
// 2-colouring.  Nothing here promises validity; the verifier decides that.
struct CycleSystem {
  GraphSpec graph;
  long ell = 0;
  std::vector<Cycle> cycles;
  Colouring colouring;
  Provenance provenance;
};

}  // namespace equicycle
