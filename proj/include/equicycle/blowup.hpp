#pragma once

#include <cstdint>
#include <vector>

#include "equicycle/system.hpp"

namespace equicycle {

// =========================================================================
// Equitably coloured l-cycle decompositions of the blown cycles C_3[l] and
// C_5[l]: parts {g} x Z_l around a short cycle, complete bipartite between
// neighbouring parts.  These are the two building blocks every larger
// complete graph is assembled from, so each decomposition here carries its
// own colouring and is verifier-checked before it is returned.
// =========================================================================

// Which second coordinates are red.  Same pattern in every part, (l+1)/2 red
// per part; chosen so that complete-graph blocks and blown cycles can share
// one global colouring.
std::vector<Colour> part_colour_pattern(long ell);

// Lift a Hamiltonian cycle of K_l (plain vertices 0..l-1) to an l-cycle of
// C_s[l]: first coordinates walk 0,1,..,s-1 once and then alternate 0,1.
// With reversed set, the walk runs 0,s-1,..,1 and alternates 0,s-1 instead.
// Every second coordinate appears exactly once, so any colouring that is
// balanced within one part makes these cycles equitable for free.
Cycle project(const Cycle& hamiltonian, long s, bool reversed);

// Partition of Cay[Z_s x Z_l, {(+-1, +-d) : 3 <= d <= (l-1)/2}] into s(l-5)
// l-cycles: both projections of each cycle of a Hamiltonian decomposition of
// Cay[Z_l, +-{3..(l-1)/2}], developed by translation of the first
// coordinate.
std::vector<Cycle> decompose_omega2(long s, long ell, std::uint64_t seed = 1);

// 3l equitable l-cycles on C_3[l].
CycleSystem decompose_c3_blowup(long ell);

// 5l equitable l-cycles on C_5[l].  l = 7 uses a fixed starter list with its
// own even/odd colouring; l > 7 runs a seeded exact-cover search for the
// five base cycles on the short differences (results are memoised, and
// cached across runs in EQUICYCLE_CACHE_FILE when that is set).
CycleSystem decompose_c5_blowup(long ell, std::uint64_t seed = 1);

}  // namespace equicycle
