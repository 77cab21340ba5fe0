#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "equicycle/system.hpp"

namespace equicycle {

// =========================================================================
// Putting complete graphs together: K_v for v = 1 (mod 2l) is covered by
// K_{2l+1} blocks around a shared vertex plus blown cycles over a skeleton
// decomposition of K_{2k} minus a perfect matching; v = l (mod 2l) uses a
// K_{2k+1} skeleton plus one Hamiltonian decomposition of K_l per part.
// =========================================================================

// Minimal-n solution of 3m + 5n = edges; rejects 1, 2, 4 and 7.
std::pair<long, long> solve_3m_5n(long edges);

// Edge partition of a skeleton graph (complete, or complete minus a perfect
// matching) into m triangles and n pentagons on plain vertices.
struct SkeletonDecomposition {
  GraphSpec host;
  std::vector<Cycle> triangles;
  std::vector<Cycle> pentagons;
};

// Triple systems are built directly when n = 0 allows it (v = 1, 3 mod 6);
// everything else runs a seeded exact-cover search.
SkeletonDecomposition decompose_into_3_5_cycles(const GraphSpec& host, long m,
                                                long n,
                                                std::uint64_t seed = 1);

// K_{2kl+1}, k >= 1.
CycleSystem decompose_v1(long ell, long k, std::uint64_t seed = 1);

// K_{(2k+1)l}, k >= 0.
CycleSystem decompose_vl(long ell, long k, std::uint64_t seed = 1);

// Dispatch on v mod 2l; the only entry point callers normally need.
CycleSystem construct(long ell, long v, std::uint64_t seed = 1);

}  // namespace equicycle
