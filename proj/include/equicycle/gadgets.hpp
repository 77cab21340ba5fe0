#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "equicycle/cycle.hpp"

namespace equicycle {

// Reusable constructive pieces: graceful path labellings, the short crossing
// paths and runs the rotational base cycles are assembled from, the cycle
// through infinity driven by an alternating difference sum, and Hamiltonian
// decompositions of K_v and of the circulant graphs the blow-ups lean on.

// -------------------------------------------------------------------------
// graceful paths

// The zigzag labelling 0, h-1, 1, h-2, ... of an h-vertex path; its edge
// differences are h-1, h-2, ..., 1.
std::vector<long> zigzag_labels(long h);

// A graceful labelling of the h-vertex path (labels a bijection onto
// {0..h-1}, consecutive differences a bijection onto {1..h-1}) with the label
// `leaf` at the front.  Deterministic: zigzag variants first, then a
// lex-first backtracking search.  h is capped at 20; the production
// constructions stay well under that.
std::vector<long> graceful_path(long h, int leaf);

// -------------------------------------------------------------------------
// crossing gadgets over Z_n x {0,1}, n = 2l

// The 2-path x_i, (x+a)_{i+1}, (x-2)_i (parts taken mod 2).
Path p_gadget(long x, long a, int part, long n);

// b copies of the 2-path chained end to end, the crossing step growing by 4
// each piece: starts at x_i, ends at (x-2b)_i.  b = 0 gives the empty path.
Path z_gadget(long x, long a, long b, int part, long n);

// A path of `edges` consecutive i-pure differences a, a+1, ..., a+edges-1,
// starting at x_i and zigzagging inside part i.  edges = 0 degenerates to the
// single vertex x_i.  `reversed` returns the same path walked backwards.
Path y_gadget(long x, long a, long edges, int part, long n, bool reversed = false);

// Label of the far endpoint of y_gadget(x, a, edges, ...), reduced mod n.
long y_terminal(long x, long a, long edges, long n);

// -------------------------------------------------------------------------
// the cycle through infinity

// Given a strictly decreasing list D of (l-3)/2 values in {1..l-1}, builds
// the l-cycle (inf, 0, s_1, ..., s_K, s_K+l, ..., s_1+l, l) on part `part`
// of Z_{2l}, where s_k is the alternating partial sum d_1 - d_2 + d_3 - ...
// Its differences are each +-d twice, the half modulus l once, plus two
// infinity edges; every partial sum lands strictly inside (0, l).
Cycle infinity_cycle(long ell, const std::vector<long>& D, int part);

// -------------------------------------------------------------------------
// Hamiltonian decompositions

// The classical decomposition of K_v, v odd, into (v-1)/2 Hamiltonian cycles
// (plain vertices 0..v-1).
std::vector<Cycle> walecki(long v);

// Two edge-disjoint Hamiltonian cycles jointly covering Cay[Z_n, +-{a, b}]
// (plain vertices).  Found by seeded backtracking and gated on the
// complement being a single cycle; memoized per (n, a, b).
std::pair<Cycle, Cycle> two_generator_ham_pair(long n, long a, long b,
                                               std::uint64_t seed = 1);

// Hamiltonian decomposition of Cay[Z_l, +-{3, 4, ..., (l-1)/2}] for odd
// l >= 7: generator pairs {3,4}, {5,6}, ... each give two cycles, and for
// l == 3 (mod 4) the leftover generator (l-1)/2 is coprime to l, so its own
// cycle closes the list.  (l-5)/2 cycles total.
std::vector<Cycle> circulant_ham_decomposition(long ell, std::uint64_t seed = 1);

}  // namespace equicycle
