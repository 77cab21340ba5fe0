#pragma once

#include "equicycle/colouring.hpp"
#include "equicycle/system.hpp"

namespace equicycle {

// 2-rotational systems on K_{2l+1} and K_{4l+1}: a handful of base cycles
// over (Z_n x {0,1}) u {inf} whose development mod (n, -) partitions the
// host.  Every decompose_* audits its own difference coverage and runs the
// verifier before returning.

// Red on even labels in part 0, reversed in part 1, inf blue.  Class sizes
// (l red, l+1 blue).
Colouring colouring_k2l1(long ell);

// K_{2l+1}, n = l: base cycles C_inf (graceful paths glued through inf),
// C_cross (the alternating crossing cycle) and C_pure (the short-orbit cycle
// stepping by (l-1)/2 in part 0); orbits l, l, 1.
CycleSystem decompose_k2l1(long ell);

// The crossing pair over Z_{2l} x {0,1}: jointly one edge of every mixed
// class except {0, l}, plus a single i-pure class +-m in C_i.  Which m comes
// out is forced by the residue of l mod 8.
struct CrossingPair {
  Cycle c0;
  Cycle c1;
  long m = 0;
};
CrossingPair build_C0_C1(long ell);

// The pure-heavy l-cycle over Z_{2l} x {0,1}: mixed differences exactly
// {0, l}, (l-3)/2 distinct pure_0 classes avoiding {2, m}, (l-1)/2 distinct
// pure_1 classes, and the part-swap pairing that keeps every translate
// equitable.  l == 3 (mod 8) takes the wider-spread variant that also skips
// pure difference (l-5)/2 (the m that case hands over is too small for the
// u-selection route).
Cycle build_Cp(long ell, long m);

// K_{4l+1}, n = 2l: six base cycles {C0, C1, Cp, Cinf0, Cinf1, Cshort} with
// orbits 2l, 2l, 2l, l, l, 2; 8l+2 cycles.  The infinity cycles absorb
// whatever pure classes the other four leave over, (l-3)/2 per part.
CycleSystem decompose_k4l1(long ell);

}  // namespace equicycle
