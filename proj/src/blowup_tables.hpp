#pragma once

namespace equicycle::detail {

// Five pinned base cycles for the short differences of C_5[l], flattened as
// 5*l (g, h) pairs in traversal order.  These were produced by the seeded
// slot search and fixed here so the common lengths never depend on search
// luck; they are screened and verifier-checked on every use like any other
// search result.  Returns nullptr when l is not pinned.
struct PinnedC5Bases {
  long ell;
  const short (*gh)[2];
};

const PinnedC5Bases* pinned_c5_bases(long ell);

}  // namespace equicycle::detail
