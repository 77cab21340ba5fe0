#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "equicycle/cycle.hpp"

namespace equicycle {

// Difference bookkeeping for cycles on (Z_n x {0,1}) u {inf}, developed by
// adding a constant to residues modulo n.
//
// An edge a_i ~ b_i has i-pure difference +-(b-a); the class representative is
// taken in [1, n/2].  An edge a_0 ~ b_1 has mixed difference (b-a) mod n,
// measured from part 0 to part 1.  Edges at inf are counted separately.
struct DifferenceClass {
  enum class Kind : std::uint8_t { Pure, Mixed };
  Kind kind = Kind::Mixed;
  int part = 0;  // meaningful for Pure only
  long value = 0;

  static DifferenceClass pure(int part, long value) { return {Kind::Pure, part, value}; }
  static DifferenceClass mixed(long value) { return {Kind::Mixed, 0, value}; }

  std::string str() const;

  friend bool operator==(const DifferenceClass&, const DifferenceClass&) = default;
  friend bool operator<(const DifferenceClass& x, const DifferenceClass& y) {
    return std::tie(x.kind, x.part, x.value) < std::tie(y.kind, y.part, y.value);
  }
};

struct DifferenceMultiset {
  std::map<DifferenceClass, int> counts;
  int infinity_incidences = 0;

  int count(const DifferenceClass& c) const {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
  }
};

// Differences of every edge of c.  Requires Rotational (or Infinity) vertices.
DifferenceMultiset differences(const Cycle& c, long n);

// c with `shift` added to every residue; inf is fixed.
Cycle translate_cycle(const Cycle& c, long shift, long n);

// The orbit of c under development mod (n, -): cycles[i] = c + i, with the
// orbit length the least d > 0 such that c + d = c.  d always divides n.
struct Orbit {
  Cycle base;
  long length = 0;
  std::vector<Cycle> cycles;
};
Orbit develop(const Cycle& c, long n);

// Difference-coverage audit for a family of named base cycles intended to
// decompose K_{2n+1} (on the rotational universe) by development mod (n, -).
//
// Develops every base cycle and tallies, per difference class, which concrete
// edges get covered.  A class is `ok` when its edges are covered exactly once
// over the whole family; `missing`/`duplicate` otherwise.  Infinity incidences
// (inf, a_i) are audited the same way when has_infinity is set.
struct CoverageEntry {
  DifferenceClass cls;
  std::vector<std::string> suppliers;
  enum class Status { Ok, Missing, Duplicate } status = Status::Missing;
};

struct CoverageReport {
  std::vector<CoverageEntry> entries;
  bool infinity_ok = true;
  std::vector<std::string> infinity_suppliers;
  bool pass = false;

  const CoverageEntry* find(const DifferenceClass& cls) const;
  std::string describe() const;
};

CoverageReport audit_coverage(const std::vector<std::pair<std::string, Cycle>>& bases,
                              long n, bool has_infinity);

}  // namespace equicycle
