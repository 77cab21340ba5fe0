#include "equicycle/rotational.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equicycle/differences.hpp"
#include "equicycle/errors.hpp"
#include "equicycle/gadgets.hpp"
#include "equicycle/verifier.hpp"

namespace equicycle {

namespace {

void require_odd_ell(long ell, const char* who) {
  if (ell < 7 || ell % 2 == 0)
    throw parameter_error(std::string(who) + ": need odd ell >= 7, got ell=" +
                          std::to_string(ell));
}

// The case formulas below spell out a closed traversal whose last vertex
// repeats the first; drop the repeat before handing to close_path.
Cycle close_traversal(Path t) {
  if (t.size() < 3 || !(t.front() == t.back()))
    throw audit_error("traversal does not return to its start");
  t.pop_back();
  return close_path(std::move(t));
}

CycleSystem assemble(GraphSpec graph, long ell, long v, std::uint64_t seed,
                     std::string route,
                     std::vector<std::pair<std::string, Cycle>> bases,
                     Colouring phi, long red, long blue, long cycle_count) {
  const long n = graph.modulus();
  CoverageReport audit = audit_coverage(bases, n, true);
  if (!audit.pass)
    throw audit_error(route + "(" + std::to_string(ell) +
                      "): base cycles fail the difference audit\n" +
                      audit.describe());

  CycleSystem system{std::move(graph), ell, {}, std::move(phi),
                     Provenance{std::move(route), ell, v, seed, bases}};
  for (const auto& [name, base] : bases) {
    Orbit orbit = develop(base, n);
    for (Cycle& c : orbit.cycles) system.cycles.push_back(std::move(c));
  }

  Expectations want;
  want.class_sizes = std::pair<long, long>{red, blue};
  want.cycle_count = cycle_count;
  Verdict verdict = verify(system, want);
  if (!verdict.pass)
    throw audit_error(system.provenance.route + "(" + std::to_string(ell) +
                      "): developed system fails verification\n" +
                      verdict.describe());
  return system;
}

}  // namespace

// ---------------------------------------------------------------------------
// K_{2l+1}: three base cycles mod l
// ---------------------------------------------------------------------------

Colouring colouring_k2l1(long ell) {
  require_odd_ell(ell, "colouring_k2l1");
  Colouring phi;
  for (long a = 0; a < ell; ++a) {
    bool even = a % 2 == 0;
    phi.set(LabelledVertex::rotational(a, 0, ell),
            even ? Colour::Red : Colour::Blue);
    phi.set(LabelledVertex::rotational(a, 1, ell),
            even ? Colour::Blue : Colour::Red);
  }
  phi.set(LabelledVertex::infinity(), Colour::Blue);
  return phi;
}

CycleSystem decompose_k2l1(long ell) {
  require_odd_ell(ell, "decompose_k2l1");
  const long n = ell;
  const long h = (ell - 1) / 2;
  auto v0 = [&](long x) { return LabelledVertex::rotational(x, 0, n); };
  auto v1 = [&](long x) { return LabelledVertex::rotational(x, 1, n); };

  // Graceful path through part 0 ending at 0, then one through part 1
  // starting at 1.  The splice edge 0_0 ~ 1_1 realises mixed difference 1,
  // the one class the crossing cycle leaves out.
  std::vector<long> p0 = graceful_path(h, 0);
  std::reverse(p0.begin(), p0.end());
  std::vector<long> p1 = graceful_path(h, 1);
  Path t{LabelledVertex::infinity()};
  for (long x : p0) t.push_back(v0(x));
  for (long x : p1) t.push_back(v1(x));
  Cycle c_inf = close_path(std::move(t));

  // Crossing cycle: alternate j_1 with (l-2-j)_0, cap with h_1.  Its mixed
  // differences run over everything except 1; the cap edge is pure.
  Path cross;
  for (long j = 0; j <= (ell - 3) / 2; ++j) {
    cross.push_back(v1(j));
    cross.push_back(v0(ell - 2 - j));
  }
  cross.push_back(v1(h));
  Cycle c_cross = close_path(std::move(cross));

  // Multiples of h inside part 0: h is coprime to l, so this is a single
  // l-cycle, and it is invariant under development (orbit length 1).
  Path pure;
  for (long j = 0; j < ell; ++j) pure.push_back(v0(mod_reduce(j * h, n)));
  Cycle c_pure = close_path(std::move(pure));

  return assemble(GraphSpec::complete_rotational(n), ell, 2 * ell + 1, 0,
                  "k2l1",
                  {{"C_inf", c_inf}, {"C_cross", c_cross}, {"C_pure", c_pure}},
                  colouring_k2l1(ell), ell, ell + 1, 2 * ell + 1);
}

// ---------------------------------------------------------------------------
// K_{4l+1}: six base cycles mod 2l
// ---------------------------------------------------------------------------

CrossingPair build_C0_C1(long ell) {
  require_odd_ell(ell, "build_C0_C1");
  const long n = 2 * ell;
  auto v0 = [&](long x) { return LabelledVertex::rotational(x, 0, n); };
  auto v1 = [&](long x) { return LabelledVertex::rotational(x, 1, n); };

  switch (ell % 8) {
    case 7: {
      const long q = (ell - 3) / 2;
      Cycle c0 = close_traversal(concatenate_paths({
          z_gadget(q, 3, (ell - 3) / 4, 1, n),
          {v1(0), v0(q)},
          z_gadget(q, 3, (ell - 3) / 4, 0, n),
          {v0(0), v0((ell - 1) / 2), v1(q)},
      }));
      Cycle c1 = close_traversal(concatenate_paths({
          z_gadget(q, 2, (ell - 7) / 8, 0, n),
          z_gadget((ell + 1) / 4, (ell + 1) / 2, (ell + 1) / 8, 0, n),
          {v0(0), v1(q)},
          z_gadget(q, 2, (ell - 7) / 8, 1, n),
          z_gadget((ell + 1) / 4, (ell + 1) / 2, (ell + 1) / 8, 1, n),
          {v1(0), v1((ell - 1) / 2), v0(q)},
      }));
      return {c0, c1, (ell - 1) / 2};
    }
    case 1: {
      const long q = (ell - 5) / 2;
      Cycle c0 = close_traversal(concatenate_paths({
          z_gadget(q, 3, (ell - 5) / 4, 0, n),
          {v0(0), v1(q)},
          z_gadget(q, 3, (ell - 5) / 4, 1, n),
          {v1(0), v0(ell - 1), v0(ell - 1 + (ell - 3) / 2), v1(ell - 1 + q),
           v0(q)},
      }));
      Cycle c1 = close_traversal(concatenate_paths({
          z_gadget(q, 2, (ell - 9) / 8, 1, n),
          z_gadget((ell - 1) / 4, (ell - 1) / 2, (ell - 1) / 8, 1, n),
          {v1(0), v0(q)},
          z_gadget(q, 2, (ell - 9) / 8, 0, n),
          z_gadget((ell - 1) / 4, (ell - 1) / 2, (ell - 1) / 8, 0, n),
          {v0(0), v1(ell - 2), v1(ell - 2 + (ell - 3) / 2), v0(ell - 2 + q),
           v1(q)},
      }));
      return {c0, c1, (ell - 3) / 2};
    }
    case 5: {
      const long q = (ell - 5) / 2;
      Cycle c0 = close_traversal(concatenate_paths({
          z_gadget(q, 1, (ell - 5) / 4, 0, n),
          {v0(0), v1(q)},
          z_gadget(q, 1, (ell - 5) / 4, 1, n),
          {v1(0), v0(ell - 2), v0(ell - 2 + (ell - 1) / 2), v1(ell - 2 + q),
           v0(q)},
      }));
      Cycle c1 = close_traversal(concatenate_paths({
          z_gadget(q, 4, (ell - 13) / 8, 1, n),
          z_gadget((ell + 3) / 4, (ell - 1) / 2, (ell + 3) / 8, 1, n),
          {v1(0), v0(q)},
          z_gadget(q, 4, (ell - 13) / 8, 0, n),
          z_gadget((ell + 3) / 4, (ell - 1) / 2, (ell + 3) / 8, 0, n),
          {v0(0), v1(ell - 4), v1(ell - 4 + (ell - 1) / 2), v0(ell - 4 + q),
           v1(q)},
      }));
      return {c0, c1, (ell - 1) / 2};
    }
    default: {  // ell = 3 (mod 8)
      const long q = (ell - 7) / 2;
      const long b = (ell - 11) / 8;
      Cycle c0 = close_traversal(concatenate_paths({
          z_gadget(q, 2, b, 0, n),
          {v0((ell - 3) / 4), v1((3 * ell - 13) / 4), v0((ell - 7) / 4),
           v1((3 * ell - 9) / 4), v0((ell - 11) / 4)},
          z_gadget((ell - 11) / 4, (ell + 13) / 2, b, 0, n),
          {v0(0), v1(q)},
          z_gadget(q, 2, b, 1, n),
          {v1((ell - 3) / 4), v0((3 * ell - 13) / 4), v1((ell - 7) / 4),
           v0((3 * ell - 9) / 4), v1((ell - 11) / 4)},
          z_gadget((ell - 11) / 4, (ell + 13) / 2, b, 1, n),
          {v1(0), v0(2 * ell - 1), v0(q)},
      }));
      Cycle c1 = close_traversal(concatenate_paths({
          z_gadget(q, 3, b, 1, n),
          {v1((ell - 3) / 4), v0((3 * ell + 3) / 4), v1((ell - 7) / 4),
           v0((3 * ell + 7) / 4), v1((ell - 11) / 4)},
          z_gadget((ell - 11) / 4, (ell + 11) / 2, b, 1, n),
          {v1(0), v0(q)},
          z_gadget(q, 3, b, 0, n),
          {v0((ell - 3) / 4), v1((3 * ell + 3) / 4), v0((ell - 7) / 4),
           v1((3 * ell + 7) / 4), v0((ell - 11) / 4)},
          z_gadget((ell - 11) / 4, (ell + 11) / 2, b, 0, n),
          {v0(0), v1(2 * ell - 1), v1(q)},
      }));
      return {c0, c1, (ell - 5) / 2};
    }
  }
}

Cycle build_Cp(long ell, long m) {
  require_odd_ell(ell, "build_Cp");
  const long n = 2 * ell;
  auto v0 = [&](long x) { return LabelledVertex::rotational(x, 0, n); };
  auto v1 = [&](long x) { return LabelledVertex::rotational(x, 1, n); };

  if (ell == 7) {
    if (m != 3)
      throw parameter_error("build_Cp: ell=7 admits only m=3, got m=" +
                            std::to_string(m));
    return close_path({v0(0), v0(1), v0(5), v1(5), v1(0), v1(1), v1(7)});
  }

  if (ell % 8 == 3) {
    // Wider-spread variant; soaks up pure classes independent of m.
    if (ell == 11)
      return close_path({v0(0), v0(1), v0(11), v0(2), v0(6), v1(6), v1(2),
                         v1(7), v1(0), v1(1), v1(11)});
    const long c = (ell - 13) / 2;
    const long t = y_terminal(4, 3, c, n);
    return close_traversal(concatenate_paths({
        {v0(0), v0(1), v0(ell), v0(2), v0((ell + 1) / 2), v0(4)},
        y_gadget(4, 3, c, 0, n),
        {v0(t), v1(t)},
        y_gadget(4, 3, c, 1, n, /*reversed=*/true),
        {v1(4), v1((ell + 1) / 2), v1(2), v1((ell + 3) / 2), v1(0), v1(1),
         v1(ell), v0(0)},
    }));
  }

  if (m < (ell - 3) / 2 || m > ell - 3)
    throw parameter_error("build_Cp: m=" + std::to_string(m) +
                          " outside {" + std::to_string((ell - 3) / 2) + ".." +
                          std::to_string(ell - 3) + "} for ell=" +
                          std::to_string(ell));
  // Part 1 needs one vertex u with u and u-2 among the high residues and
  // both pure classes u, u-2 unused by the crossing pair.
  long u = -1;
  for (long cand = (ell + 1) / 2; cand <= ell - 2; ++cand) {
    if (cand != m && cand != m + 2) {
      u = cand;
      break;
    }
  }
  if (u < 0) throw audit_error("build_Cp: no admissible u");
  const long c = (ell - 9) / 2;
  const long t = y_terminal(2, 3, c, n);
  return close_traversal(concatenate_paths({
      {v0(0), v0(1), v0(ell), v0(2)},
      y_gadget(2, 3, c, 0, n),
      {v0(t), v1(t)},
      y_gadget(2, 3, c, 1, n, /*reversed=*/true),
      {v1(2), v1(u), v1(0), v1(1), v1(ell), v0(0)},
  }));
}

CycleSystem decompose_k4l1(long ell) {
  require_odd_ell(ell, "decompose_k4l1");
  const long n = 2 * ell;
  auto v0 = [&](long x) { return LabelledVertex::rotational(x, 0, n); };

  CrossingPair pair = build_C0_C1(ell);
  Cycle cp = build_Cp(ell, pair.m);

  // Even residues of part 0; translating by 2 maps it to itself, so the
  // orbit has length 2 and together the translates use pure classes +-2
  // in both parts.
  Path evens;
  for (long a = 0; a < n; a += 2) evens.push_back(v0(a));
  Cycle c_short = close_path(std::move(evens));

  // The two cycles through infinity absorb exactly the pure classes the
  // other four bases leave untouched; read those off rather than trusting
  // a closed form.
  auto leftover = [&](int part) {
    std::set<long> used;
    for (const Cycle* c : {&pair.c0, &pair.c1, &cp, &c_short}) {
      DifferenceMultiset diffs = differences(*c, n);
      for (const auto& [cls, cnt] : diffs.counts)
        if (cls.kind == DifferenceClass::Kind::Pure && cls.part == part)
          used.insert(cls.value);
    }
    std::vector<long> out;
    for (long d = ell - 1; d >= 1; --d)
      if (!used.count(d)) out.push_back(d);
    return out;
  };
  std::vector<long> d0 = leftover(0);
  std::vector<long> d1 = leftover(1);
  if (static_cast<long>(d0.size()) != (ell - 3) / 2 ||
      static_cast<long>(d1.size()) != (ell - 3) / 2)
    throw audit_error("decompose_k4l1(" + std::to_string(ell) +
                      "): leftover pure classes miscounted");
  Cycle cinf0 = infinity_cycle(ell, d0, 0);
  Cycle cinf1 = infinity_cycle(ell, d1, 1);

  Colouring phi;
  for (long a = 0; a < n; ++a) {
    bool low = a < ell;
    phi.set(LabelledVertex::rotational(a, 0, n),
            low ? Colour::Red : Colour::Blue);
    phi.set(LabelledVertex::rotational(a, 1, n),
            low ? Colour::Blue : Colour::Red);
  }
  phi.set(LabelledVertex::infinity(), Colour::Blue);

  return assemble(GraphSpec::complete_rotational(n), ell, 4 * ell + 1, 0,
                  "k4l1",
                  {{"C0", pair.c0},
                   {"C1", pair.c1},
                   {"Cp", cp},
                   {"Cinf0", cinf0},
                   {"Cinf1", cinf1},
                   {"Cshort", c_short}},
                  std::move(phi), n, n + 1, 8 * ell + 2);
}

}  // namespace equicycle
