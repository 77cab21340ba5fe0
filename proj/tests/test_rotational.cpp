#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "equicycle/differences.hpp"
#include "equicycle/errors.hpp"
#include "equicycle/gadgets.hpp"
#include "equicycle/rotational.hpp"
#include "equicycle/verifier.hpp"

using namespace equicycle;

namespace {

// Spell a cycle as residue/part pairs over Z_n x {0,1}.
Cycle rc(long n, const std::vector<std::pair<long, int>>& vs) {
  std::vector<LabelledVertex> out;
  for (const auto& [a, part] : vs)
    out.push_back(LabelledVertex::rotational(a, part, n));
  return Cycle(std::move(out));
}

const Cycle& named_base(const CycleSystem& system, const std::string& name) {
  for (const auto& [base_name, base] : system.provenance.base_cycles)
    if (base_name == name) return base;
  throw std::runtime_error("no base named " + name);
}

}  // namespace

// --------------------------------------------------------------------------
// K_{2l+1}
// --------------------------------------------------------------------------

TEST_CASE("K_19 base cycles") {
  CycleSystem system = decompose_k2l1(9);
  CHECK(named_base(system, "C_pure") ==
        rc(9, {{0, 0}, {4, 0}, {8, 0}, {3, 0}, {7, 0}, {2, 0}, {6, 0}, {1, 0}, {5, 0}}));
  CHECK(named_base(system, "C_cross") ==
        rc(9, {{0, 1}, {7, 0}, {1, 1}, {6, 0}, {2, 1}, {5, 0}, {3, 1}, {4, 0}, {4, 1}}));

  std::vector<LabelledVertex> inf_vs{LabelledVertex::infinity()};
  for (auto [a, p] : std::vector<std::pair<long, int>>{
           {2, 0}, {1, 0}, {3, 0}, {0, 0}, {1, 1}, {2, 1}, {0, 1}, {3, 1}})
    inf_vs.push_back(LabelledVertex::rotational(a, p, 9));
  CHECK(named_base(system, "C_inf") == Cycle(inf_vs));

  CHECK(system.cycles.size() == 19);
  CHECK(system.colouring.class_sizes() == std::pair<long, long>{9, 10});
  CHECK(system.provenance.route == "k2l1");
  CHECK(system.graph == GraphSpec::complete_rotational(9));
}

TEST_CASE("K_{2l+1} at the smallest admissible lengths") {
  for (long ell : {7L, 11L, 13L, 15L}) {
    CAPTURE(ell);
    CycleSystem system = decompose_k2l1(ell);
    CHECK(static_cast<long>(system.cycles.size()) == 2 * ell + 1);
    CHECK(system.colouring.class_sizes() == std::pair<long, long>{ell, ell + 1});
    Verdict verdict = verify(system);
    CHECK(verdict.pass);
  }
  CHECK_THROWS_AS(decompose_k2l1(5), parameter_error);
  CHECK_THROWS_AS(decompose_k2l1(8), parameter_error);
}

TEST_CASE("the part colouring swaps parity across parts") {
  Colouring phi = colouring_k2l1(9);
  CHECK(phi.at(LabelledVertex::rotational(0, 0, 9)) == Colour::Red);
  CHECK(phi.at(LabelledVertex::rotational(0, 1, 9)) == Colour::Blue);
  CHECK(phi.at(LabelledVertex::rotational(3, 0, 9)) == Colour::Blue);
  CHECK(phi.at(LabelledVertex::infinity()) == Colour::Blue);
}

// --------------------------------------------------------------------------
// the crossing pair, all four residue shapes
// --------------------------------------------------------------------------

TEST_CASE("crossing pair at l = 7") {
  CrossingPair pair = build_C0_C1(7);
  CHECK(pair.m == 3);
  CHECK(pair.c0 ==
        rc(14, {{2, 1}, {5, 0}, {0, 1}, {2, 0}, {5, 1}, {0, 0}, {3, 0}}));
  CHECK(pair.c1 ==
        rc(14, {{2, 0}, {6, 1}, {0, 0}, {2, 1}, {6, 0}, {0, 1}, {3, 1}}));
}

TEST_CASE("crossing pair at l = 15") {
  CrossingPair pair = build_C0_C1(15);
  CHECK(pair.m == 7);
  CHECK(pair.c0 == rc(30, {{6, 1}, {9, 0}, {4, 1}, {11, 0}, {2, 1}, {13, 0},
                           {0, 1}, {6, 0}, {9, 1}, {4, 0}, {11, 1}, {2, 0},
                           {13, 1}, {0, 0}, {7, 0}}));
  CHECK(pair.c1 == rc(30, {{6, 0}, {8, 1}, {4, 0}, {12, 1}, {2, 0}, {14, 1},
                           {0, 0}, {6, 1}, {8, 0}, {4, 1}, {12, 0}, {2, 1},
                           {14, 0}, {0, 1}, {7, 1}}));
}

TEST_CASE("crossing pair at l = 17") {
  CrossingPair pair = build_C0_C1(17);
  CHECK(pair.m == 7);
  CHECK(pair.c0 == rc(34, {{6, 0}, {9, 1}, {4, 0}, {11, 1}, {2, 0}, {13, 1},
                           {0, 0}, {6, 1}, {9, 0}, {4, 1}, {11, 0}, {2, 1},
                           {13, 0}, {0, 1}, {16, 0}, {23, 0}, {22, 1}}));
  CHECK(pair.c1 == rc(34, {{6, 1}, {8, 0}, {4, 1}, {12, 0}, {2, 1}, {14, 0},
                           {0, 1}, {6, 0}, {8, 1}, {4, 0}, {12, 1}, {2, 0},
                           {14, 1}, {0, 0}, {15, 1}, {22, 1}, {21, 0}}));
}

TEST_CASE("crossing pair at l = 19") {
  CrossingPair pair = build_C0_C1(19);
  CHECK(pair.m == 7);
  CHECK(pair.c0 == rc(38, {{6, 0}, {8, 1}, {4, 0}, {11, 1}, {3, 0}, {12, 1},
                           {2, 0}, {18, 1}, {0, 0}, {6, 1}, {8, 0}, {4, 1},
                           {11, 0}, {3, 1}, {12, 0}, {2, 1}, {18, 0}, {0, 1},
                           {37, 0}}));
  CHECK(pair.c1 == rc(38, {{6, 1}, {9, 0}, {4, 1}, {15, 0}, {3, 1}, {16, 0},
                           {2, 1}, {17, 0}, {0, 1}, {6, 0}, {9, 1}, {4, 0},
                           {15, 1}, {3, 0}, {16, 1}, {2, 0}, {17, 1}, {0, 0},
                           {37, 1}}));
}

TEST_CASE("crossing pair at l = 21") {
  CrossingPair pair = build_C0_C1(21);
  CHECK(pair.m == 10);
  CHECK(pair.c0 == rc(42, {{8, 0},  {9, 1},  {6, 0},  {11, 1}, {4, 0},
                           {13, 1}, {2, 0},  {15, 1}, {0, 0},  {8, 1},
                           {9, 0},  {6, 1},  {11, 0}, {4, 1},  {13, 0},
                           {2, 1},  {15, 0}, {0, 1},  {19, 0}, {29, 0},
                           {27, 1}}));
  CHECK(pair.c1 == rc(42, {{8, 1},  {12, 0}, {6, 1},  {16, 0}, {4, 1},
                           {18, 0}, {2, 1},  {20, 0}, {0, 1},  {8, 0},
                           {12, 1}, {6, 0},  {16, 1}, {4, 0},  {18, 1},
                           {2, 0},  {20, 1}, {0, 0},  {17, 1}, {27, 1},
                           {25, 0}}));
}

TEST_CASE("crossing pair covers all mixed classes except 0 and l") {
  for (long ell : {7L, 9L, 11L, 13L, 15L, 17L, 19L, 21L}) {
    CAPTURE(ell);
    const long n = 2 * ell;
    CrossingPair pair = build_C0_C1(ell);
    DifferenceMultiset joint = differences(pair.c0, n);
    DifferenceMultiset d1 = differences(pair.c1, n);
    for (const auto& [cls, cnt] : d1.counts) joint.counts[cls] += cnt;
    for (long v = 0; v < n; ++v)
      CHECK(joint.count(DifferenceClass::mixed(v)) ==
            ((v == 0 || v == ell) ? 0 : 1));
    CHECK(differences(pair.c0, n).count(DifferenceClass::pure(0, pair.m)) == 1);
    CHECK(differences(pair.c1, n).count(DifferenceClass::pure(1, pair.m)) == 1);
  }
}

// --------------------------------------------------------------------------
// the pure-heavy cycle
// --------------------------------------------------------------------------

TEST_CASE("pure-heavy cycle fixtures") {
  CHECK(build_Cp(7, 3) ==
        rc(14, {{0, 0}, {1, 0}, {5, 0}, {5, 1}, {0, 1}, {1, 1}, {7, 1}}));
  CHECK_THROWS_AS(build_Cp(7, 4), parameter_error);

  CHECK(build_Cp(9, 3) == rc(18, {{0, 0}, {1, 0}, {9, 0}, {2, 0}, {2, 1},
                                  {6, 1}, {0, 1}, {1, 1}, {9, 1}}));

  CHECK(build_Cp(11, 3) == rc(22, {{0, 0}, {1, 0}, {11, 0}, {2, 0}, {6, 0},
                                   {6, 1}, {2, 1}, {7, 1}, {0, 1}, {1, 1},
                                   {11, 1}}));

  CHECK(build_Cp(13, 5) == rc(26, {{0, 0}, {1, 0}, {13, 0}, {2, 0}, {6, 0},
                                   {3, 0}, {3, 1}, {6, 1}, {2, 1}, {8, 1},
                                   {0, 1}, {1, 1}, {13, 1}}));

  CHECK(build_Cp(19, 7) ==
        rc(38, {{0, 0}, {1, 0}, {19, 0}, {2, 0}, {10, 0}, {4, 0}, {9, 0},
                {5, 0}, {8, 0}, {8, 1}, {5, 1}, {9, 1}, {4, 1}, {10, 1},
                {2, 1}, {11, 1}, {0, 1}, {1, 1}, {19, 1}}));

  CHECK_THROWS_AS(build_Cp(17, 6), parameter_error);
  CHECK_THROWS_AS(build_Cp(17, 15), parameter_error);
}

TEST_CASE("pure-heavy cycle difference profile") {
  for (auto [ell, m] : std::vector<std::pair<long, long>>{
           {9, 3}, {13, 5}, {13, 6}, {17, 7}, {25, 11}, {11, 3}, {19, 7}}) {
    CAPTURE(ell);
    CAPTURE(m);
    const long n = 2 * ell;
    Cycle cp = build_Cp(ell, m);
    DifferenceMultiset diffs = differences(cp, n);
    CHECK(diffs.count(DifferenceClass::mixed(0)) == 1);
    CHECK(diffs.count(DifferenceClass::mixed(ell)) == 1);
    long pure0 = 0, pure1 = 0;
    for (const auto& [cls, cnt] : diffs.counts) {
      if (cls.kind != DifferenceClass::Kind::Pure) continue;
      CHECK(cnt == 1);
      (cls.part == 0 ? pure0 : pure1) += 1;
      CHECK(cls.value != 2);  // 2 belongs to the short-orbit cycle
      if (ell % 8 != 3) CHECK(cls.value != m);
    }
    CHECK(pure0 == (ell - 3) / 2);
    CHECK(pure1 == (ell - 1) / 2);
  }
}

// --------------------------------------------------------------------------
// K_{4l+1}
// --------------------------------------------------------------------------

TEST_CASE("K_29 infinity cycles absorb the leftovers") {
  CycleSystem system = decompose_k4l1(7);
  CHECK(named_base(system, "Cinf0") == infinity_cycle(7, {6, 5}, 0));
  CHECK(named_base(system, "Cinf1") == infinity_cycle(7, {4, 2}, 1));
  CHECK(system.cycles.size() == 58);
  CHECK(system.colouring.class_sizes() == std::pair<long, long>{14, 15});
}

TEST_CASE("K_69 base cycles") {
  CycleSystem system = decompose_k4l1(17);
  const long n = 34;
  CHECK(named_base(system, "Cp") ==
        rc(n, {{0, 0}, {1, 0}, {17, 0}, {2, 0}, {8, 0}, {3, 0}, {7, 0},
               {4, 0}, {4, 1}, {7, 1}, {3, 1}, {8, 1}, {2, 1}, {10, 1},
               {0, 1}, {1, 1}, {17, 1}}));
  CHECK(named_base(system, "C0") == build_C0_C1(17).c0);
  CHECK(named_base(system, "C1") == build_C0_C1(17).c1);
  CHECK(named_base(system, "Cinf0") ==
        infinity_cycle(17, {14, 13, 12, 11, 10, 9, 8}, 0));
  CHECK(named_base(system, "Cinf1") ==
        infinity_cycle(17, {15, 14, 13, 12, 11, 9, 2}, 1));

  std::vector<std::pair<long, int>> evens;
  for (long a = 0; a < n; a += 2) evens.emplace_back(a, 0);
  CHECK(named_base(system, "Cshort") == rc(n, evens));

  CHECK(system.cycles.size() == 8 * 17 + 2);
  CHECK(system.colouring.class_sizes() == std::pair<long, long>{34, 35});
}

TEST_CASE("K_{4l+1} across every residue shape") {
  for (long ell : {7L, 9L, 11L, 13L, 15L, 17L, 19L, 21L, 23L, 25L}) {
    CAPTURE(ell);
    CycleSystem system = decompose_k4l1(ell);
    CHECK(static_cast<long>(system.cycles.size()) == 8 * ell + 2);
    CHECK(system.colouring.class_sizes() ==
          std::pair<long, long>{2 * ell, 2 * ell + 1});
    CHECK(system.provenance.route == "k4l1");
    // six named bases, development orbit sizes 2l + 2l + 2l + l + l + 2
    CHECK(system.provenance.base_cycles.size() == 6);
  }
  CHECK_THROWS_AS(decompose_k4l1(6), parameter_error);
}
