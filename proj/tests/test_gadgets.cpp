#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "equicycle/differences.hpp"
#include "equicycle/gadgets.hpp"
#include "equicycle/graph.hpp"
#include "equicycle/oracle.hpp"

using namespace equicycle;

namespace {

LabelledVertex r(long a, int part, long n) {
  return LabelledVertex::rotational(a, part, n);
}

bool is_graceful(const std::vector<long>& labels) {
  const long h = static_cast<long>(labels.size());
  std::set<long> seen(labels.begin(), labels.end());
  if (static_cast<long>(seen.size()) != h || *seen.begin() != 0 ||
      *seen.rbegin() != h - 1)
    return false;
  std::set<long> diffs;
  for (long i = 0; i + 1 < h; ++i) diffs.insert(std::labs(labels[i] - labels[i + 1]));
  return static_cast<long>(diffs.size()) == h - 1 && *diffs.rbegin() == h - 1;
}

}  // namespace

TEST_CASE("zigzag fixtures") {
  CHECK(zigzag_labels(2) == std::vector<long>{0, 1});
  CHECK(zigzag_labels(6) == std::vector<long>{0, 5, 1, 4, 2, 3});
  CHECK_THROWS_AS(zigzag_labels(1), std::invalid_argument);
}

TEST_CASE("graceful paths anchor the leaf at the front") {
  CHECK(graceful_path(4, 0) == std::vector<long>{0, 3, 1, 2});
  CHECK(graceful_path(4, 1) == std::vector<long>{1, 2, 0, 3});
  for (long h = 2; h <= 9; ++h) {
    for (int leaf : {0, 1}) {
      if (leaf >= h) continue;
      std::vector<long> p = graceful_path(h, leaf);
      CAPTURE(h);
      CAPTURE(leaf);
      CHECK(p.front() == leaf);
      CHECK(is_graceful(p));
    }
  }
  CHECK_THROWS_AS(graceful_path(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(graceful_path(25, 0), std::invalid_argument);
}

TEST_CASE("graceful paths appear in the exhaustive listing") {
  for (long h = 3; h <= 8; ++h) {
    auto all = oracle::enumerate_graceful(h);
    for (int leaf : {0, 1}) {
      std::vector<long> p = graceful_path(h, leaf);
      CHECK(std::find(all.begin(), all.end(), p) != all.end());
    }
  }
}

TEST_CASE("p gadget steps across and back") {
  Path p = p_gadget(5, 3, 0, 14);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == r(5, 0, 14));
  CHECK(p[1] == r(8, 1, 14));
  CHECK(p[2] == r(3, 0, 14));
  CHECK(p_gadget(5, 3, 1, 14)[1] == r(8, 0, 14));
  CHECK(p_gadget(1, 3, 0, 14)[2] == r(13, 0, 14));  // wraps below zero
}

TEST_CASE("z gadget chains crossing steps grown by 4") {
  CHECK(z_gadget(6, 3, 0, 1, 14).empty());
  Path z = z_gadget(6, 3, 2, 1, 14);
  Path want{r(6, 1, 14), r(9, 0, 14), r(4, 1, 14), r(11, 0, 14), r(2, 1, 14)};
  CHECK(z == want);
}

TEST_CASE("y gadget walks descending differences") {
  Path y2 = y_gadget(2, 3, 2, 0, 26);
  CHECK(y2 == Path{r(2, 0, 26), r(6, 0, 26), r(3, 0, 26)});
  Path y3 = y_gadget(2, 3, 3, 0, 30);
  CHECK(y3 == Path{r(2, 0, 30), r(7, 0, 30), r(3, 0, 30), r(6, 0, 30)});

  Path rev = y_gadget(2, 3, 3, 0, 30, /*reversed=*/true);
  std::reverse(rev.begin(), rev.end());
  CHECK(rev == y3);

  CHECK(y_gadget(4, 9, 0, 1, 26) == Path{r(4, 1, 26)});
}

TEST_CASE("y terminal names the far endpoint") {
  for (long edges = 0; edges <= 6; ++edges) {
    Path y = y_gadget(5, 4, edges, 0, 34);
    CHECK(y.back().a == y_terminal(5, 4, edges, 34));
  }
}

TEST_CASE("y gadget consumes consecutive pure differences") {
  const long n = 34;
  Path y = y_gadget(5, 4, 5, 0, n);
  std::multiset<long> got;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    long d = mod_reduce(y[i + 1].a - y[i].a, n);
    got.insert(std::min(d, n - d));
  }
  CHECK(got == std::multiset<long>{4, 5, 6, 7, 8});
}

// --------------------------------------------------------------------------
// the cycle through infinity
// --------------------------------------------------------------------------

TEST_CASE("infinity cycle reproduces the K_69 part-0 fixture") {
  const long n = 34;
  Cycle got = infinity_cycle(17, {14, 13, 12, 11, 10, 9, 8}, 0);
  Cycle want({LabelledVertex::infinity(), r(0, 0, n), r(14, 0, n), r(1, 0, n),
              r(13, 0, n), r(2, 0, n), r(12, 0, n), r(3, 0, n), r(11, 0, n),
              r(28, 0, n), r(20, 0, n), r(29, 0, n), r(19, 0, n), r(30, 0, n),
              r(18, 0, n), r(31, 0, n), r(17, 0, n)});
  CHECK(got == want);
}

TEST_CASE("infinity cycle reproduces the K_69 part-1 fixture") {
  const long n = 34;
  Cycle got = infinity_cycle(17, {15, 14, 13, 12, 11, 9, 2}, 1);
  Cycle want({LabelledVertex::infinity(), r(0, 1, n), r(15, 1, n), r(1, 1, n),
              r(14, 1, n), r(2, 1, n), r(13, 1, n), r(4, 1, n), r(6, 1, n),
              r(23, 1, n), r(21, 1, n), r(30, 1, n), r(19, 1, n), r(31, 1, n),
              r(18, 1, n), r(32, 1, n), r(17, 1, n)});
  CHECK(got == want);
}

TEST_CASE("infinity cycle difference profile for arbitrary decreasing lists") {
  std::mt19937_64 rng(41);
  for (long ell : {7L, 11L, 15L, 21L, 27L}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long> pool(static_cast<std::size_t>(ell - 1));
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<long> D(pool.begin(), pool.begin() + (ell - 3) / 2);
      std::sort(D.rbegin(), D.rend());

      Cycle c = infinity_cycle(ell, D, trial % 2);
      CHECK(static_cast<long>(c.length()) == ell);
      DifferenceMultiset diffs = differences(c, 2 * ell);
      for (long d : D) CHECK(diffs.count(DifferenceClass::pure(trial % 2, d)) == 2);
      CHECK(diffs.count(DifferenceClass::pure(trial % 2, ell)) == 1);
      CHECK(diffs.infinity_incidences == 2);
    }
  }
}

TEST_CASE("infinity cycle validates its difference list") {
  CHECK_THROWS_AS(infinity_cycle(7, {2}, 0), std::invalid_argument);  // wrong size
  CHECK_THROWS_AS(infinity_cycle(7, {4, 4}, 0), std::invalid_argument);
  CHECK_THROWS_AS(infinity_cycle(7, {7, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(infinity_cycle(7, {4, 0}, 0), std::invalid_argument);
}

// --------------------------------------------------------------------------
// Hamiltonian decompositions
// --------------------------------------------------------------------------

namespace {

std::map<Edge, int> tally_edges(const std::vector<Cycle>& cycles) {
  std::map<Edge, int> tally;
  for (const Cycle& c : cycles)
    c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
      tally[make_edge(u, v)] += 1;
    });
  return tally;
}

bool exactly_covers(const std::vector<Cycle>& cycles, const GraphSpec& host) {
  std::map<Edge, int> tally = tally_edges(cycles);
  std::vector<Edge> want = host.edges();
  if (tally.size() != want.size()) return false;
  for (const Edge& e : want)
    if (tally[e] != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("walecki splits K_9 into four spanning cycles") {
  std::vector<Cycle> cycles = walecki(9);
  REQUIRE(cycles.size() == 4);
  for (const Cycle& c : cycles) CHECK(c.length() == 9);
  CHECK(exactly_covers(cycles, GraphSpec::complete_plain(9)));
  CHECK_THROWS_AS(walecki(8), std::invalid_argument);
}

TEST_CASE("two-generator pair covers its circulant") {
  auto [h1, h2] = two_generator_ham_pair(9, 3, 4);
  CHECK(h1.length() == 9);
  CHECK(h2.length() == 9);
  CHECK(exactly_covers({h1, h2}, GraphSpec::cayley_circulant(9, {3, 4})));
}

TEST_CASE("circulant decomposition covers generators 3 and up") {
  for (long ell : {7L, 9L, 11L, 13L, 15L}) {
    CAPTURE(ell);
    std::vector<Cycle> cycles = circulant_ham_decomposition(ell);
    CHECK(static_cast<long>(cycles.size()) == (ell - 5) / 2);
    std::vector<long> gens;
    for (long d = 3; d <= (ell - 1) / 2; ++d) gens.push_back(d);
    for (const Cycle& c : cycles) CHECK(static_cast<long>(c.length()) == ell);
    CHECK(exactly_covers(cycles, GraphSpec::cayley_circulant(ell, gens)));
  }
}
