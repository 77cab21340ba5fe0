#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "equicycle/blowup.hpp"
#include "equicycle/certificate.hpp"
#include "equicycle/rotational.hpp"

using namespace equicycle;

namespace {

std::vector<Cycle> sorted_canonical(const std::vector<Cycle>& cycles) {
  std::vector<Cycle> out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) out.push_back(c.canonical_form());
  std::sort(out.begin(), out.end());
  return out;
}

void check_same_system(const CycleSystem& a, const CycleSystem& b) {
  CHECK(a.graph == b.graph);
  CHECK(a.ell == b.ell);
  CHECK(sorted_canonical(a.cycles) == sorted_canonical(b.cycles));
  CHECK(a.colouring.entries() == b.colouring.entries());
  CHECK(a.provenance.route == b.provenance.route);
  CHECK(a.provenance.seed == b.provenance.seed);
  CHECK(a.provenance.v == b.provenance.v);
  CHECK(a.provenance.base_cycles == b.provenance.base_cycles);
}

long thrown_line(const std::string& text) {
  try {
    from_text(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("text writing is a fixed point of read-then-write") {
  CycleSystem system = decompose_k2l1(9);
  std::string text = to_text(system);
  CHECK(to_text(from_text(text)) == text);
  check_same_system(from_text(text), system);
}

TEST_CASE("json carries the same content") {
  CycleSystem system = decompose_k2l1(7);
  std::string j = to_json(system);
  CHECK(to_json(from_json(j)) == j);
  check_same_system(from_json(j), system);
}

TEST_CASE("blown-vertex certificates round-trip too") {
  CycleSystem system = decompose_c3_blowup(7);
  check_same_system(from_text(to_text(system)), system);
  check_same_system(from_json(to_json(system)), system);
}

TEST_CASE("reading tolerates scrambled input and rewrites canonically") {
  std::string text =
      "graph=complete:5\n"
      "cycle (1 0 2 4 3)\n"
      "\n"
      "colour 3 blue\n"
      "v=5\n"
      "cycle (0 1 3 2 4)\n"
      "colour 0 red\n"
      "colour 1 red\n"
      "colour 2 red\n"
      "colour 4 blue\n"
      "ell=5\n";
  CycleSystem parsed = from_text(text);
  CHECK(parsed.cycles.size() == 2);
  std::string canonical = to_text(parsed);
  // headers first, colours sorted, cycles as sorted least traversals
  CHECK(canonical ==
        "ell=5\n"
        "v=5\n"
        "graph=complete:5\n"
        "route=\n"
        "seed=0\n"
        "colour 0 red\n"
        "colour 1 red\n"
        "colour 2 red\n"
        "colour 3 blue\n"
        "colour 4 blue\n"
        "cycle (0 1 3 2 4)\n"
        "cycle (0 1 3 4 2)\n");
  CHECK(to_text(from_text(canonical)) == canonical);
}

TEST_CASE("parse errors carry the offending line") {
  // body line before its host is known
  CHECK(thrown_line("cycle (0 1 2)\nell=3\n") == 1);

  // missing headers are reported at the end of input
  CHECK(thrown_line("v=5\ngraph=complete:5\n") == 2);
  CHECK_THROWS_WITH_AS(from_text("v=5\ngraph=complete:5\n"),
                       "line 2: missing ell= header", ParseError);

  // v disagreeing with the host points at the v= line
  CHECK(thrown_line("ell=7\ngraph=complete-rotational:7\nv=10\n") == 3);

  // duplicate and unknown colours
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\n"
                    "colour 2 red\ncolour 2 blue\n") == 5);
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\ncolour 2 green\n") == 4);

  // junk
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\nbogus line\n") == 4);
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\ncycle (0 1\n") == 4);
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\ncycle (0 9 2)\n") == 4);
  CHECK(thrown_line("ell=x\n") == 1);

  // vertex kinds must match the host
  CHECK(thrown_line("ell=5\nv=5\ngraph=complete:5\ncolour 2_0 red\n") == 4);
  CHECK(thrown_line("ell=7\nv=15\ngraph=complete-rotational:7\n"
                    "colour (1,2) red\n") == 4);
}

TEST_CASE("json errors always report line 0") {
  try {
    from_json("{not json");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 0);
  }
  try {
    from_json("{\"ell\": 5}");  // missing everything else
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 0);
  }
}
