#include "equicycle/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "equicycle/graph.hpp"

namespace equicycle {

const CheckResult* Verdict::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Verdict::describe() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  out << (pass ? "PASS" : "FAIL") << " overall\n";
  return out.str();
}

bool verify_equitable_cycle(const Cycle& c, const Colouring& phi, long ell) {
  long red = 0, blue = 0;
  for (const auto& v : c.vertices()) {
    if (!phi.defined(v)) {
      throw std::invalid_argument("verify_equitable_cycle: vertex " + v.str() + " has no colour");
    }
    (phi.at(v) == Colour::Red ? red : blue) += 1;
  }
  long lo = std::min(red, blue), hi = std::max(red, blue);
  return static_cast<long>(c.length()) == ell && lo == (ell - 1) / 2 && hi == (ell + 1) / 2;
}

namespace {

std::string edge_str(const Edge& e) { return e.first.str() + "~" + e.second.str(); }

CheckResult check_edge_partition(const CycleSystem& s) {
  CheckResult r{"edge-partition", true, ""};
  std::map<Edge, int> covered;
  for (const auto& c : s.cycles) {
    c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
      covered[make_edge(u, v)] += 1;
    });
  }
  std::set<Edge> host;
  for (const auto& e : s.graph.edges()) host.insert(e);

  std::string duplicate, foreign, missing;
  for (const auto& [e, k] : covered) {
    if (host.count(e) == 0 && foreign.empty()) foreign = edge_str(e);
    if (k > 1 && duplicate.empty()) duplicate = edge_str(e) + " covered " + std::to_string(k) + "x";
  }
  for (const auto& e : host) {
    if (covered.count(e) == 0) {
      missing = edge_str(e);
      break;
    }
  }
  std::ostringstream w;
  if (!duplicate.empty()) w << "duplicate edge " << duplicate << "; ";
  if (!foreign.empty()) w << "edge " << foreign << " not in " << s.graph.str() << "; ";
  if (!missing.empty()) w << "host edge " << missing << " uncovered; ";
  if (w.tellp() > 0) {
    r.pass = false;
    r.witness = w.str();
  }
  return r;
}

CheckResult check_cycle_lengths(const CycleSystem& s, const Expectations& x) {
  CheckResult r{"cycle-lengths", true, ""};
  if (x.cycle_count && static_cast<long>(s.cycles.size()) != *x.cycle_count) {
    r.pass = false;
    r.witness = std::to_string(s.cycles.size()) + " cycles, want " + std::to_string(*x.cycle_count);
    return r;
  }
  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    const auto& c = s.cycles[i];
    if (static_cast<long>(c.length()) != s.ell) {
      r.pass = false;
      r.witness = "cycle #" + std::to_string(i) + " has length " + std::to_string(c.length()) +
                  ", want " + std::to_string(s.ell);
      return r;
    }
    std::set<LabelledVertex> seen(c.vertices().begin(), c.vertices().end());
    if (seen.size() != c.length()) {
      r.pass = false;
      r.witness = "cycle #" + std::to_string(i) + " repeats a vertex: " + c.str();
      return r;
    }
  }
  return r;
}

CheckResult check_cycle_balance(const CycleSystem& s) {
  CheckResult r{"cycle-balance", true, ""};
  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    long red = 0, blue = 0;
    bool uncoloured = false;
    for (const auto& v : s.cycles[i].vertices()) {
      if (!s.colouring.defined(v)) {
        uncoloured = true;
        break;
      }
      (s.colouring.at(v) == Colour::Red ? red : blue) += 1;
    }
    if (uncoloured) continue;  // reported by colour-classes
    long lo = std::min(red, blue), hi = std::max(red, blue);
    if (lo != (s.ell - 1) / 2 || hi != (s.ell + 1) / 2) {
      r.pass = false;
      r.witness = "cycle #" + std::to_string(i) + " has " + std::to_string(red) + " red / " +
                  std::to_string(blue) + " blue: " + s.cycles[i].str();
      return r;
    }
  }
  return r;
}

CheckResult check_colour_classes(const CycleSystem& s, const Expectations& x) {
  CheckResult r{"colour-classes", true, ""};
  for (const auto& v : s.graph.vertices()) {
    if (!s.colouring.defined(v)) {
      r.pass = false;
      r.witness = "vertex " + v.str() + " has no colour";
      return r;
    }
  }
  if (s.colouring.size() != static_cast<std::size_t>(s.graph.vertex_count())) {
    r.pass = false;
    r.witness = "colouring has " + std::to_string(s.colouring.size()) + " entries for " +
                std::to_string(s.graph.vertex_count()) + " vertices";
    return r;
  }
  if (x.class_sizes) {
    auto [red, blue] = s.colouring.class_sizes();
    if (*x.class_sizes != std::make_pair(red, blue)) {
      r.pass = false;
      r.witness = "class sizes (" + std::to_string(red) + " red, " + std::to_string(blue) +
                  " blue), want (" + std::to_string(x.class_sizes->first) + ", " +
                  std::to_string(x.class_sizes->second) + ")";
    }
  }
  return r;
}

CheckResult check_part_quotas(const CycleSystem& s, const Expectations& x) {
  CheckResult r{"part-quotas", true, ""};
  bool blown_host = false;
  for (const auto& v : s.graph.vertices()) {
    if (v.kind == VertexKind::Blown) {
      blown_host = true;
      break;
    }
  }
  if (!blown_host) return r;  // quota is a blow-up notion; vacuous elsewhere

  long want = x.per_part_red ? *x.per_part_red : (s.ell + 1) / 2;
  std::map<long, long> red_per_part;
  for (long g = 0; g < s.graph.s(); ++g) red_per_part[g] = 0;
  for (const auto& [v, colour] : s.colouring.entries()) {
    if (v.kind == VertexKind::Blown && colour == Colour::Red) red_per_part[v.a] += 1;
  }
  for (const auto& [g, red] : red_per_part) {
    if (red != want) {
      r.pass = false;
      r.witness = "part " + std::to_string(g) + " has " + std::to_string(red) +
                  " red vertices, want " + std::to_string(want);
      return r;
    }
  }
  return r;
}

}  // namespace

Verdict verify(const CycleSystem& system, const Expectations& expectations) {
  Verdict v;
  v.checks.push_back(check_edge_partition(system));
  v.checks.push_back(check_cycle_lengths(system, expectations));
  v.checks.push_back(check_cycle_balance(system));
  v.checks.push_back(check_colour_classes(system, expectations));
  v.checks.push_back(check_part_quotas(system, expectations));
  v.pass = std::all_of(v.checks.begin(), v.checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  return v;
}

}  // namespace equicycle
