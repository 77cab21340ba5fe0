#include "equicycle/differences.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equicycle {

std::string DifferenceClass::str() const {
  std::ostringstream os;
  if (kind == Kind::Pure) {
    os << "pure" << part << " +-" << value;
  } else {
    os << "mixed " << value;
  }
  return os.str();
}

namespace {

void require_rotational(const LabelledVertex& v) {
  if (v.kind != VertexKind::Rotational && v.kind != VertexKind::Infinity) {
    throw std::invalid_argument("difference bookkeeping needs rotational vertices, got " + v.str());
  }
}

DifferenceClass classify_edge(const LabelledVertex& u, const LabelledVertex& v, long n) {
  if (u.b == v.b) {
    long d = mod_reduce(v.a - u.a, n);
    return DifferenceClass::pure(u.b, std::min(d, n - d));
  }
  const LabelledVertex& p0 = (u.b == 0) ? u : v;
  const LabelledVertex& p1 = (u.b == 0) ? v : u;
  return DifferenceClass::mixed(mod_reduce(p1.a - p0.a, n));
}

}  // namespace

DifferenceMultiset differences(const Cycle& c, long n) {
  DifferenceMultiset out;
  c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
    require_rotational(u);
    require_rotational(v);
    if (u.is_infinity() || v.is_infinity()) {
      out.infinity_incidences += 1;
      return;
    }
    out.counts[classify_edge(u, v, n)] += 1;
  });
  return out;
}

Cycle translate_cycle(const Cycle& c, long shift, long n) {
  std::vector<LabelledVertex> vs;
  vs.reserve(c.length());
  for (const LabelledVertex& v : c.vertices()) {
    require_rotational(v);
    vs.push_back(v.is_infinity() ? v : LabelledVertex::rotational(v.a + shift, v.b, n));
  }
  return Cycle(std::move(vs));
}

Orbit develop(const Cycle& c, long n) {
  Orbit orbit{c, 0, {}};
  Cycle canon = c.canonical_form();
  orbit.cycles.push_back(c);
  for (long d = 1; d <= n; ++d) {
    Cycle t = translate_cycle(c, d, n);
    if (t.canonical_form() == canon) {
      orbit.length = d;
      return orbit;
    }
    orbit.cycles.push_back(std::move(t));
  }
  throw std::logic_error("development never returned to the base cycle");
}

const CoverageEntry* CoverageReport::find(const DifferenceClass& cls) const {
  for (const CoverageEntry& e : entries) {
    if (e.cls == cls) return &e;
  }
  return nullptr;
}

std::string CoverageReport::describe() const {
  std::ostringstream os;
  for (const CoverageEntry& e : entries) {
    os << e.cls.str() << " <- ";
    for (std::size_t i = 0; i < e.suppliers.size(); ++i) {
      if (i) os << ", ";
      os << e.suppliers[i];
    }
    if (e.suppliers.empty()) os << "(nobody)";
    switch (e.status) {
      case CoverageEntry::Status::Ok: os << " [ok]"; break;
      case CoverageEntry::Status::Missing: os << " [missing]"; break;
      case CoverageEntry::Status::Duplicate: os << " [duplicate]"; break;
    }
    os << '\n';
  }
  os << "infinity incidences " << (infinity_ok ? "[ok]" : "[bad]") << '\n';
  os << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CoverageReport audit_coverage(const std::vector<std::pair<std::string, Cycle>>& bases,
                              long n, bool has_infinity) {
  using EdgeKey = std::pair<std::pair<int, long>, std::pair<int, long>>;
  auto key_of = [](const LabelledVertex& u, const LabelledVertex& v) {
    std::pair<int, long> ku{u.b, u.a}, kv{v.b, v.a};
    return ku < kv ? EdgeKey{ku, kv} : EdgeKey{kv, ku};
  };

  struct ClassTally {
    std::map<EdgeKey, int> edges;
    std::vector<std::string> suppliers;
  };
  std::map<DifferenceClass, ClassTally> tallies;
  std::map<std::pair<long, int>, int> infinity_hits;  // (residue, part) -> count
  std::vector<std::string> inf_suppliers;

  for (const auto& [name, base] : bases) {
    Orbit orbit = develop(base, n);
    bool touches_inf = false;
    std::set<DifferenceClass> classes_here;
    for (const Cycle& c : orbit.cycles) {
      c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
        if (u.is_infinity() || v.is_infinity()) {
          const LabelledVertex& other = u.is_infinity() ? v : u;
          infinity_hits[{other.a, other.b}] += 1;
          touches_inf = true;
          return;
        }
        DifferenceClass cls = classify_edge(u, v, n);
        tallies[cls].edges[key_of(u, v)] += 1;
        classes_here.insert(cls);
      });
    }
    for (const DifferenceClass& cls : classes_here) tallies[cls].suppliers.push_back(name);
    if (touches_inf) inf_suppliers.push_back(name);
  }

  CoverageReport report;
  report.pass = true;
  auto audit_class = [&](const DifferenceClass& cls, long expected_edges) {
    CoverageEntry entry;
    entry.cls = cls;
    auto it = tallies.find(cls);
    if (it != tallies.end()) entry.suppliers = it->second.suppliers;
    long covered = it == tallies.end() ? 0 : static_cast<long>(it->second.edges.size());
    bool dup = false;
    if (it != tallies.end()) {
      for (const auto& [key, count] : it->second.edges) {
        (void)key;
        if (count > 1) dup = true;
      }
    }
    if (dup) {
      entry.status = CoverageEntry::Status::Duplicate;
    } else if (covered < expected_edges) {
      entry.status = CoverageEntry::Status::Missing;
    } else {
      entry.status = CoverageEntry::Status::Ok;
    }
    if (entry.status != CoverageEntry::Status::Ok) report.pass = false;
    report.entries.push_back(std::move(entry));
  };

  for (long d = 0; d < n; ++d) audit_class(DifferenceClass::mixed(d), n);
  for (int part = 0; part <= 1; ++part) {
    for (long d = 1; 2 * d <= n; ++d) {
      audit_class(DifferenceClass::pure(part, d), (2 * d == n) ? n / 2 : n);
    }
  }

  report.infinity_suppliers = inf_suppliers;
  if (has_infinity) {
    long good = 0;
    bool overshoot = false;
    for (const auto& [key, count] : infinity_hits) {
      (void)key;
      if (count == 1) {
        good += 1;
      } else {
        overshoot = true;
      }
    }
    report.infinity_ok = !overshoot && good == 2 * n;
  } else {
    report.infinity_ok = infinity_hits.empty();
  }
  if (!report.infinity_ok) report.pass = false;
  return report;
}

}  // namespace equicycle
