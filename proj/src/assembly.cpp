#include "equicycle/assembly.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "equicycle/blowup.hpp"
#include "equicycle/errors.hpp"
#include "equicycle/gadgets.hpp"
#include "equicycle/rotational.hpp"
#include "equicycle/verifier.hpp"

namespace equicycle {

namespace {

void require_odd_ell(long ell, const char* who) {
  if (ell < 7 || ell % 2 == 0)
    throw parameter_error(std::string(who) + ": need odd ell >= 7, got ell=" +
                          std::to_string(ell));
}

}  // namespace

std::pair<long, long> solve_3m_5n(long edges) {
  if (edges < 0) throw parameter_error("solve_3m_5n: negative edge count");
  for (long n = 0; 5 * n <= edges; ++n)
    if ((edges - 5 * n) % 3 == 0) return {(edges - 5 * n) / 3, n};
  throw parameter_error("solve_3m_5n: " + std::to_string(edges) +
                        " is not representable as 3m + 5n");
}

// ---------------------------------------------------------------------------
// Triple systems for the n = 0 skeletons
// ---------------------------------------------------------------------------

namespace {

// v = 3 (mod 6): three point classes over an idempotent symmetric
// quasigroup on Z_{2t+1}.
std::vector<Cycle> bose_triples(long v) {
  const long t = (v - 3) / 6;
  const long w = 2 * t + 1;
  auto pt = [&](long x, long j) { return LabelledVertex::plain(x + j * w); };
  std::vector<Cycle> out;
  for (long x = 0; x < w; ++x)
    out.push_back(Cycle({pt(x, 0), pt(x, 1), pt(x, 2)}));
  for (long x = 0; x < w; ++x)
    for (long y = x + 1; y < w; ++y) {
      long z = ((x + y) * (t + 1)) % w;
      for (long j = 0; j < 3; ++j)
        out.push_back(Cycle({pt(x, j), pt(y, j), pt(z, (j + 1) % 3)}));
    }
  return out;
}

// v = 1 (mod 6): same shape over a half-idempotent quasigroup on Z_{2t},
// with one extra point absorbing the diagonal surplus.
std::vector<Cycle> skolem_triples(long v) {
  const long t = (v - 1) / 6;
  const long w = 2 * t;
  auto pt = [&](long x, long j) { return LabelledVertex::plain(x + j * w); };
  const LabelledVertex extra = LabelledVertex::plain(6 * t);
  auto f = [&](long x) { return x % 2 == 0 ? x / 2 : t + (x - 1) / 2; };
  std::vector<Cycle> out;
  for (long i = 0; i < t; ++i)
    out.push_back(Cycle({pt(i, 0), pt(i, 1), pt(i, 2)}));
  for (long i = 0; i < t; ++i)
    for (long j = 0; j < 3; ++j)
      out.push_back(Cycle({extra, pt(t + i, j), pt(i, (j + 1) % 3)}));
  for (long x = 0; x < w; ++x)
    for (long y = x + 1; y < w; ++y) {
      long z = f((x + y) % w);
      for (long j = 0; j < 3; ++j)
        out.push_back(Cycle({pt(x, j), pt(y, j), pt(z, (j + 1) % 3)}));
    }
  return out;
}

void check_skeleton_partition(const GraphSpec& host,
                              const std::vector<Cycle>& triangles,
                              const std::vector<Cycle>& pentagons) {
  std::map<Edge, int> tally;
  auto count = [&](const std::vector<Cycle>& cs) {
    for (const Cycle& c : cs)
      c.for_each_edge([&](const LabelledVertex& a, const LabelledVertex& b) {
        tally[make_edge(a, b)] += 1;
      });
  };
  count(triangles);
  count(pentagons);
  std::vector<Edge> want = host.edges();
  bool ok = tally.size() == want.size();
  for (const Edge& e : want) ok = ok && tally[e] == 1;
  if (!ok)
    throw audit_error("skeleton cycles do not partition " + host.str());
}

// ---------------------------------------------------------------------------
// Seeded exact-cover search for mixed triangle/pentagon skeletons
// ---------------------------------------------------------------------------

struct SkeletonSearch {
  long v = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> eidx;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<char> edge_free;
  long free_edges = 0;
  long m_left = 0;
  long n_left = 0;
  long nodes = 0;
  long budget = 0;
  bool exhausted = false;
  std::mt19937_64 rng;
  std::vector<std::array<int, 3>> tris;
  std::vector<std::array<int, 5>> pents;

  bool edge_is_free(int a, int b) const { return edge_free[eidx[a][b]]; }
  void set_edge(int a, int b, char val) {
    edge_free[eidx[a][b]] = val;
    free_edges += val ? 1 : -1;
  }

  long triangle_options(int u, int w) const {
    long count = 0;
    for (int x = 0; x < v; ++x)
      if (adj[u][x] && adj[w][x] && edge_is_free(u, x) && edge_is_free(w, x))
        ++count;
    return count;
  }

  bool dfs() {
    if (exhausted) return false;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (free_edges == 0) return true;

    // Branch on the free edge with the fewest triangle completions; any
    // edge that no triangle can cover must be taken by a pentagon anyway.
    int pick = -1;
    if (m_left > 0) {
      long best = std::numeric_limits<long>::max();
      for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
        if (!edge_free[e]) continue;
        long score = triangle_options(edge_list[e].first, edge_list[e].second);
        if (score < best) {
          best = score;
          pick = e;
          if (best == 0) break;
        }
      }
      if (best == 0 && n_left == 0) return false;
    } else {
      for (int e = 0; e < static_cast<int>(edge_list.size()); ++e)
        if (edge_free[e]) {
          pick = e;
          break;
        }
    }
    const auto [u, w] = edge_list[pick];

    if (m_left > 0) {
      std::vector<int> xs;
      for (int x = 0; x < v; ++x)
        if (adj[u][x] && adj[w][x] && edge_is_free(u, x) && edge_is_free(w, x))
          xs.push_back(x);
      std::shuffle(xs.begin(), xs.end(), rng);
      for (int x : xs) {
        set_edge(u, w, 0);
        set_edge(u, x, 0);
        set_edge(w, x, 0);
        --m_left;
        tris.push_back({u, w, x});
        if (dfs()) return true;
        tris.pop_back();
        ++m_left;
        set_edge(u, w, 1);
        set_edge(u, x, 1);
        set_edge(w, x, 1);
        if (exhausted) return false;
      }
    }

    if (n_left > 0) {
      std::vector<std::array<int, 3>> paths;
      for (int a = 0; a < v; ++a) {
        if (a == w || !adj[u][a] || !edge_is_free(u, a)) continue;
        for (int b = 0; b < v; ++b) {
          if (b == u || b == w || b == a || !adj[a][b] || !edge_is_free(a, b))
            continue;
          // No orientation dedup here: with the (u, w) edge anchored, u's
          // cycle-neighbour a and w's cycle-neighbour c determine the
          // pentagon uniquely, so every (a, b, c) triple is distinct.
          for (int c = 0; c < v; ++c) {
            if (c == u || c == w || c == a || c == b || !adj[b][c] ||
                !adj[c][w])
              continue;
            if (!edge_is_free(b, c) || !edge_is_free(c, w)) continue;
            paths.push_back({a, b, c});
          }
        }
      }
      std::shuffle(paths.begin(), paths.end(), rng);
      for (const auto& [a, b, c] : paths) {
        set_edge(u, w, 0);
        set_edge(u, a, 0);
        set_edge(a, b, 0);
        set_edge(b, c, 0);
        set_edge(c, w, 0);
        --n_left;
        pents.push_back({u, a, b, c, w});
        if (dfs()) return true;
        pents.pop_back();
        ++n_left;
        set_edge(u, w, 1);
        set_edge(u, a, 1);
        set_edge(a, b, 1);
        set_edge(b, c, 1);
        set_edge(c, w, 1);
        if (exhausted) return false;
      }
    }
    return false;
  }
};

}  // namespace

SkeletonDecomposition decompose_into_3_5_cycles(const GraphSpec& host, long m,
                                                long n, std::uint64_t seed) {
  if (host.kind() != GraphSpec::Kind::CompletePlain &&
      host.kind() != GraphSpec::Kind::CompleteMinusFactor)
    throw parameter_error(
        "decompose_into_3_5_cycles: host must be complete or "
        "complete-minus-factor, got " +
        host.str());
  if (m < 0 || n < 0 || 3 * m + 5 * n != host.edge_count())
    throw parameter_error("decompose_into_3_5_cycles: 3*" + std::to_string(m) +
                          " + 5*" + std::to_string(n) + " != " +
                          std::to_string(host.edge_count()) + " edges of " +
                          host.str());

  const long v = host.vertex_count();
  SkeletonDecomposition result{host, {}, {}};
  if (m == 0 && n == 0) return result;

  if (n == 0 && host.kind() == GraphSpec::Kind::CompletePlain &&
      (v % 6 == 1 || v % 6 == 3)) {
    result.triangles = v % 6 == 3 ? bose_triples(v) : skolem_triples(v);
    check_skeleton_partition(host, result.triangles, result.pentagons);
    return result;
  }

  std::vector<Edge> edges = host.edges();
  for (int attempt = 0; attempt < 24; ++attempt) {
    if (deadline_exceeded())
      throw search_budget_error(
          "time budget exhausted decomposing " + host.str() +
          " into triangles and pentagons");
    SkeletonSearch s;
    s.v = v;
    s.adj.assign(v, std::vector<char>(v, 0));
    s.eidx.assign(v, std::vector<int>(v, -1));
    for (const Edge& e : edges) {
      int a = static_cast<int>(e.first.a), b = static_cast<int>(e.second.a);
      s.adj[a][b] = s.adj[b][a] = 1;
      s.eidx[a][b] = s.eidx[b][a] = static_cast<int>(s.edge_list.size());
      s.edge_list.emplace_back(a, b);
    }
    s.edge_free.assign(s.edge_list.size(), 1);
    s.free_edges = static_cast<long>(s.edge_list.size());
    s.m_left = m;
    s.n_left = n;
    s.budget = 2'000'000;
    s.rng.seed(seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    if (!s.dfs()) continue;

    for (const auto& [a, b, c] : s.tris)
      result.triangles.push_back(Cycle({LabelledVertex::plain(a),
                                        LabelledVertex::plain(b),
                                        LabelledVertex::plain(c)}));
    for (const auto& [a, b, c, d, e] : s.pents)
      result.pentagons.push_back(
          Cycle({LabelledVertex::plain(a), LabelledVertex::plain(b),
                 LabelledVertex::plain(c), LabelledVertex::plain(d),
                 LabelledVertex::plain(e)}));
    check_skeleton_partition(host, result.triangles, result.pentagons);
    return result;
  }
  throw search_budget_error("node budget exhausted decomposing " + host.str() +
                            " into " + std::to_string(m) + " triangles and " +
                            std::to_string(n) + " pentagons");
}

// ---------------------------------------------------------------------------
// Placing the building blocks
// ---------------------------------------------------------------------------

namespace {

// Vertex bijection carrying one complete block K_{2l+1} onto the parts
// {pa, pb} plus infinity, chosen so the block's colour classes land exactly
// on the global pattern's classes (sizes force the red/blue swap).
std::map<LabelledVertex, LabelledVertex> block_bijection(
    const CycleSystem& block, long ell, long pa, long pb, long s_host,
    const std::vector<Colour>& pattern) {
  std::vector<LabelledVertex> abstract_red, abstract_blue;
  for (const auto& [vertex, colour] : block.colouring.entries())
    (colour == Colour::Red ? abstract_red : abstract_blue).push_back(vertex);

  std::vector<LabelledVertex> target_red, target_blue;
  for (long p : {pa, pb})
    for (long h = 0; h < ell; ++h) {
      LabelledVertex vtx = LabelledVertex::blown(p, h, s_host, ell);
      (pattern[static_cast<std::size_t>(h)] == Colour::Red ? target_red
                                                           : target_blue)
          .push_back(vtx);
    }
  target_blue.push_back(LabelledVertex::infinity());
  std::sort(target_red.begin(), target_red.end());
  std::sort(target_blue.begin(), target_blue.end());

  if (abstract_red.size() != target_blue.size() ||
      abstract_blue.size() != target_red.size())
    throw audit_error("block colour classes do not match the slot sizes");

  std::map<LabelledVertex, LabelledVertex> out;
  for (std::size_t i = 0; i < abstract_red.size(); ++i)
    out.emplace(abstract_red[i], target_blue[i]);
  for (std::size_t i = 0; i < abstract_blue.size(); ++i)
    out.emplace(abstract_blue[i], target_red[i]);
  return out;
}

// Copies a blown-cycle system onto the parts listed in gs (traversal order
// of a skeleton cycle), re-labelling second coordinates so the copy's own
// colour classes coincide with the global pattern.
void place_blown_copy(const CycleSystem& sub, const std::vector<long>& gs,
                      long s_host, long ell,
                      const std::vector<Colour>& pattern,
                      std::vector<Cycle>& sink) {
  const long s = static_cast<long>(gs.size());
  std::vector<long> sub_red, sub_blue, global_red, global_blue;
  for (long h = 0; h < ell; ++h) {
    Colour own = sub.colouring.at(LabelledVertex::blown(0, h, s, ell));
    (own == Colour::Red ? sub_red : sub_blue).push_back(h);
    (pattern[static_cast<std::size_t>(h)] == Colour::Red ? global_red
                                                          : global_blue)
        .push_back(h);
  }
  if (sub_red.size() != global_red.size())
    throw audit_error("blown copy colour classes do not match the pattern");
  std::vector<long> relabel(static_cast<std::size_t>(ell), 0);
  for (std::size_t i = 0; i < sub_red.size(); ++i)
    relabel[static_cast<std::size_t>(sub_red[i])] = global_red[i];
  for (std::size_t i = 0; i < sub_blue.size(); ++i)
    relabel[static_cast<std::size_t>(sub_blue[i])] = global_blue[i];

  for (const Cycle& c : sub.cycles) {
    std::vector<LabelledVertex> vs;
    vs.reserve(c.length());
    for (const LabelledVertex& u : c.vertices())
      vs.push_back(LabelledVertex::blown(
          gs[static_cast<std::size_t>(u.a)],
          relabel[static_cast<std::size_t>(u.b)], s_host, ell));
    sink.emplace_back(std::move(vs));
  }
}

std::vector<long> traversal_parts(const Cycle& skeleton_cycle) {
  std::vector<long> out;
  for (const LabelledVertex& u : skeleton_cycle.vertices()) out.push_back(u.a);
  return out;
}

void blow_up_skeleton(const SkeletonDecomposition& skel, long ell,
                      std::uint64_t seed, long s_host,
                      const std::vector<Colour>& pattern,
                      std::vector<Cycle>& sink) {
  if (!skel.triangles.empty()) {
    CycleSystem c3 = decompose_c3_blowup(ell);
    for (const Cycle& t : skel.triangles)
      place_blown_copy(c3, traversal_parts(t), s_host, ell, pattern, sink);
  }
  if (!skel.pentagons.empty()) {
    CycleSystem c5 = decompose_c5_blowup(ell, seed);
    for (const Cycle& p : skel.pentagons)
      place_blown_copy(c5, traversal_parts(p), s_host, ell, pattern, sink);
  }
}

void check_assembled(const CycleSystem& system, long red, long blue,
                     long cycle_count) {
  Expectations want;
  want.class_sizes = std::pair<long, long>{red, blue};
  want.cycle_count = cycle_count;
  Verdict verdict = verify(system, want);
  if (!verdict.pass)
    throw audit_error(system.provenance.route + "(ell=" +
                      std::to_string(system.ell) + ", v=" +
                      std::to_string(system.provenance.v) +
                      "): assembled system fails verification\n" +
                      verdict.describe());
}

}  // namespace

CycleSystem decompose_v1(long ell, long k, std::uint64_t seed) {
  require_odd_ell(ell, "decompose_v1");
  if (k < 1)
    throw parameter_error("decompose_v1: need k >= 1, got k=" +
                          std::to_string(k));
  if (k == 1) return decompose_k2l1(ell);
  if (k == 2) return decompose_k4l1(ell);

  const long s_host = 2 * k;
  const long v = 2 * k * ell + 1;
  std::vector<Colour> pattern = part_colour_pattern(ell);

  Colouring phi;
  for (long g = 0; g < s_host; ++g)
    for (long h = 0; h < ell; ++h)
      phi.set(LabelledVertex::blown(g, h, s_host, ell),
              pattern[static_cast<std::size_t>(h)]);
  phi.set(LabelledVertex::infinity(), Colour::Blue);

  CycleSystem system{GraphSpec::complete_blown(s_host, ell, true), ell, {},
                     std::move(phi),
                     Provenance{"skeleton-1mod2l", ell, v, seed, {}}};

  // One complete block per matched pair of parts, all sharing infinity.
  CycleSystem block = decompose_k2l1(ell);
  for (long i = 0; i < k; ++i) {
    auto to_parts =
        block_bijection(block, ell, 2 * i, 2 * i + 1, s_host, pattern);
    for (const Cycle& c : block.cycles) {
      std::vector<LabelledVertex> vs;
      vs.reserve(c.length());
      for (const LabelledVertex& u : c.vertices()) vs.push_back(to_parts.at(u));
      system.cycles.emplace_back(std::move(vs));
    }
  }

  // Remaining part pairs: a triangle/pentagon decomposition of the skeleton
  // K_{2k} minus the matched pairs, blown up to l-cycles.
  std::vector<std::pair<long, long>> matching;
  for (long i = 0; i < k; ++i) matching.emplace_back(2 * i, 2 * i + 1);
  GraphSpec skeleton = GraphSpec::complete_minus_factor(s_host, matching);
  auto [m, n] = solve_3m_5n(skeleton.edge_count());
  blow_up_skeleton(decompose_into_3_5_cycles(skeleton, m, n, seed), ell, seed,
                   s_host, pattern, system.cycles);

  check_assembled(system, k * (ell + 1), k * (ell - 1) + 1,
                  k * (2 * k * ell + 1));
  return system;
}

CycleSystem decompose_vl(long ell, long k, std::uint64_t seed) {
  require_odd_ell(ell, "decompose_vl");
  if (k < 0)
    throw parameter_error("decompose_vl: need k >= 0, got k=" +
                          std::to_string(k));

  const long s_host = 2 * k + 1;
  const long v = s_host * ell;
  std::vector<Colour> pattern = part_colour_pattern(ell);

  Colouring phi;
  for (long g = 0; g < s_host; ++g)
    for (long h = 0; h < ell; ++h)
      phi.set(LabelledVertex::blown(g, h, s_host, ell),
              pattern[static_cast<std::size_t>(h)]);

  CycleSystem system{GraphSpec::complete_blown(s_host, ell, false), ell, {},
                     std::move(phi),
                     Provenance{k == 0 ? "walecki" : "skeleton-lmod2l", ell, v,
                                seed, {}}};

  // Each part carries its own Hamiltonian decomposition of K_l; those
  // cycles visit every second coordinate once, so the pattern makes them
  // equitable with no further choices.
  std::vector<Cycle> ham = walecki(ell);
  for (long g = 0; g < s_host; ++g)
    for (const Cycle& c : ham) {
      std::vector<LabelledVertex> vs;
      vs.reserve(c.length());
      for (const LabelledVertex& u : c.vertices())
        vs.push_back(LabelledVertex::blown(g, u.a, s_host, ell));
      system.cycles.emplace_back(std::move(vs));
    }

  if (k >= 1) {
    GraphSpec skeleton = GraphSpec::complete_plain(s_host);
    auto [m, n] = solve_3m_5n(skeleton.edge_count());
    blow_up_skeleton(decompose_into_3_5_cycles(skeleton, m, n, seed), ell,
                     seed, s_host, pattern, system.cycles);
  }

  check_assembled(system, s_host * (ell + 1) / 2, s_host * (ell - 1) / 2,
                  s_host * (s_host * ell - 1) / 2);
  return system;
}

CycleSystem construct(long ell, long v, std::uint64_t seed) {
  require_odd_ell(ell, "construct");
  const long period = 2 * ell;
  if (v >= 2 * ell + 1 && v % period == 1)
    return decompose_v1(ell, v / period, seed);
  if (v >= ell && v % period == ell % period)
    return decompose_vl(ell, (v - ell) / period, seed);
  throw parameter_error(
      "construct: v=" + std::to_string(v) + " must be congruent to 1 or " +
      std::to_string(ell) + " (mod " + std::to_string(period) +
      ") with v >= " + std::to_string(ell));
}

}  // namespace equicycle
