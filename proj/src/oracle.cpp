#include "equicycle/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "equicycle/colouring.hpp"

namespace equicycle::oracle {

namespace {

void graceful_enum_dfs(long h, std::vector<long>& seq, std::uint32_t used_labels,
                       std::uint32_t used_diffs,
                       std::vector<std::vector<long>>& out) {
  if (static_cast<long>(seq.size()) == h) {
    out.push_back(seq);
    return;
  }
  for (long label = 0; label < h; ++label) {
    if (used_labels & (1u << label)) continue;
    if (!seq.empty()) {
      long diff = std::labs(label - seq.back());
      if (used_diffs & (1u << diff)) continue;
      seq.push_back(label);
      graceful_enum_dfs(h, seq, used_labels | (1u << label), used_diffs | (1u << diff), out);
      seq.pop_back();
    } else {
      seq.push_back(label);
      graceful_enum_dfs(h, seq, used_labels | (1u << label), used_diffs, out);
      seq.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<long>> enumerate_graceful(long h, std::optional<long> leaf) {
  if (h < 2 || h > 12) throw std::invalid_argument("enumerate_graceful handles 2 <= h <= 12");
  std::vector<std::vector<long>> all;
  std::vector<long> seq;
  graceful_enum_dfs(h, seq, 0, 0, all);
  if (!leaf) return all;
  std::vector<std::vector<long>> kept;
  for (const auto& s : all) {
    if (s.front() == *leaf || s.back() == *leaf) kept.push_back(s);
  }
  return kept;
}

namespace {

struct CoverSearch {
  long v = 0;
  std::vector<LabelledVertex> verts;
  std::vector<std::vector<char>> adj;      // remaining edges
  std::vector<long> lengths;               // remaining lengths, sorted
  std::vector<std::vector<long>> found;    // cycles as vertex indices
  long nodes = 0;

  bool solve() {
    if (++nodes > 50'000'000) throw std::runtime_error("exact_cover_decompose budget exceeded");
    long eu = -1, ev = -1;
    for (long i = 0; i < v && eu < 0; ++i) {
      for (long j = i + 1; j < v; ++j) {
        if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          eu = i;
          ev = j;
          break;
        }
      }
    }
    if (eu < 0) return lengths.empty();
    if (lengths.empty()) return false;

    long last = -1;
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      long len = lengths[li];
      if (len == last) continue;  // same length as the branch just tried
      last = len;
      lengths.erase(lengths.begin() + static_cast<long>(li));
      std::vector<long> path{eu, ev};
      std::vector<char> on_path(static_cast<std::size_t>(v), 0);
      on_path[static_cast<std::size_t>(eu)] = 1;
      on_path[static_cast<std::size_t>(ev)] = 1;
      take(eu, ev);
      if (extend(path, on_path, len)) return true;
      give(eu, ev);
      lengths.insert(lengths.begin() + static_cast<long>(li), len);
      last = len;
    }
    return false;
  }

  // Grow the path to `len` vertices and close it back to path[0].
  bool extend(std::vector<long>& path, std::vector<char>& on_path, long len) {
    long at = path.back();
    if (static_cast<long>(path.size()) == len) {
      if (!adj[static_cast<std::size_t>(at)][static_cast<std::size_t>(path[0])]) return false;
      take(at, path[0]);
      found.push_back(path);
      if (solve()) return true;
      found.pop_back();
      give(at, path[0]);
      return false;
    }
    for (long to = 0; to < v; ++to) {
      if (on_path[static_cast<std::size_t>(to)]) continue;
      if (!adj[static_cast<std::size_t>(at)][static_cast<std::size_t>(to)]) continue;
      on_path[static_cast<std::size_t>(to)] = 1;
      path.push_back(to);
      take(at, to);
      if (extend(path, on_path, len)) return true;
      give(at, to);
      path.pop_back();
      on_path[static_cast<std::size_t>(to)] = 0;
    }
    return false;
  }

  void take(long x, long y) {
    adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 0;
    adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 0;
  }
  void give(long x, long y) {
    adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
  }
};

}  // namespace

std::optional<std::vector<Cycle>> exact_cover_decompose(const GraphSpec& host,
                                                        const std::vector<long>& lengths) {
  if (host.vertex_count() > 12) throw std::invalid_argument("oracle hosts capped at 12 vertices");
  if (host.edge_count() > 40) throw std::invalid_argument("oracle hosts capped at 40 edges");
  long total = 0;
  for (long len : lengths) {
    if (len < 3) throw std::invalid_argument("cycle lengths start at 3");
    total += len;
  }
  if (total != host.edge_count()) return std::nullopt;

  CoverSearch search;
  search.verts = host.vertices();
  search.v = static_cast<long>(search.verts.size());
  std::map<LabelledVertex, long> index;
  for (long i = 0; i < search.v; ++i) index[search.verts[static_cast<std::size_t>(i)]] = i;
  search.adj.assign(static_cast<std::size_t>(search.v),
                    std::vector<char>(static_cast<std::size_t>(search.v), 0));
  for (const Edge& e : host.edges()) {
    search.give(index.at(e.first), index.at(e.second));
  }
  search.lengths = lengths;
  std::sort(search.lengths.begin(), search.lengths.end());

  if (!search.solve()) return std::nullopt;
  std::vector<Cycle> out;
  for (const auto& idxs : search.found) {
    std::vector<LabelledVertex> vs;
    for (long i : idxs) vs.push_back(search.verts[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(vs));
  }
  return out;
}

Recount recount(const CycleSystem& system) {
  Recount rc;

  auto token = [](const LabelledVertex& a, const LabelledVertex& b) {
    std::string sa = a.str(), sb = b.str();
    return sa < sb ? sa + "|" + sb : sb + "|" + sa;
  };

  std::vector<std::string> host_tokens;
  for (const Edge& e : system.graph.edges()) host_tokens.push_back(token(e.first, e.second));
  std::sort(host_tokens.begin(), host_tokens.end());

  std::vector<std::string> cycle_tokens;
  for (const Cycle& c : system.cycles) {
    c.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
      cycle_tokens.push_back(token(u, v));
    });
  }
  std::sort(cycle_tokens.begin(), cycle_tokens.end());

  std::size_t i = 0, j = 0;
  while (i < host_tokens.size() || j < cycle_tokens.size()) {
    if (j == cycle_tokens.size() ||
        (i < host_tokens.size() && host_tokens[i] < cycle_tokens[j])) {
      rc.uncovered += 1;
      ++i;
      continue;
    }
    if (i == host_tokens.size() || cycle_tokens[j] < host_tokens[i]) {
      rc.foreign += 1;
      ++j;
      continue;
    }
    std::size_t run = 0;
    while (j < cycle_tokens.size() && cycle_tokens[j] == host_tokens[i]) {
      ++run;
      ++j;
    }
    if (run == 1) {
      rc.covered_once += 1;
    } else {
      rc.covered_more += 1;
    }
    ++i;
  }

  for (const Cycle& c : system.cycles) {
    long red = 0, blue = 0;
    for (const LabelledVertex& v : c.vertices()) {
      if (!system.colouring.defined(v)) continue;
      (system.colouring.at(v) == Colour::Red ? red : blue) += 1;
    }
    rc.cycle_profiles.push_back({red, blue});
  }
  for (const auto& [v, colour] : system.colouring.entries()) {
    (void)v;
    (colour == Colour::Red ? rc.class_sizes.first : rc.class_sizes.second) += 1;
  }
  return rc;
}

}  // namespace equicycle::oracle
