#include "equicycle/gadgets.hpp"

#include "equicycle/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace equicycle {

// -------------------------------------------------------------------------
// graceful paths

std::vector<long> zigzag_labels(long h) {
  if (h < 2) throw std::invalid_argument("zigzag needs at least 2 vertices");
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(h));
  for (long i = 0; i < h; ++i) {
    out.push_back(i % 2 == 0 ? i / 2 : h - 1 - i / 2);
  }
  return out;
}

namespace {

bool graceful_dfs(long h, std::vector<long>& seq, std::uint32_t used_labels,
                  std::uint32_t used_diffs) {
  if (static_cast<long>(seq.size()) == h) return true;
  for (long label = 0; label < h; ++label) {
    if (used_labels & (1u << label)) continue;
    long diff = std::labs(label - seq.back());
    if (used_diffs & (1u << diff)) continue;
    seq.push_back(label);
    if (graceful_dfs(h, seq, used_labels | (1u << label), used_diffs | (1u << diff))) {
      return true;
    }
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::vector<long> graceful_path(long h, int leaf) {
  if (h < 2) throw std::invalid_argument("graceful_path needs h >= 2");
  if (h > 20) throw std::invalid_argument("graceful_path search capped at h = 20");
  if (leaf < 0 || leaf >= h) throw std::invalid_argument("leaf label out of range");

  static std::mutex mu;
  static std::map<std::pair<long, int>, std::vector<long>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find({h, leaf});
  if (it != memo.end()) return it->second;

  std::vector<long> result;
  std::vector<long> z = zigzag_labels(h);
  std::vector<long> zc = z;
  for (long& x : zc) x = h - 1 - x;
  for (std::vector<long>* cand : {&z, &zc}) {
    if (cand->back() == leaf) std::reverse(cand->begin(), cand->end());
    if (cand->front() == leaf) {
      result = *cand;
      break;
    }
  }
  if (result.empty()) {
    // Lex-first path starting at the leaf.  Gracefulness survives reversal,
    // so anchoring the leaf at the front loses nothing.
    result.push_back(leaf);
    if (!graceful_dfs(h, result, 1u << leaf, 0)) {
      std::ostringstream os;
      os << "no graceful path of " << h << " vertices with leaf " << leaf;
      throw std::runtime_error(os.str());
    }
  }
  memo[{h, leaf}] = result;
  return result;
}

// -------------------------------------------------------------------------
// crossing gadgets

Path p_gadget(long x, long a, int part, long n) {
  int other = 1 - part;
  return {LabelledVertex::rotational(x, part, n),
          LabelledVertex::rotational(x + a, other, n),
          LabelledVertex::rotational(x - 2, part, n)};
}

Path z_gadget(long x, long a, long b, int part, long n) {
  if (b < 0) throw std::invalid_argument("z_gadget needs b >= 0");
  if (b == 0) return {};
  Path out;
  out.reserve(static_cast<std::size_t>(2 * b + 1));
  int other = 1 - part;
  out.push_back(LabelledVertex::rotational(x, part, n));
  for (long k = 0; k < b; ++k) {
    out.push_back(LabelledVertex::rotational(x - 2 * k + a + 4 * k, other, n));
    out.push_back(LabelledVertex::rotational(x - 2 * k - 2, part, n));
  }
  return out;
}

Path y_gadget(long x, long a, long edges, int part, long n, bool reversed) {
  if (edges < 0) throw std::invalid_argument("y_gadget needs edges >= 0");
  Path out;
  out.reserve(static_cast<std::size_t>(edges + 1));
  long cur = x;
  out.push_back(LabelledVertex::rotational(cur, part, n));
  for (long j = 1; j <= edges; ++j) {
    long step = a + edges - j;
    cur += (j % 2 == 1) ? step : -step;
    out.push_back(LabelledVertex::rotational(cur, part, n));
  }
  if (reversed) std::reverse(out.begin(), out.end());
  return out;
}

long y_terminal(long x, long a, long edges, long n) {
  if (edges == 0) return mod_reduce(x, n);
  if (edges % 2 == 1) return mod_reduce(x + a + (edges - 1) / 2, n);
  return mod_reduce(x + edges / 2, n);
}

// -------------------------------------------------------------------------
// the cycle through infinity

Cycle infinity_cycle(long ell, const std::vector<long>& D, int part) {
  if (ell < 7 || ell % 2 == 0) throw std::invalid_argument("infinity_cycle needs odd ell >= 7");
  if (static_cast<long>(D.size()) != (ell - 3) / 2) {
    throw std::invalid_argument("infinity_cycle needs exactly (ell-3)/2 differences");
  }
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (D[i] < 1 || D[i] > ell - 1) {
      throw std::invalid_argument("infinity_cycle differences must lie in 1..ell-1");
    }
    if (i > 0 && D[i] >= D[i - 1]) {
      throw std::invalid_argument("infinity_cycle differences must strictly decrease");
    }
  }

  long n = 2 * ell;
  std::vector<long> sums;
  long s = 0;
  for (std::size_t i = 0; i < D.size(); ++i) {
    s += (i % 2 == 0) ? D[i] : -D[i];
    if (s <= 0 || s >= ell) {
      // Strict decrease pins every partial sum inside (0, ell); reaching here
      // means the precondition check above has a hole.
      throw std::logic_error("alternating partial sum escaped (0, ell)");
    }
    sums.push_back(s);
  }

  std::vector<LabelledVertex> vs;
  vs.reserve(static_cast<std::size_t>(ell));
  vs.push_back(LabelledVertex::infinity());
  vs.push_back(LabelledVertex::rotational(0, part, n));
  for (long v : sums) vs.push_back(LabelledVertex::rotational(v, part, n));
  for (auto it = sums.rbegin(); it != sums.rend(); ++it) {
    vs.push_back(LabelledVertex::rotational(*it + ell, part, n));
  }
  vs.push_back(LabelledVertex::rotational(ell, part, n));
  return Cycle(std::move(vs));
}

// -------------------------------------------------------------------------
// Hamiltonian decompositions

std::vector<Cycle> walecki(long v) {
  if (v < 3 || v % 2 == 0) throw std::invalid_argument("walecki needs odd v >= 3");
  long m = (v - 1) / 2;
  std::vector<long> zig;
  zig.push_back(0);
  for (long i = 1; i < m; ++i) {
    zig.push_back(i);
    zig.push_back(2 * m - i);
  }
  zig.push_back(m);

  std::vector<Cycle> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long shift = 0; shift < m; ++shift) {
    std::vector<LabelledVertex> vs;
    vs.reserve(static_cast<std::size_t>(v));
    vs.push_back(LabelledVertex::plain(v - 1));  // the fixed vertex
    for (long x : zig) vs.push_back(LabelledVertex::plain(mod_reduce(x + shift, 2 * m)));
    out.emplace_back(std::move(vs));
  }
  return out;
}

namespace {

struct HamSearch {
  long n;
  std::array<long, 4> steps;  // additive steps mod n, in trial order
  std::vector<long> path;
  std::vector<char> visited;
  long budget = 0;

  bool dfs() {
    if (budget-- <= 0) return false;
    if (static_cast<long>(path.size()) == n) return closes();
    long at = path.back();
    for (long step : steps) {
      long to = (at + step) % n;
      if (visited[static_cast<std::size_t>(to)]) continue;
      visited[static_cast<std::size_t>(to)] = 1;
      path.push_back(to);
      if (dfs()) return true;
      path.pop_back();
      visited[static_cast<std::size_t>(to)] = 0;
    }
    return false;
  }

  bool closes() const {
    long back = mod_reduce(path.front() - path.back(), n);
    for (long step : steps) {
      if (back == step) return complement_is_single_cycle();
    }
    return false;
  }

  // The unused half of the 4-regular edge set is automatically 2-regular;
  // it decomposes our graph iff it is one cycle through all n vertices.
  bool complement_is_single_cycle() const {
    std::set<std::pair<long, long>> used;
    auto key = [](long u, long v) { return u < v ? std::pair{u, v} : std::pair{v, u}; };
    for (long i = 0; i < n; ++i) {
      used.insert(key(path[static_cast<std::size_t>(i)],
                      path[static_cast<std::size_t>((i + 1) % n)]));
    }
    long prev = -1, at = 0, count = 0;
    do {
      long next = -1;
      for (long step : steps) {
        long to = (at + step) % n;
        if (to == prev || used.count(key(at, to))) continue;
        next = to;
        break;
      }
      if (next == -1) return false;
      prev = at;
      at = next;
      ++count;
    } while (at != 0 && count <= n);
    return at == 0 && count == n;
  }
};

}  // namespace

std::pair<Cycle, Cycle> two_generator_ham_pair(long n, long a, long b, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("two_generator_ham_pair needs n >= 5");
  if (a < 1 || b < 1 || a == b || 2 * a >= n || 2 * b >= n) {
    throw std::invalid_argument("generators must be distinct values in [1, n/2)");
  }
  if (std::gcd(std::gcd(a, b), n) != 1) {
    throw std::invalid_argument("generators leave the circulant disconnected");
  }

  static std::mutex mu;
  static std::map<std::tuple<long, long, long, std::uint64_t>, std::pair<Cycle, Cycle>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, a, b, seed});
    if (it != memo.end()) return it->second;
  }

  for (int attempt = 0; attempt < 64; ++attempt) {
    if (deadline_exceeded()) break;
    HamSearch search;
    search.n = n;
    search.steps = {a, n - a, b, n - b};
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    std::shuffle(search.steps.begin(), search.steps.end(), rng);
    search.path = {0};
    search.visited.assign(static_cast<std::size_t>(n), 0);
    search.visited[0] = 1;
    search.budget = 4'000'000;
    if (!search.dfs()) continue;

    std::vector<LabelledVertex> first;
    for (long x : search.path) first.push_back(LabelledVertex::plain(x));
    Cycle h1(std::move(first));

    // Walk the complement out into the second cycle.
    std::set<std::pair<long, long>> used;
    auto key = [](long u, long v) { return u < v ? std::pair{u, v} : std::pair{v, u}; };
    h1.for_each_edge([&](const LabelledVertex& u, const LabelledVertex& v) {
      used.insert(key(u.a, v.a));
    });
    std::vector<LabelledVertex> second;
    long prev = -1, at = 0;
    do {
      second.push_back(LabelledVertex::plain(at));
      long next = -1;
      for (long step : search.steps) {
        long to = (at + step) % n;
        if (to == prev || used.count(key(at, to))) continue;
        next = to;
        break;
      }
      prev = at;
      at = next;
    } while (at != 0);
    Cycle h2(std::move(second));

    std::lock_guard<std::mutex> lock(mu);
    auto result = std::pair{h1, h2};
    memo.insert_or_assign({n, a, b, seed}, result);
    return result;
  }
  std::ostringstream os;
  os << "search budget exhausted splitting Cay[Z_" << n << ", +-{" << a << "," << b
     << "}] into two Hamiltonian cycles";
  throw search_budget_error(os.str());
}

std::vector<Cycle> circulant_ham_decomposition(long ell, std::uint64_t seed) {
  if (ell < 7 || ell % 2 == 0) {
    throw std::invalid_argument("circulant_ham_decomposition needs odd ell >= 7");
  }
  long top = (ell - 1) / 2;
  std::vector<Cycle> out;
  long a = 3;
  for (; a + 1 <= top; a += 2) {
    auto [h1, h2] = two_generator_ham_pair(ell, a, a + 1, seed);
    out.push_back(h1);
    out.push_back(h2);
  }
  if (a == top) {
    // Leftover generator; coprime to ell (ell = 2*top + 1), so one pure cycle.
    std::vector<LabelledVertex> vs;
    long x = 0;
    do {
      vs.push_back(LabelledVertex::plain(x));
      x = (x + top) % ell;
    } while (x != 0);
    out.emplace_back(std::move(vs));
  }
  return out;
}

}  // namespace equicycle
