#include "equicycle/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equicycle {

Edge make_edge(const LabelledVertex& u, const LabelledVertex& v) {
  if (u == v) throw std::invalid_argument("loop edge at " + u.str());
  return u < v ? Edge{u, v} : Edge{v, u};
}

GraphSpec GraphSpec::complete_rotational(long n) {
  if (n < 1) throw std::invalid_argument("rotational modulus must be positive");
  GraphSpec g;
  g.kind_ = Kind::CompleteRotational;
  g.n_ = n;
  g.with_inf_ = true;
  return g;
}

GraphSpec GraphSpec::complete_blown(long s, long ell, bool with_infinity) {
  GraphSpec g;
  g.kind_ = Kind::CompleteBlown;
  g.s_ = s;
  g.ell_ = ell;
  g.with_inf_ = with_infinity;
  return g;
}

GraphSpec GraphSpec::complete_plain(long v) {
  GraphSpec g;
  g.kind_ = Kind::CompletePlain;
  g.v_ = v;
  return g;
}

GraphSpec GraphSpec::complete_minus_factor(long v, std::vector<std::pair<long, long>> factor) {
  if (v % 2 != 0 || static_cast<long>(factor.size()) != v / 2) {
    throw std::invalid_argument("factor must be a perfect matching");
  }
  GraphSpec g;
  g.kind_ = Kind::CompleteMinusFactor;
  g.v_ = v;
  std::set<long> touched;
  for (auto& [x, y] : factor) {
    if (x > y) std::swap(x, y);
    touched.insert(x);
    touched.insert(y);
  }
  if (static_cast<long>(touched.size()) != v) {
    throw std::invalid_argument("factor must touch every vertex exactly once");
  }
  std::sort(factor.begin(), factor.end());
  g.factor_ = std::move(factor);
  return g;
}

GraphSpec GraphSpec::blowup(long s, long ell) {
  if (s < 3) throw std::invalid_argument("blow-up needs a cycle C_s with s >= 3");
  GraphSpec g;
  g.kind_ = Kind::Blowup;
  g.s_ = s;
  g.ell_ = ell;
  return g;
}

GraphSpec GraphSpec::cayley_circulant(long n, std::vector<long> generators) {
  GraphSpec g;
  g.kind_ = Kind::CayleyCirculant;
  g.v_ = n;
  std::set<long> canon;
  for (long d : generators) {
    long r = mod_reduce(d, n);
    if (r == 0) throw std::invalid_argument("circulant generator reduces to 0");
    canon.insert(std::min(r, n - r));
  }
  g.generators_.assign(canon.begin(), canon.end());
  return g;
}

GraphSpec GraphSpec::cayley_blown(long s, long ell, std::vector<long> deltas) {
  if (s < 3) throw std::invalid_argument("cayley-blown needs s >= 3");
  GraphSpec g;
  g.kind_ = Kind::CayleyBlown;
  g.s_ = s;
  g.ell_ = ell;
  std::set<long> canon;
  for (long d : deltas) canon.insert(mod_reduce(d, ell));
  g.generators_.assign(canon.begin(), canon.end());
  return g;
}

long GraphSpec::vertex_count() const {
  switch (kind_) {
    case Kind::CompleteRotational: return 2 * n_ + 1;
    case Kind::CompleteBlown: return s_ * ell_ + (with_inf_ ? 1 : 0);
    case Kind::CompletePlain: return v_;
    case Kind::CompleteMinusFactor: return v_;
    case Kind::Blowup: return s_ * ell_;
    case Kind::CayleyCirculant: return v_;
    case Kind::CayleyBlown: return s_ * ell_;
  }
  return 0;
}

long GraphSpec::edge_count() const {
  long v = vertex_count();
  switch (kind_) {
    case Kind::CompleteRotational:
    case Kind::CompleteBlown:
    case Kind::CompletePlain:
      return v * (v - 1) / 2;
    case Kind::CompleteMinusFactor:
      return v * (v - 1) / 2 - v / 2;
    case Kind::Blowup:
      return s_ * ell_ * ell_;
    case Kind::CayleyCirculant: {
      long total = 0;
      for (long d : generators_) total += (2 * d == v_) ? v_ / 2 : v_;
      return total;
    }
    case Kind::CayleyBlown:
      return s_ * ell_ * static_cast<long>(generators_.size());
  }
  return 0;
}

std::vector<LabelledVertex> GraphSpec::vertices() const {
  std::vector<LabelledVertex> out;
  switch (kind_) {
    case Kind::CompleteRotational:
      for (int part = 0; part <= 1; ++part)
        for (long a = 0; a < n_; ++a) out.push_back(LabelledVertex::rotational(a, part, n_));
      out.push_back(LabelledVertex::infinity());
      break;
    case Kind::CompleteBlown:
    case Kind::Blowup:
    case Kind::CayleyBlown:
      for (long g = 0; g < s_; ++g)
        for (long h = 0; h < ell_; ++h) out.push_back(LabelledVertex::blown(g, h, s_, ell_));
      if (kind_ == Kind::CompleteBlown && with_inf_) out.push_back(LabelledVertex::infinity());
      break;
    case Kind::CompletePlain:
    case Kind::CompleteMinusFactor:
    case Kind::CayleyCirculant:
      for (long x = 0; x < v_; ++x) out.push_back(LabelledVertex::plain(x));
      break;
  }
  return out;
}

std::vector<Edge> GraphSpec::edges() const {
  std::vector<Edge> out;
  switch (kind_) {
    case Kind::CompleteRotational:
    case Kind::CompleteBlown:
    case Kind::CompletePlain: {
      auto vs = vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back(make_edge(vs[i], vs[j]));
      break;
    }
    case Kind::CompleteMinusFactor: {
      std::set<std::pair<long, long>> removed(factor_.begin(), factor_.end());
      for (long i = 0; i < v_; ++i)
        for (long j = i + 1; j < v_; ++j)
          if (!removed.count({i, j}))
            out.push_back(make_edge(LabelledVertex::plain(i), LabelledVertex::plain(j)));
      break;
    }
    case Kind::Blowup:
      for (long g = 0; g < s_; ++g) {
        long g2 = (g + 1) % s_;
        for (long h = 0; h < ell_; ++h)
          for (long h2 = 0; h2 < ell_; ++h2)
            out.push_back(make_edge(LabelledVertex::blown(g, h, s_, ell_),
                                    LabelledVertex::blown(g2, h2, s_, ell_)));
      }
      break;
    case Kind::CayleyCirculant:
      for (long d : generators_) {
        long limit = (2 * d == v_) ? v_ / 2 : v_;
        for (long a = 0; a < limit; ++a)
          out.push_back(make_edge(LabelledVertex::plain(a),
                                  LabelledVertex::plain(mod_reduce(a + d, v_))));
      }
      break;
    case Kind::CayleyBlown:
      for (long delta : generators_)
        for (long g = 0; g < s_; ++g)
          for (long h = 0; h < ell_; ++h)
            out.push_back(make_edge(LabelledVertex::blown(g, h, s_, ell_),
                                    LabelledVertex::blown(g + 1, h + delta, s_, ell_)));
      break;
  }
  return out;
}

std::string GraphSpec::str() const {
  std::ostringstream os;
  auto join = [](const std::vector<long>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  switch (kind_) {
    case Kind::CompleteRotational:
      os << "complete-rotational:" << n_;
      break;
    case Kind::CompleteBlown:
      os << "complete-blown:" << s_ << ":" << ell_;
      if (with_inf_) os << ":inf";
      break;
    case Kind::CompletePlain:
      os << "complete:" << v_;
      break;
    case Kind::CompleteMinusFactor: {
      os << "complete-minus-factor:" << v_ << ":";
      for (std::size_t i = 0; i < factor_.size(); ++i) {
        if (i) os << ',';
        os << factor_[i].first << '-' << factor_[i].second;
      }
      break;
    }
    case Kind::Blowup:
      os << "blowup:" << s_ << ":" << ell_;
      break;
    case Kind::CayleyCirculant:
      os << "circulant:" << v_ << ":" << join(generators_);
      break;
    case Kind::CayleyBlown:
      os << "cayley-blown:" << s_ << ":" << ell_ << ":" << join(generators_);
      break;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long value = std::stol(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters in number: " + s);
  return value;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  for (const std::string& piece : split(s, ',')) out.push_back(parse_long(piece));
  return out;
}

}  // namespace

GraphSpec GraphSpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  const std::string& tag = parts[0];
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo + 1 || parts.size() > hi + 1) {
      throw std::invalid_argument("malformed graph descriptor: " + text);
    }
  };
  if (tag == "complete-rotational") {
    want(1, 1);
    return complete_rotational(parse_long(parts[1]));
  }
  if (tag == "complete-blown") {
    want(2, 3);
    bool inf = parts.size() == 4;
    if (inf && parts[3] != "inf") throw std::invalid_argument("malformed graph descriptor: " + text);
    return complete_blown(parse_long(parts[1]), parse_long(parts[2]), inf);
  }
  if (tag == "complete") {
    want(1, 1);
    return complete_plain(parse_long(parts[1]));
  }
  if (tag == "complete-minus-factor") {
    want(2, 2);
    std::vector<std::pair<long, long>> factor;
    for (const std::string& piece : split(parts[2], ',')) {
      auto ends = split(piece, '-');
      if (ends.size() != 2) throw std::invalid_argument("malformed factor edge: " + piece);
      factor.emplace_back(parse_long(ends[0]), parse_long(ends[1]));
    }
    return complete_minus_factor(parse_long(parts[1]), std::move(factor));
  }
  if (tag == "blowup") {
    want(2, 2);
    return blowup(parse_long(parts[1]), parse_long(parts[2]));
  }
  if (tag == "circulant") {
    want(2, 2);
    return cayley_circulant(parse_long(parts[1]), parse_longs(parts[2]));
  }
  if (tag == "cayley-blown") {
    want(3, 3);
    return cayley_blown(parse_long(parts[1]), parse_long(parts[2]), parse_longs(parts[3]));
  }
  throw std::invalid_argument("unknown graph descriptor: " + text);
}

bool operator==(const GraphSpec& x, const GraphSpec& y) {
  return x.kind_ == y.kind_ && x.n_ == y.n_ && x.s_ == y.s_ && x.ell_ == y.ell_ &&
         x.v_ == y.v_ && x.with_inf_ == y.with_inf_ && x.factor_ == y.factor_ &&
         x.generators_ == y.generators_;
}

}  // namespace equicycle
