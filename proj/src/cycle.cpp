#include "equicycle/cycle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace equicycle {

Cycle::Cycle(std::vector<LabelledVertex> vertices) : vs_(std::move(vertices)) {
  if (vs_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::set<LabelledVertex> seen(vs_.begin(), vs_.end());
  if (seen.size() != vs_.size()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
}

namespace {

// Lexicographic comparison of two rotations of (possibly different) sequences.
bool lex_less(const std::vector<LabelledVertex>& xs,
              const std::vector<LabelledVertex>& ys) {
  return std::lexicographical_compare(xs.begin(), xs.end(), ys.begin(), ys.end());
}

std::vector<LabelledVertex> least_traversal(std::vector<LabelledVertex> vs) {
  std::vector<LabelledVertex> best = vs;
  auto consider = [&](const std::vector<LabelledVertex>& candidate) {
    if (lex_less(candidate, best)) best = candidate;
  };
  std::vector<LabelledVertex> rot = vs;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    consider(rot);
  }
  std::reverse(vs.begin(), vs.end());
  rot = vs;
  consider(rot);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    consider(rot);
  }
  return best;
}

}  // namespace

Cycle Cycle::canonical_form() const { return Cycle(least_traversal(vs_)); }

bool Cycle::contains(const LabelledVertex& v) const {
  return std::find(vs_.begin(), vs_.end(), v) != vs_.end();
}

std::string Cycle::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < vs_.size(); ++i) {
    if (i) out += ' ';
    out += vs_[i].str();
  }
  out += ')';
  return out;
}

bool operator==(const Cycle& x, const Cycle& y) {
  if (x.vs_.size() != y.vs_.size()) return false;
  return least_traversal(x.vs_) == least_traversal(y.vs_);
}

bool operator<(const Cycle& x, const Cycle& y) {
  return lex_less(least_traversal(x.vs_), least_traversal(y.vs_));
}

Path concatenate_paths(const std::vector<Path>& pieces) {
  Path out;
  for (const Path& piece : pieces) {
    if (piece.empty()) continue;
    if (out.empty()) {
      out = piece;
      continue;
    }
    if (!(piece.front() == out.back())) {
      throw std::invalid_argument("path pieces do not share a junction vertex: " +
                                  out.back().str() + " vs " + piece.front().str());
    }
    out.insert(out.end(), piece.begin() + 1, piece.end());
  }
  return out;
}

Cycle close_path(const Path& path) {
  if (path.size() >= 2 && path.front() == path.back())
    throw std::invalid_argument("path already returns to its start");
  return Cycle(path);
}

}  // namespace equicycle
