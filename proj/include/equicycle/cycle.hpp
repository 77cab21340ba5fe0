#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "equicycle/vertex.hpp"

namespace equicycle {

// A simple cycle, stored as the vertex order it was built in.  Two cycles are
// equal when one traversal can be rotated/reflected onto the other; equality
// and canonical_form() both work with the lexicographically least traversal
// under the vertex sort order.
class Cycle {
 public:
  explicit Cycle(std::vector<LabelledVertex> vertices);

  const std::vector<LabelledVertex>& vertices() const { return vs_; }
  std::size_t length() const { return vs_.size(); }

  // Least rotation/reflection of the traversal.
  Cycle canonical_form() const;

  // Calls f(u, v) once per edge, including the closing edge.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      f(vs_[i], vs_[(i + 1) % vs_.size()]);
    }
  }

  bool contains(const LabelledVertex& v) const;

  std::string str() const;  // "(inf 2_0 1_0 ...)"

  friend bool operator==(const Cycle& x, const Cycle& y);
  friend bool operator<(const Cycle& x, const Cycle& y);  // by canonical traversal

 private:
  std::vector<LabelledVertex> vs_;
};

// An open path.  Construction helpers hand these around before closing them
// into a Cycle; consecutive vertices must be distinct, and a path may be
// empty or a single vertex.
using Path = std::vector<LabelledVertex>;

// Joins path pieces that share their junction vertices: the first vertex of
// each non-empty piece must equal the last vertex of the previous non-empty
// piece, and appears once in the result.  Empty pieces are skipped.
Path concatenate_paths(const std::vector<Path>& pieces);

// Closes a path into a cycle (the last vertex must not repeat the first).
Cycle close_path(const Path& path);

}  // namespace equicycle
