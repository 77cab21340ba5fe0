#pragma once

#include <map>
#include <string>
#include <utility>

#include "equicycle/vertex.hpp"

namespace equicycle {

enum class Colour : std::uint8_t { Red, Blue };

inline const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

// Total red/blue assignment on a vertex set.  Deterministic iteration order
// (vertex sort order) so serialisations are reproducible.
class Colouring {
 public:
  void set(const LabelledVertex& v, Colour c) { map_[v] = c; }

  bool defined(const LabelledVertex& v) const { return map_.count(v) != 0; }

  Colour at(const LabelledVertex& v) const;

  // (red count, blue count)
  std::pair<long, long> class_sizes() const;

  std::size_t size() const { return map_.size(); }

  const std::map<LabelledVertex, Colour>& entries() const { return map_; }

 private:
  std::map<LabelledVertex, Colour> map_;
};

}  // namespace equicycle
