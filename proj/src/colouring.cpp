#include "equicycle/colouring.hpp"

#include <stdexcept>

namespace equicycle {

Colour Colouring::at(const LabelledVertex& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) {
    throw std::out_of_range("no colour assigned to vertex " + v.str());
  }
  return it->second;
}

std::pair<long, long> Colouring::class_sizes() const {
  long red = 0, blue = 0;
  for (const auto& [v, c] : map_) {
    (void)v;
    (c == Colour::Red ? red : blue) += 1;
  }
  return {red, blue};
}

}  // namespace equicycle
