#include "equicycle/vertex.hpp"

namespace equicycle {

LabelledVertex LabelledVertex::rotational(long residue, int part, long modulus) {
  if (part != 0 && part != 1) throw std::invalid_argument("part must be 0 or 1");
  LabelledVertex v;
  v.kind = VertexKind::Rotational;
  v.a = static_cast<std::int32_t>(mod_reduce(residue, modulus));
  v.b = part;
  return v;
}

LabelledVertex LabelledVertex::blown(long g, long h, long s, long ell) {
  LabelledVertex v;
  v.kind = VertexKind::Blown;
  v.a = static_cast<std::int32_t>(mod_reduce(g, s));
  v.b = static_cast<std::int32_t>(mod_reduce(h, ell));
  return v;
}

LabelledVertex LabelledVertex::plain(long x) {
  if (x < 0) throw std::invalid_argument("plain vertex labels are non-negative");
  LabelledVertex v;
  v.kind = VertexKind::Plain;
  v.a = static_cast<std::int32_t>(x);
  return v;
}

LabelledVertex LabelledVertex::infinity() {
  LabelledVertex v;
  v.kind = VertexKind::Infinity;
  return v;
}

std::string LabelledVertex::str() const {
  switch (kind) {
    case VertexKind::Rotational:
      return std::to_string(a) + "_" + std::to_string(b);
    case VertexKind::Blown:
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case VertexKind::Plain:
      return std::to_string(a);
    case VertexKind::Infinity:
      return "inf";
  }
  return "?";
}

std::tuple<int, int, long, long> LabelledVertex::sort_key() const {
  switch (kind) {
    case VertexKind::Rotational:
      return {0, 0, b, a};
    case VertexKind::Blown:
      return {0, 1, a, b};
    case VertexKind::Plain:
      return {0, 2, a, 0};
    case VertexKind::Infinity:
      return {1, 0, 0, 0};
  }
  return {2, 0, 0, 0};
}

}  // namespace equicycle
