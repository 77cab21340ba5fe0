#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace equicycle {

// Vertex families used by the cycle systems in this project.
//
//   Rotational  a_i        with a in Z_n and part i in {0,1}; the systems on
//                          K_{2n+1} are developed by adding a constant to the
//                          residue a while the part is held fixed.
//   Blown       (g,h)      with g in Z_s, h in Z_l; vertices of an l-fold
//                          blow-up whose parts are {g} x Z_l.
//   Plain       x          an unstructured vertex label (skeleton graphs,
//                          single-part hosts).
//   Infinity    inf        the fixed point of every development.
//
// A cycle system sticks to one family (plus Infinity where the host graph
// declares it); nothing below enforces that globally, the verifier does.
enum class VertexKind : std::uint8_t { Rotational, Blown, Plain, Infinity };

struct LabelledVertex {
  VertexKind kind = VertexKind::Plain;
  std::int32_t a = 0;  // residue / g / x
  std::int32_t b = 0;  // part / h

  static LabelledVertex rotational(long residue, int part, long modulus);
  static LabelledVertex blown(long g, long h, long s, long ell);
  static LabelledVertex plain(long x);
  static LabelledVertex infinity();

  bool is_infinity() const { return kind == VertexKind::Infinity; }

  // Token used by certificates and error messages: "3_0", "(2,5)", "7", "inf".
  std::string str() const;

  // Sort order backing canonical forms: Rotational by (part, residue), Blown
  // by (g,h), Plain by label, Infinity strictly last.
  std::tuple<int, int, long, long> sort_key() const;

  friend bool operator==(const LabelledVertex& x, const LabelledVertex& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const LabelledVertex& x, const LabelledVertex& y) {
    return x.sort_key() < y.sort_key();
  }
};

// Canonical representative of an integer mod m, in [0, m).
inline long mod_reduce(long value, long modulus) {
  if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace equicycle
