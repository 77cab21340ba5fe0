#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equicycle/vertex.hpp"

namespace equicycle {

using Edge = std::pair<LabelledVertex, LabelledVertex>;  // stored with first < second

// Host graphs a cycle system can live on.  Each variant pins a concrete
// vertex universe so the edge set can be enumerated exactly.
//
//   complete-rotational:n      K_{2n+1} on (Z_n x {0,1}) u {inf}
//   complete-blown:s:l[:inf]   K_{sl} or K_{sl+1} on (Z_s x Z_l) [u {inf}]
//   complete:v                 K_v on plain labels 0..v-1
//   complete-minus-factor:v:…  K_v minus a perfect matching, plain labels
//   blowup:s:l                 C_s[l]: parts {g} x Z_l, g adjacent to g+-1 mod s
//   circulant:n:d1,…           Cay[Z_n, +-{d1,…}], plain labels
//   cayley-blown:s:l:d1,…      Cay[Z_s x Z_l, {(+-1, d): d in {d1,…}}]
//
// The strings above are the certificate header values (parse/str round-trip).
class GraphSpec {
 public:
  enum class Kind {
    CompleteRotational,
    CompleteBlown,
    CompletePlain,
    CompleteMinusFactor,
    Blowup,
    CayleyCirculant,
    CayleyBlown,
  };

  static GraphSpec complete_rotational(long n);
  static GraphSpec complete_blown(long s, long ell, bool with_infinity);
  static GraphSpec complete_plain(long v);
  static GraphSpec complete_minus_factor(long v, std::vector<std::pair<long, long>> factor);
  static GraphSpec blowup(long s, long ell);
  static GraphSpec cayley_circulant(long n, std::vector<long> generators);
  static GraphSpec cayley_blown(long s, long ell, std::vector<long> deltas);

  Kind kind() const { return kind_; }
  long vertex_count() const;
  long edge_count() const;
  std::vector<LabelledVertex> vertices() const;
  std::vector<Edge> edges() const;  // each edge once, endpoints sorted

  long modulus() const { return n_; }  // rotational residue modulus
  long s() const { return s_; }
  long ell() const { return ell_; }
  bool with_infinity() const { return with_inf_; }

  std::string str() const;
  static GraphSpec parse(const std::string& text);

  friend bool operator==(const GraphSpec& x, const GraphSpec& y);

 private:
  GraphSpec() = default;

  Kind kind_ = Kind::CompletePlain;
  long n_ = 0;    // CompleteRotational
  long s_ = 0;    // blown variants
  long ell_ = 0;  // blown variants
  long v_ = 0;    // plain variants
  bool with_inf_ = false;
  std::vector<std::pair<long, long>> factor_;
  std::vector<long> generators_;  // circulant: canonical d in [1, n/2]; cayley-blown: deltas
};

Edge make_edge(const LabelledVertex& u, const LabelledVertex& v);

}  // namespace equicycle
