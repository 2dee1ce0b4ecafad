#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ntc/bigint.hpp"
#include "ntc/error.hpp"
#include "ntc/surface.hpp"

namespace ntc {

/// Normal coordinate vector: one entry per edge, entry = minimal
/// intersection count of the (multi)curve with that edge.
template <typename S>
using CoordVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using Coords = CoordVec<BigInt>;
using Coords64 = CoordVec<std::int64_t>;

/// One ideal triangle. Side k runs from corner vert[k] to corner vert[(k+1)%3],
/// carries edge id edge[k]; sign[k] is true when the side traverses the edge in
/// its canonical direction. Triangle boundary order is counterclockwise for the
/// fixed surface orientation; each edge appears in exactly two sides, once with
/// each sign.
struct Triangle {
  std::array<int, 3> edge{};
  std::array<int, 3> vert{};
  std::array<bool, 3> sign{};
};

struct SlotRef {
  int tri = -1;
  int side = -1;
  bool operator==(const SlotRef&) const = default;
};

struct Triangulation {
  Surface surface;
  int num_edges = 0;
  int num_punctures = 0;
  std::vector<Triangle> tris;
  // slots[e][0] is the positively directed side of edge e, slots[e][1] the other.
  std::vector<std::array<SlotRef, 2>> slots;

  int vert_at(const SlotRef& s, int offset = 0) const {
    return tris[s.tri].vert[(s.side + offset) % 3];
  }
  int edge_at(const SlotRef& s, int offset = 0) const {
    return tris[s.tri].edge[(s.side + offset) % 3];
  }

  bool flippable(int e) const;
  void rebuild_slots();
  void check() const;

  /// Gauge-insensitive structural fingerprint (triangle rotation and order,
  /// edge direction conventions do not affect it).
  std::string canonical_form() const;
};

/// The four sides of the square around a flippable edge, read from the
/// positive slot: (a, b) follow e in its + triangle, (c, d) in its - triangle.
/// Opposite-side pairs are (a, c) and (b, d); e' = max(a+c, b+d) - e.
struct FlipSquare {
  int e, ea, eb, ec, ed;
};

FlipSquare flip_square(const Triangulation& t, int e);

/// Structural flip, in place. Involutive up to gauge.
void flip_edge(Triangulation& t, int e);

template <typename S>
void flip_coords(const FlipSquare& q, CoordVec<S>& c) {
  S lhs = c[q.ea] + c[q.ec];
  S rhs = c[q.eb] + c[q.ed];
  c[q.e] = (lhs > rhs ? lhs : rhs) - c[q.e];
}

/// Elementary moves a mapping class compiles to. A Relabel may also permute
/// puncture labels (half-twists exchange two punctures).
struct Move {
  enum class Kind { flip, relabel };
  Kind kind = Kind::flip;
  int edge = -1;
  std::vector<int> edge_perm;  // new id = edge_perm[old id]
  std::vector<int> vert_perm;  // new id = vert_perm[old id]

  static Move flip(int e) {
    Move m;
    m.kind = Kind::flip;
    m.edge = e;
    return m;
  }
  static Move relabel(std::vector<int> eperm, std::vector<int> vperm) {
    Move m;
    m.kind = Kind::relabel;
    m.edge_perm = std::move(eperm);
    m.vert_perm = std::move(vperm);
    return m;
  }
};

using MoveSequence = std::vector<Move>;

/// Applies a move to the triangulation (and coordinates when given).
void apply_move(Triangulation& t, const Move& m);

MoveSequence inverse(const MoveSequence& seq);

/// A move sequence whose net triangulation action is the identity can be
/// compiled against its base triangulation into a flat, triangulation-free
/// coordinate transformation (the flip squares are input-independent).
struct FlatOp {
  bool is_flip = true;
  FlipSquare square{};
  std::vector<int> edge_perm;
};

struct CompiledSequence {
  std::vector<FlatOp> ops;
  std::vector<int> vert_perm;  // net puncture permutation

  template <typename S>
  void apply(CoordVec<S>& c) const {
    CoordVec<S> tmp;
    for (const FlatOp& op : ops) {
      if (op.is_flip) {
        flip_coords(op.square, c);
      } else {
        tmp.resize(c.size());
        for (int e = 0; e < c.size(); ++e) tmp[op.edge_perm[e]] = c[e];
        c.swap(tmp);
      }
    }
  }
};

/// Compiles seq against base. Requires the sequence to return base to itself
/// (canonical-form equality); throws errc::internal otherwise.
CompiledSequence compile_sequence(const Triangulation& base, const MoveSequence& seq);

/// Deterministic canonical ideal triangulation of S: a (4g + 2(n-1))-gon with
/// the identification word A1 B1 A1' B1' ... Ag Bg Ag' Bg' C2 C2' ... Cn Cn',
/// triangulated by the fan of diagonals from vertex 0. Edge ids: the 2g+n-1
/// glued letters first (A1, B1, ..., Ag, Bg, C2, ..., Cn), then the fan
/// diagonals d_2 ... d_{P-2}. Puncture 0 is the class of the polygon corners;
/// punctures 1..n-1 are the spike tips in order.
Triangulation canonical_triangulation(const Surface& s);

/// Version tag for the labeling above; embedded in every CLI report.
inline const char* labeling_version() { return "golden-1"; }

} // namespace ntc
