#include "ntc/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ntc {

void Triangulation::rebuild_slots() {
  slots.assign(num_edges, {SlotRef{}, SlotRef{}});
  std::vector<int> seen(num_edges, 0);
  for (int t = 0; t < (int)tris.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      int e = tris[t].edge[k];
      require(e >= 0 && e < num_edges, errc::internal, "edge id out of range");
      slots[e][tris[t].sign[k] ? 0 : 1] = SlotRef{t, k};
      seen[e] += tris[t].sign[k] ? 1 : 4;
    }
  }
  for (int e = 0; e < num_edges; ++e)
    require(seen[e] == 5, errc::internal, "edge " + std::to_string(e) + " lacks one +/- slot pair");
}

void Triangulation::check() const {
  require((int)tris.size() == 2 * (int)surface.abs_euler(), errc::internal, "triangle count");
  require(num_edges == 3 * (int)surface.abs_euler(), errc::internal, "edge count");
  for (int e = 0; e < num_edges; ++e) {
    const SlotRef& p = slots[e][0];
    const SlotRef& m = slots[e][1];
    require(tris[p.tri].edge[p.side] == e && tris[m.tri].edge[m.side] == e, errc::internal,
            "slot table out of sync");
    require(tris[p.tri].sign[p.side] && !tris[m.tri].sign[m.side], errc::internal, "slot signs");
    // the two sides traverse the same puncture pair, in opposite order
    require(vert_at(p) == vert_at(m, 1) && vert_at(p, 1) == vert_at(m), errc::internal,
            "edge endpoints disagree between slots");
  }
}

bool Triangulation::flippable(int e) const { return slots[e][0].tri != slots[e][1].tri; }

std::string Triangulation::canonical_form() const {
  std::vector<std::string> rows;
  rows.reserve(tris.size());
  for (const Triangle& t : tris) {
    std::string best;
    for (int r = 0; r < 3; ++r) {
      std::ostringstream os;
      for (int k = 0; k < 3; ++k)
        os << t.edge[(r + k) % 3] << ',' << t.vert[(r + k) % 3] << ';';
      std::string s = os.str();
      if (best.empty() || s < best) best = s;
    }
    rows.push_back(best);
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& r : rows) out += r + "|";
  return out;
}

FlipSquare flip_square(const Triangulation& t, int e) {
  require(t.flippable(e), errc::not_flippable,
          "edge " + std::to_string(e) + " is inside a self-folded triangle");
  const SlotRef p = t.slots[e][0];
  const SlotRef m = t.slots[e][1];
  FlipSquare q;
  q.e = e;
  q.ea = t.edge_at(p, 1);
  q.eb = t.edge_at(p, 2);
  q.ec = t.edge_at(m, 1);
  q.ed = t.edge_at(m, 2);
  return q;
}

void flip_edge(Triangulation& t, int e) {
  require(t.flippable(e), errc::not_flippable,
          "edge " + std::to_string(e) + " is inside a self-folded triangle");
  const SlotRef p = t.slots[e][0];
  const SlotRef m = t.slots[e][1];
  const Triangle tp = t.tris[p.tri];
  const Triangle tm = t.tris[m.tri];

  auto at = [](const Triangle& tr, int base, int off) { return (base + off) % 3; };
  // square corners: e runs u -> w in the + triangle; a: w->x, b: x->u, c: u->y, d: y->w
  int u = tp.vert[p.side];
  int w = tp.vert[at(tp, p.side, 1)];
  int x = tp.vert[at(tp, p.side, 2)];
  int y = tm.vert[at(tm, m.side, 2)];

  int ia = at(tp, p.side, 1), ib = at(tp, p.side, 2);
  int ic = at(tm, m.side, 1), id = at(tm, m.side, 2);

  Triangle np;  // (e: x->y, d: y->w, a: w->x)
  np.edge = {e, tm.edge[id], tp.edge[ia]};
  np.vert = {x, y, w};
  np.sign = {true, tm.sign[id], tp.sign[ia]};
  Triangle nm;  // (e: y->x, b: x->u, c: u->y)
  nm.edge = {e, tp.edge[ib], tm.edge[ic]};
  nm.vert = {y, x, u};
  nm.sign = {false, tp.sign[ib], tm.sign[ic]};
  t.tris[p.tri] = np;
  t.tris[m.tri] = nm;

  // refresh slot entries for every edge appearing in the two rebuilt triangles
  for (int tri : {p.tri, m.tri}) {
    for (int k = 0; k < 3; ++k) {
      const Triangle& tr = t.tris[tri];
      t.slots[tr.edge[k]][tr.sign[k] ? 0 : 1] = SlotRef{tri, k};
    }
  }
}

void apply_move(Triangulation& t, const Move& m) {
  if (m.kind == Move::Kind::flip) {
    flip_edge(t, m.edge);
    return;
  }
  require((int)m.edge_perm.size() == t.num_edges, errc::internal, "edge_perm size");
  require((int)m.vert_perm.size() == t.num_punctures, errc::internal, "vert_perm size");
  for (Triangle& tr : t.tris) {
    for (int k = 0; k < 3; ++k) {
      tr.edge[k] = m.edge_perm[tr.edge[k]];
      tr.vert[k] = m.vert_perm[tr.vert[k]];
    }
  }
  t.rebuild_slots();
}

static std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
  return q;
}

MoveSequence inverse(const MoveSequence& seq) {
  MoveSequence out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->kind == Move::Kind::flip)
      out.push_back(Move::flip(it->edge));
    else
      out.push_back(Move::relabel(inverse_perm(it->edge_perm), inverse_perm(it->vert_perm)));
  }
  return out;
}

CompiledSequence compile_sequence(const Triangulation& base, const MoveSequence& seq) {
  Triangulation t = base;
  CompiledSequence cs;
  std::vector<int> vperm(base.num_punctures);
  std::iota(vperm.begin(), vperm.end(), 0);
  for (const Move& m : seq) {
    FlatOp op;
    if (m.kind == Move::Kind::flip) {
      op.is_flip = true;
      op.square = flip_square(t, m.edge);
      flip_edge(t, m.edge);
    } else {
      op.is_flip = false;
      op.edge_perm = m.edge_perm;
      for (size_t v = 0; v < vperm.size(); ++v) vperm[v] = m.vert_perm[vperm[v]];
      apply_move(t, m);
    }
    cs.ops.push_back(std::move(op));
  }
  require(t.canonical_form() == base.canonical_form(), errc::internal,
          "move sequence does not return the triangulation to itself");
  cs.vert_perm = vperm;
  return cs;
}

Triangulation canonical_triangulation(const Surface& s) {
  const int g = (int)s.genus, n = (int)s.punctures;
  const int P = 4 * g + 2 * (n - 1);
  require(P >= 4, errc::degenerate, "surface has no fan polygon");
  const int letters = 2 * g + (n - 1);
  const int E = letters + P - 3;

  // polygon side -> (edge id, forward?)
  std::vector<int> side_edge(P);
  std::vector<bool> side_fwd(P);
  for (int i = 0; i < P; ++i) {
    if (i < 4 * g) {
      int h = i / 4, j = i % 4;
      side_edge[i] = 2 * h + (j % 2);
      side_fwd[i] = j < 2;
    } else {
      int k = i - 4 * g;
      side_edge[i] = 2 * g + k / 2;
      side_fwd[i] = (k % 2) == 0;
    }
  }

  // polygon vertex classes: glue s_i ~ s_j reversed  =>  v_i ~ v_{j+1}, v_{i+1} ~ v_j
  std::vector<int> cls(P);
  std::iota(cls.begin(), cls.end(), 0);
  std::function<int(int)> find = [&](int v) { return cls[v] == v ? v : cls[v] = find(cls[v]); };
  auto unite = [&](int a, int b) { cls[find(a)] = find(b); };
  auto glue = [&](int i, int j) {
    unite(i, (j + 1) % P);
    unite((i + 1) % P, j);
  };
  for (int h = 0; h < g; ++h) {
    glue(4 * h, 4 * h + 2);
    glue(4 * h + 1, 4 * h + 3);
  }
  for (int tsp = 0; tsp < n - 1; ++tsp) glue(4 * g + 2 * tsp, 4 * g + 2 * tsp + 1);

  // puncture ids: 0 = class of v0, then spike tips in order
  std::vector<int> punct(P, -1);
  punct[find(0)] = 0;
  int next = 1;
  for (int tsp = 0; tsp < n - 1; ++tsp) {
    int tipcls = find(4 * g + 2 * tsp + 1);
    require(punct[tipcls] == -1, errc::internal, "spike tip merged with main vertex class");
    punct[tipcls] = next++;
  }
  require(next == n, errc::internal, "puncture count mismatch in gluing");
  auto pv = [&](int v) {
    int c = punct[find(v)];
    require(c >= 0, errc::internal, "unassigned vertex class");
    return c;
  };

  auto diag = [&](int k) { return letters + (k - 2); };  // d_k = chord v0 -> v_k

  Triangulation t;
  t.surface = s;
  t.num_edges = E;
  t.num_punctures = n;
  for (int k = 1; k <= P - 2; ++k) {
    Triangle tr;
    // side 0: chord v0 -> v_k; side 1: polygon side s_k; side 2: chord v_{k+1} -> v0
    if (k == 1) {
      tr.edge[0] = side_edge[0];
      tr.sign[0] = side_fwd[0];
    } else {
      tr.edge[0] = diag(k);
      tr.sign[0] = true;
    }
    tr.edge[1] = side_edge[k];
    tr.sign[1] = side_fwd[k];
    if (k == P - 2) {
      tr.edge[2] = side_edge[P - 1];
      tr.sign[2] = side_fwd[P - 1];
    } else {
      tr.edge[2] = diag(k + 1);
      tr.sign[2] = false;
    }
    tr.vert = {pv(0), pv(k), pv(k + 1)};
    t.tris.push_back(tr);
  }
  t.rebuild_slots();
  t.check();
  return t;
}

} // namespace ntc
