#include "pmap/transversal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pmap {

namespace {

// red out, blue out, red in, blue in; -1 on the outer 4-cycle
int category(const std::string& color, const std::vector<char>& out, Dart d) {
  const char c = color[d / 2];
  if (c == 'x') return -1;
  return (c == 'r' ? 0 : 1) + (out[d] ? 0 : 2);
}

// Cyclic descents among the assigned darts around v; -2 marks unassigned.
bool t1_prefix_ok(const RootedMap& t, VertexId v, const std::vector<int>& cat, bool complete) {
  std::vector<int> seq;
  for (Dart d : t.darts_cw(v))
    if (cat[d] >= 0) seq.push_back(cat[d]);
  if (seq.empty()) return !complete;
  int descents = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < seq[(i + seq.size() - 1) % seq.size()]) ++descents;
  if (descents > 1) return false;
  if (!complete) return true;
  std::set<int> present(seq.begin(), seq.end());
  return descents == 1 && present.size() == 4;
}

std::vector<char> outer_edges(const RootedMap& t) {
  std::vector<char> outer(t.edge_count(), 0);
  for (Dart d : t.face_darts(t.outer_face())) outer[d / 2] = 1;
  return outer;
}

void require_quad(const RootedMap& t) {
  auto f = classify(t);
  if (!f.quad_triangulation) throw Error(ErrorCode::NotQuadTriangulation, "not a 4-gon triangulation");
}

// (T2): the inner edges at N, E, S, W are red in, blue in, red out, blue out.
int required_at(const TransversalStructure& x, VertexId v) {
  if (v == x.N()) return 2;
  if (v == x.E()) return 3;
  if (v == x.S()) return 0;
  if (v == x.W()) return 1;
  return -1;
}

}  // namespace

std::string TransversalStructure::signs() const {
  std::string s(tri.edge_count(), '+');
  for (EdgeId e = 0; e < tri.edge_count(); ++e)
    if (!out[2 * e]) s[e] = '-';
  return s;
}

TransversalStructure make_transversal(const RootedMap& t, const std::string& color, const std::string& orient) {
  require_quad(t);
  if (!classify(t).irreducible) throw Error(ErrorCode::NotIrreducible, "triangulation has a separating triangle");
  const int m = t.edge_count();
  if (static_cast<int>(color.size()) != m || static_cast<int>(orient.size()) != m)
    throw Error(ErrorCode::InvalidInput, "color and orient need one character per edge");
  const auto outer = outer_edges(t);
  TransversalStructure x{t, color, out_flags(orient)};
  for (EdgeId e = 0; e < m; ++e) {
    if (outer[e] != (color[e] == 'x') || (color[e] != 'x' && color[e] != 'r' && color[e] != 'b'))
      throw Error(ErrorCode::InvalidInput, "outer edges take 'x', inner edges 'r' or 'b'");
    if (outer[e]) {
      x.out[2 * e] = 1;
      x.out[2 * e + 1] = 0;
    }
  }
  std::vector<int> cat(t.dart_count());
  for (Dart d = 0; d < t.dart_count(); ++d) cat[d] = category(color, x.out, d);
  for (VertexId v : t.vertices())
    if (!x.is_outer_vertex(v) && !t1_prefix_ok(t, v, cat, true))
      throw Error(ErrorCode::T1Violated, "(T1) fails at vertex " + std::to_string(v + 1));
  for (VertexId v : t.vertices()) {
    const int want = required_at(x, v);
    if (want < 0) continue;
    for (Dart d : t.darts_cw(v))
      if (cat[d] >= 0 && cat[d] != want)
        throw Error(ErrorCode::T2Violated, "(T2) fails at outer vertex " + std::to_string(v + 1));
  }
  return x;
}

TransversalStructure canonical(const TransversalStructure& x) {
  auto c = canonicalize(x.tri);
  TransversalStructure y{std::move(c.map), x.color, std::vector<char>(x.out.size())};
  for (Dart d = 0; d < x.tri.dart_count(); ++d) {
    y.out[c.relabel[d]] = x.out[d];
    y.color[c.relabel[d] / 2] = x.color[d / 2];
  }
  for (EdgeId e = 0; e < y.tri.edge_count(); ++e)
    if (y.color[e] == 'x') {
      y.out[2 * e] = 1;
      y.out[2 * e + 1] = 0;
    }
  return y;
}

Record to_record(const TransversalStructure& x) {
  Record r;
  r.map = x.tri;
  r.color = x.color;
  r.orient = x.signs();
  return r;
}

TransversalStructure transversal_from_record(const Record& r) {
  if (!r.color || !r.orient) throw Error(ErrorCode::InvalidInput, "record needs color and orient lines");
  return make_transversal(r.map, *r.color, *r.orient);
}

namespace {

// One colour class as a closed bipolar map. `from`/`to` are the poles; the
// pole dart replaces `pole_at_from` and `pole_at_to`, and the darts `drop`
// of the other outer edges are removed.
BipolarOrientation extract(const TransversalStructure& x, char col, VertexId skip1, VertexId skip2,
                           Dart pole_at_from, Dart pole_at_to, std::vector<Dart> drop,
                           std::vector<EdgeId>& edge_map) {
  const RootedMap& t = x.tri;
  edge_map.assign(t.edge_count(), -1);
  int next = 0;
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (x.color[e] == col) edge_map[e] = next++;
  const int pole = next;
  std::vector<std::vector<Dart>> cw;
  std::vector<char> out(2 * (pole + 1));
  for (VertexId v : t.vertices()) {
    if (v == skip1 || v == skip2) continue;
    std::vector<Dart> list;
    for (Dart d : t.darts_cw(v)) {
      if (d == pole_at_from) {
        list.push_back(2 * pole);
      } else if (d == pole_at_to) {
        list.push_back(2 * pole + 1);
      } else if (std::find(drop.begin(), drop.end(), d) != drop.end()) {
        continue;
      } else if (edge_map[d / 2] >= 0) {
        const Dart nd = 2 * edge_map[d / 2] + (d & 1);
        out[nd] = x.out[d];
        list.push_back(nd);
      }
    }
    cw.push_back(std::move(list));
  }
  out[2 * pole] = 1;
  out[2 * pole + 1] = 0;
  auto o = close_orientation(from_clockwise(pole + 1, cw, 2 * pole), out);
  if (!o) throw Error(ErrorCode::LocalConditionViolated, "colour class is not a bipolar orientation");
  return *o;
}

}  // namespace

Posets red_blue_posets(const TransversalStructure& x) {
  if (x.inner_vertex_count() < 1) throw Error(ErrorCode::NoInnerVertex, "structure has no inner vertex");
  const RootedMap& t = x.tri;
  const Dart nw = t.root(), ws = t.face_next(nw), se = t.face_next(ws), en = t.face_next(se);
  Posets p;
  p.red = extract(x, 'r', x.W(), x.E(), ws ^ 1, nw, {se, en ^ 1}, p.red_edge);
  p.blue = extract(x, 'b', x.S(), x.N(), nw ^ 1, en, {ws, se ^ 1}, p.blue_edge);
  if (!is_bipolar_poset(p.red) || !is_bipolar_poset(p.blue))
    throw Error(ErrorCode::NotAPoset, "colour class is not a bipolar poset");
  return p;
}

bool is_N_avoiding_transversal(const TransversalStructure& x) {
  auto p = red_blue_posets(x);
  return is_N_avoiding(p.red) && is_N_avoiding(p.blue);
}

namespace {

struct CycleRegion {
  std::vector<char> inside_face;  // indexed by face id
  std::set<EdgeId> cycle;
};

CycleRegion region(const RootedMap& t, const std::vector<EdgeId>& cycle) {
  CycleRegion r;
  r.cycle.insert(cycle.begin(), cycle.end());
  std::vector<char> outside(t.dart_count(), 0);
  std::vector<FaceId> stack{t.outer_face()};
  outside[t.outer_face()] = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (Dart d : t.face_darts(f)) {
      if (r.cycle.count(d / 2)) continue;
      FaceId g = t.left_face(d);
      if (!outside[g]) {
        outside[g] = 1;
        stack.push_back(g);
      }
    }
  }
  r.inside_face.assign(t.dart_count(), 0);
  for (FaceId f : t.faces()) r.inside_face[f] = !outside[f];
  return r;
}

std::vector<Dart> inside_darts(const RootedMap& t, const CycleRegion& r, VertexId v) {
  std::vector<Dart> found;
  for (Dart d : t.darts_cw(v))
    if (!r.cycle.count(d / 2) && r.inside_face[t.face(d)]) found.push_back(d);
  return found;
}

}  // namespace

std::vector<AltFourCycle> alt_four_cycles(const TransversalStructure& x) {
  const RootedMap& t = x.tri;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_at;
  std::map<VertexId, std::vector<Dart>> inner_darts;
  for (Dart d = 0; d < t.dart_count(); ++d) {
    if (x.color[d / 2] == 'x') continue;
    edge_at[{t.vertex(d), t.head(d)}] = d / 2;
    inner_darts[t.vertex(d)].push_back(d);
  }
  std::set<std::set<EdgeId>> seen;
  std::vector<AltFourCycle> found;
  std::optional<Posets> posets;
  for (Dart d1 = 0; d1 < t.dart_count(); ++d1) {
    if (x.color[d1 / 2] == 'x') continue;
    const VertexId a = t.vertex(d1), b = t.head(d1);
    for (Dart d2 : inner_darts[b]) {
      const VertexId c = t.head(d2);
      if (c == a || x.color[d2 / 2] == x.color[d1 / 2]) continue;
      for (Dart d3 : inner_darts[c]) {
        const VertexId d = t.head(d3);
        if (d == a || d == b || x.color[d3 / 2] != x.color[d1 / 2]) continue;
        auto it = edge_at.find({d, a});
        if (it == edge_at.end() || x.color[it->second] != x.color[d2 / 2]) continue;
        const std::vector<EdgeId> cyc = {d1 / 2, d2 / 2, d3 / 2, it->second};
        if (!seen.insert(std::set<EdgeId>(cyc.begin(), cyc.end())).second) continue;

        const std::vector<VertexId> vs = {a, b, c, d};
        auto tail_of = [&](EdgeId e) { return x.out[2 * e] ? t.vertex(2 * e) : t.vertex(2 * e + 1); };
        VertexId s_R = -1, t_R = -1;
        for (int i = 0; i < 4; ++i) {
          const EdgeId before = cyc[(i + 3) % 4], after = cyc[i];
          const bool out_before = tail_of(before) == vs[i], out_after = tail_of(after) == vs[i];
          if (out_before && out_after) s_R = vs[i];
          if (!out_before && !out_after) t_R = vs[i];
        }
        if (s_R < 0 || t_R < 0)
          throw Error(ErrorCode::T1Violated, "alternating 4-cycle is not two paths of length 2");
        const CycleRegion reg = region(t, cyc);
        AltFourCycle r{};
        r.s_R = s_R;
        r.t_R = t_R;
        for (Dart e : t.darts_cw(s_R)) {
          if (!reg.cycle.count(e / 2)) continue;
          (reg.inside_face[t.face(e)] ? r.w1 : r.w2) = t.head(e);
        }
        r.edges = {edge_at[{r.s_R, r.w1}], edge_at[{r.w1, r.t_R}], edge_at[{r.t_R, r.w2}], edge_at[{r.w2, r.s_R}]};
        r.degenerate = true;
        for (VertexId v : t.vertices())
          if (v != a && v != b && v != c && v != d && !inside_darts(t, reg, v).empty()) r.degenerate = false;
        if (!r.degenerate) {
          std::set<char> cols;
          for (Dart e : inside_darts(t, reg, s_R)) cols.insert(x.color[e / 2]);
          if (cols.size() != 1) throw Error(ErrorCode::T1Violated, "mixed colours inside at the cycle source");
          r.kind = *cols.begin() == 'r' ? CycleKind::left : CycleKind::right;
        } else {
          // the chord and the two cycle edges of its colour form an N or a mirrored N
          EdgeId chord = -1;
          for (VertexId v : vs)
            for (Dart e : inside_darts(t, reg, v)) chord = e / 2;
          const char col = x.color[chord];
          if (!posets) posets = red_blue_posets(x);
          const auto& poset = col == 'r' ? posets->red : posets->blue;
          const auto& emap = col == 'r' ? posets->red_edge : posets->blue_edge;
          std::set<EdgeId> sides;
          for (EdgeId e : cyc)
            if (x.color[e] == col) sides.insert(emap[e]);
          std::optional<CycleKind> kind;
          for (const auto& p : find_N_patterns(poset))
            if (p.e2 == emap[chord] && sides == std::set<EdgeId>{p.e1, p.e3})
              kind = p.mirrored ? CycleKind::left : CycleKind::right;
          if (!kind) throw Error(ErrorCode::T1Violated, "degenerate alternating 4-cycle without a pattern");
          r.kind = *kind;
        }
        found.push_back(std::move(r));
      }
    }
  }
  return found;
}

std::optional<CycleKind> boundary_incidence_kind(const TransversalStructure& x, const AltFourCycle& r) {
  const RootedMap& t = x.tri;
  const CycleRegion reg = region(t, r.edges);
  // counterclockwise: s_R, w2, t_R, w1
  const std::vector<VertexId> ccw = {r.s_R, r.w2, r.t_R, r.w1};
  const std::vector<EdgeId> ccw_edges = {r.edges[3], r.edges[2], r.edges[1], r.edges[0]};
  int left = 0, right = 0;
  for (int i = 0; i < 4; ++i) {
    const char arrive = x.color[ccw_edges[(i + 3) % 4]], leave = x.color[ccw_edges[i]];
    for (Dart d : inside_darts(t, reg, ccw[i])) {
      if (x.color[d / 2] == arrive) ++left;
      if (x.color[d / 2] == leave) ++right;
    }
  }
  if (left && !right) return CycleKind::left;
  if (right && !left) return CycleKind::right;
  return std::nullopt;
}

std::vector<TransversalStructure> transversal_search(const RootedMap& t) {
  require_quad(t);
  if (t.vertex_count() - 4 > kMaxTransversalInner)
    throw Error(ErrorCode::SizeTooLarge, "transversal search supports up to 5 inner vertices");
  const int m = t.edge_count();
  const auto outer = outer_edges(t);
  TransversalStructure x{t, std::string(m, 'x'), std::vector<char>(2 * m, 0)};
  for (EdgeId e = 0; e < m; ++e) x.out[2 * e] = 1;

  // edges at N, E, S, W are forced by (T2)
  std::vector<EdgeId> free;
  std::vector<int> cat(2 * m, -1);
  auto assign = [&](EdgeId e, char col, bool even_out) {
    x.color[e] = col;
    x.out[2 * e] = even_out;
    x.out[2 * e + 1] = !even_out;
    cat[2 * e] = category(x.color, x.out, 2 * e);
    cat[2 * e + 1] = category(x.color, x.out, 2 * e + 1);
  };
  for (EdgeId e = 0; e < m; ++e) {
    if (outer[e]) continue;
    bool forced = false, ok = true;
    for (int k = 0; k < 2; ++k) {
      const Dart d = 2 * e + k;
      const int want = required_at(x, t.vertex(d));
      if (want < 0) continue;
      const char col = want % 2 == 0 ? 'r' : 'b';
      const bool d_out = want < 2;
      if (forced && (x.color[e] != col || (x.out[d] != 0) != d_out)) ok = false;
      if (!forced) assign(e, col, k == 0 ? d_out : !d_out);
      forced = true;
    }
    if (!ok) return {};
    if (!forced) free.push_back(e);
  }
  for (EdgeId e = 0; e < m; ++e)
    if (outer[e]) cat[2 * e] = cat[2 * e + 1] = -1;
  for (EdgeId e : free) cat[2 * e] = cat[2 * e + 1] = -2;

  auto inner_ok = [&](VertexId v, bool complete) {
    return x.is_outer_vertex(v) || t1_prefix_ok(t, v, cat, complete);
  };
  std::vector<TransversalStructure> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      for (VertexId v : t.vertices())
        if (!inner_ok(v, true)) return;
      found.push_back(x);
      return;
    }
    const EdgeId e = free[k];
    for (char col : {'r', 'b'}) {
      for (bool even_out : {true, false}) {
        assign(e, col, even_out);
        if (inner_ok(t.vertex(2 * e), false) && inner_ok(t.vertex(2 * e + 1), false)) self(self, k + 1);
      }
    }
    cat[2 * e] = cat[2 * e + 1] = -2;
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.color, a.out) < std::tie(b.color, b.out);
  });
  return found;
}

std::vector<TransversalStructure> enumerate_transversal(const RootedMap& t) {
  require_quad(t);
  if (!classify(t).irreducible) throw Error(ErrorCode::NotIrreducible, "triangulation has a separating triangle");
  return transversal_search(t);
}

TransversalStructure minimal_transversal(const RootedMap& t) {
  std::optional<TransversalStructure> minimal;
  for (auto& x : enumerate_transversal(t)) {
    bool right = false;
    for (const auto& r : alt_four_cycles(x)) right = right || r.kind == CycleKind::right;
    if (right) continue;
    if (minimal) throw Error(ErrorCode::UniquenessViolation, "two structures without right alternating 4-cycles");
    minimal = std::move(x);
  }
  if (!minimal) throw Error(ErrorCode::UniquenessViolation, "no structure without right alternating 4-cycles");
  return *minimal;
}

}  // namespace pmap
