#include "pmap/decomposition.hpp"

#include <algorithm>

#include "pmap/bijections.hpp"

namespace pmap {

namespace {

// darts of the original map behind each dart of canonicalize(submap(...))
std::vector<Dart> canonical_origin(const std::vector<Dart>& to_sub, const Canonical& can) {
  std::vector<Dart> inv(can.map.dart_count(), -1);
  for (Dart d = 0; d < static_cast<int>(to_sub.size()); ++d)
    if (to_sub[d] >= 0) inv[can.relabel[to_sub[d]]] = d;
  return inv;
}

std::vector<FaceId> sorted_faces(const RootedMap& m) {
  std::vector<FaceId> fs = m.faces();
  std::sort(fs.begin(), fs.end());
  return fs;
}

Dart face_prev(const RootedMap& m, Dart d) { return m.cw(d) ^ 1; }

// edges of the faces reachable from `start` without crossing a blocked edge
std::vector<char> region_edges(const RootedMap& m, FaceId start, const std::vector<char>& blocked,
                               std::vector<char>* reached_out = nullptr) {
  std::vector<char> reached(m.dart_count(), 0), edges(m.edge_count(), 0);
  std::vector<FaceId> stack{start};
  reached[start] = 1;
  while (!stack.empty()) {
    const FaceId f = stack.back();
    stack.pop_back();
    for (Dart d : m.face_darts(f)) {
      edges[d / 2] = 1;
      if (blocked[d / 2]) continue;
      const FaceId g = m.left_face(d);
      if (!reached[g]) {
        reached[g] = 1;
        stack.push_back(g);
      }
    }
  }
  if (reached_out) *reached_out = reached;
  return edges;
}

struct Outer {
  VertexId N, W, S, E;
};

Outer outer_of(const RootedMap& t4) {
  const Dart r = t4.root();
  const Dart ws = t4.face_next(r);
  return {t4.vertex(r), t4.head(r), t4.head(ws), t4.head(t4.face_next(ws))};
}

bool adjacent(const RootedMap& m, VertexId a, VertexId b) {
  for (Dart d : m.darts_cw(a))
    if (m.head(d) == b) return true;
  return false;
}

DiagonalKind kind_of(const RootedMap& core) {
  if (core.vertex_count() > 4) return DiagonalKind::non_diagonal;
  const Outer o = outer_of(core);
  return adjacent(core, o.W, o.E) ? DiagonalKind::we_diagonal : DiagonalKind::sn_diagonal;
}

}  // namespace

const char* to_string(DiagonalKind k) {
  switch (k) {
    case DiagonalKind::non_diagonal: return "non-diagonal";
    case DiagonalKind::we_diagonal: return "WE-diagonal";
    case DiagonalKind::sn_diagonal: return "SN-diagonal";
  }
  return "?";
}

int tri_size(const RootedMap& t) {
  const auto flags = classify(t);
  if (flags.triangulation || flags.quad_triangulation) return t.vertex_count() - 3;
  throw Error(ErrorCode::NotTriangulation, "not a triangulation of a triangle or a 4-gon");
}

RootedMap triangle_map() { return canonicalize(from_clockwise(3, {{0, 5}, {2, 1}, {4, 3}}, 0)).map; }

LooplessDecomposition block_decompose(const RootedMap& m) {
  if (m.is_vertex_map()) throw Error(ErrorCode::Empty, "block_decompose needs at least one edge");
  if (!classify(m).loopless) throw Error(ErrorCode::HasLoop, "block_decompose needs a loopless map");
  const EdgeId root_edge = m.root() / 2;
  std::vector<char> in_core(m.edge_count(), 0), core_vertex(m.dart_count(), 0);
  for (const auto& b : blocks(m)) {
    if (std::find(b.begin(), b.end(), root_edge) == b.end()) continue;
    for (EdgeId e : b) {
      in_core[e] = 1;
      core_vertex[m.vertex(2 * e)] = core_vertex[m.vertex(2 * e + 1)] = 1;
    }
  }
  std::vector<Dart> to_sub;
  const RootedMap sub = submap(m, in_core, m.root(), &to_sub);
  const Canonical can = canonicalize(sub);
  const std::vector<Dart> origin = canonical_origin(to_sub, can);

  LooplessDecomposition out;
  out.core = can.map;
  for (Dart c = 0; c < can.map.dart_count(); ++c) {
    const Dart x = origin[c];
    std::vector<Dart> sector;
    for (Dart y = m.cw(x); !in_core[y / 2]; y = m.cw(y)) sector.push_back(y);
    if (sector.empty()) {
      out.components.push_back(vertex_map());
      continue;
    }
    std::vector<char> keep(m.edge_count(), 0);
    std::vector<Dart> stack = sector;
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      if (keep[d / 2]) continue;
      keep[d / 2] = 1;
      const VertexId h = m.head(d);
      if (core_vertex[h]) continue;
      for (Dart y : m.darts_cw(h))
        if (!keep[y / 2]) stack.push_back(y);
    }
    out.components.push_back(canonicalize(submap(m, keep, sector.back())).map);
  }
  return out;
}

RootedMap block_compose(const LooplessDecomposition& d) {
  if (!classify(d.core).nonseparable) throw Error(ErrorCode::CoreNotNonseparable, "core is not non-separable");
  const RootedMap core = canonicalize(d.core).map;
  if (static_cast<int>(d.components.size()) != core.dart_count())
    throw Error(ErrorCode::ArityMismatch, "need one component per corner of the core");
  for (const auto& c : d.components)
    if (!classify(c).loopless) throw Error(ErrorCode::ComponentNotLoopless, "component has a loop");

  int edges = core.edge_count();
  std::vector<std::vector<Dart>> after(core.dart_count());
  std::vector<std::vector<Dart>> cw;
  for (Dart x = 0; x < core.dart_count(); ++x) {
    const RootedMap& mi = d.components[x];
    if (mi.is_vertex_map()) continue;
    const int offset = 2 * edges;
    edges += mi.edge_count();
    const Dart r = mi.root();
    // the root vertex opens between the root and its clockwise successor
    for (Dart y = mi.cw(r);; y = mi.cw(y)) {
      after[x].push_back(y + offset);
      if (y == r) break;
    }
    for (VertexId v : mi.vertices()) {
      if (v == mi.vertex(r)) continue;
      std::vector<Dart> list;
      for (Dart y : mi.darts_cw(v)) list.push_back(y + offset);
      cw.push_back(std::move(list));
    }
  }
  for (VertexId v : core.vertices()) {
    std::vector<Dart> list;
    for (Dart x : core.darts_cw(v)) {
      list.push_back(x);
      list.insert(list.end(), after[x].begin(), after[x].end());
    }
    cw.push_back(std::move(list));
  }
  return canonicalize(from_clockwise(edges, cw, 0)).map;
}

TriangulationDecomposition tri_decompose(const RootedMap& t4) {
  if (!classify(t4).quad_triangulation)
    throw Error(ErrorCode::NotQuadTriangulation, "tri_decompose needs a 4-gon triangulation");
  const std::vector<VertexId>& vs = t4.vertices();
  const int nv = static_cast<int>(vs.size());
  std::vector<std::vector<EdgeId>> edge_between(t4.dart_count(), std::vector<EdgeId>(t4.dart_count(), -1));
  for (EdgeId e = 0; e < t4.edge_count(); ++e) {
    const VertexId a = t4.vertex(2 * e), b = t4.vertex(2 * e + 1);
    edge_between[a][b] = edge_between[b][a] = e;
  }

  // vertices strictly inside some 3-cycle
  std::vector<char> inside(t4.dart_count(), 0);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k) {
        const EdgeId ab = edge_between[vs[i]][vs[j]], bc = edge_between[vs[j]][vs[k]], ca = edge_between[vs[i]][vs[k]];
        if (ab < 0 || bc < 0 || ca < 0) continue;
        std::vector<char> blocked(t4.edge_count(), 0), reached;
        blocked[ab] = blocked[bc] = blocked[ca] = 1;
        region_edges(t4, t4.outer_face(), blocked, &reached);
        for (FaceId f : t4.faces()) {
          if (reached[f]) continue;
          for (Dart d : t4.face_darts(f)) {
            const VertexId v = t4.vertex(d);
            if (v != vs[i] && v != vs[j] && v != vs[k]) inside[v] = 1;
          }
        }
      }

  std::vector<char> keep(t4.edge_count(), 0);
  for (EdgeId e = 0; e < t4.edge_count(); ++e) keep[e] = !inside[t4.vertex(2 * e)] && !inside[t4.vertex(2 * e + 1)];
  std::vector<Dart> to_sub;
  const RootedMap sub = submap(t4, keep, t4.root(), &to_sub);
  const Canonical can = canonicalize(sub);
  const std::vector<Dart> origin = canonical_origin(to_sub, can);
  const RootedMap& core = can.map;

  TriangulationDecomposition out;
  out.core = core;
  out.kind = kind_of(core);
  for (FaceId f : sorted_faces(core)) {
    if (f == core.outer_face()) continue;
    std::vector<char> blocked(t4.edge_count(), 0);
    for (Dart d : core.face_darts(f)) blocked[origin[d] / 2] = 1;
    const std::vector<char> region = region_edges(t4, t4.face(origin[f]), blocked);
    out.components.push_back(canonicalize(submap(t4, region, origin[face_prev(core, f)] ^ 1)).map);
  }
  return out;
}

RootedMap tri_compose(const TriangulationDecomposition& d) {
  const auto flags = classify(d.core);
  if (!flags.quad_triangulation || !flags.irreducible)
    throw Error(ErrorCode::CoreNotAdmissible, "core must be irreducible or a link-map");
  const RootedMap core = canonicalize(d.core).map;
  if (kind_of(core) != d.kind) throw Error(ErrorCode::CoreNotAdmissible, "kind does not match the core");
  const std::vector<FaceId> faces = sorted_faces(core);
  if (d.components.size() + 1 != faces.size())
    throw Error(ErrorCode::ArityMismatch, "need one component per inner face of the core");
  for (const auto& c : d.components)
    if (!classify(c).triangulation) throw Error(ErrorCode::NotTriangulation, "component is not a triangulation");

  int edges = core.edge_count();
  std::vector<std::vector<Dart>> after(core.dart_count());
  std::vector<std::vector<Dart>> cw;
  std::size_t next_component = 0;
  for (FaceId f : faces) {
    if (f == core.outer_face()) continue;
    const RootedMap& ti = d.components[next_component++];
    if (ti.vertex_count() == 3) continue;
    const Dart o0 = ti.root(), o1 = ti.face_next(o0), o2 = ti.face_next(o1);
    std::vector<char> boundary(ti.edge_count(), 0);
    boundary[o0 / 2] = boundary[o1 / 2] = boundary[o2 / 2] = 1;
    std::vector<Dart> label(ti.dart_count(), -1);
    for (EdgeId e = 0; e < ti.edge_count(); ++e) {
      if (boundary[e]) continue;
      label[2 * e] = 2 * edges;
      label[2 * e + 1] = 2 * edges + 1;
      ++edges;
    }
    // core dart with the face on its right -> matching dart of the component
    const Dart dc = f, dn = core.face_next(f), dp = face_prev(core, f);
    const std::pair<Dart, Dart> sides[] = {{dp, o0 ^ 1}, {dn, o1 ^ 1}, {dc, o2 ^ 1}};
    for (auto [x, g] : sides)
      for (Dart y = ti.cw(g); !boundary[y / 2]; y = ti.cw(y)) after[x].push_back(label[y]);
    const VertexId outer[] = {ti.vertex(o0), ti.vertex(o1), ti.vertex(o2)};
    for (VertexId v : ti.vertices()) {
      if (std::find(std::begin(outer), std::end(outer), v) != std::end(outer)) continue;
      std::vector<Dart> list;
      for (Dart y : ti.darts_cw(v)) list.push_back(label[y]);
      cw.push_back(std::move(list));
    }
  }
  for (VertexId v : core.vertices()) {
    std::vector<Dart> list;
    for (Dart x : core.darts_cw(v)) {
      list.push_back(x);
      list.insert(list.end(), after[x].begin(), after[x].end());
    }
    cw.push_back(std::move(list));
  }
  return canonicalize(from_clockwise(edges, cw, 0)).map;
}

RootedMap tri_to_quad(const RootedMap& t) {
  if (!classify(t).triangulation) throw Error(ErrorCode::NotTriangulation, "tri_to_quad needs a triangulation");
  if (t.vertex_count() < 4) throw Error(ErrorCode::TooSmall, "tri_to_quad needs an inner vertex");
  std::vector<char> keep(t.edge_count(), 1);
  keep[t.face_next(t.root()) / 2] = 0;
  return canonicalize(submap(t, keep, t.root())).map;
}

RootedMap quad_to_tri(const RootedMap& t4) {
  if (!classify(t4).quad_triangulation)
    throw Error(ErrorCode::NotQuadTriangulation, "quad_to_tri needs a 4-gon triangulation");
  const Outer o = outer_of(t4);
  if (adjacent(t4, o.W, o.E)) throw Error(ErrorCode::WEDiagonal, "W and E are adjacent");
  const Dart ws = t4.face_next(t4.root());
  const Dart en = t4.face_next(t4.face_next(ws));
  const int k = t4.edge_count();
  std::vector<std::vector<Dart>> cw;
  for (VertexId v : t4.vertices()) {
    std::vector<Dart> list;
    for (Dart d : t4.darts_cw(v)) {
      list.push_back(d);
      if (d == ws) list.push_back(2 * k);
      if (d == en) list.push_back(2 * k + 1);
    }
    cw.push_back(std::move(list));
  }
  return canonicalize(from_clockwise(k + 1, cw, t4.root())).map;
}

RootedMap f2(const RootedMap& m) {
  if (m.is_vertex_map()) return triangle_map();
  const LooplessDecomposition d = block_decompose(m);
  TriangulationDecomposition t;
  t.core = f1_tilde(d.core);
  t.kind = kind_of(t.core);
  for (const auto& c : d.components) t.components.push_back(f2(c));
  return quad_to_tri(tri_compose(t));
}

RootedMap f2_inv(const RootedMap& t) {
  if (!classify(t).triangulation) throw Error(ErrorCode::NotTriangulation, "f2_inv needs a triangulation");
  const int size = t.vertex_count() - 3;
  if (size == 0) return vertex_map();
  if (size > kMaxF2InvSize) throw Error(ErrorCode::SizeTooLarge, "f2_inv is limited to small triangulations");
  const TriangulationDecomposition d = tri_decompose(tri_to_quad(t));
  LooplessDecomposition m;
  if (d.core == sn_link_map()) m.core = canonicalize(build_map({0, 1}, 0)).map;
  else m.core = f1_inv(d.core);
  for (const auto& c : d.components) m.components.push_back(f2_inv(c));
  return block_compose(m);
}

}  // namespace pmap
