#include "pmap/bipolar.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "pmap/enumeration.hpp"

namespace pmap {

namespace {

int cyclic_changes(const std::vector<char>& flags) {
  int changes = 0;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i] != flags[(i + flags.size() - 1) % flags.size()]) ++changes;
  return changes;
}

std::vector<char> flags_around(const RootedMap& m, VertexId v, const std::vector<char>& out) {
  std::vector<char> f;
  for (Dart d : m.darts_cw(v)) f.push_back(out[d]);
  return f;
}

std::vector<char> flags_along(const RootedMap& m, FaceId face, const std::vector<char>& out) {
  std::vector<char> f;
  for (Dart d : m.face_darts(face)) f.push_back(out[d]);
  return f;
}

// Kahn's algorithm over all edges of m.
bool acyclic(const RootedMap& m, const std::vector<char>& out) {
  std::vector<int> indeg(m.dart_count(), 0);
  for (Dart d = 0; d < m.dart_count(); ++d)
    if (!out[d]) ++indeg[m.vertex(d)];
  std::vector<VertexId> ready;
  for (VertexId v : m.vertices())
    if (indeg[v] == 0) ready.push_back(v);
  int done = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++done;
    for (Dart d : m.darts_cw(v)) {
      if (!out[d]) continue;
      VertexId w = m.head(d);
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return done == m.vertex_count();
}

bool has_in(const RootedMap& m, VertexId v, const std::vector<char>& out) {
  for (Dart d : m.darts_cw(v))
    if (!out[d]) return true;
  return false;
}

bool has_out(const RootedMap& m, VertexId v, const std::vector<char>& out) {
  for (Dart d : m.darts_cw(v))
    if (out[d]) return true;
  return false;
}

bool on_face(const RootedMap& m, VertexId v, FaceId f) {
  for (Dart d : m.darts_cw(v))
    if (m.face(d) == f) return true;
  return false;
}

std::optional<ErrorCode> definitional(const RootedMap& m, const std::vector<char>& out, VertexId s,
                                      VertexId t, FaceId outer) {
  if (!acyclic(m, out)) return ErrorCode::Cyclic;
  for (VertexId v : m.vertices())
    if (has_in(m, v, out) == (v == s)) return ErrorCode::MultipleSources;
  for (VertexId v : m.vertices())
    if (has_out(m, v, out) == (v == t)) return ErrorCode::MultipleSinks;
  if (outer >= 0 && (!on_face(m, s, outer) || !on_face(m, t, outer))) return ErrorCode::PolesNotOuter;
  return std::nullopt;
}

bool local_closed(const RootedMap& m, const std::vector<char>& out) {
  const VertexId s = m.vertex(m.root()), t = m.head(m.root());
  if (s == t || !out[m.root()]) return false;
  for (VertexId v : m.vertices()) {
    if (v == s) {
      if (has_in(m, v, out)) return false;
    } else if (v == t) {
      if (has_out(m, v, out)) return false;
    } else if (cyclic_changes(flags_around(m, v, out)) != 2) {
      return false;
    }
  }
  for (FaceId f : m.faces())
    if (cyclic_changes(flags_along(m, f, out)) != 2) return false;
  return true;
}

void check_shape(const RootedMap& m, const std::string& orient, VertexId s, VertexId t) {
  auto is_vertex = [&](VertexId v) { return v >= 0 && v < m.dart_count() && m.vertex(v) == v; };
  if (m.is_vertex_map() || static_cast<int>(orient.size()) != m.edge_count() || !is_vertex(s) ||
      !is_vertex(t) || s == t)
    throw Error(ErrorCode::InvalidInput, "orientation needs a sign per edge and two distinct poles");
  if (orient.find_first_not_of("+-") != std::string::npos)
    throw Error(ErrorCode::InvalidInput, "signs must be '+' or '-'");
}

}  // namespace

std::string BipolarOrientation::signs() const {
  std::string s(closed.edge_count(), '+');
  for (EdgeId e = 0; e < closed.edge_count(); ++e)
    if (!out[2 * e]) s[e] = '-';
  return s;
}

std::vector<char> out_flags(const std::string& orient) {
  std::vector<char> out(2 * orient.size());
  for (std::size_t e = 0; e < orient.size(); ++e) {
    out[2 * e] = orient[e] == '+';
    out[2 * e + 1] = orient[e] != '+';
  }
  return out;
}

std::optional<ErrorCode> check_definitional(const RootedMap& m, const std::string& orient, VertexId s,
                                            VertexId t) {
  check_shape(m, orient, s, t);
  return definitional(m, out_flags(orient), s, t, m.outer_face());
}

bool check_local(const RootedMap& m, const std::string& orient, VertexId s, VertexId t) {
  check_shape(m, orient, s, t);
  const auto out = out_flags(orient);
  const FaceId outer = m.outer_face();
  if (has_in(m, s, out) || has_out(m, t, out)) return false;
  if (!on_face(m, s, outer) || !on_face(m, t, outer)) return false;
  for (VertexId v : m.vertices())
    if (v != s && v != t && cyclic_changes(flags_around(m, v, out)) != 2) return false;
  for (FaceId f : m.faces()) {
    if (cyclic_changes(flags_along(m, f, out)) != 2) return false;
    if (f != outer) continue;
    // the outer contour is two paths from s to t
    auto walk = m.face_darts(f);
    const int k = static_cast<int>(walk.size());
    for (int i = 0; i < k; ++i) {
      Dart prev = walk[(i + k - 1) % k], d = walk[i];
      if (out[d] && !out[prev] && m.vertex(d) != s) return false;
      if (!out[d] && out[prev] && m.vertex(d) != t) return false;
    }
  }
  return true;
}

BipolarOrientation make_bipolar(const RootedMap& m, const std::string& orient, VertexId s, VertexId t) {
  const auto def = check_definitional(m, orient, s, t);
  const bool loc = check_local(m, orient, s, t);
  if (def.has_value() == loc)
    throw Error(ErrorCode::LocalConditionViolated, "definitional and local bipolar checks disagree");
  if (def) throw Error(*def, "not a plane bipolar orientation");

  // the pole goes into the unique outer corners at s and t
  const FaceId outer = m.outer_face();
  auto outer_corner = [&](VertexId v) {
    Dart found = -1;
    for (Dart d : m.darts_cw(v))
      if (m.face(d) == outer) {
        if (found >= 0) throw Error(ErrorCode::LocalConditionViolated, "pole on two outer corners");
        found = d;
      }
    return found;
  };
  const Dart cs = outer_corner(s), ct = outer_corner(t);
  auto cw = clockwise_lists(m);
  const int e = m.edge_count();
  for (auto& list : cw) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (list[j] == cs || list[j] == ct) {
        list.insert(list.begin() + j + 1, list[j] == cs ? 2 * e : 2 * e + 1);
        break;
      }
    }
  }
  RootedMap closed = from_clockwise(e + 1, cw, 2 * e);
  auto out = out_flags(orient + "+");
  auto result = close_orientation(closed, std::move(out));
  if (!result) throw Error(ErrorCode::LocalConditionViolated, "closing the orientation failed");
  return *result;
}

std::optional<BipolarOrientation> close_orientation(const RootedMap& closed, std::vector<char> out) {
  const VertexId s = closed.vertex(closed.root()), t = closed.head(closed.root());
  const bool loc = local_closed(closed, out);
  const bool def = s != t && out[closed.root()] && !definitional(closed, out, s, t, -1);
  if (loc != def) throw Error(ErrorCode::LocalConditionViolated, "definitional and local bipolar checks disagree");
  if (!loc) return std::nullopt;
  return BipolarOrientation{closed, std::move(out)};
}

BipolarOrientation canonical(const BipolarOrientation& o) {
  auto c = canonicalize(o.closed);
  std::vector<char> out(o.out.size());
  for (Dart d = 0; d < o.closed.dart_count(); ++d) out[c.relabel[d]] = o.out[d];
  return {std::move(c.map), std::move(out)};
}

Record to_record(const BipolarOrientation& o) {
  std::vector<char> keep(o.closed.edge_count(), 1);
  keep[o.pole_edge()] = 0;
  std::vector<Dart> relabel;
  const Dart at_s = o.closed.sigma(o.pole()), at_t = o.closed.sigma(o.pole() ^ 1);
  Record r;
  r.map = submap(o.closed, keep, at_s, &relabel);
  std::string orient(r.map.edge_count(), '+');
  for (Dart d = 0; d < o.closed.dart_count(); d += 2)
    if (relabel[d] >= 0 && !o.out[d]) orient[relabel[d] / 2] = '-';
  r.orient = orient;
  r.poles = std::make_pair(relabel[at_s], relabel[at_t]);
  return r;
}

BipolarOrientation from_record(const Record& r) {
  if (!r.orient || !r.poles) throw Error(ErrorCode::InvalidInput, "record needs orient and poles lines");
  return make_bipolar(r.map, *r.orient, r.map.vertex(r.poles->first), r.map.vertex(r.poles->second));
}

FaceGeometry face_contour(const BipolarOrientation& o, FaceId f) {
  const RootedMap& m = o.closed;
  auto walk = m.face_darts(f);
  const int k = static_cast<int>(walk.size());
  int start = 0;
  while (!(o.out[walk[start]] && !o.out[walk[(start + k - 1) % k]])) ++start;
  FaceGeometry g;
  g.face = f;
  g.s_f = m.vertex(walk[start]);
  int i = start;
  for (; o.out[walk[i % k]]; ++i) g.left_path.push_back(walk[i % k]);
  for (; i < start + k; ++i) g.right_path.push_back(walk[i % k] ^ 1);
  std::reverse(g.right_path.begin(), g.right_path.end());
  g.t_f = m.head(g.left_path.back());
  g.topleft_edge = g.left_path.back() / 2;
  g.bottomright_edge = g.right_path.front() / 2;
  for (std::size_t j = 0; j + 1 < g.left_path.size(); ++j) g.left_lateral.push_back(m.head(g.left_path[j]));
  for (std::size_t j = 0; j + 1 < g.right_path.size(); ++j) g.right_lateral.push_back(m.head(g.right_path[j]));
  return g;
}

FaceGeometry face_geometry(const BipolarOrientation& o, FaceId f) {
  if (f < 0 || f >= o.closed.dart_count() || o.closed.face(f) != f || !o.is_inner(f))
    throw Error(ErrorCode::NotInnerFace, "not an inner face");
  return face_contour(o, f);
}

namespace {

void close_transitively(std::vector<std::vector<char>>& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
}

Dart tail_dart(const BipolarOrientation& o, EdgeId e) { return o.out[2 * e] ? 2 * e : 2 * e + 1; }

}  // namespace

OrderRelations orders(const BipolarOrientation& o) {
  const RootedMap& m = o.closed;
  OrderRelations r;
  std::vector<int> edge_index(m.edge_count(), -1);
  for (EdgeId e = 0; e < m.edge_count(); ++e)
    if (e != o.pole_edge()) {
      edge_index[e] = static_cast<int>(r.edges.size());
      r.edges.push_back(e);
    }
  r.faces = m.faces();
  std::sort(r.faces.begin(), r.faces.end());
  auto face_index = [&](FaceId f) {
    return static_cast<int>(std::lower_bound(r.faces.begin(), r.faces.end(), f) - r.faces.begin());
  };
  const std::size_t ne = r.edges.size(), nf = r.faces.size();
  r.edge_le.assign(ne, std::vector<char>(ne, 0));
  r.dual_le.assign(ne, std::vector<char>(ne, 0));
  r.face_le.assign(nf, std::vector<char>(nf, 0));
  for (EdgeId e : r.edges) {
    const Dart d = tail_dart(o, e);
    for (Dart x : m.darts_cw(m.head(d)))
      if (o.out[x] && !o.is_pole(x)) r.edge_le[edge_index[e]][edge_index[x / 2]] = 1;
    r.face_le[face_index(m.left_face(d))][face_index(m.face(d))] = 1;
  }
  for (FaceId f : m.faces()) {
    if (!o.is_inner(f)) continue;
    auto g = face_contour(o, f);
    for (Dart a : g.left_path)
      for (Dart b : g.right_path) r.dual_le[edge_index[a / 2]][edge_index[b / 2]] = 1;
  }
  close_transitively(r.edge_le);
  close_transitively(r.dual_le);
  close_transitively(r.face_le);
  return r;
}

std::vector<NPattern> find_N_patterns(const BipolarOrientation& o) {
  const RootedMap& m = o.closed;
  std::vector<NPattern> found;
  for (int mirrored = 0; mirrored < 2; ++mirrored) {
    auto next = [&](Dart d) { return mirrored ? m.ccw(d) : m.cw(d); };
    for (EdgeId e2 = 0; e2 < m.edge_count(); ++e2) {
      if (e2 == o.pole_edge()) continue;
      const Dart d2 = tail_dart(o, e2);
      const Dart d1 = next(d2), d3 = next(d2 ^ 1);
      if (d1 == d2 || o.is_pole(d1) || !o.out[d1]) continue;
      if (d3 == (d2 ^ 1) || o.is_pole(d3) || o.out[d3]) continue;
      found.push_back({d1 / 2, e2, d3 / 2, mirrored == 1});
    }
  }
  return found;
}

bool is_N_avoiding(const BipolarOrientation& o) {
  for (const auto& p : find_N_patterns(o))
    if (!p.mirrored) return false;
  return true;
}

bool is_bipolar_poset_definitional(const BipolarOrientation& o) {
  const RootedMap& m = o.closed;
  if (m.vertex_count() < 3) return false;
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    if (e == o.pole_edge()) continue;
    const Dart d = tail_dart(o, e);
    if (!arcs.insert({m.vertex(d), m.head(d)}).second) return false;
  }
  // an edge u->w is transitive when w is reachable from u without it
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    if (e == o.pole_edge()) continue;
    const Dart d = tail_dart(o, e);
    std::vector<char> seen(m.dart_count(), 0);
    std::vector<VertexId> stack{m.vertex(d)};
    seen[m.vertex(d)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart x : m.darts_cw(v)) {
        if (!o.out[x] || x / 2 == e || o.is_pole(x)) continue;
        VertexId w = m.head(x);
        if (w == m.head(d)) return false;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return true;
}

bool is_bipolar_poset_lateral(const BipolarOrientation& o) {
  if (o.vertex_count() < 3) return false;
  for (FaceId f : o.closed.faces()) {
    if (!o.is_inner(f)) continue;
    auto g = face_contour(o, f);
    if (g.left_path.size() < 2 || g.right_path.size() < 2) return false;
  }
  return true;
}

bool is_bipolar_poset(const BipolarOrientation& o) {
  const bool a = is_bipolar_poset_definitional(o), b = is_bipolar_poset_lateral(o);
  if (a != b) throw Error(ErrorCode::LocalConditionViolated, "bipolar poset criteria disagree");
  return a;
}

std::vector<LOP> find_LOPs(const BipolarOrientation& o) {
  std::vector<FaceGeometry> inner;
  for (FaceId f : o.closed.faces())
    if (o.is_inner(f)) inner.push_back(face_contour(o, f));
  auto contains = [](const std::vector<VertexId>& vs, VertexId v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  std::vector<LOP> found;
  for (const auto& g1 : inner)
    for (const auto& g2 : inner)
      if (g1.face != g2.face && contains(g1.left_lateral, g2.t_f) && contains(g2.right_lateral, g1.s_f))
        found.push_back({g2.t_f, g1.s_f, g1.face, g2.face});
  return found;
}

std::vector<BipolarOrientation> enumerate_bipolar(const RootedMap& m, VertexId s, VertexId t) {
  if (m.edge_count() > 12) throw Error(ErrorCode::SizeTooLarge, "enumerate_bipolar supports up to 12 edges");
  const int e = m.edge_count();
  std::vector<BipolarOrientation> found;
  std::string orient(e, '+');
  for (long mask = 0; mask < (1L << e); ++mask) {
    for (int k = 0; k < e; ++k) orient[k] = (mask >> (e - 1 - k) & 1) ? '-' : '+';
    const bool def = !check_definitional(m, orient, s, t);
    const bool loc = check_local(m, orient, s, t);
    if (def != loc) throw Error(ErrorCode::LocalConditionViolated, "definitional and local bipolar checks disagree");
    if (def) found.push_back(make_bipolar(m, orient, s, t));
  }
  return found;
}

std::vector<BipolarOrientation> enumerate_closed(const RootedMap& closed) {
  const int e = closed.edge_count();
  if (e > 13) throw Error(ErrorCode::SizeTooLarge, "enumerate_closed supports up to 13 edges");
  const EdgeId pole = closed.root() / 2;
  std::vector<EdgeId> free;
  for (EdgeId k = 0; k < e; ++k)
    if (k != pole) free.push_back(k);
  std::vector<BipolarOrientation> found;
  std::vector<char> out(closed.dart_count());
  out[closed.root()] = 1;
  out[closed.root() ^ 1] = 0;
  const int f = static_cast<int>(free.size());
  for (long mask = 0; mask < (1L << f); ++mask) {
    for (int k = 0; k < f; ++k) {
      const bool minus = mask >> (f - 1 - k) & 1;
      out[2 * free[k]] = !minus;
      out[2 * free[k] + 1] = minus;
    }
    if (auto o = close_orientation(closed, out)) found.push_back(std::move(*o));
  }
  return found;
}

std::vector<BipolarOrientation> enumerate_posets(int nonspecial, int jobs) {
  if (nonspecial < 1 || nonspecial + 2 > kMaxSimpleVertices)
    throw Error(ErrorCode::SizeTooLarge, "poset enumeration supports 1..4 non-special vertices");
  std::vector<RootedMap> closed;
  for (auto& m : enumerate_simple_maps(nonspecial + 2, jobs))
    if (classify(m).nonseparable) closed.push_back(std::move(m));
  jobs = std::max(1, jobs);
  std::vector<std::vector<BipolarOrientation>> partial(closed.size());
  auto work = [&](int t) {
    for (std::size_t i = t; i < closed.size(); i += jobs)
      for (auto& o : enumerate_closed(closed[i]))
        if (is_bipolar_poset(o)) partial[i].push_back(std::move(o));
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(work, t);
  work(0);
  for (auto& th : threads) th.join();
  std::vector<BipolarOrientation> out;
  for (auto& part : partial)
    for (auto& o : part) out.push_back(std::move(o));
  return out;
}

BipolarOrientation minimal_bipolar(const RootedMap& m) {
  if (!classify(m).nonseparable) throw Error(ErrorCode::NotNonseparable, "map is not non-separable");
  if (m.edge_count() < 2) throw Error(ErrorCode::TooSmall, "minimal orientation needs at least 2 edges");
  std::optional<BipolarOrientation> minimal;
  for (auto& o : enumerate_closed(m)) {
    if (!find_LOPs(o).empty()) continue;
    if (minimal) throw Error(ErrorCode::UniquenessViolation, "two LOP-free orientations");
    minimal = std::move(o);
  }
  if (!minimal) throw Error(ErrorCode::UniquenessViolation, "no LOP-free orientation");
  return *minimal;
}

}  // namespace pmap
