#include "pmap/rooted_map.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "pmap/text_format.hpp"

namespace pmap {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonZeroGenus: return "NonZeroGenus";
    case ErrorCode::BadRoot: return "BadRoot";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::Cyclic: return "Cyclic";
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::MultipleSinks: return "MultipleSinks";
    case ErrorCode::PolesNotOuter: return "PolesNotOuter";
    case ErrorCode::LocalConditionViolated: return "LocalConditionViolated";
    case ErrorCode::NotInnerFace: return "NotInnerFace";
    case ErrorCode::NotNonseparable: return "NotNonseparable";
    case ErrorCode::UniquenessViolation: return "UniquenessViolation";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::T1Violated: return "T1Violated";
    case ErrorCode::T2Violated: return "T2Violated";
    case ErrorCode::NoInnerVertex: return "NoInnerVertex";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::HasLoop: return "HasLoop";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::ComponentNotLoopless: return "ComponentNotLoopless";
    case ErrorCode::CoreNotNonseparable: return "CoreNotNonseparable";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotQuadTriangulation: return "NotQuadTriangulation";
    case ErrorCode::CoreNotAdmissible: return "CoreNotAdmissible";
    case ErrorCode::WEDiagonal: return "WEDiagonal";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

// Labels each dart with the smallest dart of its orbit under `next`.
std::vector<int> orbit_labels(const std::vector<Dart>& next, std::vector<int>& reps) {
  const int n = static_cast<int>(next.size());
  std::vector<int> label(n, -1);
  for (int d = 0; d < n; ++d) {
    if (label[d] >= 0) continue;
    reps.push_back(d);
    for (int x = d; label[x] < 0; x = next[x]) label[x] = d;
  }
  return label;
}

}  // namespace

RootedMap build_map(std::vector<Dart> sigma, std::optional<Dart> root) {
  const int n = static_cast<int>(sigma.size());
  if (n % 2 != 0) throw Error(ErrorCode::NotAPermutation, "odd dart count");
  RootedMap m;
  if (n == 0) {
    if (root) throw Error(ErrorCode::BadRoot, "vertex-map has no root");
    return m;
  }
  if (!root || *root < 0 || *root >= n) throw Error(ErrorCode::BadRoot, "root out of range");

  std::vector<Dart> inv(n, -1);
  for (int d = 0; d < n; ++d) {
    if (sigma[d] < 0 || sigma[d] >= n || inv[sigma[d]] >= 0)
      throw Error(ErrorCode::NotAPermutation, "sigma is not a bijection");
    inv[sigma[d]] = d;
  }

  // connectivity under <sigma, alpha>
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart x : {sigma[d], d ^ 1}) {
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        stack.push_back(x);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "darts are not connected");

  std::vector<Dart> phi(n);
  for (int d = 0; d < n; ++d) phi[d] = sigma[d ^ 1];

  m.vertex_of_ = orbit_labels(sigma, m.vertices_);
  m.face_of_ = orbit_labels(phi, m.faces_);
  const int euler = static_cast<int>(m.vertices_.size()) - n / 2 + static_cast<int>(m.faces_.size());
  if (euler != 2)
    throw Error(ErrorCode::NonZeroGenus, "Euler characteristic " + std::to_string(euler));

  m.sigma_ = std::move(sigma);
  m.sigma_inv_ = std::move(inv);
  m.root_ = *root;
  return m;
}

RootedMap vertex_map() { return RootedMap{}; }

RootedMap from_clockwise(int edges, const std::vector<std::vector<Dart>>& cw, Dart root) {
  std::vector<Dart> sigma(2 * edges, -1);
  for (const auto& list : cw) {
    const int k = static_cast<int>(list.size());
    for (int j = 0; j < k; ++j) {
      Dart d = list[j];
      if (d < 0 || d >= 2 * edges || sigma[d] >= 0)
        throw Error(ErrorCode::NotAPermutation, "dart listed twice or out of range");
      sigma[d] = list[(j + k - 1) % k];
    }
  }
  if (std::find(sigma.begin(), sigma.end(), -1) != sigma.end())
    throw Error(ErrorCode::NotAPermutation, "dart missing from rotation lists");
  return build_map(std::move(sigma), edges == 0 ? std::nullopt : std::optional<Dart>(root));
}

std::vector<std::vector<Dart>> clockwise_lists(const RootedMap& m) {
  std::vector<std::vector<Dart>> out;
  for (VertexId v : m.vertices()) out.push_back(m.darts_cw(v));
  return out;
}

RootedMap reroot(const RootedMap& m, Dart root) { return build_map(m.sigma_table(), root); }

std::vector<Dart> RootedMap::darts_cw(VertexId v) const {
  std::vector<Dart> out;
  if (is_vertex_map()) return out;
  Dart d = v;
  do {
    out.push_back(d);
    d = cw(d);
  } while (d != v);
  return out;
}

std::vector<Dart> RootedMap::face_darts(FaceId f) const {
  std::vector<Dart> out;
  if (is_vertex_map()) return out;
  Dart d = f;
  do {
    out.push_back(d);
    d = face_next(d);
  } while (d != f);
  return out;
}

int RootedMap::degree(VertexId v) const { return static_cast<int>(darts_cw(v).size()); }
int RootedMap::face_degree(FaceId f) const { return static_cast<int>(face_darts(f).size()); }

FacesAndCorners faces_and_corners(const RootedMap& m) {
  FacesAndCorners out;
  if (m.is_vertex_map()) {
    out.faces.push_back({});
    out.outer = 0;
    return out;
  }
  for (FaceId f : m.faces()) {
    if (f == m.outer_face()) out.outer = static_cast<int>(out.faces.size());
    out.faces.push_back(m.face_darts(f));
  }
  for (Dart d = 0; d < m.dart_count(); ++d) out.corners.push_back({m.vertex(d), d});
  return out;
}

Canonical canonicalize(const RootedMap& m) {
  Canonical out;
  if (m.is_vertex_map()) return out;
  const int n = m.dart_count();
  std::vector<Dart> label(n, -1), order;
  order.reserve(n);
  auto visit = [&](Dart d) {
    label[d] = static_cast<int>(order.size());
    order.push_back(d);
    label[d ^ 1] = static_cast<int>(order.size());
    order.push_back(d ^ 1);
  };
  visit(m.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart s = m.sigma(order[i]);
    if (label[s] < 0) visit(s);
  }
  std::vector<Dart> sigma(n);
  for (Dart d = 0; d < n; ++d) sigma[label[d]] = label[m.sigma(d)];
  out.map = build_map(std::move(sigma), 0);
  out.relabel = std::move(label);
  return out;
}

CanonicalCode canonical_code(const RootedMap& m) {
  CanonicalCode code{m.edge_count()};
  if (m.is_vertex_map()) return code;
  // Same traversal as canonicalize, without rebuilding the map.
  const int n = m.dart_count();
  std::vector<Dart> label(n, -1), order;
  order.reserve(n);
  auto visit = [&](Dart d) {
    label[d] = static_cast<int>(order.size());
    order.push_back(d);
    label[d ^ 1] = static_cast<int>(order.size());
    order.push_back(d ^ 1);
  };
  visit(m.root());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart s = m.sigma(order[i]);
    if (label[s] < 0) visit(s);
  }
  code.resize(1 + n);
  for (int i = 0; i < n; ++i) code[1 + i] = label[m.sigma(order[i])];
  return code;
}

std::string canonical_form(const RootedMap& m) { return encode(canonicalize(m).map); }

bool is_simple(const RootedMap& m) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    VertexId a = m.vertex(2 * e), b = m.vertex(2 * e + 1);
    if (a == b) return false;
    if (!seen.insert(std::minmax(a, b)).second) return false;
  }
  return true;
}

std::vector<std::vector<EdgeId>> blocks(const RootedMap& m) {
  // Hopcroft-Tarjan lowpoints on the multigraph; parallel edges are distinct.
  std::vector<std::vector<EdgeId>> out;
  if (m.is_vertex_map()) return out;
  const int n = m.dart_count();
  std::vector<int> disc(n, -1), low(n, 0);  // indexed by vertex rep
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::vector<Dart> darts;
    std::size_t next;
  };
  std::vector<Frame> stack;
  auto push = [&](VertexId v, EdgeId pe) {
    disc[v] = low[v] = timer++;
    stack.push_back({v, pe, m.darts_cw(v), 0});
  };
  push(m.vertex(0), -1);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.darts.size()) {
      Dart d = f.darts[f.next++];
      EdgeId e = RootedMap::edge_of(d);
      if (e == f.parent_edge) continue;
      VertexId w = m.head(d);
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        push(w, e);
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(e);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = std::move(stack.back());
    stack.pop_back();
    if (stack.empty()) break;
    VertexId u = stack.back().v;
    low[u] = std::min(low[u], low[done.v]);
    if (low[done.v] >= disc[u]) {
      std::vector<EdgeId> block;
      while (true) {
        EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == done.parent_edge) break;
      }
      std::sort(block.begin(), block.end());
      out.push_back(std::move(block));
    }
  }
  // loops never enter a block through the lowpoint rule; give each its own
  for (EdgeId e = 0; e < m.edge_count(); ++e)
    if (m.vertex(2 * e) == m.vertex(2 * e + 1)) out.push_back({e});
  std::sort(out.begin(), out.end());
  return out;
}

FamilyFlags classify(const RootedMap& m) {
  FamilyFlags f;
  f.loopless = true;
  for (EdgeId e = 0; e < m.edge_count(); ++e)
    if (m.vertex(2 * e) == m.vertex(2 * e + 1)) f.loopless = false;
  if (f.loopless && m.edge_count() >= 1) f.nonseparable = blocks(m).size() == 1;

  if (m.is_vertex_map() || !is_simple(m)) return f;
  bool inner_triangles = true;
  for (FaceId face : m.faces())
    if (face != m.outer_face() && m.face_degree(face) != 3) inner_triangles = false;
  const int outer_deg = m.face_degree(m.outer_face());
  f.triangulation = inner_triangles && outer_deg == 3;
  f.quad_triangulation = inner_triangles && outer_deg == 4;
  if (f.quad_triangulation) {
    // Every facial triangle is a distinct 3-cycle, so irreducibility is
    // equivalent to the graph having exactly as many triangles as inner faces.
    const int nv = m.vertex_count();
    std::vector<std::vector<char>> adj(m.dart_count(), std::vector<char>(m.dart_count(), 0));
    std::vector<VertexId> vs = m.vertices();
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
      VertexId a = m.vertex(2 * e), b = m.vertex(2 * e + 1);
      adj[a][b] = adj[b][a] = 1;
    }
    long triangles = 0;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        for (int k = j + 1; k < nv; ++k)
          if (adj[vs[i]][vs[j]] && adj[vs[j]][vs[k]] && adj[vs[i]][vs[k]]) ++triangles;
    f.irreducible = triangles == m.face_count() - 1;
  }
  return f;
}

RootedMap submap(const RootedMap& m, std::span<const char> keep_edge, Dart root,
                 std::vector<Dart>* old_to_new) {
  const int n = m.dart_count();
  std::vector<Dart> relabel(n, -1);
  int next = 0;
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    relabel[2 * e] = next++;
    relabel[2 * e + 1] = next++;
  }
  std::vector<std::vector<Dart>> cw;
  for (VertexId v : m.vertices()) {
    std::vector<Dart> list;
    for (Dart d : m.darts_cw(v))
      if (relabel[d] >= 0) list.push_back(relabel[d]);
    if (!list.empty()) cw.push_back(std::move(list));
  }
  if (old_to_new) *old_to_new = relabel;
  if (next == 0) return vertex_map();
  if (root < 0 || relabel[root] < 0) throw Error(ErrorCode::BadRoot, "submap root dropped");
  return from_clockwise(next / 2, cw, relabel[root]);
}

}  // namespace pmap
