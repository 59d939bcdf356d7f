#include "pmap/bijections.hpp"

#include <algorithm>
#include <map>

namespace pmap {

BipolarOrientation phi(const BipolarOrientation& o) {
  if (o.edge_count() < 1) throw Error(ErrorCode::InvalidInput, "phi needs at least one edge");
  const RootedMap& m = o.closed;
  // one vertex per edge of O; the pole edge gives s_P (as the left added edge)
  // and t_P (as the right one)
  std::vector<int> idx(m.edge_count(), -1);
  int nv = 0;
  for (EdgeId e = 0; e < m.edge_count(); ++e)
    if (e != o.pole_edge()) idx[e] = nv++;
  const int sP = nv++, tP = nv++;
  auto white = [&](Dart d, FaceId f) {
    if (!o.is_pole(d)) return idx[d / 2];
    return f == o.left_special() ? sP : tP;
  };

  int edges = 0;
  std::vector<std::vector<Dart>> outs(nv), ins(nv);
  for (FaceId f : m.faces()) {
    const auto g = face_contour(o, f);
    const int p = static_cast<int>(g.left_path.size()), q = static_cast<int>(g.right_path.size());
    std::vector<int> a(p), b(q);
    for (int i = 0; i < p; ++i) a[i] = white(g.left_path[i], f);
    for (int j = 0; j < q; ++j) b[j] = white(g.right_path[j], f);
    // a_i -> b_1 for i < p, a_p -> b_j for every j
    std::vector<Dart> into_b1;
    for (int i = 0; i + 1 < p; ++i) {
      const int k = edges++;
      outs[a[i]] = {2 * k};
      into_b1.push_back(2 * k + 1);
    }
    std::vector<Dart> top(q);
    for (int j = 0; j < q; ++j) top[j] = 2 * edges++;
    for (int j = q - 1; j >= 0; --j) outs[a[p - 1]].push_back(top[j]);
    into_b1.push_back(top[0] + 1);
    ins[b[0]] = into_b1;
    for (int j = 1; j < q; ++j) ins[b[j]] = {top[j] + 1};
  }
  const int pole = edges;
  std::vector<std::vector<Dart>> cw(nv);
  for (int v = 0; v < nv; ++v) {
    cw[v] = outs[v];
    cw[v].insert(cw[v].end(), ins[v].begin(), ins[v].end());
  }
  cw[sP].push_back(2 * pole);
  cw[tP].insert(cw[tP].begin(), 2 * pole + 1);
  std::vector<char> out(2 * (pole + 1));
  for (int k = 0; k <= pole; ++k) out[2 * k] = 1;
  auto p = close_orientation(from_clockwise(pole + 1, cw, 2 * pole), out);
  if (!p) throw Error(ErrorCode::LocalConditionViolated, "phi produced an invalid orientation");
  return *p;
}

BipolarOrientation psi(const BipolarOrientation& p) {
  if (!is_bipolar_poset(p)) throw Error(ErrorCode::NotAPoset, "psi needs a plane bipolar poset");
  const RootedMap& m = p.closed;
  std::vector<int> idx(m.dart_count(), -1);
  int ne = 0;
  for (VertexId v : m.vertices())
    if (v != p.s() && v != p.t()) idx[v] = ne++;
  const int pole = ne;
  std::vector<std::vector<Dart>> cw;
  for (FaceId f : m.faces()) {
    const auto walk = m.face_darts(f);
    const int k = static_cast<int>(walk.size());
    std::vector<Dart> list;
    for (int i = 0; i < k; ++i) {
      const Dart d = walk[i], next = walk[(i + 1) % k];
      if (d == p.pole()) list.push_back(2 * pole + 1);
      if (d == (p.pole() ^ 1)) list.push_back(2 * pole);
      const VertexId v = m.vertex(next);
      if (p.out[d] && p.out[next]) list.push_back(2 * idx[v]);       // left lateral: leaves
      if (!p.out[d] && !p.out[next]) list.push_back(2 * idx[v] + 1); // right lateral: enters
    }
    cw.push_back(std::move(list));
  }
  std::vector<char> out(2 * (pole + 1));
  for (int k = 0; k <= pole; ++k) out[2 * k] = 1;
  auto o = close_orientation(from_clockwise(pole + 1, cw, 2 * pole), out);
  if (!o) throw Error(ErrorCode::LocalConditionViolated, "psi produced an invalid orientation");
  return *o;
}

TransversalStructure phi_prime(const BipolarOrientation& p) {
  if (!is_bipolar_poset(p)) throw Error(ErrorCode::NotAPoset, "phi' needs a plane bipolar poset");
  const RootedMap& m = p.closed;
  constexpr int W = -1, E = -2;

  // red edges keep their order, blue edges follow, the outer 4-cycle last
  std::vector<int> red(m.edge_count(), -1);
  int next = 0;
  for (EdgeId e = 0; e < m.edge_count(); ++e)
    if (e != p.pole_edge()) red[e] = next++;
  std::map<int, std::vector<int>> blue_out, blue_in;  // vertex -> other ends, clockwise
  std::vector<std::pair<int, int>> blue;
  for (FaceId f : m.faces()) {
    auto g = face_contour(p, f);
    std::vector<int> L(g.left_lateral.begin(), g.left_lateral.end());
    std::vector<int> R(g.right_lateral.begin(), g.right_lateral.end());
    if (f == p.left_special()) L = {W};
    if (f == p.right_special()) R = {E};
    for (std::size_t i = 0; i < L.size(); ++i) {
      std::vector<int> targets = i + 1 < L.size() ? std::vector<int>{R[0]} : std::vector<int>(R.rbegin(), R.rend());
      for (int r : targets) blue.push_back({L[i], r});
      blue_out[L[i]] = targets;
    }
    for (std::size_t j = 0; j < R.size(); ++j)
      blue_in[R[j]] = j == 0 ? L : std::vector<int>{L.back()};
  }
  std::map<std::pair<int, int>, int> blue_id;
  for (std::size_t k = 0; k < blue.size(); ++k) blue_id[blue[k]] = next + static_cast<int>(k);
  next += static_cast<int>(blue.size());
  const int wn = next++, sw = next++, es = next++, ne = next++;
  const Dart WN = 2 * wn, NW = 2 * wn + 1, SW = 2 * sw, WS = 2 * sw + 1;
  const Dart ES = 2 * es, SE = 2 * es + 1, NE = 2 * ne, EN = 2 * ne + 1;
  auto red_dart = [&](Dart d) { return 2 * red[d / 2] + (d & 1); };
  auto blue_from = [&](int v, const std::vector<int>& targets) {
    std::vector<Dart> ds;
    for (int r : targets) ds.push_back(2 * blue_id.at({v, r}));
    return ds;
  };
  auto blue_to = [&](int v, const std::vector<int>& sources) {
    std::vector<Dart> ds;
    for (int l : sources) ds.push_back(2 * blue_id.at({l, v}) + 1);
    return ds;
  };

  std::vector<std::vector<Dart>> cw;
  for (VertexId v : m.vertices()) {
    auto around = m.darts_cw(v);
    std::vector<Dart> list;
    if (v == p.s() || v == p.t()) {
      for (Dart d : around) {
        if (d == p.pole()) {
          list.insert(list.end(), {SE, SW});
        } else if (d == (p.pole() ^ 1)) {
          list.insert(list.end(), {NW, NE});
        } else {
          list.push_back(red_dart(d));
        }
      }
    } else {
      // red outs, blue outs, red ins, blue ins
      const int k = static_cast<int>(around.size());
      int start = 0;
      while (!(p.out[around[start]] && !p.out[around[(start + k - 1) % k]])) ++start;
      std::vector<Dart> red_out, red_in;
      for (int i = 0; i < k; ++i) {
        const Dart d = around[(start + i) % k];
        (p.out[d] ? red_out : red_in).push_back(red_dart(d));
      }
      list = red_out;
      for (Dart d : blue_from(v, blue_out[v])) list.push_back(d);
      list.insert(list.end(), red_in.begin(), red_in.end());
      for (Dart d : blue_to(v, blue_in[v])) list.push_back(d);
    }
    cw.push_back(std::move(list));
  }
  std::vector<Dart> w_list{WN};
  for (Dart d : blue_from(W, blue_out[W])) w_list.push_back(d);
  w_list.push_back(WS);
  cw.push_back(std::move(w_list));
  std::vector<Dart> e_list{ES};
  for (Dart d : blue_to(E, blue_in[E])) e_list.push_back(d);
  e_list.push_back(EN);
  cw.push_back(std::move(e_list));

  RootedMap t = from_clockwise(next, cw, NW);
  std::string color(next, 'x'), orient(next, '+');
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    if (red[e] < 0) continue;
    color[red[e]] = 'r';
    if (!p.out[2 * e]) orient[red[e]] = '-';
  }
  for (const auto& [key, k] : blue_id) color[k] = 'b';
  return make_transversal(t, color, orient);
}

BipolarOrientation psi_prime(const TransversalStructure& x) { return red_blue_posets(x).red; }

TransversalStructure f1_structure(const RootedMap& m) {
  if (!classify(m).nonseparable) throw Error(ErrorCode::NotNonseparable, "f1 needs a non-separable map");
  if (m.edge_count() < 2) throw Error(ErrorCode::TooSmall, "f1 needs at least 2 edges; use f1_tilde");
  return phi_prime(phi(minimal_bipolar(m)));
}

RootedMap f1(const RootedMap& m) { return canonicalize(f1_structure(m).tri).map; }

RootedMap f1_inv(const RootedMap& t) {
  const auto flags = classify(t);
  if (!flags.quad_triangulation || !flags.irreducible)
    throw Error(ErrorCode::NotIrreducible, "f1_inv needs an irreducible triangulation");
  if (t.vertex_count() < 5) throw Error(ErrorCode::NoInnerVertex, "f1_inv needs an inner vertex");
  auto o = psi(psi_prime(minimal_transversal(t)));
  return canonicalize(o.closed).map;
}

RootedMap sn_link_map() {
  return canonicalize(from_clockwise(5, {{0, 8, 7}, {2, 1}, {4, 9, 3}, {6, 5}}, 7)).map;
}

RootedMap we_link_map() {
  return canonicalize(from_clockwise(5, {{0, 7}, {2, 9, 1}, {4, 3}, {6, 8, 5}}, 7)).map;
}

RootedMap f1_tilde(const RootedMap& m) {
  if (!classify(m).nonseparable) throw Error(ErrorCode::NotNonseparable, "f1_tilde needs a non-separable map");
  if (m.edge_count() == 1) return sn_link_map();
  return f1(m);
}

}  // namespace pmap
