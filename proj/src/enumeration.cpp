#include "pmap/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace pmap {

std::optional<Family> parse_family(const std::string& name) {
  if (name == "loopless") return Family::loopless;
  if (name == "nonseparable") return Family::nonseparable;
  if (name == "triangulation") return Family::triangulation;
  if (name == "quad_triangulation") return Family::quad_triangulation;
  if (name == "irreducible") return Family::irreducible;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::loopless: return "loopless";
    case Family::nonseparable: return "nonseparable";
    case Family::triangulation: return "triangulation";
    case Family::quad_triangulation: return "quad_triangulation";
    case Family::irreducible: return "irreducible";
  }
  return "?";
}

CanonicalCode canonical_code_at(const RootedMap& m, Dart root) {
  CanonicalCode code{m.edge_count()};
  if (m.is_vertex_map()) return code;
  const int n = m.dart_count();
  std::vector<Dart> label(n, -1), order;
  order.reserve(n);
  auto visit = [&](Dart d) {
    label[d] = static_cast<int>(order.size());
    order.push_back(d);
    label[d ^ 1] = static_cast<int>(order.size());
    order.push_back(d ^ 1);
  };
  visit(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart s = m.sigma(order[i]);
    if (label[s] < 0) visit(s);
  }
  code.resize(1 + n);
  for (int i = 0; i < n; ++i) code[1 + i] = label[m.sigma(order[i])];
  return code;
}

std::vector<RootedMap> canonical_sorted(const std::vector<RootedMap>& maps) {
  std::map<CanonicalCode, RootedMap> byCode;
  for (const auto& m : maps) byCode.emplace(canonical_code(m), m);
  std::vector<RootedMap> out;
  out.reserve(byCode.size());
  for (auto& [code, m] : byCode) out.push_back(m.is_vertex_map() ? m : canonicalize(m).map);
  return out;
}

namespace {

// Mutable rotation system used while growing maps.
struct Rotation {
  int edges = 0;
  std::vector<std::vector<Dart>> cw;

  static Rotation of(const RootedMap& m) { return {m.edge_count(), clockwise_lists(m)}; }

  std::pair<int, int> locate(Dart d) const {
    for (int v = 0; v < static_cast<int>(cw.size()); ++v)
      for (int j = 0; j < static_cast<int>(cw[v].size()); ++j)
        if (cw[v][j] == d) return {v, j};
    return {-1, -1};
  }
  // places x right after d in clockwise order
  void insert_after(Dart d, Dart x) {
    auto [v, j] = locate(d);
    cw[v].insert(cw[v].begin() + j + 1, x);
  }
  RootedMap build(Dart root) const { return from_clockwise(edges, cw, root); }
};

CanonicalCode class_code(const RootedMap& m) {
  if (m.is_vertex_map()) return canonical_code(m);
  CanonicalCode best;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    auto c = canonical_code_at(m, d);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

using ClassSet = std::map<CanonicalCode, RootedMap>;

// Runs `grow` over the items, in parallel when jobs > 1, merging the
// per-thread class sets. The merged map is ordered, so the result is the
// same for every job count.
template <class Item, class Grow>
ClassSet parallel_grow(const std::vector<Item>& items, int jobs, Grow grow) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
  std::vector<ClassSet> partial(jobs);
  auto work = [&](int t) {
    for (std::size_t i = t; i < items.size(); i += jobs) grow(items[i], partial[t]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  ClassSet merged;
  for (auto& p : partial) merged.merge(p);
  return merged;
}

void add_class(ClassSet& out, const RootedMap& m) {
  auto code = class_code(m);
  if (!out.count(code)) out.emplace(std::move(code), m);
}

// Every map obtained from m by one new edge: a pendant edge in a corner, or
// a chord joining two corners of one face (loops included when allowed).
template <class Keep>
void extend_by_edge(const RootedMap& m, bool pendants, bool chords, Keep keep, ClassSet& out) {
  const int e = m.edge_count();
  const Dart a = 2 * e, b = 2 * e + 1;
  if (m.is_vertex_map()) {
    if (pendants) {
      RootedMap edge = from_clockwise(1, {{0}, {1}}, 0);
      if (keep(edge)) add_class(out, edge);
    }
    if (chords) {
      RootedMap lp = from_clockwise(1, {{0, 1}}, 0);
      if (keep(lp)) add_class(out, lp);
    }
    return;
  }
  const Rotation base = Rotation::of(m);
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (pendants) {
      Rotation r = base;
      r.edges = e + 1;
      r.insert_after(d, a);
      r.cw.push_back({b});
      RootedMap grown = r.build(0);
      if (keep(grown)) add_class(out, grown);
    }
    if (!chords) continue;
    for (Dart d2 = d; d2 < m.dart_count(); ++d2) {
      if (m.face(d) != m.face(d2)) continue;
      Rotation r = base;
      r.edges = e + 1;
      r.insert_after(d, a);
      r.insert_after(d2, b);
      RootedMap grown = r.build(0);
      if (keep(grown)) add_class(out, grown);
    }
  }
}

std::vector<RootedMap> values(const ClassSet& s) {
  std::vector<RootedMap> out;
  out.reserve(s.size());
  for (auto& [code, m] : s) out.push_back(m);
  return out;
}

// Expands unrooted classes to every rooting accepted by `root_ok`.
template <class RootOk>
std::vector<RootedMap> all_rootings(const std::vector<RootedMap>& classes, RootOk root_ok) {
  std::map<CanonicalCode, std::pair<const RootedMap*, Dart>> rooted;
  for (const auto& m : classes) {
    if (m.is_vertex_map()) {
      rooted.emplace(canonical_code(m), std::make_pair(&m, -1));
      continue;
    }
    for (Dart d = 0; d < m.dart_count(); ++d)
      if (root_ok(m, d)) rooted.emplace(canonical_code_at(m, d), std::make_pair(&m, d));
  }
  std::vector<RootedMap> out;
  out.reserve(rooted.size());
  for (auto& [code, p] : rooted)
    out.push_back(p.second < 0 ? *p.first : canonicalize(reroot(*p.first, p.second)).map);
  return out;
}

std::mutex cache_mutex;

const std::vector<RootedMap>& map_classes(int n, int jobs) {
  static std::vector<std::vector<RootedMap>> levels;
  std::lock_guard lock(cache_mutex);
  if (levels.empty()) levels.push_back({vertex_map()});
  while (static_cast<int>(levels.size()) <= n) {
    auto grown = parallel_grow(levels.back(), jobs, [](const RootedMap& m, ClassSet& out) {
      extend_by_edge(m, true, true, [](const RootedMap&) { return true; }, out);
    });
    levels.push_back(values(grown));
  }
  return levels[n];
}

// Simple maps indexed by (vertices, edges).
const std::vector<RootedMap>& simple_classes(int v, int e, int jobs);

std::map<std::pair<int, int>, std::vector<RootedMap>>& simple_cache() {
  static std::map<std::pair<int, int>, std::vector<RootedMap>> cache;
  return cache;
}

std::vector<RootedMap> compute_simple(int v, int e, int jobs) {
  if (v == 1) return e == 0 ? std::vector<RootedMap>{vertex_map()} : std::vector<RootedMap>{};
  if (e < v - 1 || e > 3 * v - 6 + (v == 2 ? 2 : 0)) return {};
  auto simple = [](const RootedMap& m) { return is_simple(m); };
  ClassSet merged;
  if (e >= 1) {
    auto from_chords = parallel_grow(simple_classes(v, e - 1, jobs), jobs,
                                     [&](const RootedMap& m, ClassSet& out) {
                                       extend_by_edge(m, false, true, simple, out);
                                     });
    merged.merge(from_chords);
    auto from_pendants = parallel_grow(simple_classes(v - 1, e - 1, jobs), jobs,
                                       [&](const RootedMap& m, ClassSet& out) {
                                         extend_by_edge(m, true, false, simple, out);
                                       });
    merged.merge(from_pendants);
  }
  return values(merged);
}

const std::vector<RootedMap>& simple_classes(int v, int e, int jobs) {
  {
    std::lock_guard lock(cache_mutex);
    auto it = simple_cache().find({v, e});
    if (it != simple_cache().end()) return it->second;
  }
  auto computed = compute_simple(v, e, jobs);
  std::lock_guard lock(cache_mutex);
  return simple_cache().emplace(std::make_pair(v, e), std::move(computed)).first->second;
}

// Splits vertex `v` of a triangulation along the darts at clockwise positions
// i and j: the new vertex takes the sector strictly between them and becomes
// adjacent to both their far ends and to v.
RootedMap split_vertex(const RootedMap& m, VertexId v, int i, int j) {
  Rotation r = Rotation::of(m);
  const int e = m.edge_count();
  const Dart to_u = 2 * e, at_u = 2 * e + 1;        // new vertex - u
  const Dart to_w = 2 * e + 2, at_w = 2 * e + 3;    // new vertex - w
  const Dart to_v = 2 * e + 4, at_v = 2 * e + 5;    // new vertex - v
  r.edges = e + 3;
  auto [vi, unused] = r.locate(v);
  (void)unused;
  std::vector<Dart> around = r.cw[vi];
  const int k = static_cast<int>(around.size());
  const Dart di = around[i], dj = around[j];
  std::vector<Dart> moved, kept;
  for (int p = (i + 1) % k; p != j; p = (p + 1) % k) moved.push_back(around[p]);
  for (int p = j; ; p = (p + 1) % k) {
    kept.push_back(around[p]);
    if (p == i) break;
  }
  kept.push_back(at_v);
  r.cw[vi] = kept;
  std::vector<Dart> fresh{to_u};
  fresh.insert(fresh.end(), moved.begin(), moved.end());
  fresh.push_back(to_w);
  fresh.push_back(to_v);
  r.cw.push_back(fresh);
  // at u the new edge sits just before the old one (clockwise), at w just after
  {
    auto [ui, uj] = r.locate(di ^ 1);
    r.cw[ui].insert(r.cw[ui].begin() + uj, at_u);
  }
  r.insert_after(dj ^ 1, at_w);
  return r.build(0);
}

const std::vector<RootedMap>& triangulation_classes(int vertices) {
  static std::map<int, std::vector<RootedMap>> cache;
  std::lock_guard lock(cache_mutex);
  if (cache.empty()) {
    cache[3] = {from_clockwise(3, {{0, 5}, {2, 1}, {4, 3}}, 0)};
    cache[4] = {from_clockwise(6, {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {7, 9, 11}}, 5)};
  }
  for (int v = 5; v <= vertices; ++v) {
    if (cache.count(v)) continue;
    ClassSet out;
    for (const auto& m : cache[v - 1]) {
      for (VertexId x : m.vertices()) {
        const int k = m.degree(x);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (i != j) add_class(out, split_vertex(m, x, i, j));
      }
    }
    cache[v] = values(out);
  }
  return cache[vertices];
}

void check_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::SizeTooLarge, what);
}

}  // namespace

std::vector<RootedMap> enumerate_maps(int n, int jobs) {
  check_size(n >= 0 && n <= kMaxMapEdges, "enumerate_maps supports 0..7 edges");
  return all_rootings(map_classes(n, jobs), [](const RootedMap&, Dart) { return true; });
}

std::vector<RootedMap> enumerate_maps_by_permutation(int n) {
  check_size(n >= 0 && n <= 5, "permutation generator supports 0..5 edges");
  if (n == 0) return {vertex_map()};
  const int darts = 2 * n;
  std::vector<Dart> sigma(darts);
  for (int d = 0; d < darts; ++d) sigma[d] = d;
  std::set<CanonicalCode> seen;
  std::vector<RootedMap> out;
  std::vector<char> mark(darts);
  do {
    // connectivity and Euler characteristic, checked before building
    std::fill(mark.begin(), mark.end(), 0);
    int vertices = 0, faces = 0;
    for (int d = 0; d < darts; ++d) {
      if (mark[d]) continue;
      ++vertices;
      for (int x = d; !mark[x]; x = sigma[x]) mark[x] = 1;
    }
    std::fill(mark.begin(), mark.end(), 0);
    for (int d = 0; d < darts; ++d) {
      if (mark[d]) continue;
      ++faces;
      for (int x = d; !mark[x]; x = sigma[x ^ 1]) mark[x] = 1;
    }
    if (vertices - n + faces != 2) continue;  // disconnected tables fail this too
    RootedMap m;
    try {
      m = build_map(sigma, 0);
    } catch (const Error&) {
      continue;
    }
    for (Dart r = 0; r < darts; ++r) {
      auto code = canonical_code_at(m, r);
      if (seen.insert(code).second) out.push_back(canonicalize(reroot(m, r)).map);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return canonical_sorted(out);
}

std::vector<RootedMap> enumerate_simple_maps(int vertices, int jobs) {
  check_size(vertices >= 1 && vertices <= kMaxSimpleVertices, "simple maps support 1..6 vertices");
  std::vector<RootedMap> classes;
  for (int e = 0; e <= 3 * vertices; ++e) {
    const auto& level = simple_classes(vertices, e, jobs);
    classes.insert(classes.end(), level.begin(), level.end());
  }
  auto out = all_rootings(classes, [](const RootedMap&, Dart) { return true; });
  return out;
}

std::vector<RootedMap> enumerate_family(Family family, int size, int jobs) {
  auto filter = [](std::vector<RootedMap> maps, auto pred) {
    std::vector<RootedMap> out;
    for (auto& m : maps)
      if (pred(classify(m))) out.push_back(std::move(m));
    return out;
  };
  switch (family) {
    case Family::loopless:
      check_size(size >= 0 && size <= kMaxMapEdges, "loopless maps support 0..7 edges");
      return filter(enumerate_maps(size, jobs), [](const FamilyFlags& f) { return f.loopless; });
    case Family::nonseparable:
      check_size(size >= 0 && size <= kMaxMapEdges, "non-separable maps support 0..7 edges");
      return filter(enumerate_maps(size, jobs), [](const FamilyFlags& f) { return f.nonseparable; });
    case Family::triangulation:
      check_size(size >= 0 && size <= kMaxTriangulationInner, "triangulations support 0..5 inner vertices");
      return all_rootings(triangulation_classes(size + 3), [](const RootedMap&, Dart) { return true; });
    case Family::quad_triangulation:
    case Family::irreducible: {
      check_size(size >= 0 && size <= kMaxQuadInner, "4-gon triangulations support 0..4 inner vertices");
      // delete one edge of a sphere triangulation with the same vertex count
      std::vector<RootedMap> quads;
      for (const auto& t : triangulation_classes(size + 4)) {
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
          std::vector<char> keep(t.edge_count(), 1);
          keep[e] = 0;
          std::vector<Dart> relabel;
          Dart some = e == 0 ? 2 : 0;
          RootedMap q = submap(t, keep, some, &relabel);
          // the merged face is the one on the right of the old face's darts
          Dart on_quad = relabel[t.face_next(2 * e)];
          quads.push_back(reroot(q, on_quad));
        }
      }
      auto rooted = all_rootings(quads, [](const RootedMap& m, Dart d) {
        return m.face_degree(m.face(d)) == 4;
      });
      if (family == Family::quad_triangulation) return rooted;
      return filter(std::move(rooted), [](const FamilyFlags& f) { return f.irreducible; });
    }
  }
  return {};
}

}  // namespace pmap
