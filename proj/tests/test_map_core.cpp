#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace pmap;
using namespace fixtures;

TEST_CASE("build_map on the smallest maps") {
  auto e = emap();
  CHECK(e.vertex_count() == 2);
  CHECK(e.face_count() == 1);
  auto l = loop();
  CHECK(l.vertex_count() == 1);
  CHECK(l.face_count() == 2);
  auto t = tri();
  CHECK(t.vertex_count() == 3);
  CHECK(t.face_count() == 2);
  auto v = vertex_map();
  CHECK(v.vertex_count() == 1);
  CHECK(v.edge_count() == 0);
}

TEST_CASE("build_map rejects malformed tables") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of([] { build_map({0, 0}, 0); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([] { build_map({0, 1, 2, 3}, 0); }) == ErrorCode::Disconnected);
  CHECK(code_of([] { build_map({0, 1}, 2); }) == ErrorCode::BadRoot);
  CHECK(code_of([] { build_map({0, 1}, std::nullopt); }) == ErrorCode::BadRoot);

  // K4 with every vertex rotation tried: some choices embed it on the torus.
  const std::vector<std::vector<Dart>> base = {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {7, 9, 11}};
  int toroidal = 0, planar = 0;
  for (int mask = 0; mask < 16; ++mask) {
    auto cw = base;
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) std::swap(cw[v][1], cw[v][2]);
    // independent face count: orbits of sigma∘alpha on the rotation built by hand
    std::vector<Dart> sigma(12);
    for (auto& l : cw)
      for (int j = 0; j < 3; ++j) sigma[l[j]] = l[(j + 2) % 3];
    std::vector<char> seen(12, 0);
    int faces = 0;
    for (int d = 0; d < 12; ++d) {
      if (seen[d]) continue;
      ++faces;
      for (int x = d; !seen[x]; x = sigma[x ^ 1]) seen[x] = 1;
    }
    if (4 - 6 + faces == 2) {
      ++planar;
      CHECK_NOTHROW(from_clockwise(6, cw, 0));
    } else {
      ++toroidal;
      CHECK(4 - 6 + faces == 0);
      CHECK(code_of([&] { from_clockwise(6, cw, 0); }) == ErrorCode::NonZeroGenus);
    }
  }
  CHECK(planar == 2);
  CHECK(toroidal == 14);
}

TEST_CASE("faces_and_corners") {
  auto t = faces_and_corners(tri());
  REQUIRE(t.faces.size() == 2);
  CHECK(t.faces[0] == std::vector<Dart>{0, 2, 4});
  CHECK(t.faces[1] == std::vector<Dart>{1, 5, 3});
  CHECK(t.outer == 1);
  CHECK(t.corners.size() == 6);

  auto l = faces_and_corners(loop());
  CHECK(l.faces.size() == 2);
  CHECK(l.corners.size() == 2);
  auto e = faces_and_corners(emap());
  CHECK(e.faces.size() == 1);
  CHECK(e.corners.size() == 2);
}

namespace {

// Renames edges and flips dart pairs; the result is the same rooted map.
RootedMap relabel(const RootedMap& m, std::mt19937& rng) {
  const int edges = m.edge_count();
  std::vector<int> perm(edges);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Dart> to(m.dart_count());
  for (int e = 0; e < edges; ++e) {
    bool flip = rng() & 1;
    to[2 * e] = 2 * perm[e] + (flip ? 1 : 0);
    to[2 * e + 1] = 2 * perm[e] + (flip ? 0 : 1);
  }
  std::vector<Dart> sigma(m.dart_count());
  for (Dart d = 0; d < m.dart_count(); ++d) sigma[to[d]] = to[m.sigma(d)];
  return build_map(sigma, to[m.root()]);
}

}  // namespace

TEST_CASE("canonical_form is invariant under relabelling") {
  std::mt19937 rng(7);
  for (const auto& m : {emap(), loop(), tri(), c2(), path2(), k4r(), i5(), qsn(), qwe()}) {
    for (int rep = 0; rep < 5; ++rep) {
      auto r = relabel(m, rng);
      CHECK(canonical_form(r) == canonical_form(m));
      CHECK(canonical_code(r) == canonical_code(m));
    }
  }
}

TEST_CASE("canonical_form separates rootings") {
  // The triangle's rotations act transitively on its darts, so every rooting
  // is the same rooted map.
  auto t = tri();
  for (Dart d = 0; d < 6; ++d) CHECK(canonical_form(reroot(t, d)) == canonical_form(t));
  // A path rooted at a leaf differs from the path rooted at its middle vertex.
  auto p = path2();
  CHECK(canonical_form(reroot(p, 0)) != canonical_form(reroot(p, 1)));
  CHECK(canonical_form(reroot(p, 0)) == canonical_form(reroot(p, 3)));
  CHECK(canonical_form(emap()) == "rmap 1\nm 1\nsigma 1 2\nroot 1\n");
}

TEST_CASE("classify") {
  CHECK_FALSE(classify(loop()).loopless);
  CHECK(classify(emap()).nonseparable);
  CHECK(classify(c2()).nonseparable);
  CHECK_FALSE(classify(path2()).nonseparable);
  CHECK(classify(path2()).loopless);
  auto k = classify(k4r());
  CHECK(k.triangulation);
  CHECK_FALSE(k.quad_triangulation);
  CHECK(classify(tri()).triangulation);
  auto p = classify(i5());
  CHECK(p.quad_triangulation);
  CHECK(p.irreducible);
  CHECK_FALSE(p.triangulation);
  CHECK(classify(qsn()).irreducible);
  CHECK(classify(qwe()).irreducible);
  CHECK_FALSE(classify(vertex_map()).nonseparable);
  CHECK(classify(vertex_map()).loopless);
}

TEST_CASE("RMAP/1 encode and decode") {
  CHECK(encode(emap()) == "rmap 1\nm 1\nsigma 1 2\nroot 1\n");
  CHECK(encode(tri()) == "rmap 1\nm 3\nsigma 6 3 2 5 4 1\nroot 2\n");
  CHECK(decode(encode(tri())) == tri());
  CHECK(decode(encode(vertex_map())) == vertex_map());
  try {
    decode("rmap 1\nm 1\nsigma 1 2\nroot 3");
    FAIL("expected BadRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadRoot);
  }
  CHECK_THROWS_AS(decode("rmap 2\nm 0\n"), Error);
  CHECK_THROWS_AS(decode("rmap 1\nm 1\nsigma 1\nroot 1\n"), Error);

  Record r;
  r.map = c2();
  r.orient = "+-";
  r.poles = std::make_pair(0, 1);
  auto back = decode_record(encode(r));
  CHECK(back.map == r.map);
  CHECK(back.orient == r.orient);
  CHECK(back.poles == r.poles);
  CHECK_FALSE(back.color.has_value());
}
