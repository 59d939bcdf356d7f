#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "pmap/bipolar.hpp"
#include "pmap/counting.hpp"
#include "pmap/enumeration.hpp"

using namespace pmap;
using namespace fixtures;

namespace {

ErrorCode error_of(const RootedMap& m, const std::string& orient, VertexId s, VertexId t) {
  try {
    make_bipolar(m, orient, s, t);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

// Two triangles A,B,V and V,C,D sharing V; the second one sits in the first
// one's inner face when `nested`.
RootedMap bowtie(bool nested) {
  std::vector<std::vector<Dart>> cw = {{0, 5}, {2, 1}, {}, {7, 8}, {9, 10}};
  cw[2] = nested ? std::vector<Dart>{4, 6, 11, 3} : std::vector<Dart>{3, 6, 11, 4};
  return from_clockwise(6, cw, 1);
}

// (map, orientation) pairs in the rooted model: non-separable maps with
// n+1 edges, oriented with the root edge as pole.
std::vector<BipolarOrientation> rooted_model(int n) {
  std::vector<BipolarOrientation> all;
  for (const auto& m : enumerate_family(Family::nonseparable, n + 1))
    for (auto& o : enumerate_closed(m)) all.push_back(std::move(o));
  return all;
}

}  // namespace

TEST_CASE("make_bipolar examples") {
  auto o1 = make_bipolar(emap(), "+", 0, 1);
  CHECK(o1.edge_count() == 1);
  CHECK(o1.inner_face_count() == 0);
  CHECK(find_N_patterns(o1).empty());
  CHECK(find_LOPs(o1).empty());
  CHECK_FALSE(is_bipolar_poset(o1));

  // A->B, B->C, A->C with s = A, t = C
  auto t = make_bipolar(tri(), "++-", 0, 3);
  CHECK(t.inner_face_count() == 1);
  auto g = face_geometry(t, 0);
  CHECK(g.s_f == 0);
  CHECK(g.t_f == 3);
  CHECK(g.left_path == std::vector<Dart>{0, 2});
  CHECK(g.right_path == std::vector<Dart>{5});
  CHECK(g.topleft_edge == 1);
  CHECK(g.bottomright_edge == 2);
  CHECK(g.left_lateral == std::vector<VertexId>{1});
  CHECK(g.right_lateral.empty());
  CHECK_FALSE(is_bipolar_poset(t));
  CHECK_THROWS_AS(face_geometry(t, t.left_special()), Error);

  CHECK(error_of(tri(), "+++", 0, 3) == ErrorCode::Cyclic);
  CHECK(error_of(tri(), "++-", 1, 3) == ErrorCode::MultipleSources);
  CHECK(error_of(tri(), "++-", 0, 1) == ErrorCode::MultipleSinks);
  CHECK(error_of(loop(), "+", 0, 0) == ErrorCode::InvalidInput);
}

TEST_CASE("orders on the triangle") {
  auto t = make_bipolar(tri(), "++-", 0, 3);
  auto r = orders(t);
  REQUIRE(r.edges == std::vector<EdgeId>{0, 1, 2});
  CHECK(r.edge_le[0][1]);
  CHECK_FALSE(r.edge_le[1][0]);
  CHECK(r.dual_le[0][2]);
  CHECK(r.dual_le[1][2]);
  CHECK_FALSE(r.dual_le[2][0]);
  auto o1 = orders(make_bipolar(emap(), "+", 0, 1));
  CHECK(o1.edge_le == std::vector<std::vector<char>>{{1}});
  CHECK(o1.dual_le == std::vector<std::vector<char>>{{1}});
}

TEST_CASE("enumerate_bipolar examples") {
  CHECK(enumerate_bipolar(emap(), 0, 1).size() == 1);
  CHECK(enumerate_bipolar(path2(), 0, 3).size() == 1);
  // the sink off the outer face
  CHECK(enumerate_bipolar(bowtie(true), 0, 7).empty());
  // side by side, adding the edge A-C gives a non-separable map
  CHECK(enumerate_bipolar(bowtie(false), 0, 7).size() == 1);
  CHECK_THROWS_AS(enumerate_bipolar(bowtie(false), 0, 0), Error);
}

TEST_CASE("definitional and local checks agree on every sign table") {
  long valid = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_maps(n)) {
      for (VertexId s : m.vertices()) {
        for (VertexId t : m.vertices()) {
          if (s == t) continue;
          std::string orient(n, '+');
          for (int mask = 0; mask < (1 << n); ++mask) {
            for (int k = 0; k < n; ++k) orient[k] = mask >> k & 1 ? '-' : '+';
            const bool def = !check_definitional(m, orient, s, t);
            REQUIRE(def == check_local(m, orient, s, t));
            valid += def;
          }
        }
      }
    }
  }
  CHECK(valid > 0);
}

TEST_CASE("rooted model counts are Baxter numbers") {
  for (int n = 1; n <= 5; ++n) {
    auto all = rooted_model(n);
    CHECK(BigCount(all.size()) == theta(n));
    std::map<int, long> by_vertices;
    for (const auto& o : all) ++by_vertices[o.vertex_count() - 2];
    for (int i = 0; i < n; ++i) CHECK(BigCount(by_vertices[i]) == theta(n, i));
  }
}

TEST_CASE("structural invariants on every orientation") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& o : rooted_model(n)) {
      auto r = orders(o);
      const std::size_t nf = r.faces.size();
      for (std::size_t i = 0; i < nf; ++i)
        for (std::size_t j = 0; j < nf; ++j)
          if (i != j) CHECK_FALSE((r.face_le[i][j] && r.face_le[j][i]));
      auto idx = [&](FaceId f) { return std::find(r.faces.begin(), r.faces.end(), f) - r.faces.begin(); };
      for (std::size_t j = 0; j < nf; ++j) {
        CHECK(r.face_le[idx(o.left_special())][j]);
        CHECK(r.face_le[j][idx(o.right_special())]);
      }
      for (FaceId f : o.closed.faces()) {
        if (!o.is_inner(f)) continue;
        auto g = face_geometry(o, f);
        CHECK(g.left_path.back() / 2 == g.topleft_edge);
        CHECK(o.closed.vertex(g.right_path.front()) == g.s_f);
        CHECK(o.closed.head(g.right_path.back()) == g.t_f);
      }
      const bool poset = is_bipolar_poset(o);  // throws when the two criteria disagree
      if (poset && !is_N_avoiding(o)) CHECK_FALSE(find_LOPs(o).empty());
      auto back = from_record(to_record(o));
      CHECK(canonical(back) == canonical(o));
    }
  }
}

TEST_CASE("minimal orientations") {
  auto c = minimal_bipolar(c2());
  CHECK(c.edge_count() == 1);
  CHECK(c.vertex_count() == 2);
  bool some_lop = false;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& m : enumerate_family(Family::nonseparable, n)) {
      auto all = enumerate_closed(m);
      int lop_free = 0;
      for (const auto& o : all) {
        if (find_LOPs(o).empty()) ++lop_free;
        else some_lop = true;
      }
      CHECK(lop_free == 1);
      CHECK(find_LOPs(minimal_bipolar(m)).empty());
    }
  }
  CHECK(some_lop);
  CHECK_THROWS_AS(minimal_bipolar(path2()), Error);
}

TEST_CASE("N-avoiding posets are counted by Theta") {
  for (int n = 1; n <= 4; ++n) {
    std::map<int, int> by_faces;
    for (const auto& p : enumerate_posets(n)) {
      CHECK(is_bipolar_poset(p));
      CHECK(p.vertex_count() == n + 2);
      if (is_N_avoiding(p)) ++by_faces[p.inner_face_count()];
    }
    for (int i = 0; i < n; ++i) CHECK(BigCount(by_faces[i]) == theta(n, i));
  }
}
