#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pmap/bijections.hpp"
#include "pmap/counting.hpp"
#include "pmap/enumeration.hpp"

using namespace pmap;
using namespace fixtures;

namespace {

std::vector<BipolarOrientation> rooted_model(int n) {
  std::vector<BipolarOrientation> all;
  for (const auto& m : enumerate_family(Family::nonseparable, n + 1))
    for (auto& o : enumerate_closed(m)) all.push_back(std::move(o));
  return all;
}

std::string key(const TransversalStructure& x) { return encode(to_record(canonical(x))); }

std::multiset<std::pair<int, int>> vertex_degrees(const BipolarOrientation& o) {
  std::multiset<std::pair<int, int>> d;
  for (VertexId v : o.closed.vertices()) {
    if (v == o.s() || v == o.t()) continue;
    int outs = 0, ins = 0;
    for (Dart x : o.closed.darts_cw(v)) (o.out[x] ? outs : ins)++;
    d.insert({outs + 1, ins + 1});
  }
  return d;
}

std::multiset<std::pair<int, int>> face_sides(const BipolarOrientation& p) {
  std::multiset<std::pair<int, int>> d;
  for (FaceId f : p.closed.faces()) {
    if (!p.is_inner(f)) continue;
    auto g = face_geometry(p, f);
    d.insert({static_cast<int>(g.left_path.size()), static_cast<int>(g.right_path.size())});
  }
  return d;
}

}  // namespace

TEST_CASE("small worked cases") {
  auto o1 = make_bipolar(emap(), "+", 0, 1);
  auto p2 = phi(o1);
  CHECK(p2.vertex_count() == 3);
  CHECK(p2.edge_count() == 2);
  CHECK(p2.inner_face_count() == 0);
  CHECK(is_bipolar_poset(p2));
  CHECK(canonical(psi(p2)) == canonical(o1));
  auto x1 = make_transversal(i5(), x1_color, x1_orient);
  CHECK(canonical(phi_prime(p2)) == canonical(x1));
  CHECK(canonical(psi_prime(x1)) == canonical(p2));
  CHECK(f1(c2()) == canonicalize(i5()).map);
  CHECK(f1_inv(i5()) == canonicalize(c2()).map);
  CHECK(f1_tilde(emap()) == canonicalize(qsn()).map);
  CHECK(f1_tilde(c2()) == canonicalize(i5()).map);
  CHECK(sn_link_map() == canonicalize(qsn()).map);
  CHECK(we_link_map() == canonicalize(qwe()).map);
}

TEST_CASE("phi and psi on every orientation up to 6 edges") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& o : rooted_model(n)) {
      auto p = phi(o);
      REQUIRE(canonical(psi(p)) == canonical(o));
      if (n > 5) continue;
      CHECK(p.vertex_count() - 2 == n);
      CHECK(p.inner_face_count() == o.vertex_count() - 2);
      CHECK(is_bipolar_poset(p));
      CHECK(is_N_avoiding(p));
      CHECK(face_sides(p) == vertex_degrees(o));
      int fan = 0;
      for (FaceId f : o.closed.faces()) fan += o.closed.face_degree(f) - 1;
      CHECK(p.edge_count() == fan);
      CHECK(find_LOPs(o).empty() == find_LOPs(p).empty());
      CHECK(canonical(phi(psi(p))) == canonical(p));
    }
  }
}

TEST_CASE("phi after psi only fixes N-avoiding posets") {
  // the smallest poset with an N-pattern has 4 non-special vertices
  int moved = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      const bool same = canonical(phi(psi(p))) == canonical(p);
      if (is_N_avoiding(p)) CHECK(same);
      else moved += !same;
    }
  }
  CHECK(moved == 1);
}

TEST_CASE("phi' and psi' on posets") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& o : rooted_model(n)) {
      auto p = phi(o);
      auto x = phi_prime(p);
      CHECK(x.inner_vertex_count() == n);
      CHECK(std::count(x.color.begin(), x.color.end(), 'r') == n + p.inner_face_count() + 1);
      auto posets = red_blue_posets(x);
      CHECK(canonical(posets.red) == canonical(p));
      CHECK(is_N_avoiding(posets.blue));
      CHECK(canonical(psi_prime(x)) == canonical(p));
    }
  }
}

TEST_CASE("Phi is onto the N-avoiding transversal structures") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> image, target;
    for (const auto& o : rooted_model(n)) image.insert(key(phi_prime(phi(o))));
    for (const auto& t : enumerate_family(Family::irreducible, n))
      for (const auto& x : enumerate_transversal(t))
        if (is_N_avoiding_transversal(x)) {
          target.insert(key(x));
          CHECK(key(phi_prime(psi_prime(x))) == key(x));
        }
    CHECK(image == target);
  }
}

TEST_CASE("F1 on non-separable maps") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::string> image;
    std::set<std::string> target;
    for (const auto& t : enumerate_family(Family::irreducible, n - 1)) target.insert(encode(t));
    const auto maps = enumerate_family(Family::nonseparable, n);
    for (const auto& m : maps) {
      auto x = f1_structure(m);
      auto t = f1(m);
      CHECK(t.vertex_count() == n + 3);
      CHECK(classify(t).irreducible);
      for (const auto& r : alt_four_cycles(x)) CHECK(r.kind == CycleKind::left);
      CHECK(canonical(x) == canonical(minimal_transversal(t)));
      CHECK(f1_inv(t) == canonicalize(m).map);
      image.insert(encode(t));
    }
    CHECK(image.size() == maps.size());
    CHECK(image == target);
    CHECK(BigCount(image.size()) == lambda(n - 1));
  }
  CHECK_THROWS_AS(f1(emap()), Error);
  CHECK_THROWS_AS(f1(path2()), Error);
}

TEST_CASE("f1_tilde never yields the WE-link-map") {
  const auto we = we_link_map();
  for (int n = 1; n <= 6; ++n)
    for (const auto& m : enumerate_family(Family::nonseparable, n)) CHECK_FALSE(f1_tilde(m) == we);
}
