#include "doctest.h"
#include "fixtures.hpp"
#include "pmap/counting.hpp"
#include "pmap/enumeration.hpp"
#include "pmap/transversal.hpp"

using namespace pmap;
using namespace fixtures;

namespace {

ErrorCode error_of(const RootedMap& t, const std::string& color, const std::string& orient) {
  try {
    make_transversal(t, color, orient);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

bool has_right_cycle(const TransversalStructure& x) {
  for (const auto& r : alt_four_cycles(x))
    if (r.kind == CycleKind::right) return true;
  return false;
}

}  // namespace

TEST_CASE("X1 on the pyramid") {
  auto x = make_transversal(i5(), x1_color, x1_orient);
  CHECK(x.N() == 0);
  CHECK(x.W() == 5);
  CHECK(x.S() == 3);
  CHECK(x.E() == 1);
  auto p = red_blue_posets(x);
  CHECK(p.red.vertex_count() == 3);
  CHECK(p.red.edge_count() == 2);
  CHECK(p.red.inner_face_count() == 0);
  CHECK(p.blue.vertex_count() == 3);
  CHECK(p.blue.edge_count() == 2);
  CHECK(p.red.closed.vertex(p.red.pole()) == p.red.s());
  CHECK(is_N_avoiding_transversal(x));
  CHECK(alt_four_cycles(x).empty());
  auto all = enumerate_transversal(i5());
  REQUIRE(all.size() == 1);
  CHECK(all[0] == x);
  CHECK(minimal_transversal(i5()) == x);
  CHECK(transversal_from_record(decode_record(encode(to_record(x)))) == x);
}

TEST_CASE("make_transversal rejections") {
  CHECK(error_of(i5(), "xxxxrbbb", x1_orient) == ErrorCode::T1Violated);
  CHECK(error_of(i5(), "xxxxrrrb", x1_orient) == ErrorCode::T1Violated);
  // v->S reversed: S gets an ingoing red edge
  CHECK(error_of(i5(), x1_color, "++++--+-") == ErrorCode::T1Violated);
  CHECK(error_of(i5(), "rxxxrbrb", x1_orient) == ErrorCode::InvalidInput);
  auto link = make_transversal(qsn(), "xxxxr", "++++-");
  CHECK_THROWS_AS(red_blue_posets(link), Error);
  try {
    red_blue_posets(link);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoInnerVertex);
  }
  // a reducible 4-gon triangulation: some member of the family fails irreducibility
  bool tested = false;
  for (const auto& t : enumerate_family(Family::quad_triangulation, 2)) {
    if (classify(t).irreducible) continue;
    CHECK(error_of(t, std::string(t.edge_count(), 'x'), std::string(t.edge_count(), '+')) ==
          ErrorCode::NotIrreducible);
    CHECK_THROWS_AS(enumerate_transversal(t), Error);
    tested = true;
    break;
  }
  CHECK(tested);
}

TEST_CASE("exhaustive properties up to 4 inner vertices") {
  bool some_N = false;
  // the first structures with an N-pattern have 4 inner vertices
  for (int n = 1; n <= 4; ++n) {
    long n_avoiding = 0;
    for (const auto& t : enumerate_family(Family::irreducible, n)) {
      auto all = enumerate_transversal(t);
      CHECK_FALSE(all.empty());
      int minimal = 0;
      for (const auto& x : all) {
        auto p = red_blue_posets(x);
        long red = std::count(x.color.begin(), x.color.end(), 'r');
        CHECK(red - n - 1 == p.red.inner_face_count());
        const bool avoid = is_N_avoiding_transversal(x);
        n_avoiding += avoid;
        for (const auto& r : alt_four_cycles(x)) CHECK(boundary_incidence_kind(x, r) == r.kind);
        const bool right = has_right_cycle(x);
        if (!avoid) {
          some_N = true;
          CHECK(right);
        }
        minimal += !right;
      }
      CHECK(minimal == 1);
    }
    CHECK(BigCount(n_avoiding) == theta(n));
  }
  CHECK(some_N);
}

TEST_CASE("a 4-gon triangulation admits a structure iff irreducible") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& t : enumerate_family(Family::quad_triangulation, n))
      CHECK(transversal_search(t).empty() != classify(t).irreducible);
}

TEST_CASE("minimal structures at 4 inner vertices") {
  for (const auto& t : enumerate_family(Family::irreducible, 4)) CHECK_NOTHROW(minimal_transversal(t));
}
