#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pmap/bijections.hpp"
#include "pmap/counting.hpp"
#include "pmap/decomposition.hpp"
#include "pmap/enumeration.hpp"

using namespace pmap;
using namespace fixtures;

namespace {

RootedMap canon(const RootedMap& m) { return canonicalize(m).map; }

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("block decomposition examples") {
  auto d = block_decompose(emap());
  CHECK(d.core == canon(emap()));
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].is_vertex_map());
  CHECK(d.components[1].is_vertex_map());
  CHECK(block_compose(d) == canon(emap()));

  // rooted at an end: the far corner carries the second edge
  auto p = block_decompose(path2());
  CHECK(p.core == canon(emap()));
  REQUIRE(p.components.size() == 2);
  CHECK(p.components[0].is_vertex_map());
  CHECK(p.components[1] == canon(emap()));
  CHECK(block_compose(p) == canon(path2()));

  // the root corner carries it: path rooted at its middle vertex
  auto middle = from_clockwise(2, {{0, 2}, {1}, {3}}, 0);
  CHECK(block_compose({canon(emap()), {canon(emap()), vertex_map()}}) == canon(middle));

  CHECK(error_of([] { block_decompose(loop()); }) == ErrorCode::HasLoop);
  CHECK(error_of([] { block_decompose(vertex_map()); }) == ErrorCode::Empty);
  CHECK(error_of([] { block_compose({canon(emap()), {vertex_map()}}); }) == ErrorCode::ArityMismatch);
  CHECK(error_of([] { block_compose({path2(), {}}); }) == ErrorCode::CoreNotNonseparable);
  CHECK(error_of([] { block_compose({canon(emap()), {loop(), vertex_map()}}); }) == ErrorCode::ComponentNotLoopless);
}

TEST_CASE("block decomposition on every loopless map up to 5 edges") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& m : enumerate_family(Family::loopless, n)) {
      auto d = block_decompose(m);
      CHECK(classify(d.core).nonseparable);
      REQUIRE(d.components.size() == static_cast<std::size_t>(2 * d.core.edge_count()));
      int total = d.core.edge_count();
      for (const auto& c : d.components) {
        CHECK(classify(c).loopless);
        total += c.edge_count();
      }
      CHECK(total == n);
      auto back = block_compose(d);
      CHECK(back == canon(m));
      CHECK(block_decompose(back) == d);
    }
  }
}

TEST_CASE("triangulation decomposition examples") {
  auto d = tri_decompose(qsn());
  CHECK(d.kind == DiagonalKind::sn_diagonal);
  CHECK(d.core == canon(qsn()));
  CHECK(d.components == std::vector<RootedMap>{triangle_map(), triangle_map()});
  CHECK(tri_compose(d) == canon(qsn()));
  CHECK(tri_decompose(qwe()).kind == DiagonalKind::we_diagonal);

  // I5 with a vertex stacked into one face
  const RootedMap k4 = canon(k4r());
  TriangulationDecomposition s{canon(i5()), {k4, triangle_map(), triangle_map(), triangle_map()},
                               DiagonalKind::non_diagonal};
  auto stacked = tri_compose(s);
  CHECK(stacked.vertex_count() == 6);
  CHECK(classify(stacked).quad_triangulation);
  CHECK_FALSE(classify(stacked).irreducible);
  CHECK(tri_size(stacked) == 3);
  auto back = tri_decompose(stacked);
  CHECK(back == s);

  CHECK(error_of([] { tri_decompose(k4r()); }) == ErrorCode::NotQuadTriangulation);
  CHECK(error_of([&] { tri_compose({stacked, {}, DiagonalKind::non_diagonal}); }) == ErrorCode::CoreNotAdmissible);
  CHECK(error_of([] { tri_compose({canon(qsn()), {triangle_map()}, DiagonalKind::sn_diagonal}); }) ==
        ErrorCode::ArityMismatch);
}

TEST_CASE("triangulation decomposition on every 4-gon triangulation up to size 4") {
  for (int inner = 0; inner <= 3; ++inner) {
    const auto all = enumerate_family(Family::quad_triangulation, inner);
    CHECK_FALSE(all.empty());
    for (const auto& t4 : all) {
      auto d = tri_decompose(t4);
      const auto flags = classify(d.core);
      CHECK(flags.quad_triangulation);
      CHECK(flags.irreducible);
      CHECK(d.components.size() == static_cast<std::size_t>(2 * tri_size(d.core)));
      CHECK((d.kind == DiagonalKind::non_diagonal) == (d.core.vertex_count() > 4));
      int total = tri_size(d.core);
      for (const auto& c : d.components) total += tri_size(c);
      CHECK(total == tri_size(t4));
      CHECK(tri_compose(d) == canon(t4));
    }
  }
}

TEST_CASE("triangulation and 4-gon triangulation") {
  CHECK(tri_to_quad(k4r()) == canon(qsn()));
  CHECK(quad_to_tri(qsn()) == canon(k4r()));
  CHECK(error_of([] { quad_to_tri(qwe()); }) == ErrorCode::WEDiagonal);
  CHECK(error_of([] { tri_to_quad(triangle_map()); }) == ErrorCode::TooSmall);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_family(Family::triangulation, n)) {
      auto q = tri_to_quad(t);
      CHECK(classify(q).quad_triangulation);
      CHECK(tri_size(q) == n);
      CHECK(quad_to_tri(q) == canon(t));
    }
  }
}

TEST_CASE("F2 examples") {
  CHECK(f2(vertex_map()) == triangle_map());
  CHECK(f2(emap()) == canon(k4r()));
  CHECK(f2_inv(triangle_map()).is_vertex_map());
  CHECK(f2_inv(k4r()) == canon(emap()));
  CHECK(error_of([] { f2(loop()); }) == ErrorCode::HasLoop);
  CHECK(error_of([] { f2_inv(qsn()); }) == ErrorCode::NotTriangulation);
  CHECK(error_of([] { f2_inv(enumerate_family(Family::triangulation, 5).front()); }) == ErrorCode::SizeTooLarge);
}

TEST_CASE("F2 is a size-preserving bijection up to 4 edges") {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::string> image, target;
    const auto maps = n == 0 ? std::vector<RootedMap>{vertex_map()} : enumerate_family(Family::loopless, n);
    for (const auto& m : maps) {
      auto t = f2(m);
      CHECK(classify(t).triangulation);
      CHECK(tri_size(t) == n);
      CHECK(f2_inv(t) == canon(m));
      image.insert(encode(t));
    }
    if (n > 0)
      for (const auto& t : enumerate_family(Family::triangulation, n)) target.insert(encode(t));
    else
      target.insert(encode(triangle_map()));
    CHECK(image.size() == maps.size());
    CHECK(image == target);
    CHECK(BigCount(image.size()) == a(n));
  }
}
