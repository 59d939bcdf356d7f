#pragma once

#include <vector>

#include "pmap/rooted_map.hpp"

namespace pmap {

/// Bound on ||T|| accepted by f2_inv.
inline constexpr int kMaxF2InvSize = 4;

/// Core block plus one loopless component per corner of the core. Corner i
/// is the corner at dart i of the canonical core, so corner 0 is the root
/// corner. A component is rooted at its last dart clockwise inside the
/// corner, which puts the face it shares with the core on the right of the
/// root.
struct LooplessDecomposition {
  RootedMap core;
  std::vector<RootedMap> components;

  bool operator==(const LooplessDecomposition&) const = default;
};

enum class DiagonalKind { non_diagonal, we_diagonal, sn_diagonal };

/// Core 4-gon triangulation plus one triangulation per inner face of the
/// core. Faces follow the canonical dart order of the core; the component of
/// face f is rooted at the vertex of f's smallest dart, with its outer face
/// on the right of the root.
struct TriangulationDecomposition {
  RootedMap core;
  std::vector<RootedMap> components;
  DiagonalKind kind = DiagonalKind::non_diagonal;

  bool operator==(const TriangulationDecomposition&) const = default;
};

const char* to_string(DiagonalKind k);

/// ||T||: inner vertices of a triangulation, inner vertices + 1 of a 4-gon
/// triangulation.
int tri_size(const RootedMap& t);

RootedMap triangle_map();

LooplessDecomposition block_decompose(const RootedMap& m);
RootedMap block_compose(const LooplessDecomposition& d);

TriangulationDecomposition tri_decompose(const RootedMap& t4);
RootedMap tri_compose(const TriangulationDecomposition& d);

/// Deletes the outer edge that follows the root.
RootedMap tri_to_quad(const RootedMap& t);
/// Adds the chord W-E in the outer face; the new outer face contains N.
RootedMap quad_to_tri(const RootedMap& t4);

/// Loopless map with n edges -> triangulation with n inner vertices.
RootedMap f2(const RootedMap& m);
RootedMap f2_inv(const RootedMap& t);

}  // namespace pmap
