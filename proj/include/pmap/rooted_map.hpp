#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmap {

using Dart = int;
using EdgeId = int;
using VertexId = int;  // smallest dart of the vertex's rotation orbit
using FaceId = int;    // smallest dart of the face orbit

enum class ErrorCode {
  NotAPermutation,
  Disconnected,
  NonZeroGenus,
  BadRoot,
  ParseError,
  SizeTooLarge,
  Cyclic,
  MultipleSources,
  MultipleSinks,
  PolesNotOuter,
  LocalConditionViolated,
  NotInnerFace,
  NotNonseparable,
  UniquenessViolation,
  NotIrreducible,
  T1Violated,
  T2Violated,
  NoInnerVertex,
  NotAPoset,
  InvalidInput,
  TooSmall,
  HasLoop,
  Empty,
  ComponentNotLoopless,
  CoreNotNonseparable,
  ArityMismatch,
  NotQuadTriangulation,
  CoreNotAdmissible,
  WEDiagonal,
  NotTriangulation,
  OutOfRange,
  NonIntegerResult,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A rooted planar map stored as a rotation system on darts 0..2m-1.
///
/// Edge e owns darts 2e and 2e+1, so the edge involution is d ^ 1.
/// sigma(d) is the successor of d around its vertex in the direction that
/// makes every orbit of sigma∘alpha trace a face lying on the right of its
/// darts; geometrically that is the counterclockwise successor, and
/// cw(d) = sigma^{-1}(d) is the clockwise one. The outer face is the face
/// on the right of the root. The vertex-map has m = 0 and no root.
class RootedMap {
 public:
  RootedMap() = default;

  int edge_count() const { return static_cast<int>(sigma_.size() / 2); }
  int dart_count() const { return static_cast<int>(sigma_.size()); }
  bool is_vertex_map() const { return sigma_.empty(); }
  Dart root() const { return root_; }

  static Dart alpha(Dart d) { return d ^ 1; }
  static EdgeId edge_of(Dart d) { return d >> 1; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart ccw(Dart d) const { return sigma_[d]; }
  Dart cw(Dart d) const { return sigma_inv_[d]; }
  /// Next dart along the face on the right of d.
  Dart face_next(Dart d) const { return sigma_[d ^ 1]; }

  VertexId vertex(Dart d) const { return vertex_of_[d]; }
  FaceId face(Dart d) const { return face_of_[d]; }
  FaceId left_face(Dart d) const { return face_of_[d ^ 1]; }
  VertexId head(Dart d) const { return vertex_of_[d ^ 1]; }
  FaceId outer_face() const { return root_ < 0 ? -1 : face_of_[root_]; }

  int vertex_count() const { return is_vertex_map() ? 1 : static_cast<int>(vertices_.size()); }
  int face_count() const { return is_vertex_map() ? 1 : static_cast<int>(faces_.size()); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<FaceId>& faces() const { return faces_; }

  /// Darts around v in clockwise order, starting at v's representative dart.
  std::vector<Dart> darts_cw(VertexId v) const;
  /// Darts of face f in walking order (face on the right), starting at f.
  std::vector<Dart> face_darts(FaceId f) const;
  int degree(VertexId v) const;
  int face_degree(FaceId f) const;

  const std::vector<Dart>& sigma_table() const { return sigma_; }

  friend bool operator==(const RootedMap& a, const RootedMap& b) {
    return a.sigma_ == b.sigma_ && a.root_ == b.root_;
  }

 private:
  friend RootedMap build_map(std::vector<Dart> sigma, std::optional<Dart> root);

  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<VertexId> vertex_of_;
  std::vector<FaceId> face_of_;
  std::vector<VertexId> vertices_;
  std::vector<FaceId> faces_;
  Dart root_ = -1;
};

/// Validates a rotation table (0-based darts) and returns the map.
/// Throws NotAPermutation, Disconnected, NonZeroGenus or BadRoot.
RootedMap build_map(std::vector<Dart> sigma, std::optional<Dart> root);

RootedMap vertex_map();

/// Builds a map from per-vertex clockwise dart lists over darts 0..2*edges-1.
RootedMap from_clockwise(int edges, const std::vector<std::vector<Dart>>& cw, Dart root);

/// Clockwise dart lists of every vertex, in vertex-representative order.
std::vector<std::vector<Dart>> clockwise_lists(const RootedMap& m);

/// Same map rooted at another dart.
RootedMap reroot(const RootedMap& m, Dart root);

struct Corner {
  VertexId vertex;
  Dart dart;  // the corner is the sector from dart clockwise to cw(dart)
};

struct FacesAndCorners {
  std::vector<std::vector<Dart>> faces;  // orbits, each starting at its smallest dart
  int outer = -1;                        // index into faces
  std::vector<Corner> corners;           // one per dart, dart order
};

FacesAndCorners faces_and_corners(const RootedMap& m);

/// Canonical relabelling: darts renumbered by first visit of a traversal
/// from the root, each new dart immediately followed by its partner.
struct Canonical {
  RootedMap map;
  std::vector<Dart> relabel;  // old dart -> new dart
};

Canonical canonicalize(const RootedMap& m);

/// Complete invariant of rooted maps: the canonical rotation table prefixed
/// with the edge count. Orders maps first by size, then lexicographically.
using CanonicalCode = std::vector<int>;
CanonicalCode canonical_code(const RootedMap& m);

/// RMAP/1 text of the canonical relabelling.
std::string canonical_form(const RootedMap& m);

struct FamilyFlags {
  bool loopless = false;
  bool nonseparable = false;
  bool triangulation = false;
  bool quad_triangulation = false;
  bool irreducible = false;
};

FamilyFlags classify(const RootedMap& m);

bool is_simple(const RootedMap& m);

/// Edge sets of the blocks (maximal non-separable submaps) of a loopless map.
std::vector<std::vector<EdgeId>> blocks(const RootedMap& m);

/// Submap spanned by the kept edges, which must form a connected graph.
/// Rotation order is inherited; `old_to_new` receives the dart relabelling
/// (-1 for dropped darts). Throws Disconnected otherwise.
RootedMap submap(const RootedMap& m, std::span<const char> keep_edge, Dart root,
                 std::vector<Dart>* old_to_new = nullptr);

}  // namespace pmap
