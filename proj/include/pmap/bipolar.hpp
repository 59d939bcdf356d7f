#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmap/rooted_map.hpp"
#include "pmap/text_format.hpp"

namespace pmap {

/// A plane bipolar orientation O, stored closed: O plus a pole edge s->t
/// drawn in the outer face, rooted at the pole dart at s. The face on the
/// right of the pole is the left special face, the one on its left is the
/// right special face.
struct BipolarOrientation {
  RootedMap closed;
  std::vector<char> out;  // per dart of `closed`: 1 if its edge leaves the dart's vertex

  Dart pole() const { return closed.root(); }
  EdgeId pole_edge() const { return pole() / 2; }
  VertexId s() const { return closed.vertex(pole()); }
  VertexId t() const { return closed.head(pole()); }
  int edge_count() const { return closed.edge_count() - 1; }
  int vertex_count() const { return closed.vertex_count(); }
  int inner_face_count() const { return closed.face_count() - 2; }
  FaceId left_special() const { return closed.face(pole()); }
  FaceId right_special() const { return closed.left_face(pole()); }
  bool is_inner(FaceId f) const { return f != left_special() && f != right_special(); }
  bool is_pole(Dart d) const { return d / 2 == pole_edge(); }
  /// Orientation of the edges of O as a sign string over the closed edge ids,
  /// the pole included.
  std::string signs() const;

  bool operator==(const BipolarOrientation&) const = default;
};

/// Per-dart out flags from a sign string ('+' = dart 2e is the tail of e).
std::vector<char> out_flags(const std::string& orient);

/// Acyclic with unique source s and sink t, both on the outer face of m.
/// Returns the first failing condition.
std::optional<ErrorCode> check_definitional(const RootedMap& m, const std::string& orient, VertexId s,
                                            VertexId t);
/// Conditions (V) and (F) checked around every vertex and face of m.
bool check_local(const RootedMap& m, const std::string& orient, VertexId s, VertexId t);

/// Validates both ways and closes the orientation with a pole edge.
BipolarOrientation make_bipolar(const RootedMap& m, const std::string& orient, VertexId s, VertexId t);

/// Validates an orientation given directly on a closed map whose root is the
/// pole dart (at s). Both checks are run; nullopt when invalid.
std::optional<BipolarOrientation> close_orientation(const RootedMap& closed, std::vector<char> out);

/// Relabels the closed map canonically; equal orientations become identical.
BipolarOrientation canonical(const BipolarOrientation& o);

/// O as an ordinary rooted map (rooted at the edge ccw after the pole at s),
/// with `orient` and `poles` decorations.
Record to_record(const BipolarOrientation& o);
BipolarOrientation from_record(const Record& r);

struct FaceGeometry {
  FaceId face = -1;
  VertexId s_f = -1, t_f = -1;
  std::vector<Dart> left_path, right_path;  // darts directed from s_f to t_f
  EdgeId topleft_edge = -1, bottomright_edge = -1;
  std::vector<VertexId> left_lateral, right_lateral;
};

/// Throws NotInnerFace for the special faces.
FaceGeometry face_geometry(const BipolarOrientation& o, FaceId f);
/// Same decomposition for any face, the special ones included.
FaceGeometry face_contour(const BipolarOrientation& o, FaceId f);

struct OrderRelations {
  std::vector<EdgeId> edges;                 // edges of O, ascending
  std::vector<FaceId> faces;                 // faces of the closed map, ascending
  std::vector<std::vector<char>> edge_le;    // reflexive-transitive closures, indexed as above
  std::vector<std::vector<char>> dual_le;
  std::vector<std::vector<char>> face_le;
};

OrderRelations orders(const BipolarOrientation& o);

struct NPattern {
  EdgeId e1, e2, e3;
  bool mirrored;
};

std::vector<NPattern> find_N_patterns(const BipolarOrientation& o);
bool is_N_avoiding(const BipolarOrientation& o);

/// At least 3 vertices, no multiple edge, no transitive edge. Both the
/// reachability test and the lateral-path test are run and must agree.
bool is_bipolar_poset(const BipolarOrientation& o);
bool is_bipolar_poset_definitional(const BipolarOrientation& o);
bool is_bipolar_poset_lateral(const BipolarOrientation& o);

struct LOP {
  VertexId v1, v2;
  FaceId f1, f2;
};

std::vector<LOP> find_LOPs(const BipolarOrientation& o);

/// Every bipolar orientation of m with poles s and t, in sign-string order.
std::vector<BipolarOrientation> enumerate_bipolar(const RootedMap& m, VertexId s, VertexId t);
/// Every bipolar orientation of a closed map whose root dart is the pole s->t.
std::vector<BipolarOrientation> enumerate_closed(const RootedMap& closed);

/// Plane bipolar posets with n non-special vertices, found independently of
/// phi: every rooted simple non-separable map on n+2 vertices is read as a
/// closed map whose root is the pole, and each orientation of its other edges
/// that makes a bipolar poset is kept.
std::vector<BipolarOrientation> enumerate_posets(int nonspecial, int jobs = 1);

/// The unique LOP-free orientation of a rooted non-separable map, the root
/// edge serving as the pole.
BipolarOrientation minimal_bipolar(const RootedMap& m);

}  // namespace pmap
