#pragma once

#include <string>
#include <vector>

#include "pmap/bipolar.hpp"
#include "pmap/rooted_map.hpp"
#include "pmap/text_format.hpp"

namespace pmap {

inline constexpr int kMaxTransversalInner = 5;

/// A transversal structure on an irreducible 4-gon triangulation. The root
/// runs from N to W, so the outer face walk is N, W, S, E.
struct TransversalStructure {
  RootedMap tri;
  std::string color;      // per edge: 'r' or 'b' on inner edges, 'x' on the outer 4-cycle
  std::vector<char> out;  // per dart; outer edges are normalised to dart 2e leaving

  VertexId N() const { return tri.vertex(tri.root()); }
  VertexId W() const { return tri.head(tri.root()); }
  VertexId S() const { return tri.head(tri.face_next(tri.root())); }
  VertexId E() const { return tri.head(tri.face_next(tri.face_next(tri.root()))); }
  bool is_outer_vertex(VertexId v) const { return v == N() || v == E() || v == S() || v == W(); }
  int inner_vertex_count() const { return tri.vertex_count() - 4; }
  std::string signs() const;

  bool operator==(const TransversalStructure&) const = default;
};

/// Validates (T1) and (T2). `orient` is ignored on the outer 4-cycle.
TransversalStructure make_transversal(const RootedMap& t, const std::string& color, const std::string& orient);

/// Relabels the triangulation canonically; equal structures become identical.
TransversalStructure canonical(const TransversalStructure& x);

Record to_record(const TransversalStructure& x);
TransversalStructure transversal_from_record(const Record& r);

struct Posets {
  BipolarOrientation red, blue;
  std::vector<EdgeId> red_edge, blue_edge;  // edge of the triangulation -> edge of the poset, or -1
};

/// Red poset on T minus W,E with poles S,N; blue poset on T minus S,N with
/// poles W,E. Both are checked to be bipolar posets.
Posets red_blue_posets(const TransversalStructure& x);

bool is_N_avoiding_transversal(const TransversalStructure& x);

enum class CycleKind { left, right };

struct AltFourCycle {
  VertexId s_R, w1, t_R, w2;  // clockwise around the cycle
  std::vector<EdgeId> edges;  // s_R-w1, w1-t_R, t_R-w2, w2-s_R
  CycleKind kind;
  bool degenerate;            // no vertex inside, a single chord
};

std::vector<AltFourCycle> alt_four_cycles(const TransversalStructure& x);

/// Classification by the colours of the edges inside the cycle at each of its
/// vertices; nullopt when the incidences are mixed.
std::optional<CycleKind> boundary_incidence_kind(const TransversalStructure& x, const AltFourCycle& r);

/// All transversal structures of an irreducible T, sorted by (color, signs).
std::vector<TransversalStructure> enumerate_transversal(const RootedMap& t);
/// The same backtracking without the irreducibility precondition; any
/// 4-gon triangulation is accepted.
std::vector<TransversalStructure> transversal_search(const RootedMap& t);

/// The unique structure without a right alternating 4-cycle.
TransversalStructure minimal_transversal(const RootedMap& t);

}  // namespace pmap
