#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmap/rooted_map.hpp"

namespace pmap {

enum class Family { loopless, nonseparable, triangulation, quad_triangulation, irreducible };

std::optional<Family> parse_family(const std::string& name);
const char* to_string(Family f);

// Desk-scale bounds; requests above them throw SizeTooLarge.
inline constexpr int kMaxMapEdges = 7;
inline constexpr int kMaxTriangulationInner = 5;  // inner vertices of sphere triangulations
inline constexpr int kMaxQuadInner = 4;           // inner vertices of 4-gon triangulations
inline constexpr int kMaxSimpleVertices = 6;

/// All rooted planar maps with n edges, each once, ordered by canonical code.
/// Built by edge insertion (pendant edges and chords inside a face) over
/// unrooted classes, then expanded to every rooting. `jobs` > 1 splits the
/// growth step across threads; the output does not depend on it.
std::vector<RootedMap> enumerate_maps(int n, int jobs = 1);

/// Independent generator for cross-checks: every permutation of 2n darts,
/// filtered for connectivity and genus 0, deduplicated by canonical code.
std::vector<RootedMap> enumerate_maps_by_permutation(int n);

/// Members of a family at a given size. Loopless and non-separable maps are
/// sized by edges; triangulations, 4-gon triangulations and irreducible
/// triangulations are sized by inner vertices (for sphere triangulations
/// that equals |V|-3).
std::vector<RootedMap> enumerate_family(Family family, int size, int jobs = 1);

/// All rooted simple planar maps with the given number of vertices.
std::vector<RootedMap> enumerate_simple_maps(int vertices, int jobs = 1);

/// Sorts by canonical code and drops duplicates; maps are canonicalized.
std::vector<RootedMap> canonical_sorted(const std::vector<RootedMap>& maps);

/// Canonical code of the map rooted at `root` (without rebuilding it).
CanonicalCode canonical_code_at(const RootedMap& m, Dart root);

}  // namespace pmap
