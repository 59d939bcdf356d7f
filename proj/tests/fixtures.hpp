#pragma once

// Small hand-built maps shared by the unit tests.

#include "pmap/rooted_map.hpp"
#include "pmap/text_format.hpp"

namespace fixtures {

using namespace pmap;

// edge-map: two vertices joined by one edge
inline RootedMap emap() { return build_map({0, 1}, 0); }
// single loop
inline RootedMap loop() { return build_map({1, 0}, 0); }
// triangle A,B,C: AB={0@A,1@B}, BC={2@B,3@C}, CA={4@C,5@A}; root at B towards A
inline RootedMap tri() { return build_map({5, 2, 1, 4, 3, 0}, 1); }
// 2-cycle: two parallel edges, both darts 0 and 2 at the same vertex
inline RootedMap c2() { return from_clockwise(2, {{0, 2}, {1, 3}}, 0); }
// path s - v - t rooted at s
inline RootedMap path2() { return from_clockwise(2, {{0}, {1, 2}, {3}}, 0); }

// K4 drawn as outer triangle A(top), B(bottom right), C(bottom left), centre D.
inline RootedMap k4r() {
  return from_clockwise(6, {{0, 6, 5}, {2, 8, 1}, {4, 10, 3}, {7, 9, 11}}, 5);
}

// Outer 4-cycle N,E,S,W: NE={0@N,1@E}, ES={2@E,3@S}, SW={4@S,5@W}, WN={6@W,7@N};
// root is dart 7 (N towards W).
inline RootedMap i5() {
  // centre v: Nv={8,9}, Ev={10,11}, Sv={12,13}, Wv={14,15}
  return from_clockwise(8, {{0, 8, 7}, {2, 10, 1}, {4, 12, 3}, {6, 14, 5}, {9, 11, 13, 15}}, 7);
}
inline RootedMap qsn() { return from_clockwise(5, {{0, 8, 7}, {2, 1}, {4, 9, 3}, {6, 5}}, 7); }
inline RootedMap qwe() { return from_clockwise(5, {{0, 7}, {2, 9, 1}, {4, 3}, {6, 8, 5}}, 7); }

// X1 on I5: red S->v->N, blue W->v->E
inline const char* x1_color = "xxxxrbrb";
inline const char* x1_orient = "++++--++";

}  // namespace fixtures
