#pragma once

#include "pmap/bipolar.hpp"
#include "pmap/rooted_map.hpp"
#include "pmap/transversal.hpp"

namespace pmap {

/// Plane bipolar orientation -> N-avoiding plane bipolar poset. One vertex
/// per edge of O plus the two poles, with a fan of edges inside every face.
BipolarOrientation phi(const BipolarOrientation& o);

/// Plane bipolar poset -> plane bipolar orientation. One vertex per face of
/// P and one edge per non-special vertex, from its right lateral face to its
/// left lateral face.
BipolarOrientation psi(const BipolarOrientation& p);

/// Plane bipolar poset -> transversal structure whose red poset is P.
TransversalStructure phi_prime(const BipolarOrientation& p);

/// Transversal structure -> its red bipolar poset.
BipolarOrientation psi_prime(const TransversalStructure& x);

/// Rooted non-separable map with n >= 2 edges -> irreducible triangulation
/// with n+3 vertices, rooted from N to W.
RootedMap f1(const RootedMap& m);
/// The transversal structure built by f1 (the minimal one of its image).
TransversalStructure f1_structure(const RootedMap& m);

/// Inverse of f1 through the minimal transversal structure.
RootedMap f1_inv(const RootedMap& t);

/// f1 extended to the edge-map, which goes to the SN-link-map.
RootedMap f1_tilde(const RootedMap& m);

/// The 4-cycle N,E,S,W with the chord S-N (resp. W-E), rooted from N to W.
RootedMap sn_link_map();
RootedMap we_link_map();

}  // namespace pmap
