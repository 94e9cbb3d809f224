#pragma once

// Internal: exact enumeration of the vertices of the dual polyhedron
// Q* = { u >= 0 : u . v >= 1 for every vertex v }. These are the inner
// normals of the bounded lower faces, normalized to support value 1, plus
// the axis-pinned corners. Used by the dual threshold route and as the
// half-space test backing the Monte-Carlo covolume estimator; deliberately
// not part of the public surface (the library exposes no facet form).

#include "lctlab/newton_poly.hpp"

#include <vector>

namespace lctlab::detail {

std::vector<std::vector<Rat>> dual_vertices(const NewtonPolyhedron& p);

// Covolume by recursive slab decomposition along a coordinate axis. An
// independent route to the same number as covolume(); practical only in low
// dimension, kept for cross-checks.
Rat covolume_slab(const NewtonPolyhedron& p);

}  // namespace lctlab::detail
