#pragma once

// Exact singularity invariants for the model classes: log canonical
// threshold c, restricted thresholds c_k, Monge-Ampere masses e_k, and the
// Lelong number. Two independent routes to c (a minimax LP and a dual-ray
// enumeration) are kept deliberately separate so they can cross-certify
// each other.

#include "lctlab/model.hpp"

#include <vector>

namespace lctlab {

struct CkEntry {
  Rat value;
  bool exact;  // false: certified lower bound (monomial ideals, 2 <= k <= n-1)
};

struct InvariantTable {
  std::size_t n = 0;
  ExtRat c;                  // c_n; finite for every valid model here
  std::vector<CkEntry> ck;   // restricted thresholds, k = 1 .. n-1
  std::vector<Rat> e;        // masses e_0 .. e_n, e_0 = 1
  Rat lelong;                // = e_1
  bool truncated = false;    // table reports the untruncated germ
};

// Threshold via the minimax LP: 1/c = min over the generator simplex of the
// largest coordinate of the convex combination. Requires m-primary input.
Rat lct(const NewtonPolyhedron& p);

// Same quantity by the dual route: min of sum(u) over the enumerated dual
// vertices u (normals of lower faces plus axis-pinned corners). Must agree
// with lct() exactly.
Rat lct_dual(const NewtonPolyhedron& p);

// Minimal l1-norm of a vertex.
Rat lelong_number(const NewtonPolyhedron& p);

// Mass e_k via mixed-covolume polarization: inclusion-exclusion over the
// Minkowski sums i*P + j*Sigma_1 with Sigma_1 the unit corner.
Rat ma_mass(const NewtonPolyhedron& p, std::size_t k);

// All masses e_0..e_n at once, sharing the Minkowski covolume cache.
std::vector<Rat> ma_masses(const NewtonPolyhedron& p);

CkEntry restricted_lct(const SingularityModel& m, std::size_t k);

InvariantTable invariant_table(const SingularityModel& m);
InvariantTable weighted_invariants(const Weights& w);

}  // namespace lctlab
