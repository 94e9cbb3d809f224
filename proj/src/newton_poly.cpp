#include "lctlab/newton_poly.hpp"

#include "lctlab/detail/dual.hpp"
#include "lctlab/detail/linalg.hpp"
#include "lctlab/errors.hpp"
#include "lctlab/lp.hpp"
#include "lctlab/parallel.hpp"
#include "lctlab/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace lctlab {

namespace {

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// a <= b componentwise.
bool dominates_below(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void sort_dedupe(std::vector<ExponentVector>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Drops every point componentwise-dominated by another (keeps the smaller).
void prune_dominated(std::vector<ExponentVector>& pts) {
  sort_dedupe(pts);
  std::vector<ExponentVector> keep;
  keep.reserve(pts.size());
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (&q == &p) continue;
      if (dominates_below(q, p) && q != p) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(p);
  }
  pts = std::move(keep);
}

// Exact test: x in conv(gens) + R^n_+ ?
bool in_hull(const std::vector<ExponentVector>& gens, const ExponentVector& x) {
  if (gens.empty()) return false;
  const std::size_t n = x.size();
  const std::size_t m = gens.size();
  lp::Problem p;
  p.num_vars = m;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = gens[i][j];
    p.rows.push_back(std::move(row));
    p.rhs.push_back(x[j]);
    p.rel.push_back(lp::Rel::Le);
  }
  p.rows.emplace_back(m, Rat(1));
  p.rhs.emplace_back(1);
  p.rel.push_back(lp::Rel::Eq);
  return lp::feasible(p);
}

// Keeps exactly the extreme points of conv(pts) + R^n_+ (pts must already be
// deduplicated; non-extreme companions in the reference set are harmless).
void prune_non_extreme(std::vector<ExponentVector>& pts) {
  if (pts.size() <= 1) return;
  std::vector<ExponentVector> others;
  others.reserve(pts.size() - 1);
  std::vector<char> extreme(pts.size(), 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (in_hull(others, pts[i])) extreme[i] = 0;
  }
  std::vector<ExponentVector> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (extreme[i]) keep.push_back(std::move(pts[i]));
  }
  pts = std::move(keep);
}

std::vector<ExponentVector> reduce_generators(std::vector<ExponentVector> gens) {
  prune_dominated(gens);
  prune_non_extreme(gens);
  std::sort(gens.begin(), gens.end(), lex_less);
  return gens;
}

bool axis_pure(const ExponentVector& v, std::size_t axis) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != axis && v[j] != 0) return false;
  }
  return true;
}

bool is_origin(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

// ---- exact covolume, radial route ----------------------------------------
//
// For m-primary P every volume-carrying facet has a strictly positive inner
// normal u with support value 1 (a zero component of u is violated by the
// pure vertex on that axis, and support value 0 puts the hyperplane through
// the origin). Radially, the complement decomposes into the cones over the
// facets, so
//
//   covol(P) = sum_u vol(cone(0, F_u)) = sum_u vol_{n-1}(proj_j F_u)/(n u_j)
//
// with F_u the hull of the incident vertices and proj_j the drop of any
// coordinate with u_j != 0. Facet volumes come from the divergence-theorem
// recursion on vertex hulls; every hyperplane solve touches only original
// vertex coordinates, so the rationals stay small.

// Volume of conv(pts) in R^d from the vertex list (interior points allowed).
Rat polytope_volume(std::vector<ExponentVector> pts, std::size_t d);

Rat hull_area_2d(std::vector<ExponentVector>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Rat(0);
  const auto cross = [](const ExponentVector& o, const ExponentVector& a,
                        const ExponentVector& b) {
    return Rat((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  std::vector<ExponentVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k > 0 ? k - 1 : 0);
  Rat twice(0);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return abs(twice) / 2;
}

Rat small_det(std::vector<std::vector<Rat>> m) {
  const std::size_t d = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rat inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] * inv;
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Normal of the hyperplane through d points by cofactor expansion; zero
// vector when the points are affinely dependent.
std::vector<Rat> hyperplane_normal(const std::vector<const ExponentVector*>& pts,
                                   std::size_t d) {
  std::vector<Rat> normal(d, Rat(0));
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::vector<Rat>> minor(d - 1, std::vector<Rat>(d - 1));
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == k) continue;
        minor[r][cc++] = (*pts[r + 1])[c] - (*pts[0])[c];
      }
    }
    Rat cof = small_det(std::move(minor));
    if ((k % 2) == 1) cof = -cof;
    normal[k] = cof;
  }
  return normal;
}

Rat polytope_volume(std::vector<ExponentVector> pts, std::size_t d) {
  sort_dedupe(pts);
  if (pts.size() <= d) return Rat(0);
  {
    // Affinely dependent input spans no volume; guard before facet search.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<Rat> r(d);
      for (std::size_t c = 0; c < d; ++c) r[c] = pts[i][c] - pts[0][c];
      rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const Rat inv = 1 / rows[rank][col];
      for (std::size_t r2 = rank + 1; r2 < rows.size(); ++r2) {
        if (rows[r2][col] == 0) continue;
        const Rat f = rows[r2][col] * inv;
        for (std::size_t c2 = col; c2 < d; ++c2) rows[r2][c2] -= f * rows[rank][c2];
      }
      ++rank;
    }
    if (rank < d) return Rat(0);
  }
  if (d == 1) {
    Rat lo = pts.front()[0], hi = pts.front()[0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (d == 2) return hull_area_2d(pts);

  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  std::set<std::vector<Rat>> seen;
  Rat total(0);
  for (;;) {
    std::vector<const ExponentVector*> sub(d);
    for (std::size_t i = 0; i < d; ++i) sub[i] = &pts[idx[i]];
    auto normal = hyperplane_normal(sub, d);
    bool nonzero = false;
    for (const auto& c : normal) nonzero = nonzero || c != 0;
    if (nonzero) {
      Rat beta(0);
      for (std::size_t c = 0; c < d; ++c) beta += normal[c] * (*sub[0])[c];
      bool above = false, below = false;
      for (const auto& p : pts) {
        Rat dot(0);
        for (std::size_t c = 0; c < d; ++c) dot += normal[c] * p[c];
        if (dot > beta) above = true;
        if (dot < beta) below = true;
        if (above && below) break;
      }
      if (!(above && below)) {
        if (above) {  // flip so the hull is on the <= side
          for (auto& c : normal) c = -c;
          beta = -beta;
        }
        // Canonical key for dedup across generating subsets.
        std::vector<Rat> key = normal;
        key.push_back(beta);
        std::size_t lead = 0;
        while (key[lead] == 0) ++lead;
        const Rat scale = 1 / abs(key[lead]);
        for (auto& c : key) c *= scale;
        if (seen.insert(key).second) {
          std::size_t j = 0;
          for (std::size_t c = 1; c < d; ++c) {
            if (abs(normal[c]) > abs(normal[j])) j = c;
          }
          std::vector<ExponentVector> proj;
          for (const auto& p : pts) {
            Rat dot(0);
            for (std::size_t c = 0; c < d; ++c) dot += normal[c] * p[c];
            if (dot != beta) continue;
            ExponentVector q;
            q.reserve(d - 1);
            for (std::size_t c = 0; c < d; ++c) {
              if (c != j) q.push_back(p[c]);
            }
            proj.push_back(std::move(q));
          }
          total += beta * polytope_volume(std::move(proj), d - 1) / abs(normal[j]);
        }
      }
    }
    // next d-combination of [0, m)
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (idx[i] + (d - i) <= m - 1) {
        ++idx[i];
        for (std::size_t l = i + 1; l < d; ++l) idx[l] = idx[l - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return total / Rat(static_cast<unsigned long>(d));
}

// ---- exact covolume, slab route (kept as an independent oracle) ----------
//
// covol(P) = integral over t of covol(P_t), slicing along one axis. Within a
// slab between consecutive generator heights the slice polyhedron's vertices
// move affinely in t (slices of the 1-faces of P), so the integrand is a
// polynomial of degree <= d-1; it is recovered exactly from d interior
// evaluations and integrated in closed form. Denominators compound with
// depth, so this route is only practical in low dimension.

Rat covol_any(std::vector<ExponentVector> gens, std::size_t d);

Rat covol_1d(const std::vector<ExponentVector>& gens) {
  Rat best = gens.front()[0];
  for (const auto& g : gens) best = std::min(best, g[0]);
  return best;
}

// Area below the lower convex chain; gens pruned, sorted by x ascending.
Rat covol_2d(const std::vector<ExponentVector>& gens) {
  std::vector<ExponentVector> chain;
  chain.reserve(gens.size());
  for (const auto& p : gens) {
    while (chain.size() >= 2) {
      const auto& a = chain[chain.size() - 2];
      const auto& b = chain.back();
      // pop b when it is on or above segment a-p
      const Rat cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
      if (cross >= 0) break;
      chain.pop_back();
    }
    chain.push_back(p);
  }
  Rat twice(0);
  Rat prev_x(0), prev_y(0);
  for (const auto& p : chain) {
    twice += prev_x * p[1] - p[0] * prev_y;
    prev_x = p[0];
    prev_y = p[1];
  }
  twice += prev_x * 0 - 0 * prev_y;
  return abs(twice) / 2;
}

// Cross-section generators at slice height tau (strictly between breakpoint
// heights): projections of the generators at or below tau, plus every
// chord crossing from a below-generator to an above-generator.
std::vector<ExponentVector> slice_gens(const std::vector<ExponentVector>& gens,
                                       std::size_t axis, const Rat& tau) {
  std::vector<const ExponentVector*> below, above;
  for (const auto& g : gens) {
    (g[axis] <= tau ? below : above).push_back(&g);
  }
  std::vector<ExponentVector> out;
  out.reserve(below.size() + below.size() * above.size());
  const auto project = [axis](const ExponentVector& g) {
    ExponentVector v;
    v.reserve(g.size() - 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != axis) v.push_back(g[j]);
    }
    return v;
  };
  for (const auto* b : below) out.push_back(project(*b));
  for (const auto* b : below) {
    if ((*b)[axis] == tau) continue;
    for (const auto* u : above) {
      const Rat theta = (tau - (*b)[axis]) / ((*u)[axis] - (*b)[axis]);
      ExponentVector v;
      v.reserve(gens.front().size() - 1);
      for (std::size_t j = 0; j < b->size(); ++j) {
        if (j != axis) v.push_back((*b)[j] + theta * ((*u)[j] - (*b)[j]));
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// Exact integral over [lo, hi] of the degree <= d-1 polynomial interpolating
// (nodes[i], vals[i]).
Rat integrate_interpolant(const Rat& lo, const Rat& hi, const std::vector<Rat>& nodes,
                          const std::vector<Rat>& vals) {
  const std::size_t d = nodes.size();
  std::vector<std::vector<Rat>> vm(d, std::vector<Rat>(d));
  for (std::size_t i = 0; i < d; ++i) {
    Rat pw(1);
    for (std::size_t j = 0; j < d; ++j) {
      vm[i][j] = pw;
      pw *= nodes[i];
    }
  }
  auto coef = detail::solve_square(std::move(vm), vals);
  assert(coef.has_value());
  Rat total(0);
  Rat lo_pw = lo, hi_pw = hi;
  for (std::size_t j = 0; j < d; ++j) {
    total += (*coef)[j] * (hi_pw - lo_pw) / Rat(static_cast<unsigned long>(j + 1));
    lo_pw *= lo;
    hi_pw *= hi;
  }
  return total;
}

Rat covol_any(std::vector<ExponentVector> gens, std::size_t d) {
  prune_dominated(gens);
  for (const auto& g : gens) {
    if (is_origin(g)) return Rat(0);
  }
  if (d == 1) return covol_1d(gens);
  if (d == 2) return covol_2d(gens);

  // Slice along the axis with the fewest breakpoints below its pure cutoff.
  std::size_t best_axis = 0;
  Rat best_cutoff;
  std::vector<Rat> best_heights;
  for (std::size_t axis = 0; axis < d; ++axis) {
    Rat cutoff(-1);
    for (const auto& g : gens) {
      if (axis_pure(g, axis) && (cutoff < 0 || g[axis] < cutoff)) cutoff = g[axis];
    }
    assert(cutoff >= 0);  // callers guarantee an m-primary generator list
    std::vector<Rat> heights{Rat(0), cutoff};
    for (const auto& g : gens) {
      if (g[axis] > 0 && g[axis] < cutoff) heights.push_back(g[axis]);
    }
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    if (axis == 0 || heights.size() < best_heights.size()) {
      best_axis = axis;
      best_cutoff = cutoff;
      best_heights = std::move(heights);
    }
  }

  Rat total(0);
  for (std::size_t s = 0; s + 1 < best_heights.size(); ++s) {
    const Rat& lo = best_heights[s];
    const Rat& hi = best_heights[s + 1];
    std::vector<Rat> nodes(d);
    std::vector<Rat> vals(d);
    bool all_zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      nodes[i] = lo + (hi - lo) * Rat(static_cast<unsigned long>(i + 1)) /
                          Rat(static_cast<unsigned long>(d + 1));
      vals[i] = covol_any(slice_gens(gens, best_axis, nodes[i]), d - 1);
      if (vals[i] != 0) all_zero = false;
    }
    if (all_zero) break;  // cross-section volume is nonincreasing in t
    total += integrate_interpolant(lo, hi, nodes, vals);
  }
  return total;
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::from_generators(const std::vector<ExponentVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  const std::size_t n = generators.front().size();
  if (n == 0) throw std::invalid_argument("zero-dimensional exponent vector");
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("mismatched generator dimensions");
    for (const auto& c : g) {
      if (c < 0) throw std::invalid_argument("negative exponent coordinate");
    }
  }
  return NewtonPolyhedron(n, reduce_generators(generators));
}

NewtonPolyhedron unit_corner(std::size_t n) {
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector e(n, Rat(0));
    e[j] = 1;
    gens.push_back(std::move(e));
  }
  return NewtonPolyhedron::from_generators(gens);
}

bool contains(const NewtonPolyhedron& p, const ExponentVector& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
  return in_hull(p.vertices(), x);
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<ExponentVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      ExponentVector s(p.dim());
      for (std::size_t j = 0; j < p.dim(); ++j) s[j] = a[j] + b[j];
      sums.push_back(std::move(s));
    }
  }
  return NewtonPolyhedron::from_generators(sums);
}

NewtonPolyhedron dilate(const NewtonPolyhedron& p, const Rat& factor) {
  if (factor < 0) throw std::invalid_argument("negative dilation factor");
  std::vector<ExponentVector> gens = p.vertices();
  for (auto& g : gens) {
    for (auto& c : g) c *= factor;
  }
  return NewtonPolyhedron::from_generators(gens);
}

bool is_m_primary(const NewtonPolyhedron& p) {
  for (std::size_t axis = 0; axis < p.dim(); ++axis) {
    bool found = false;
    for (const auto& v : p.vertices()) {
      if (axis_pure(v, axis)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Covolume covolume(const NewtonPolyhedron& p) {
  Covolume out;
  if (!is_m_primary(p)) {
    out.bounded = false;
    return out;
  }
  out.bounded = true;
  out.value = 0;
  for (const auto& v : p.vertices()) {
    if (is_origin(v)) return out;  // whole orthant, empty complement
  }
  const std::size_t n = p.dim();
  if (n == 1) {
    out.value = covol_1d(p.vertices());
    return out;
  }
  for (const auto& u : detail::dual_vertices(p)) {
    std::size_t j = 0;
    for (std::size_t c = 1; c < n; ++c) {
      if (u[c] > u[j]) j = c;
    }
    std::vector<ExponentVector> proj;
    for (const auto& v : p.vertices()) {
      Rat dot(0);
      for (std::size_t c = 0; c < n; ++c) dot += u[c] * v[c];
      if (dot != 1) continue;
      ExponentVector q;
      q.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) q.push_back(v[c]);
      }
      proj.push_back(std::move(q));
    }
    out.value += polytope_volume(std::move(proj), n - 1) /
                 (Rat(static_cast<unsigned long>(n)) * u[j]);
  }
  return out;
}

McEstimate covolume_mc(const NewtonPolyhedron& p, const Rat& box_height,
                       std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (!is_m_primary(p)) throw ValidationError("unbounded complement: polyhedron misses an axis");
  Rat max_coord(0);
  for (const auto& v : p.vertices()) {
    for (const auto& c : v) max_coord = std::max(max_coord, c);
  }
  if (box_height < max_coord) {
    throw std::invalid_argument("box_height below maximal vertex coordinate");
  }

  // Half-space form of P from the dual vertices; the per-sample test is then
  // a handful of dot products in double precision.
  const auto duals = detail::dual_vertices(p);
  const std::size_t n = p.dim();
  std::vector<std::vector<double>> normals;
  normals.reserve(duals.size());
  for (const auto& u : duals) {
    std::vector<double> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = to_double(u[j]);
    normals.push_back(std::move(row));
  }
  const double box = to_double(box_height);

  constexpr std::uint64_t kChunk = 1u << 16;
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t c) {
    SplitMix64 rng(derive_seed(seed, c));
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t count = std::min<std::uint64_t>(kChunk, samples - begin);
    std::vector<double> x(n);
    std::uint64_t local = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (std::size_t j = 0; j < n; ++j) x[j] = box * rng.next_double();
      bool inside = true;
      for (const auto& u : normals) {
        double dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += u[j] * x[j];
        if (dot < 1.0) {
          inside = false;
          break;
        }
      }
      if (!inside) ++local;
    }
    hits[c] = local;
  });

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  const double phat = static_cast<double>(total) / static_cast<double>(samples);
  const double scale = std::pow(box, static_cast<double>(n));
  McEstimate est;
  est.value = scale * phat;
  est.stderr_ = scale * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

std::optional<NewtonPolyhedron> restrict_to(const NewtonPolyhedron& p,
                                            const std::vector<std::size_t>& coords) {
  if (coords.empty()) throw std::invalid_argument("empty coordinate subset");
  std::vector<char> in(p.dim(), 0);
  for (std::size_t c : coords) {
    if (c >= p.dim()) throw std::invalid_argument("coordinate index out of range");
    in[c] = 1;
  }
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    if (in[j]) order.push_back(j);
  }
  std::vector<ExponentVector> gens;
  for (const auto& v : p.vertices()) {
    bool supported = true;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (!in[j] && v[j] != 0) {
        supported = false;
        break;
      }
    }
    if (!supported) continue;
    ExponentVector w;
    w.reserve(order.size());
    for (std::size_t j : order) w.push_back(v[j]);
    gens.push_back(std::move(w));
  }
  if (gens.empty()) return std::nullopt;
  return NewtonPolyhedron::from_generators(gens);
}

namespace detail {

Rat covolume_slab(const NewtonPolyhedron& p) {
  if (!is_m_primary(p)) throw ValidationError("unbounded complement");
  return covol_any(p.vertices(), p.dim());
}

std::vector<std::vector<Rat>> dual_vertices(const NewtonPolyhedron& p) {
  const auto& verts = p.vertices();
  const std::size_t m = verts.size();
  const std::size_t n = p.dim();
  std::vector<std::vector<Rat>> found;

  // For m-primary polyhedra every dual vertex is strictly positive (a zero
  // component is infeasible against the pure vertex on that axis), so only
  // bases of n tight vertex constraints occur.
  const std::size_t k_low = is_m_primary(p) ? std::min(m, n) : 1;

  // Iterate over k tight vertex constraints and k free coordinates.
  for (std::size_t k = k_low; k <= std::min(m, n); ++k) {
    std::vector<std::size_t> vidx(k), fidx(k);
    const auto next_combo = [](std::vector<std::size_t>& c, std::size_t limit) {
      std::size_t i = c.size();
      while (i > 0) {
        --i;
        if (++c[i] <= limit - (c.size() - i)) {
          for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = c[j - 1] + 1;
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < k; ++i) vidx[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) fidx[i] = i;
      do {
        std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) a[r][c] = verts[vidx[r]][fidx[c]];
        }
        auto sol = solve_square(std::move(a), std::vector<Rat>(k, Rat(1)));
        if (!sol) continue;
        bool nonneg = true;
        for (const auto& v : *sol) {
          if (v < 0) {
            nonneg = false;
            break;
          }
        }
        if (!nonneg) continue;
        std::vector<Rat> u(n, Rat(0));
        for (std::size_t c = 0; c < k; ++c) u[fidx[c]] = (*sol)[c];
        bool feasible_u = true;
        for (const auto& v : verts) {
          Rat dot(0);
          for (std::size_t j = 0; j < n; ++j) dot += v[j] * u[j];
          if (dot < 1) {
            feasible_u = false;
            break;
          }
        }
        if (feasible_u) found.push_back(std::move(u));
      } while (next_combo(fidx, n));
    } while (next_combo(vidx, m));
  }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace detail

}  // namespace lctlab
