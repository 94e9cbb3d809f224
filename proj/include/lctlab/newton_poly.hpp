#pragma once

// Newton polyhedra conv(vertices) + R^n_+ over exact rationals: minimal
// vertex form, membership, Minkowski sums, coordinate restriction, and the
// covolume (the Lebesgue volume of the complement inside the orthant).
//
// All operations are pure; a NewtonPolyhedron is immutable after
// construction, with vertices kept deduplicated, minimal and sorted so that
// equal polyhedra compare equal.

#include "lctlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lctlab {

using ExponentVector = std::vector<Rat>;

class NewtonPolyhedron {
 public:
  // Minimal vertex representation of conv(generators) + R^n_+: componentwise
  // dominated generators are dropped, then every generator lying in the
  // hull of the others (decided by an exact feasibility LP) is dropped.
  // Throws std::invalid_argument on an empty list, mismatched dimensions or
  // a negative coordinate.
  static NewtonPolyhedron from_generators(const std::vector<ExponentVector>& generators);

  std::size_t dim() const { return n_; }
  const std::vector<ExponentVector>& vertices() const { return vertices_; }

  bool operator==(const NewtonPolyhedron& o) const = default;

 private:
  NewtonPolyhedron(std::size_t n, std::vector<ExponentVector> vertices)
      : n_(n), vertices_(std::move(vertices)) {}

  std::size_t n_ = 0;
  std::vector<ExponentVector> vertices_;
};

inline NewtonPolyhedron build_polyhedron(const std::vector<ExponentVector>& generators) {
  return NewtonPolyhedron::from_generators(generators);
}

// The polyhedron with vertices e_1, ..., e_n (the maximal-ideal model).
NewtonPolyhedron unit_corner(std::size_t n);

// Exact membership: true iff some convex combination of the vertices is
// componentwise <= x. Throws std::invalid_argument on dimension mismatch.
bool contains(const NewtonPolyhedron& p, const ExponentVector& x);

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q);

// factor >= 0; equals the factor-fold Minkowski self-sum for integer factors.
NewtonPolyhedron dilate(const NewtonPolyhedron& p, const Rat& factor);

// True iff the polyhedron meets every coordinate axis, i.e. every axis
// carries a generator supported on that axis alone. Equivalent to the
// complement having finite volume.
bool is_m_primary(const NewtonPolyhedron& p);

struct Covolume {
  bool bounded = false;
  Rat value{};  // meaningful only when bounded
};

// Euclidean volume of R^n_+ \ P by recursive slab decomposition along a
// coordinate axis. Unbounded complements are flagged, not errors.
Covolume covolume(const NewtonPolyhedron& p);

struct McEstimate {
  double value = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Uniform-sampling estimate of the covolume over [0, box_height]^n.
// Reproducible for a fixed seed regardless of thread scheduling. Throws
// ValidationError on an unbounded complement, std::invalid_argument when
// samples == 0 or box_height < max vertex coordinate.
McEstimate covolume_mc(const NewtonPolyhedron& p, const Rat& box_height,
                       std::uint64_t samples, std::uint64_t seed);

// Restriction to the coordinate subspace indexed by coords (0-based,
// nonempty): keeps the generators supported inside coords, projected down.
// nullopt means the restriction of the model function is identically -inf.
std::optional<NewtonPolyhedron> restrict_to(const NewtonPolyhedron& p,
                                            const std::vector<std::size_t>& coords);

}  // namespace lctlab
