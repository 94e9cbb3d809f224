#pragma once

// The computable model classes: weighted-monomial germs max_j a_j log|z_j|,
// m-primary monomial ideals (1/2) log sum |z^alpha|^2, and weighted germs
// truncated at -M. Construction validates, so downstream code can assume a
// well-formed model.

#include "lctlab/errors.hpp"
#include "lctlab/newton_poly.hpp"
#include "lctlab/rational.hpp"

#include <variant>
#include <vector>

namespace lctlab {

// Positive weights kept in canonical ascending order.
class Weights {
 public:
  explicit Weights(std::vector<Rat> raw);

  std::size_t size() const { return sorted_.size(); }
  const Rat& operator[](std::size_t i) const { return sorted_[i]; }
  const std::vector<Rat>& ascending() const { return sorted_; }

  bool operator==(const Weights&) const = default;

 private:
  std::vector<Rat> sorted_;
};

struct WeightedMonomial {
  Weights weights;
};

struct TruncatedWeighted {
  Weights weights;
  Rat truncation;  // M > 0; the model is max(max_j a_j log|z_j|, -M)
};

class MonomialIdeal {
 public:
  // Requires an m-primary polyhedron whose vertices avoid the origin.
  explicit MonomialIdeal(NewtonPolyhedron poly);

  const NewtonPolyhedron& poly() const { return poly_; }
  bool operator==(const MonomialIdeal&) const = default;

 private:
  NewtonPolyhedron poly_;
};

using SingularityModel = std::variant<WeightedMonomial, MonomialIdeal, TruncatedWeighted>;

std::size_t model_dim(const SingularityModel& m);

// Axis-vertex polyhedron {a_j e_j} of a weight vector; the polyhedral twin of
// the weighted model used by the cross-check suite.
NewtonPolyhedron axis_polyhedron(const Weights& w);

}  // namespace lctlab
