#include "lctlab/model.hpp"

#include <algorithm>

namespace lctlab {

Weights::Weights(std::vector<Rat> raw) : sorted_(std::move(raw)) {
  if (sorted_.empty()) throw ValidationError("weight vector is empty");
  for (const auto& w : sorted_) {
    if (w <= 0) throw ValidationError("weights must be strictly positive");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

MonomialIdeal::MonomialIdeal(NewtonPolyhedron poly) : poly_(std::move(poly)) {
  if (!is_m_primary(poly_)) {
    throw ValidationError("monomial ideal is not m-primary (unbounded covolume)");
  }
  for (const auto& v : poly_.vertices()) {
    bool zero = true;
    for (const auto& c : v) {
      if (c != 0) {
        zero = false;
        break;
      }
    }
    if (zero) throw ValidationError("monomial ideal contains the unit (origin generator)");
  }
}

std::size_t model_dim(const SingularityModel& m) {
  return std::visit(
      [](const auto& alt) -> std::size_t {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, MonomialIdeal>) {
          return alt.poly().dim();
        } else {
          return alt.weights.size();
        }
      },
      m);
}

NewtonPolyhedron axis_polyhedron(const Weights& w) {
  const std::size_t n = w.size();
  std::vector<ExponentVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    ExponentVector v(n, Rat(0));
    v[j] = w[j];
    gens.push_back(std::move(v));
  }
  return NewtonPolyhedron::from_generators(gens);
}

}  // namespace lctlab
