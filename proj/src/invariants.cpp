#include "lctlab/invariants.hpp"

#include "lctlab/detail/dual.hpp"
#include "lctlab/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lctlab {

namespace {

void require_m_primary(const NewtonPolyhedron& p) {
  if (!is_m_primary(p)) throw ValidationError("polyhedron is not m-primary");
}

// c_k must be nondecreasing and the cross-powered mass chain
// e_k^(k+1) <= e_{k+1}^k must hold; both are theorems for these models, so a
// violation is a computation bug.
void check_table(const InvariantTable& t) {
  if (t.e.size() != t.n + 1 || t.e[0] != 1) throw std::logic_error("bad mass vector");
  if (t.n >= 1 && t.e[1] != t.lelong) throw std::logic_error("e_1 != lelong");
  for (std::size_t k = 1; k < t.n; ++k) {
    if (rat_pow(t.e[k], static_cast<unsigned>(k + 1)) >
        rat_pow(t.e[k + 1], static_cast<unsigned>(k))) {
      throw std::logic_error("mass chain e_k^{1/k} is not nondecreasing");
    }
  }
  for (std::size_t i = 1; i < t.ck.size(); ++i) {
    if (t.ck[i].value < t.ck[i - 1].value) {
      throw std::logic_error("restricted thresholds are not nondecreasing");
    }
  }
  if (!t.ck.empty() && !t.c.infinite && t.c.value < t.ck.back().value) {
    throw std::logic_error("c_n below c_{n-1}");
  }
}

}  // namespace

Rat lct(const NewtonPolyhedron& p) {
  require_m_primary(p);
  const auto& verts = p.vertices();
  const std::size_t m = verts.size();
  const std::size_t n = p.dim();
  // Variables: lambda_1..lambda_m, s. Minimize s subject to
  // sum_i lambda_i v_i[j] <= s and sum lambda = 1.
  lp::Problem prob;
  prob.num_vars = m + 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> row(m + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = verts[i][j];
    row[m] = -1;
    prob.rows.push_back(std::move(row));
    prob.rhs.emplace_back(0);
    prob.rel.push_back(lp::Rel::Le);
  }
  std::vector<Rat> eq(m + 1, Rat(1));
  eq[m] = 0;
  prob.rows.push_back(std::move(eq));
  prob.rhs.emplace_back(1);
  prob.rel.push_back(lp::Rel::Eq);
  prob.cost.assign(m + 1, Rat(0));
  prob.cost[m] = 1;
  const auto sol = lp::solve(prob);
  if (sol.status != lp::Status::Optimal || sol.objective <= 0) {
    throw std::logic_error("threshold LP failed");
  }
  return 1 / sol.objective;
}

Rat lct_dual(const NewtonPolyhedron& p) {
  require_m_primary(p);
  const auto duals = detail::dual_vertices(p);
  if (duals.empty()) throw std::logic_error("dual enumeration found no vertices");
  bool have = false;
  Rat best;
  for (const auto& u : duals) {
    Rat total(0);
    for (const auto& c : u) total += c;
    if (!have || total < best) {
      best = total;
      have = true;
    }
  }
  return best;
}

Rat lelong_number(const NewtonPolyhedron& p) {
  bool have = false;
  Rat best;
  for (const auto& v : p.vertices()) {
    Rat total(0);
    for (const auto& c : v) total += c;
    if (!have || total < best) {
      best = total;
      have = true;
    }
  }
  return best;
}

namespace {

class MixedCovolumes {
 public:
  explicit MixedCovolumes(const NewtonPolyhedron& p)
      : p_(p), corner_(unit_corner(p.dim())) {}

  const Rat& covol(unsigned i, unsigned j) {
    const auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    NewtonPolyhedron sum =
        (i == 0) ? dilate(corner_, Rat(j))
                 : (j == 0 ? dilate(p_, Rat(i))
                           : minkowski_sum(dilate(p_, Rat(i)), dilate(corner_, Rat(j))));
    Covolume cv = covolume(sum);
    if (!cv.bounded) throw std::logic_error("Minkowski sum lost m-primality");
    return cache_.emplace(key, std::move(cv.value)).first->second;
  }

  Rat mass(std::size_t k) {
    const std::size_t n = p_.dim();
    Rat out(0);
    for (unsigned i = 0; i <= k; ++i) {
      for (unsigned j = 0; j <= n - k; ++j) {
        if (i == 0 && j == 0) continue;
        Rat term = rat_binomial(static_cast<unsigned>(k), i) *
                   rat_binomial(static_cast<unsigned>(n - k), j) * covol(i, j);
        if ((n - i - j) % 2 == 1) term = -term;
        out += term;
      }
    }
    return out;
  }

 private:
  const NewtonPolyhedron& p_;
  NewtonPolyhedron corner_;
  std::map<std::pair<unsigned, unsigned>, Rat> cache_;
};

}  // namespace

Rat ma_mass(const NewtonPolyhedron& p, std::size_t k) {
  const std::size_t n = p.dim();
  if (k > n) throw std::invalid_argument("mass index out of range");
  require_m_primary(p);
  return MixedCovolumes(p).mass(k);
}

std::vector<Rat> ma_masses(const NewtonPolyhedron& p) {
  require_m_primary(p);
  MixedCovolumes mixed(p);
  std::vector<Rat> out;
  out.reserve(p.dim() + 1);
  for (std::size_t k = 0; k <= p.dim(); ++k) out.push_back(mixed.mass(k));
  return out;
}

CkEntry restricted_lct(const SingularityModel& m, std::size_t k) {
  const std::size_t n = model_dim(m);
  if (k < 1 || k >= n) throw std::invalid_argument("restricted threshold index out of range");

  if (const auto* ideal = std::get_if<MonomialIdeal>(&m)) {
    if (k == 1) {
      // A generic line turns every monomial z^alpha into t^{|alpha|_1}; the
      // restricted ideal is (t^nu), which beats every coordinate axis.
      return CkEntry{1 / lelong_number(ideal->poly()), true};
    }
    // Certified lower bound: best coordinate k-subset, then a running max
    // with the exact c_1 so the reported sequence stays monotone.
    const std::size_t dim = ideal->poly().dim();
    Rat best = 1 / lelong_number(ideal->poly());
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (auto sub = restrict_to(ideal->poly(), idx)) {
        best = std::max(best, lct(*sub));
      }
      std::size_t i = k;
      bool done = true;
      while (i > 0) {
        --i;
        if (idx[i] + (k - i) <= dim - 1) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    return CkEntry{best, false};
  }

  const Weights& w = std::visit(
      [](const auto& alt) -> const Weights& {
        using T = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<T, MonomialIdeal>) {
          throw std::logic_error("unreachable");
        } else {
          return alt.weights;
        }
      },
      m);
  Rat sum(0);
  for (std::size_t j = 0; j < k; ++j) sum += 1 / w[j];
  return CkEntry{sum, true};
}

InvariantTable weighted_invariants(const Weights& w) {
  const std::size_t n = w.size();
  InvariantTable t;
  t.n = n;
  Rat c(0);
  for (std::size_t j = 0; j < n; ++j) c += 1 / w[j];
  t.c = ExtRat::of(c);
  Rat partial(0);
  for (std::size_t k = 1; k < n; ++k) {
    partial += 1 / w[k - 1];
    t.ck.push_back(CkEntry{partial, true});
  }
  t.e.assign(n + 1, Rat(1));
  for (std::size_t k = 1; k <= n; ++k) t.e[k] = t.e[k - 1] * w[k - 1];
  t.lelong = t.e[1];
  check_table(t);
  return t;
}

InvariantTable invariant_table(const SingularityModel& m) {
  if (const auto* wm = std::get_if<WeightedMonomial>(&m)) {
    return weighted_invariants(wm->weights);
  }
  if (const auto* tw = std::get_if<TruncatedWeighted>(&m)) {
    // The truncated germ is bounded near 0; the table reports the invariants
    // of the untruncated germ with a marker, per the model's contract.
    InvariantTable t = weighted_invariants(tw->weights);
    t.truncated = true;
    return t;
  }
  const auto& ideal = std::get<MonomialIdeal>(m);
  const NewtonPolyhedron& p = ideal.poly();
  InvariantTable t;
  t.n = p.dim();
  t.c = ExtRat::of(lct(p));
  for (std::size_t k = 1; k < t.n; ++k) t.ck.push_back(restricted_lct(m, k));
  t.e = ma_masses(p);
  t.lelong = lelong_number(p);
  check_table(t);
  return t;
}

}  // namespace lctlab
