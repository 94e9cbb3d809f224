#include "lctlab/lp.hpp"

#include <cassert>
#include <limits>

namespace lctlab::lp {

namespace {

constexpr std::size_t kNoCol = std::numeric_limits<std::size_t>::max();

// Dense tableau. Column layout: structural vars, then slack/surplus, then
// artificials; the rhs is kept separately. basis_[r] is the variable basic in
// row r. The objective row holds reduced costs; obj_rhs_ the negated value.
class Tableau {
 public:
  Tableau(const Problem& p) {
    const std::size_t m = p.rows.size();
    n_struct_ = p.num_vars;
    // Count slack columns.
    std::size_t n_slack = 0;
    for (Rel r : p.rel) {
      if (r != Rel::Eq) ++n_slack;
    }
    first_art_ = n_struct_ + n_slack;
    cols_ = first_art_;  // artificials appended on demand
    rows_.assign(m, std::vector<Rat>());
    rhs_.assign(m, Rat(0));
    basis_.assign(m, kNoCol);

    std::size_t slack_at = n_struct_;
    std::vector<Rat> slack_sign(m, Rat(0));
    std::vector<std::size_t> slack_col(m, kNoCol);
    for (std::size_t i = 0; i < m; ++i) {
      rows_[i].assign(first_art_, Rat(0));
      for (std::size_t j = 0; j < n_struct_; ++j) rows_[i][j] = p.rows[i][j];
      rhs_[i] = p.rhs[i];
      Rel rel = p.rel[i];
      if (rel != Rel::Eq) {
        slack_col[i] = slack_at;
        slack_sign[i] = (rel == Rel::Le) ? Rat(1) : Rat(-1);
        rows_[i][slack_at] = slack_sign[i];
        ++slack_at;
      }
      // Normalize to nonnegative rhs.
      if (rhs_[i] < 0) {
        for (auto& v : rows_[i]) v = -v;
        rhs_[i] = -rhs_[i];
        if (slack_col[i] != kNoCol) slack_sign[i] = -slack_sign[i];
      }
      // A +1 slack with rhs >= 0 can start basic; otherwise an artificial.
      if (slack_col[i] != kNoCol && slack_sign[i] == 1) {
        basis_[i] = slack_col[i];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] != kNoCol) continue;
      for (auto& row : rows_) row.push_back(Rat(0));
      rows_[i][cols_] = 1;
      basis_[i] = cols_;
      ++cols_;
    }
  }

  // Phase 1: minimize the sum of artificials. Returns true when feasible.
  bool phase1() {
    obj_.assign(cols_, Rat(0));
    obj_rhs_ = 0;
    for (std::size_t j = first_art_; j < cols_; ++j) obj_[j] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] >= first_art_) price_out(i);
    }
    const bool ok = iterate(first_art_);
    assert(ok);  // phase-1 objective is bounded below by zero
    (void)ok;
    if (obj_rhs_ != 0) return false;
    purge_artificials();
    return true;
  }

  // Phase 2 with the real objective. Returns false on unbounded.
  bool phase2(const std::vector<Rat>& cost) {
    obj_.assign(cols_, Rat(0));
    obj_rhs_ = 0;
    for (std::size_t j = 0; j < cost.size() && j < n_struct_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (obj_[basis_[i]] != 0) price_out(i);
    }
    return iterate(first_art_);
  }

  std::vector<Rat> primal(std::size_t n) const {
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  void price_out(std::size_t row) {
    const Rat factor = obj_[basis_[row]];
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (rows_[row][j] != 0) obj_[j] -= factor * rows_[row][j];
    }
    obj_rhs_ -= factor * rhs_[row];
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = 1 / rows_[row][col];
    if (inv != 1) {
      for (auto& v : rows_[row]) {
        if (v != 0) v *= inv;
      }
      rhs_[row] *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rat f = rows_[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    const Rat f = obj_[col];
    if (f != 0) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[row][j] != 0) obj_[j] -= f * rows_[row][j];
      }
      obj_rhs_ -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // Bland's rule throughout: entering = lowest eligible column, leaving =
  // lowest basic variable among minimum ratios.
  bool iterate(std::size_t col_limit) {
    for (;;) {
      std::size_t enter = kNoCol;
      for (std::size_t j = 0; j < col_limit; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNoCol) return true;
      std::size_t leave = kNoCol;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == kNoCol || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNoCol) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  // After a zero-optimum phase 1, pivot leftover artificials out of the
  // basis; rows that cannot pivot are redundant and get dropped.
  void purge_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_art_) {
        ++i;
        continue;
      }
      std::size_t col = kNoCol;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col != kNoCol) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    // Artificial columns stay allocated but can never re-enter: iterate()
    // only considers columns below first_art_.
  }

  std::size_t n_struct_ = 0;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<Rat> obj_;
  Rat obj_rhs_{};
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& p) {
  assert(p.rows.size() == p.rhs.size() && p.rows.size() == p.rel.size());
  Tableau t(p);
  Solution out;
  if (!t.phase1()) {
    out.status = Status::Infeasible;
    return out;
  }
  if (!p.cost.empty() && !t.phase2(p.cost)) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.x = t.primal(p.num_vars);
  out.objective = 0;
  for (std::size_t j = 0; j < p.cost.size() && j < p.num_vars; ++j) {
    out.objective += p.cost[j] * out.x[j];
  }
  return out;
}

bool feasible(const Problem& p) {
  Problem q = p;
  q.cost.clear();
  return solve(q).status == Status::Optimal;
}

}  // namespace lctlab::lp
