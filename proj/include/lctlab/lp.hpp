#pragma once

// Small dense linear programs over exact rationals. Two-phase primal simplex
// with Bland's rule, so it terminates and certifies feasibility exactly even
// on the degenerate programs the polyhedral code produces. Problems here are
// tiny (tens of columns, ~dimension-many rows); no factorization machinery.

#include "lctlab/rational.hpp"

#include <cstddef>
#include <vector>

namespace lctlab::lp {

enum class Rel { Le, Eq, Ge };
enum class Status { Optimal, Infeasible, Unbounded };

// minimize dot(cost, x)  subject to  dot(row[i], x) rel[i] rhs[i],  x >= 0.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<Rel> rel;
  std::vector<Rat> cost;  // empty == all-zero objective (pure feasibility)
};

struct Solution {
  Status status = Status::Infeasible;
  Rat objective{};
  std::vector<Rat> x;
};

Solution solve(const Problem& p);
bool feasible(const Problem& p);

}  // namespace lctlab::lp
