#pragma once

#include <gmpxx.h>

#include <vector>

#include "phecke/polyq.hpp"

namespace phecke {

// Rank of a dense rational matrix by Gaussian elimination.
int rational_rank(std::vector<std::vector<mpq_class>> m);

// Rank of a Z[q] matrix after specializing q to a rational value.
int rank_at(const std::vector<std::vector<PolyQ>>& m, const mpq_class& q_value);

// Solves A x = rhs over the rationals for square nonsingular A; returns the
// exact solution vector.  Throws std::invalid_argument when A is singular.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> a,
                                      std::vector<mpq_class> rhs);

}  // namespace phecke
