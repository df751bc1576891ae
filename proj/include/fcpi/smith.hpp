#pragma once

#include <gmpxx.h>

#include <vector>

namespace fcpi {

using IntMat = std::vector<std::vector<mpz_class>>;

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix, each
/// positive; the matrix rank equals the number of factors returned.
std::vector<mpz_class> smith_invariant_factors(IntMat m);

inline long long int_matrix_rank(IntMat m) {
  return static_cast<long long>(smith_invariant_factors(std::move(m)).size());
}

}  // namespace fcpi
