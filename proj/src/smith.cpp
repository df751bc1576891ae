#include "fcpi/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace fcpi {

std::vector<mpz_class> smith_invariant_factors(IntMat m) {
  std::vector<mpz_class> factors;
  if (m.empty() || m[0].empty()) return factors;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());

  int k = 0;
  while (k < rows && k < cols) {
    // Pivot: smallest nonzero magnitude in the active submatrix.
    int pi = -1, pj = -1;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        if (sgn(m[i][j]) == 0) continue;
        if (pi < 0 || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(m[k], m[pi]);
    if (pj != k)
      for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][k]);

    bool clean = true;
    for (int i = k + 1; i < rows; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      mpz_class q = m[i][k] / m[k][k];  // truncated: remainder smaller than pivot
      if (sgn(q) != 0)
        for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
      if (sgn(m[i][k]) != 0) clean = false;
    }
    for (int j = k + 1; j < cols; ++j) {
      if (sgn(m[k][j]) == 0) continue;
      mpz_class q = m[k][j] / m[k][k];
      if (sgn(q) != 0)
        for (int i = 0; i < rows; ++i) m[i][j] -= q * m[i][k];
      if (sgn(m[k][j]) != 0) clean = false;
    }
    if (!clean) continue;  // smaller residues appeared; re-pick the pivot

    // The pivot must divide the rest of the submatrix.
    bool divides = true;
    for (int i = k + 1; i < rows && divides; ++i)
      for (int j = k + 1; j < cols; ++j)
        if (sgn(m[i][j] % m[k][k]) != 0) {
          for (int c = k; c < cols; ++c) m[k][c] += m[i][c];
          divides = false;
          break;
        }
    if (!divides) continue;

    factors.push_back(abs(m[k][k]));
    ++k;
  }
  return factors;
}

}  // namespace fcpi
