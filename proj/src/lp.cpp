#include "fcpi/lp.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace fcpi {
namespace {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

// Dense two-phase simplex over exact rationals, minimization form:
//   min c.y  s.t.  A y = b, y >= 0.
// Bland's rule for both entering and leaving variables, so it terminates.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    m_ = static_cast<int>(a_.size());
    n_ = m_ ? static_cast<int>(a_[0].size()) : static_cast<int>(c_.size());
  }

  SolveStatus solve() {
    for (int i = 0; i < m_; ++i) {
      if (sgn(b_[i]) < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
    }
    // Phase 1: artificial basis, minimize the artificial sum.
    int width = n_ + m_;
    for (int i = 0; i < m_; ++i) {
      a_[i].resize(width, Rat(0));
      a_[i][n_ + i] = 1;
    }
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = n_ + i;

    cost_.assign(width, Rat(0));
    obj_ = 0;  // stores the negated objective value, like a tableau rhs cell
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) cost_[j] -= a_[i][j];
      obj_ -= b_[i];
    }
    if (iterate(width) == SolveStatus::Unbounded)
      throw std::logic_error("phase 1 cannot be unbounded");
    if (sgn(obj_) != 0) return SolveStatus::Infeasible;

    // Drive artificials out of the basis; drop redundant rows.
    for (int i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (sgn(a_[i][j]) != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        pivot(i, enter);
        ++i;
      } else {
        a_.erase(a_.begin() + i);
        b_.erase(b_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
      }
    }
    for (int i = 0; i < m_; ++i) a_[i].resize(n_);

    // Phase 2: restore the real objective as reduced costs.
    cost_.assign(n_, Rat(0));
    for (int j = 0; j < n_; ++j) cost_[j] = c_[j];
    obj_ = 0;
    for (int i = 0; i < m_; ++i) {
      const Rat cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < n_; ++j) cost_[j] -= cb * a_[i][j];
      obj_ -= cb * b_[i];
    }
    return iterate(n_);
  }

  /// Objective value of the optimal solution (phase 2).
  Rat objective() const { return -obj_; }

  std::vector<Rat> solution() const {
    std::vector<Rat> y(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = b_[i];
    return y;
  }

 private:
  SolveStatus iterate(int width) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < width; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return SolveStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rat ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return SolveStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    const Rat p = a_[row][col];
    assert(sgn(p) != 0);
    const int width = static_cast<int>(a_[row].size());
    for (int j = 0; j < width; ++j) a_[row][j] /= p;
    b_[row] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || sgn(a_[i][col]) == 0) continue;
      const Rat f = a_[i][col];
      for (int j = 0; j < width; ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    if (sgn(cost_[col]) != 0) {
      const Rat f = cost_[col];
      for (int j = 0; j < width; ++j) cost_[j] -= f * a_[row][j];
      obj_ -= f * b_[row];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<Rat> c_;
  std::vector<Rat> cost_;
  Rat obj_;  // negative of the current objective value
  std::vector<int> basis_;
  int m_ = 0;
  int n_ = 0;
};

}  // namespace

std::optional<StrictWitness> strict_witness(const StrictSystem& sys) {
  const int n = sys.num_vars;
  int num_strict = 0;
  for (const auto& row : sys.rows)
    if (row.rel == LinearCondition::Rel::Gt) ++num_strict;

  // Columns: x+ (n), x- (n), t+, t-, one surplus per strict row, cap slack.
  const int col_tp = 2 * n;
  const int col_tm = 2 * n + 1;
  const int col_u0 = 2 * n + 2;
  const int width = col_u0 + num_strict + 1;
  const int col_v = width - 1;

  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  a.reserve(sys.rows.size() + 1);
  int next_u = col_u0;
  for (const auto& row : sys.rows) {
    assert(static_cast<int>(row.coeff.size()) == n);
    std::vector<Rat> r(width, Rat(0));
    for (int i = 0; i < n; ++i) {
      r[i] = row.coeff[i];
      r[n + i] = -row.coeff[i];
    }
    if (row.rel == LinearCondition::Rel::Gt) {
      r[col_tp] = -1;
      r[col_tm] = 1;
      r[next_u++] = -1;
    }
    a.push_back(std::move(r));
    b.push_back(row.rhs);
  }
  {
    std::vector<Rat> cap(width, Rat(0));
    cap[col_tp] = 1;
    cap[col_tm] = -1;
    cap[col_v] = 1;
    a.push_back(std::move(cap));
    b.emplace_back(1);
  }

  std::vector<Rat> c(width, Rat(0));
  c[col_tp] = -1;  // maximize t  ==  minimize -t
  c[col_tm] = 1;

  Simplex lp(std::move(a), std::move(b), std::move(c));
  switch (lp.solve()) {
    case SolveStatus::Infeasible:
      return std::nullopt;
    case SolveStatus::Unbounded:
      throw std::logic_error("slack LP is capped and cannot be unbounded");
    case SolveStatus::Optimal:
      break;
  }
  const Rat t = -lp.objective();  // the LP minimizes -t
  if (sgn(t) <= 0) return std::nullopt;
  const auto y = lp.solution();
  StrictWitness w;
  w.slack = t;
  w.point.resize(n);
  for (int i = 0; i < n; ++i) w.point[i] = y[i] - y[n + i];
  return w;
}

}  // namespace fcpi
