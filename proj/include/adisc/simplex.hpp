#pragma once

#include <optional>
#include <vector>

#include "adisc/matrix.hpp"

namespace adisc {

enum class Rel { LE, EQ, GE };

struct Constraint {
  QVec coeff;
  Rel rel;
  Rat rhs;
};

struct LpSolution {
  enum Status { kOptimal, kInfeasible, kUnbounded } status;
  QVec x;  // values of the original (free) variables
  Rat objective;
};

namespace detail {

// Primal simplex on min c.x s.t. Ax = b, x >= 0, with Bland's rule.
// Exact rational arithmetic throughout; terminates by Bland anti-cycling.
class SimplexTableau {
 public:
  SimplexTableau(QMat a, QVec b) : t_(std::move(a)), rhs_(std::move(b)) {}

  // phase I: returns true if a feasible basis was found
  bool phase1() {
    size_t m = t_.rows(), n = t_.cols();
    for (size_t i = 0; i < m; ++i) {
      if (rhs_[i].sign() < 0) {
        for (size_t j = 0; j < n; ++j) t_.at(i, j) = -t_.at(i, j);
        rhs_[i] = -rhs_[i];
      }
    }
    QMat aug(m, n + m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) aug.at(i, j) = t_.at(i, j);
      aug.at(i, n + i) = Rat(1);
    }
    t_ = std::move(aug);
    basis_.resize(m);
    for (size_t i = 0; i < m; ++i) basis_[i] = n + i;
    QVec cost(n + m);
    for (size_t i = 0; i < m; ++i) cost[n + i] = Rat(1);
    run(cost);
    if (objective_.sign() != 0) return false;
    // drive leftover artificials out of the basis
    for (size_t i = 0; i < t_.rows(); ++i) {
      if (basis_[i] < n) continue;
      size_t j = 0;
      for (; j < n; ++j)
        if (!t_.at(i, j).is_zero()) break;
      if (j < n) {
        pivot(i, j);
      } else {
        drop_row(i);
        --i;
      }
    }
    // drop artificial columns
    QMat trimmed(t_.rows(), n);
    for (size_t i = 0; i < t_.rows(); ++i)
      for (size_t j = 0; j < n; ++j) trimmed.at(i, j) = t_.at(i, j);
    t_ = std::move(trimmed);
    return true;
  }

  // phase II on the original cost; call after a successful phase1
  LpSolution::Status phase2(const QVec& cost) { return run(cost); }

  QVec solution(size_t n) const {
    QVec x(n);
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n) x[basis_[i]] = rhs_[i];
    return x;
  }

  const Rat& objective() const { return objective_; }

 private:
  QMat t_;
  QVec rhs_;
  std::vector<size_t> basis_;
  QVec reduced_;
  Rat objective_;

  LpSolution::Status run(const QVec& cost) {
    size_t m = t_.rows(), n = t_.cols();
    reduced_ = cost;
    objective_ = Rat(0);
    for (size_t i = 0; i < m; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      objective_ += cb * rhs_[i];
      for (size_t j = 0; j < n; ++j) reduced_[j] -= cb * t_.at(i, j);
    }
    for (;;) {
      size_t enter = n;
      for (size_t j = 0; j < n; ++j)
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      if (enter == n) return LpSolution::kOptimal;
      size_t leave = m;
      Rat best;
      for (size_t i = 0; i < m; ++i) {
        if (t_.at(i, enter).sign() <= 0) continue;
        Rat ratio = rhs_[i] / t_.at(i, enter);
        if (leave == m || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return LpSolution::kUnbounded;
      pivot(leave, enter);
    }
  }

  void pivot(size_t r, size_t c) {
    size_t m = t_.rows(), n = t_.cols();
    Rat inv = Rat(1) / t_.at(r, c);
    for (size_t j = 0; j < n; ++j) t_.at(r, j) *= inv;
    rhs_[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || t_.at(i, c).is_zero()) continue;
      Rat f = t_.at(i, c);
      for (size_t j = 0; j < n; ++j) t_.at(i, j) -= f * t_.at(r, j);
      rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && !reduced_[c].is_zero()) {
      Rat f = reduced_[c];
      for (size_t j = 0; j < n; ++j) reduced_[j] -= f * t_.at(r, j);
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drop_row(size_t r) {
    QMat nt(t_.rows() - 1, t_.cols());
    QVec nb;
    std::vector<size_t> nbasis;
    size_t ri = 0;
    for (size_t i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (size_t j = 0; j < t_.cols(); ++j) nt.at(ri, j) = t_.at(i, j);
      nb.push_back(rhs_[i]);
      nbasis.push_back(basis_[i]);
      ++ri;
    }
    t_ = std::move(nt);
    rhs_ = std::move(nb);
    basis_ = std::move(nbasis);
  }
};

}  // namespace detail

// min obj.x over { x in R^nvars : constraints }, variables free (split
// internally into x = u - v with u, v >= 0, slacks per inequality).
inline LpSolution lp_solve(size_t nvars, const std::vector<Constraint>& cons,
                           const QVec& obj) {
  size_t m = cons.size();
  size_t nslack = 0;
  for (const Constraint& c : cons)
    if (c.rel != Rel::EQ) ++nslack;
  size_t ncols = 2 * nvars + nslack;
  QMat a(m, ncols);
  QVec b(m);
  size_t s = 0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < nvars; ++j) {
      a.at(i, j) = cons[i].coeff[j];
      a.at(i, nvars + j) = -cons[i].coeff[j];
    }
    if (cons[i].rel == Rel::GE)
      a.at(i, 2 * nvars + s++) = Rat(-1);
    else if (cons[i].rel == Rel::LE)
      a.at(i, 2 * nvars + s++) = Rat(1);
    b[i] = cons[i].rhs;
  }
  detail::SimplexTableau tab(std::move(a), std::move(b));
  LpSolution out;
  if (!tab.phase1()) {
    out.status = LpSolution::kInfeasible;
    return out;
  }
  QVec cost(ncols);
  for (size_t j = 0; j < nvars; ++j) {
    cost[j] = obj[j];
    cost[nvars + j] = -obj[j];
  }
  out.status = tab.phase2(cost);
  if (out.status == LpSolution::kOptimal) {
    QVec split = tab.solution(2 * nvars);
    out.x.resize(nvars);
    for (size_t j = 0; j < nvars; ++j) out.x[j] = split[j] - split[nvars + j];
    out.objective = tab.objective();
  }
  return out;
}

inline std::optional<QVec> lp_feasible(size_t nvars, const std::vector<Constraint>& cons) {
  LpSolution sol = lp_solve(nvars, cons, QVec(nvars));
  if (sol.status != LpSolution::kOptimal) return std::nullopt;
  return sol.x;
}

}  // namespace adisc
