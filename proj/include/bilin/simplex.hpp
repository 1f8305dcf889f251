#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bilin/errors.hpp"

namespace bilin {

template <typename Scalar>
struct LpSolution {
  Scalar objective{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;  // full primal vector
  std::vector<Eigen::Index> basis;
  int iterations = 0;
};

/// Primal simplex for  min c'x  s.t.  A x = b,  x >= 0,  started from a
/// caller-supplied feasible basis. Entering and leaving variables follow
/// Bland's smallest-index rule, so degenerate pivots cannot cycle. The basis
/// inverse is kept explicitly and refactorized periodically; this is meant
/// for a handful of rows and many columns.
template <typename Scalar>
class DenseSimplex {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  DenseSimplex(Matrix a, Vector b, Scalar tolerance = Scalar(1e-9))
      : a_(std::move(a)), b_(std::move(b)), tol_(tolerance) {
    if (a_.rows() != b_.size()) throw InputError("LP row count mismatch");
  }

  LpSolution<Scalar> minimize(const Vector& c, std::vector<Eigen::Index> basis) const {
    const Eigen::Index m = a_.rows();
    if (c.size() != a_.cols()) throw InputError("LP cost length mismatch");
    if (static_cast<Eigen::Index>(basis.size()) != m) throw InputError("LP basis size mismatch");

    Matrix binv = invert_basis(basis);
    Vector xb = binv * b_;
    if ((xb.array() < -tol_).any()) throw InvariantError("simplex: starting basis is infeasible");

    std::vector<char> is_basic(static_cast<std::size_t>(a_.cols()), 0);
    for (auto j : basis) is_basic[static_cast<std::size_t>(j)] = 1;

    int iter = 0;
    for (;; ++iter) {
      if (iter >= kMaxIterations) throw InvariantError("simplex: iteration limit reached");
      if (iter > 0 && iter % kRefactorEvery == 0) {
        binv = invert_basis(basis);
        xb = binv * b_;
      }

      Vector cb(m);
      for (Eigen::Index r = 0; r < m; ++r) cb(r) = c(basis[static_cast<std::size_t>(r)]);
      const Vector duals = binv.transpose() * cb;
      const Vector reduced = c - a_.transpose() * duals;

      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < a_.cols(); ++j) {
        if (!is_basic[static_cast<std::size_t>(j)] && reduced(j) < -tol_) {
          entering = j;
          break;
        }
      }
      if (entering < 0) break;

      const Vector dir = binv * a_.col(entering);
      Eigen::Index leave_row = -1;
      Scalar best = std::numeric_limits<Scalar>::infinity();
      for (Eigen::Index r = 0; r < m; ++r) {
        if (dir(r) <= tol_) continue;
        const Scalar ratio = std::max(xb(r), Scalar(0)) / dir(r);
        bool take = leave_row < 0 || ratio < best - tol_;
        if (!take && std::abs(ratio - best) <= tol_) {
          take = basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave_row)];
        }
        if (take) {
          best = ratio;
          leave_row = r;
        }
      }
      if (leave_row < 0) throw InvariantError("simplex: objective unbounded");

      const Scalar pivot = dir(leave_row);
      binv.row(leave_row) /= pivot;
      xb(leave_row) /= pivot;
      for (Eigen::Index r = 0; r < m; ++r) {
        if (r == leave_row || dir(r) == Scalar(0)) continue;
        binv.row(r) -= dir(r) * binv.row(leave_row);
        xb(r) -= dir(r) * xb(leave_row);
      }
      is_basic[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave_row)])] = 0;
      is_basic[static_cast<std::size_t>(entering)] = 1;
      basis[static_cast<std::size_t>(leave_row)] = entering;
    }

    binv = invert_basis(basis);
    xb = binv * b_;
    LpSolution<Scalar> out;
    out.x = Vector::Zero(a_.cols());
    for (Eigen::Index r = 0; r < m; ++r) {
      out.x(basis[static_cast<std::size_t>(r)]) = std::max(xb(r), Scalar(0));
    }
    out.objective = c.dot(out.x);
    out.basis = std::move(basis);
    out.iterations = iter;
    return out;
  }

  LpSolution<Scalar> maximize(const Vector& c, std::vector<Eigen::Index> basis) const {
    auto sol = minimize(-c, std::move(basis));
    sol.objective = -sol.objective;
    return sol;
  }

 private:
  static constexpr int kMaxIterations = 1'000'000;
  static constexpr int kRefactorEvery = 64;

  Matrix invert_basis(const std::vector<Eigen::Index>& basis) const {
    const Eigen::Index m = a_.rows();
    Matrix bm(m, m);
    for (Eigen::Index r = 0; r < m; ++r) bm.col(r) = a_.col(basis[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Matrix> lu(bm);
    if (!lu.isInvertible()) throw InvariantError("simplex: basis matrix is singular");
    return lu.inverse();
  }

  Matrix a_;
  Vector b_;
  Scalar tol_;
};

}  // namespace bilin
