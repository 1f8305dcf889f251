#include <doctest.h>

#include "bilin/simplex.hpp"

using bilin::DenseSimplex;

TEST_CASE("small LP with slack basis") {
  // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6  (slacks s1, s2)
  Eigen::MatrixXd a(2, 4);
  a << 1, 1, 1, 0,
       1, 3, 0, 1;
  Eigen::VectorXd b(2);
  b << 4, 6;
  Eigen::VectorXd c(4);
  c << 3, 2, 0, 0;
  const DenseSimplex<double> lp(a, b);
  const auto sol = lp.maximize(c, {2, 3});
  CHECK(sol.objective == doctest::Approx(12.0));
  CHECK(sol.x(0) == doctest::Approx(4.0));
  CHECK(sol.x(1) == doctest::Approx(0.0));
}

TEST_CASE("Beale's degenerate example terminates under Bland's rule") {
  Eigen::MatrixXd a(3, 7);
  a << 1, 0, 0, 0.25, -8, -1, 9,
       0, 1, 0, 0.5, -12, -0.5, 3,
       0, 0, 1, 0, 0, 1, 0;
  Eigen::VectorXd b(3);
  b << 0, 0, 1;
  Eigen::VectorXd c(7);
  c << 0, 0, 0, -0.75, 20, -0.5, 6;
  const DenseSimplex<double> lp(a, b);
  const auto sol = lp.minimize(c, {0, 1, 2});
  CHECK(sol.objective == doctest::Approx(-1.25));
  CHECK((a * sol.x - b).norm() < 1e-9);
  CHECK((sol.x.array() >= 0).all());
}

TEST_CASE("scalar type is a template parameter") {
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> a(1, 3);
  a << 1, 1, 1;
  Eigen::Matrix<long double, Eigen::Dynamic, 1> b(1), c(3);
  b << 1;
  c << 3, 1, 2;
  const DenseSimplex<long double> lp(a, b, 1e-12L);
  CHECK(static_cast<double>(lp.minimize(c, {0}).objective) == doctest::Approx(1.0));
  CHECK(static_cast<double>(lp.maximize(c, {1}).objective) == doctest::Approx(3.0));
}

TEST_CASE("bad inputs") {
  Eigen::MatrixXd a(1, 2);
  a << 1, 1;
  Eigen::VectorXd b(1);
  b << 1;
  const DenseSimplex<double> lp(a, b);
  Eigen::VectorXd c(2);
  c << 1, 2;
  CHECK_THROWS_AS(lp.minimize(c, {0, 1}), bilin::InputError);
  CHECK_THROWS_AS(lp.minimize(Eigen::VectorXd::Zero(3), {0}), bilin::InputError);

  Eigen::VectorXd neg(1);
  neg << -1;
  const DenseSimplex<double> infeasible(a, neg);
  CHECK_THROWS_AS(infeasible.minimize(c, {0}), bilin::InvariantError);

  // min -x  s.t. x - y = 0 is unbounded.
  Eigen::MatrixXd u(1, 2);
  u << 1, -1;
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
  const DenseSimplex<double> unbounded(u, zero);
  Eigen::VectorXd cu(2);
  cu << -1, 0;
  CHECK_THROWS_AS(unbounded.minimize(cu, {0}), bilin::InvariantError);
}
