#include <cmath>

#include "doctest.h"
#include "hitchinlab/io.hpp"
#include "hitchinlab/toeplitz_cp1.hpp"

using namespace hitchinlab;

namespace {

// Beta-integral oracle for diagonal entries of T_f with f a radial function
// sum c u^p (1+u)^{-q}:
//   (T_f)_aa = binom(k,a) (k+1) sum c B(a+p+1, k+q+1-a-p)
double beta_diagonal_oracle(const SphereFunction& f, int k, int a) {
  double binom = 1.0;
  for (int i = 0; i < a; ++i) binom = binom * (k - i) / (i + 1);
  double total = 0.0;
  for (const auto& term : f.terms()) {
    REQUIRE(term.s == term.t);  // radial only
    const int p = term.s;
    const double x = a + p + 1.0;
    const double y = k + term.q + 1.0 - a - p;
    REQUIRE(y > 0.0);
    const double beta =
        std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
    total += term.coeff.real() * beta;
  }
  return binom * (k + 1) * total;
}

}  // namespace

TEST_CASE("sphere functions") {
  const SphereFunction x3 = registry_function("x3", -1);
  CHECK(std::abs(x3(complexd(0, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(x3(complexd(1, 0)) - 0.0) < 1e-15);
  CHECK(x3.is_real());
  CHECK(x3.max_angular_frequency() == 0);

  const SphereFunction x1 = registry_function("x1", -1);
  const SphereFunction x2 = registry_function("x2", -1);
  CHECK(x1.is_real());
  CHECK(x2.is_real());
  CHECK(x1.max_angular_frequency() == 1);
  // coordinates of the unit sphere: x1^2 + x2^2 + x3^2 = 1
  for (complexd z : {complexd(0.3, 0.2), complexd(-1.5, 0.7), complexd(0, 2)}) {
    const complexd s = x1(z) * x1(z) + x2(z) * x2(z) + x3(z) * x3(z);
    CHECK(std::abs(s - 1.0) < 1e-13);
  }

  CHECK_THROWS_AS(registry_function("nope", 4), validation_error);
  CHECK_THROWS_AS(SphereFunction({{1.0, 3, 0, 1}}), validation_error);  // unbounded

  // JSON form evaluates like the registry entry
  const SphereFunction parsed = sphere_function_from_json_text(
      R"({"terms":[{"re":1,"s":0,"t":0,"q":1},{"re":-1,"s":1,"t":1,"q":1}]})");
  for (complexd z : {complexd(0.1, -0.4), complexd(2, 1)})
    CHECK(std::abs(parsed(z) - x3(z)) < 1e-15);
}

TEST_CASE("fock basis") {
  const FockBasis basis(4);
  CHECK(basis.norm_squared[0] == doctest::Approx(1.0));
  CHECK(basis.norm_squared[1] == doctest::Approx(0.25));
  CHECK(basis.norm_squared[2] == doctest::Approx(1.0 / 6));
  CHECK(basis.norm_squared[4] == doctest::Approx(1.0));
}

TEST_CASE("toeplitz of the constant is the identity") {
  for (int k : {1, 5, 12}) {
    const FockBasis basis(k);
    const Eigen::MatrixXcd t = toeplitz_matrix(registry_function("one", k), basis);
    CHECK((t - Eigen::MatrixXcd::Identity(k + 1, k + 1)).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("height function diagonal") {
  const SphereFunction x3 = registry_function("x3", -1);
  for (int k : {2, 5, 16}) {
    const FockBasis basis(k);
    const Eigen::MatrixXcd t = toeplitz_matrix(x3, basis);
    for (int a = 0; a <= k; ++a) {
      const double closed_form = static_cast<double>(k - 2 * a) / (k + 2);
      CHECK(std::abs(t(a, a) - complexd(closed_form, 0)) < 1e-10);
      CHECK(std::abs(beta_diagonal_oracle(x3, k, a) - closed_form) < 1e-12);
    }
    Eigen::MatrixXcd off = t;
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() < 1e-12);
  }
  // middle entry vanishes at k = 2
  const Eigen::MatrixXcd t2 = toeplitz_matrix(x3, FockBasis(2));
  CHECK(std::abs(t2(1, 1)) < 1e-12);
}

TEST_CASE("hermiticity, positivity, contraction") {
  const FockBasis basis(7);
  for (const char* name : {"x1", "x2", "x3"}) {
    const SphereFunction f = registry_function(name, -1);
    const Eigen::MatrixXcd t = toeplitz_matrix(f, basis);
    CHECK((t - t.adjoint()).norm() < 1e-10);
    CHECK(operator_norm(t) <= 1.0 + 1e-9);  // |x_i| <= 1 on the sphere
  }

  // T of the conjugate is the adjoint
  const SphereFunction mode = registry_function("highmode", 3);
  const FockBasis b5(5);
  const Eigen::MatrixXcd tm = toeplitz_matrix(mode, b5);
  const Eigen::MatrixXcd tmc = toeplitz_matrix(mode.conjugated(), b5);
  CHECK((tmc - tm.adjoint()).norm() < 1e-10);

  // nonnegative function: spectrum bounded below by -1e-9
  std::vector<SphereFunctionTerm> terms = registry_function("x3", -1).terms();
  terms.push_back({1.0, 0, 0, 0});
  const SphereFunction nonneg{terms};
  const Eigen::MatrixXcd tp = toeplitz_matrix(nonneg, basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(tp);
  CHECK(es.eigenvalues()(0) > -1e-9);
  CHECK(operator_norm(tp) <= 2.0 + 1e-9);
}

TEST_CASE("multiplicativity decay") {
  const SphereFunction one = registry_function("one", -1);
  const SphereFunction x1 = registry_function("x1", -1);
  const SphereFunction x2 = registry_function("x2", -1);
  const SphereFunction x3 = registry_function("x3", -1);

  const DecayReport trivial = multiplicativity_decay(one, x3, {2, 4, 8});
  for (double d : trivial.defects) CHECK(d < 1e-10);

  const DecayReport report = multiplicativity_decay(x3, x3, {4, 8, 16, 32, 64});
  for (std::size_t i = 0; i + 1 < report.defects.size(); ++i)
    CHECK(report.defects[i + 1] < report.defects[i]);
  CHECK(report.slope > -1.3);
  CHECK(report.slope < -0.7);

  // non-commutativity witness at k = 4
  const FockBasis b4(4);
  const Eigen::MatrixXcd t1 = toeplitz_matrix(x1, b4);
  const Eigen::MatrixXcd t2m = toeplitz_matrix(x2, b4);
  CHECK((t1 * t2m - t2m * t1).norm() > 1e-3);
  const DecayReport pair = multiplicativity_decay(x1, x2, {4, 8});
  for (double d : pair.defects) CHECK(d > 1e-4);

  CHECK_THROWS_AS(multiplicativity_decay(x3, x3, {4, 4}), validation_error);
  CHECK_THROWS_AS(multiplicativity_decay(x3, x3, {1, 2}), validation_error);
}

TEST_CASE("kernel check") {
  const FockBasis basis(6);
  CHECK(kernel_check(registry_function("zero", -1), basis, 1e-10));
  CHECK(kernel_check(registry_function("highmode", 6), basis, 1e-10));
  CHECK_FALSE(kernel_check(registry_function("one", -1), basis, 1e-10));
}

TEST_CASE("quadrature controls") {
  const FockBasis basis(6);
  QuadratureSpec strict;
  strict.tol = 1e-12;
  // polynomial integrands are quadrature exact: node doubling stays put
  const Eigen::MatrixXcd t =
      toeplitz_matrix(registry_function("x3", -1), basis, strict);
  CHECK(t.rows() == 7);

  QuadratureSpec starved;
  starved.radial = 2;
  starved.angular = 4;
  starved.tol = 1e-12;
  CHECK_THROWS_AS(toeplitz_matrix(registry_function("x1", -1), basis, starved),
                  tolerance_error);
}
