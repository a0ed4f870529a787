#include "opradius/ensembles.hpp"

#include "opradius/linalg.hpp"
#include "opradius/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace opradius;

TEST_CASE("counter rng: pure function of seed and counter") {
  CounterRng a(42);
  CounterRng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  CounterRng c(43);
  bool differs = false;
  CounterRng a2(42);
  for (int i = 0; i < 10; ++i) differs |= (a2.next_u64() != c.next_u64());
  CHECK(differs);
}

TEST_CASE("counter rng: uniform range and rough moments") {
  CounterRng rng(7);
  double sum = 0.0;
  double sum2 = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.01);
  CHECK(std::abs(sum2 / n - 1.0 / 3.0) < 0.01);
}

TEST_CASE("box-muller: rough normal moments") {
  CounterRng rng(11);
  double sum = 0.0;
  double sum2 = 0.0;
  const int n = 50000;
  for (int i = 0; i < n / 2; ++i) {
    double z0, z1;
    rng.normal_pair(z0, z1);
    sum += z0 + z1;
    sum2 += z0 * z0 + z1 * z1;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sum2 / n - 1.0) < 0.03);
}

TEST_CASE("child seeds differ from parent stream and from each other") {
  const std::uint64_t parent = 1234;
  CHECK(child_seed(parent, 0) != child_seed(parent, 1));
  CHECK(child_seed(parent, 0) != child_seed(parent + 1, 0));
}

TEST_CASE("draw_matrix: hermitian kind is Hermitian entrywise") {
  const ComplexMatrix h = draw_matrix({"hermitian", 5, 1, 3, 1.0});
  CHECK(hermitian_defect(h) <= 1e-14);
}

TEST_CASE("draw_matrix: unitary kind is an isometry") {
  const ComplexMatrix u = draw_matrix({"unitary", 6, 1, 9, 1.0});
  CHECK((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).norm() <= 1e-10);
}

TEST_CASE("draw_matrix: psd kind has nonnegative spectrum") {
  const ComplexMatrix h = draw_matrix({"psd", 4, 1, 17, 1.0});
  CHECK(hermitian_eig(h).eigenvalues.minCoeff() >= -1e-10);
}

TEST_CASE("draw_matrix: nilpotent jordan block is exact") {
  const ComplexMatrix j = draw_matrix({"nilpotent_jordan", 2, 1, 0, 1.0});
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(0, 1) = 1.0;
  CHECK(j == expect);
}

TEST_CASE("draw_matrix: diagonal kind is real diagonal") {
  const ComplexMatrix d = draw_matrix({"diagonal", 4, 1, 8, 1.0});
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (i != k) CHECK(d(i, k) == Complex(0.0, 0.0));
    }
    CHECK(d(i, i).imag() == 0.0);
  }
}

TEST_CASE("draw_matrix: unknown kind rejected") {
  CHECK_THROWS_AS(draw_matrix({"perron", 2, 1, 0, 1.0}), InvalidSpecError);
}

TEST_CASE("draw_tuple: deterministic, element kinds honored, seeds differ") {
  const OperatorTuple t1 = draw_tuple({"tuple", 2, 3, 1, 1.0});
  const OperatorTuple t2 = draw_tuple({"tuple", 2, 3, 1, 1.0});
  REQUIRE(t1.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(t1.operators[i] == t2.operators[i]);

  const OperatorTuple h = draw_tuple({"tuple:hermitian", 3, 2, 5, 1.0});
  for (const auto& op : h.operators) CHECK(hermitian_defect(op) <= 1e-14);

  const OperatorTuple a = draw_tuple({"tuple", 2, 1, 1, 1.0});
  const OperatorTuple b = draw_tuple({"tuple", 2, 1, 2, 1.0});
  CHECK((a.operators[0] - b.operators[0]).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("draw_unit_vector: unit norm, dim 1 modulus, sphere moment") {
  const ComplexVector v1 = draw_unit_vector(1, 3);
  CHECK(std::abs(std::abs(v1[0]) - 1.0) <= 1e-12);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(std::abs(draw_unit_vector(5, seed).norm() - 1.0) <= 1e-12);
  }

  double mean = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const ComplexVector x = draw_unit_vector(2, 1000 + static_cast<std::uint64_t>(i));
    mean += std::norm(x[0]);
  }
  mean /= n;
  CHECK(mean > 0.48);
  CHECK(mean < 0.52);
}
