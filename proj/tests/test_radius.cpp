#include "opradius/radius.hpp"

#include "opradius/ensembles.hpp"
#include "opradius/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace opradius;

namespace {

ComplexMatrix ginibre(int dim, std::uint64_t seed) {
  return draw_matrix({"ginibre", dim, 1, seed, 1.0});
}

ComplexMatrix jordan2() {
  ComplexMatrix j = ComplexMatrix::Zero(2, 2);
  j(0, 1) = 1.0;
  return j;
}

OperatorTuple tuple_of(std::vector<ComplexMatrix> ops) {
  return OperatorTuple{std::move(ops)};
}

}  // namespace

TEST_CASE("numerical_radius: self-adjoint input attains the norm") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = -3.0;
  a(1, 1) = 1.0;
  const RadiusEstimate est = numerical_radius(a);
  CHECK(est.value == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(*est.upper >= est.value);
}

TEST_CASE("numerical_radius: identity") {
  const RadiusEstimate est = numerical_radius(ComplexMatrix::Identity(3, 3));
  CHECK(std::abs(est.value - 1.0) <= 1e-12);
}

TEST_CASE("numerical_radius: zero matrix") {
  const RadiusEstimate est = numerical_radius(ComplexMatrix::Zero(3, 3));
  CHECK(est.value == 0.0);
  CHECK(*est.upper == 0.0);
}

TEST_CASE("numerical_radius: Jordan block against the dense sphere oracle") {
  const ComplexMatrix j = jordan2();
  const RadiusEstimate est = numerical_radius(j);
  CHECK(std::abs(est.value - 0.5) <= 1e-6);
  const double oracle = oracles::w_sample_oracle(j, 1000000, 99);
  CHECK(std::abs(est.value - oracle) <= 1e-4);
  CHECK(*est.upper - est.value <= 5e-3);
}

TEST_CASE("numerical_radius: norm equivalence on a seeded random matrix") {
  const ComplexMatrix a = ginibre(4, 9);
  const double norm = operator_norm(a);
  const RadiusEstimate est = numerical_radius(a);
  CHECK(est.value >= norm / 2.0 - 1e-8);
  CHECK(*est.upper <= norm + 1e-8);
}

TEST_CASE("numerical_radius: witness reproduces the value") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ComplexMatrix a = ginibre(2 + static_cast<int>(seed % 4), 70 + seed);
    const RadiusEstimate est = numerical_radius(a);
    CHECK(std::abs(est.witness.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(std::abs(est.witness.dot(a * est.witness)) - est.value) <= 1e-10);
    CHECK(*est.upper >= est.value);
  }
}

TEST_CASE("numerical_radius: enclosure brackets the polished oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 4);
    const ComplexMatrix a = ginibre(dim, 200 + seed);
    const RadiusEstimate est = numerical_radius(a);
    const double oracle = oracles::w_polished_oracle(a, 20000, 500 + seed);
    CHECK(oracle <= *est.upper + 1e-9);
    CHECK(est.value <= oracle + 1e-6);
  }
}

TEST_CASE("numerical_radius: refining the grid never loosens the enclosure") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const ComplexMatrix a = ginibre(2 + static_cast<int>(seed % 4), 300 + seed);
    OptimizerOptions coarse;
    coarse.theta_grid = 720;
    OptimizerOptions fine;
    fine.theta_grid = 2880;
    const RadiusEstimate e1 = numerical_radius(a, coarse);
    const RadiusEstimate e2 = numerical_radius(a, fine);
    CHECK(e2.value >= e1.value - 1e-12);
    CHECK(*e2.upper <= *e1.upper);
  }
}

TEST_CASE("wp_radius: identity pair gives 2^{1/p}") {
  const OperatorTuple t = tuple_of({ComplexMatrix::Identity(3, 3), ComplexMatrix::Identity(3, 3)});
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const RadiusEstimate est = wp_radius(t, p);
    CHECK(std::abs(est.value - std::pow(2.0, 1.0 / p)) <= 1e-9);
  }
}

TEST_CASE("wp_radius: sharpness pair of Jordan blocks at p = 2") {
  const OperatorTuple t = tuple_of({jordan2(), jordan2()});
  const RadiusEstimate est = wp_radius(t, 2.0);
  CHECK(std::abs(est.value - std::sqrt(2.0) * 0.5) <= 1e-6);
}

TEST_CASE("wp_radius: Cartesian pair reproduces the numerical radius") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 4);
    const ComplexMatrix a = ginibre(dim, 400 + seed);
    auto [b, c] = cartesian_parts(a);
    OptimizerOptions opts;
    opts.rng_seed = seed;
    const double we = wp_radius(tuple_of({b, c}), 2.0, opts).value;
    const double w = numerical_radius(a, opts).value;
    CHECK(std::abs(we - w) <= 1e-6);
  }
}

TEST_CASE("wp_radius: single operator at p = 1 matches the numerical radius") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const ComplexMatrix a = ginibre(2 + static_cast<int>(seed % 3), 450 + seed);
    const double w1 = wp_radius(tuple_of({a}), 1.0).value;
    const double w = numerical_radius(a).value;
    CHECK(std::abs(w1 - w) <= 1e-6);
  }
}

TEST_CASE("wp_radius: witness reproduces the value (lower-bound soundness)") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const int dim = 2 + static_cast<int>(seed % 3);
    EnsembleSpec spec{"tuple", dim, 1 + static_cast<int>(seed % 3), 460 + seed, 1.0};
    const OperatorTuple t = draw_tuple(spec);
    for (double p : {1.0, 2.0, 3.0}) {
      const RadiusEstimate est = wp_radius(t, p);
      CHECK(std::abs(est.witness.norm() - 1.0) <= 1e-12);
      CHECK(std::abs(wp_objective(t, p, est.witness) - est.value) <= 1e-10);
    }
  }
}

TEST_CASE("wp_radius: monotone in p with the 2^{1/q-1/p} reverse bound") {
  const std::vector<double> grid = {1.0, 1.5, 2.0, 3.0, 4.0};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const OperatorTuple t = draw_tuple({"tuple", 2 + static_cast<int>(seed % 3), 2, 480 + seed, 1.0});
    for (double p : grid) {
      for (double q : grid) {
        if (q > p) continue;
        const double wp = wp_radius(t, p).value;
        const double wq = wp_radius(t, q).value;
        CHECK(wp <= wq + 1e-6);
        CHECK(wq <= std::pow(2.0, 1.0 / q - 1.0 / p) * wp + 1e-6);
      }
    }
  }
}

TEST_CASE("wp_radius: power inequality against the enclosure") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const ComplexMatrix a = ginibre(2 + static_cast<int>(seed % 4), 520 + seed);
    const RadiusEstimate sq = numerical_radius(a * a);
    const RadiusEstimate base = numerical_radius(a);
    CHECK(sq.value <= (*base.upper) * (*base.upper) + 1e-8);
  }
}

TEST_CASE("wp_radius: norm axioms on seeded tuples") {
  const OperatorTuple t = draw_tuple({"tuple", 3, 2, 530, 1.0});
  const double p = 2.0;
  const double base = wp_radius(t, p).value;

  // homogeneity
  const Complex lambda(0.3, -1.2);
  OperatorTuple scaled;
  for (const auto& op : t.operators) scaled.operators.push_back(lambda * op);
  CHECK(std::abs(wp_radius(scaled, p).value - std::abs(lambda) * base) <= 1e-8);

  // zero tuple
  OperatorTuple zero = tuple_of({ComplexMatrix::Zero(3, 3)});
  CHECK(wp_radius(zero, p).value < 1e-8);

  // triangle
  const OperatorTuple t2 = draw_tuple({"tuple", 3, 2, 531, 1.0});
  OperatorTuple sum;
  for (int i = 0; i < 2; ++i) sum.operators.push_back(t.operators[i] + t2.operators[i]);
  CHECK(wp_radius(sum, p).value <= base + wp_radius(t2, p).value + 1e-6);

  // transformation bound
  const ComplexMatrix x = ginibre(3, 532);
  OperatorTuple conj;
  for (const auto& op : t.operators) conj.operators.push_back(x.adjoint() * op * x);
  const double xn = operator_norm(x);
  CHECK(wp_radius(conj, p).value <= xn * xn * base + 1e-6);
}

TEST_CASE("wp_radius: deterministic for a fixed seed") {
  const OperatorTuple t = draw_tuple({"tuple", 3, 2, 540, 1.0});
  OptimizerOptions opts;
  opts.rng_seed = 7;
  const RadiusEstimate a = wp_radius(t, 1.5, opts);
  const RadiusEstimate b = wp_radius(t, 1.5, opts);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.restarts_used == b.restarts_used);
}

TEST_CASE("wp_radius: invalid exponent") {
  const OperatorTuple t = tuple_of({ComplexMatrix::Identity(2, 2)});
  CHECK_THROWS_AS(wp_radius(t, 0.5), InvalidExponentError);
}

TEST_CASE("wp_gradient: stationary at a dominant eigenvector") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  ComplexVector e1 = ComplexVector::Zero(2);
  e1[0] = 1.0;
  const ComplexVector g = wp_gradient(tuple_of({d}), 2.0, e1);
  CHECK(g.norm() <= 1e-12);
}

TEST_CASE("wp_gradient: matches central finite differences") {
  CounterRng pick(13);
  int checked = 0;
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    const int dim = 2 + static_cast<int>(pick.next_u64() % 4);
    const int len = 1 + static_cast<int>(pick.next_u64() % 3);
    const OperatorTuple t = draw_tuple({"tuple", dim, len, 600 + trial, 1.0});
    const ComplexVector x = draw_unit_vector(dim, 700 + trial);
    for (double p : {1.5, 2.0, 3.0}) {
      const ComplexVector gt = wp_gradient(t, p, x);
      const double gn = gt.norm();
      if (gn < 1e-8) continue;  // near-stationary draw; relative check is meaningless
      const ComplexVector v = gt / gn;
      const double h = 1e-6;
      const auto powered = [&](const ComplexVector& y) {
        double s = 0.0;
        for (const auto& op : t.operators) s += std::pow(std::abs(y.dot(op * y)), p);
        return s;
      };
      ComplexVector xp = x + h * v;
      xp /= xp.norm();
      ComplexVector xm = x - h * v;
      xm /= xm.norm();
      const double fd = (powered(xp) - powered(xm)) / (2.0 * h);
      const double analytic = 2.0 * gn;  // D_v F = 2 Re<g, v> with v = g_t/|g_t|
      CHECK(std::abs(fd - analytic) <= 1e-5 * std::max(1.0, std::abs(analytic)));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("wp_gradient: phase invariance") {
  const OperatorTuple t = draw_tuple({"tuple", 3, 2, 620, 1.0});
  const ComplexVector x = draw_unit_vector(3, 621);
  const Complex phase = std::polar(1.0, 1.234);
  const double p = 2.5;
  const double f1 = wp_objective(t, p, x);
  const double f2 = wp_objective(t, p, (phase * x).eval());
  CHECK(std::abs(f1 - f2) <= 1e-12);
  const ComplexVector g1 = wp_gradient(t, p, x);
  const ComplexVector g2 = wp_gradient(t, p, (phase * x).eval());
  CHECK((g2 - phase * g1).norm() <= 1e-12);
}

TEST_CASE("wp_gradient: nonsmooth point at p = 1") {
  ComplexVector e1 = ComplexVector::Zero(2);
  e1[0] = 1.0;
  ComplexMatrix j = jordan2();
  CHECK_THROWS_AS(wp_gradient(tuple_of({j}), 1.0, e1), NonsmoothPointError);
}
