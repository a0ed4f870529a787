#ifndef OPRADIUS_RADIUS_HPP
#define OPRADIUS_RADIUS_HPP

#include "opradius/types.hpp"

#include <cstdint>
#include <optional>

namespace opradius {

struct OptimizerOptions {
  int restarts = 32;
  int max_iters = 500;
  double gtol = 1e-9;
  int theta_grid = 720;
  std::uint64_t rng_seed = 0;
};

// Result of a radius computation. `value` is a rigorous lower bound on the
// true radius: it is the objective evaluated at `witness`. `upper` is the
// certified enclosure bound, present for numerical_radius only.
struct RadiusEstimate {
  double value = 0.0;
  std::optional<double> upper;
  ComplexVector witness;
  int restarts_used = 0;
  bool converged = false;
};

// (sum_i |<T_i x, x>|^p)^{1/p} at a given vector.
double wp_objective(const OperatorTuple& t, double p, const ComplexVector& x);

// Numerical radius sup{|<Ax,x>| : ||x|| = 1} via the angle sweep
// max_theta lambda_max((e^{i theta} A + e^{-i theta} A^*)/2), with a
// golden-section refinement of the best grid cell. The returned enclosure is
//   value <= w(A) <= value + ||A|| * pi / theta_grid.
RadiusEstimate numerical_radius(const ComplexMatrix& a, const OptimizerOptions& opts = {});

// Generalized radius sup over unit x of the l_p norm of (<T_1 x,x>, ...),
// p >= 1, via multi-start projected gradient ascent on the unit sphere.
// Starts combine informed candidates (extreme eigenvectors of the Hermitian
// and anti-Hermitian parts of each operator, of angle combinations, and of
// sum_i T_i^* T_i) with seeded complex-Gaussian draws; the best candidates by
// initial objective fill the restart budget. Ties in the final reduction go
// to the lower restart index.
RadiusEstimate wp_radius(const OperatorTuple& t, double p, const OptimizerOptions& opts = {});

// Riemannian gradient of F(x) = sum_i |<T_i x, x>|^p at unit x: the ambient
// g = sum_i p |z_i|^{p-2} (conj(z_i) T_i x + z_i T_i^* x)/2 (terms with
// |z_i| <= 1e-14 contribute zero) projected to g - <g,x> x.
// Requires p > 1, or p = 1 with every |z_i| > 1e-12 (else NonsmoothPointError).
ComplexVector wp_gradient(const OperatorTuple& t, double p, const ComplexVector& x);

}  // namespace opradius

#endif
