#include "opradius/radius.hpp"

#include "opradius/linalg.hpp"
#include "opradius/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace opradius {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_options(const OptimizerOptions& opts) {
  if (opts.restarts < 1) throw InvalidConfigError("optimizer: restarts must be >= 1");
  if (opts.theta_grid < 8) throw InvalidConfigError("optimizer: theta_grid must be >= 8");
  if (opts.max_iters < 1) throw InvalidConfigError("optimizer: max_iters must be >= 1");
  if (!(opts.gtol > 0.0)) throw InvalidConfigError("optimizer: gtol must be > 0");
}

// sum_i |<T_i x, x>|^p (the p-th power of the objective; smoother to ascend).
double powered_objective(const std::vector<ComplexMatrix>& ops, double p, const ComplexVector& x) {
  double sum = 0.0;
  for (const auto& op : ops) {
    sum += std::pow(std::abs(x.dot(op * x)), p);
  }
  return sum;
}

// Ambient gradient of the powered objective; |z_i| <= 1e-14 terms contribute 0.
ComplexVector powered_gradient(const std::vector<ComplexMatrix>& ops, double p, const ComplexVector& x) {
  ComplexVector g = ComplexVector::Zero(x.size());
  for (const auto& op : ops) {
    const ComplexVector tx = op * x;
    const Complex z = x.dot(tx);
    const double m = std::abs(z);
    if (m <= 1e-14) continue;
    const ComplexVector tax = op.adjoint() * x;
    g += (p * std::pow(m, p - 2.0) / 2.0) * (std::conj(z) * tx + z * tax);
  }
  return g;
}

ComplexVector tangent_project(const ComplexVector& g, const ComplexVector& x) {
  return g - x.dot(g) * x;
}

struct AscentResult {
  double powered_value = 0.0;
  ComplexVector x;
  bool converged = false;
};

// One restart of the local maximizer. The main engine relinearizes the
// objective at the current point and jumps to the top eigenvector of
//   M(x) = sum_i |z_i|^{p-2} (conj(z_i) T_i + z_i T_i^*) / 2,
// which never decreases F (Hoelder: <M(x)y,y> <= F(x)^{1-1/p} F(y)^{1/p},
// while lambda_max(M(x)) >= <M(x)x,x> = F(x)). When an eigen step stalls,
// Armijo-backtracked gradient steps finish the climb. The ambient gradient
// is p * M(x) x, so stationarity is checked on the same matrix.
AscentResult ascend(const std::vector<ComplexMatrix>& ops, double p, ComplexVector x,
                    const OptimizerOptions& opts) {
  const Eigen::Index dim = x.size();
  double f = powered_objective(ops, p, x);

  ComplexMatrix m(dim, dim);
  bool converged = false;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    m.setZero();
    for (const auto& op : ops) {
      const Complex z = x.dot(op * x);
      const double mod = std::abs(z);
      if (mod <= 1e-14) continue;
      const double weight = std::pow(mod, p - 2.0) / 2.0;
      m.noalias() += (weight * std::conj(z)) * op;
      m.noalias() += (weight * z) * op.adjoint();
    }

    const ComplexVector gt = tangent_project(p * (m * x), x);
    const double gn = gt.norm();
    if (gn < opts.gtol) {
      converged = true;
      break;
    }

    HermitianEig eig = hermitian_eig((m + m.adjoint()) / 2.0);
    ComplexVector cand = eig.eigenvectors.col(dim - 1);
    double fc = powered_objective(ops, p, cand);
    if (fc > f + 1e-15 * std::max(1.0, f)) {
      x = std::move(cand);
      f = fc;
      continue;
    }

    // Eigen step stalled; fall back to gradient ascent with backtracking.
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-18) {
      ComplexVector xc = x + step * gt;
      xc /= xc.norm();
      const double fg = powered_objective(ops, p, xc);
      if (fg >= f + 1e-4 * step * gn * gn) {
        x = std::move(xc);
        f = fg;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // numerical floor reached
  }

  AscentResult res;
  res.powered_value = f;
  res.x = std::move(x);
  res.converged = converged;
  return res;
}

// Extreme eigenvectors (largest and smallest eigenvalue) of a Hermitian matrix.
void push_extreme_eigvecs(const ComplexMatrix& h, std::vector<ComplexVector>& out) {
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  HermitianEig eig = hermitian_eig(sym);
  const Eigen::Index n = sym.rows();
  out.push_back(eig.eigenvectors.col(n - 1));
  if (n > 1) out.push_back(eig.eigenvectors.col(0));
}

std::vector<ComplexVector> start_candidates(const std::vector<ComplexMatrix>& ops, int dim,
                                            const OptimizerOptions& opts) {
  std::vector<ComplexVector> pool;
  pool.reserve(static_cast<std::size_t>(4 * ops.size() + 20 + opts.restarts));

  ComplexVector e1 = ComplexVector::Zero(dim);
  e1[0] = Complex(1.0, 0.0);
  pool.push_back(e1);

  ComplexMatrix gram = ComplexMatrix::Zero(dim, dim);
  for (const auto& op : ops) {
    push_extreme_eigvecs((op + op.adjoint()) / 2.0, pool);
    push_extreme_eigvecs((op - op.adjoint()) * Complex(0.0, -0.5), pool);
    gram += op.adjoint() * op;
  }
  push_extreme_eigvecs(gram, pool);

  // Angle-combination starts: extreme eigenvectors of Re(e^{i phi} sum T_i).
  for (int k = 0; k < 8; ++k) {
    const double phi = kPi * k / 8.0;
    const Complex rot(std::cos(phi), std::sin(phi));
    ComplexMatrix combo = ComplexMatrix::Zero(dim, dim);
    for (const auto& op : ops) combo += rot * op;
    push_extreme_eigvecs((combo + combo.adjoint()) / 2.0, pool);
  }

  CounterRng rng(child_seed(opts.rng_seed, 0x5254ULL));
  for (int j = 0; j < opts.restarts; ++j) {
    ComplexVector x(dim);
    for (int i = 0; i < dim; ++i) {
      double re, im;
      rng.normal_pair(re, im);
      x[i] = Complex(re, im);
    }
    const double norm = x.norm();
    pool.push_back(norm > 1e-280 ? ComplexVector(x / norm) : e1);
  }
  return pool;
}

}  // namespace

double wp_objective(const OperatorTuple& t, double p, const ComplexVector& x) {
  validate_tuple(t, "wp_objective");
  if (p < 1.0) throw InvalidExponentError("wp_objective: p must be >= 1");
  double sum = 0.0;
  for (const auto& op : t.operators) {
    sum += std::pow(std::abs(x.dot(op * x)), p);
  }
  return std::pow(sum, 1.0 / p);
}

RadiusEstimate numerical_radius(const ComplexMatrix& a, const OptimizerOptions& opts) {
  validate_matrix(a, "numerical_radius");
  check_options(opts);
  const Eigen::Index n = a.rows();

  RadiusEstimate est;
  est.restarts_used = 1;
  est.converged = true;

  const double scale = a.norm();
  if (scale == 0.0) {
    est.value = 0.0;
    est.upper = 0.0;
    est.witness = ComplexVector::Zero(n);
    est.witness[0] = Complex(1.0, 0.0);
    return est;
  }

  const ComplexMatrix an = a / scale;
  const double opnorm = operator_norm(an);

  // H(theta) = cos(theta) B0 + sin(theta) C0 with the Cartesian parts of an.
  const ComplexMatrix b0 = (an + an.adjoint()) / 2.0;
  const ComplexMatrix c0 = (an - an.adjoint()) * Complex(0.0, 0.5);

  const int m = opts.theta_grid;
  ComplexMatrix h_work(n, n);
  const auto lambda_max_at = [&](double theta) {
    h_work = std::cos(theta) * b0 + std::sin(theta) * c0;
    return hermitian_lambda_max(h_work);
  };

  double best_theta = 0.0;
  double best_val = lambda_max_at(0.0);
  for (int k = 1; k < m; ++k) {
    const double theta = 2.0 * kPi * k / m;
    const double val = lambda_max_at(theta);
    if (val > best_val) {
      best_val = val;
      best_theta = theta;
    }
  }

  // Golden-section refinement over the best grid cell, tracking the best
  // angle seen anywhere in the bracket.
  const double h = 2.0 * kPi / m;
  double lo = best_theta - h;
  double hi = best_theta + h;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - (hi - lo) * invphi;
  double d = lo + (hi - lo) * invphi;
  double fc = lambda_max_at(c);
  double fd = lambda_max_at(d);
  while (hi - lo > 1e-10) {
    if (fc > best_val) { best_val = fc; best_theta = c; }
    if (fd > best_val) { best_val = fd; best_theta = d; }
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * invphi;
      fc = lambda_max_at(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * invphi;
      fd = lambda_max_at(d);
    }
  }

  const ComplexMatrix hbest =
      std::cos(best_theta) * b0 + std::sin(best_theta) * c0;
  HermitianEig eig = hermitian_eig((hbest + hbest.adjoint()) / 2.0);
  est.witness = gauge_fixed(eig.eigenvectors.col(n - 1));
  est.witness /= est.witness.norm();

  est.value = std::abs(est.witness.dot(a * est.witness));
  est.upper = std::max(est.value + scale * opnorm * kPi / m, est.value);
  return est;
}

RadiusEstimate wp_radius(const OperatorTuple& t, double p, const OptimizerOptions& opts) {
  validate_tuple(t, "wp_radius");
  if (p < 1.0) throw InvalidExponentError("wp_radius: p must be >= 1");
  check_options(opts);
  const int dim = t.dim();

  RadiusEstimate est;

  double scale = 0.0;
  for (const auto& op : t.operators) scale = std::max(scale, op.norm());
  if (scale == 0.0) {
    est.value = 0.0;
    est.witness = ComplexVector::Zero(dim);
    est.witness[0] = Complex(1.0, 0.0);
    est.converged = true;
    return est;
  }

  // A singleton tuple reduces to |<T x, x>| for every p; the certified angle
  // sweep finds that maximizer directly.
  if (t.operators.size() == 1) {
    RadiusEstimate sweep = numerical_radius(t.operators[0], opts);
    est.witness = sweep.witness;
    est.value = wp_objective(t, p, est.witness);
    est.restarts_used = 1;
    est.converged = true;
    return est;
  }

  std::vector<ComplexMatrix> ops;
  ops.reserve(t.operators.size());
  for (const auto& op : t.operators) ops.push_back(op / scale);

  std::vector<ComplexVector> pool = start_candidates(ops, dim, opts);
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) order[i] = i;
  std::vector<double> initial(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) initial[i] = powered_objective(ops, p, pool[i]);
  std::stable_sort(order.begin(), order.end(), [&initial](std::size_t i, std::size_t j) {
    return initial[i] > initial[j];
  });

  const std::size_t budget = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(opts.restarts));
  double best = -1.0;
  ComplexVector best_x;
  bool best_converged = false;
  for (std::size_t r = 0; r < budget; ++r) {
    AscentResult run = ascend(ops, p, pool[order[r]], opts);
    if (run.powered_value > best) {
      best = run.powered_value;
      best_x = std::move(run.x);
      best_converged = run.converged;
    }
  }

  est.restarts_used = static_cast<int>(budget);
  est.witness = gauge_fixed(best_x);
  est.witness /= est.witness.norm();
  est.value = wp_objective(t, p, est.witness);
  est.converged = best_converged;
  return est;
}

ComplexVector wp_gradient(const OperatorTuple& t, double p, const ComplexVector& x) {
  validate_tuple(t, "wp_gradient");
  validate_unit_vector(x, "wp_gradient");
  if (p < 1.0) throw InvalidExponentError("wp_gradient: p must be >= 1");
  if (p == 1.0) {
    for (const auto& op : t.operators) {
      if (std::abs(x.dot(op * x)) <= 1e-12) {
        throw NonsmoothPointError("wp_gradient: p = 1 at a vector with <T_i x, x> ~ 0");
      }
    }
  }
  return tangent_project(powered_gradient(t.operators, p, x), x);
}

}  // namespace opradius
