#include "opradius/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace opradius {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One two-sided rotation annihilating A(p,q); accumulates into V when present.
void rotate(ComplexMatrix& a, ComplexMatrix* v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double m = std::abs(apq);
  if (m == 0.0) return;

  const Complex phase = apq / m;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double zeta = (aqq - app) / (2.0 * m);

  double t;  // tan(theta), the smaller root of t^2 + 2 zeta t - 1 = 0
  if (std::abs(zeta) > 1e15) {
    t = 1.0 / (2.0 * zeta);
  } else if (zeta >= 0.0) {
    t = 1.0 / (zeta + std::hypot(zeta, 1.0));
  } else {
    t = -1.0 / (-zeta + std::hypot(zeta, 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex u = (t * c) * phase;  // J(p,q) = sin(theta) e^{i arg(apq)}

  const Eigen::Index n = a.rows();
  // A <- A J  (columns p, q)
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - std::conj(u) * akq;
    a(k, q) = u * akp + c * akq;
  }
  // A <- J^* A  (rows p, q)
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - u * aqk;
    a(q, k) = std::conj(u) * apk + c * aqk;
  }
  a(p, q) = Complex(0.0, 0.0);
  a(q, p) = Complex(0.0, 0.0);
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  if (v != nullptr) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - std::conj(u) * vkq;
      (*v)(k, q) = u * vkp + c * vkq;
    }
  }
}

// Runs cyclic sweeps until the off-diagonal mass is below tol * ||H||_F.
// Returns false when the sweep budget is exhausted first.
bool jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* v, double tol) {
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  if (scale == 0.0) return true;
  const double threshold = tol * scale;
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= threshold) return true;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }
  return offdiag_frobenius(a) <= threshold;
}

}  // namespace

double hermitian_defect(const ComplexMatrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

HermitianEig hermitian_eig(const ComplexMatrix& h, double tol) {
  validate_matrix(h, "hermitian_eig");
  if (hermitian_defect(h) > 1e-12) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian within 1e-12");
  }

  const Eigen::Index n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  if (!jacobi_sweeps(a, &v, tol)) {
    throw NoConvergenceError("hermitian_eig: off-diagonal mass not below tolerance after sweep budget");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEig result;
  result.eigenvalues.resize(n);
  result.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    result.eigenvectors.col(k) = v.col(order[k]);
  }
  return result;
}

double hermitian_lambda_max(const ComplexMatrix& h, double tol) {
  ComplexMatrix a = h;
  if (!jacobi_sweeps(a, nullptr, tol)) {
    throw NoConvergenceError("hermitian_lambda_max: sweep budget exhausted");
  }
  double best = a(0, 0).real();
  for (Eigen::Index i = 1; i < a.rows(); ++i) {
    best = std::max(best, a(i, i).real());
  }
  return best;
}

double operator_norm(const ComplexMatrix& t) {
  validate_matrix(t, "operator_norm");
  const ComplexMatrix gram = t.adjoint() * t;
  const double lmax = hermitian_lambda_max(gram);
  return std::sqrt(std::max(lmax, 0.0));
}

ComplexMatrix abs_operator(const ComplexMatrix& t) {
  validate_matrix(t, "abs_operator");
  const ComplexMatrix gram = t.adjoint() * t;
  HermitianEig eig = hermitian_eig((gram + gram.adjoint()) / 2.0);
  Eigen::VectorXd roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix result = eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
  return (result + result.adjoint()) / 2.0;
}

ComplexMatrix psd_power(const ComplexMatrix& h, double beta) {
  validate_matrix(h, "psd_power");
  if (beta < 0.0) {
    throw InvalidExponentError("psd_power: exponent must be >= 0");
  }
  if (hermitian_defect(h) > 1e-12) {
    throw NotHermitianError("psd_power: input is not Hermitian within 1e-12");
  }
  if (beta == 1.0) {
    return h;
  }
  HermitianEig eig = hermitian_eig(h);
  Eigen::VectorXd powered(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < -1e-8) {
      throw NotPsdError("psd_power: eigenvalue " + std::to_string(lambda) + " below -1e-8");
    }
    lambda = std::max(lambda, 0.0);
    powered[i] = std::pow(lambda, beta);
  }
  ComplexMatrix result = eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
  return (result + result.adjoint()) / 2.0;
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian_parts(const ComplexMatrix& a) {
  validate_matrix(a, "cartesian_parts");
  ComplexMatrix b = (a + a.adjoint()) / 2.0;
  ComplexMatrix c = (a - a.adjoint()) * Complex(0.0, -0.5);
  return {std::move(b), std::move(c)};
}

}  // namespace opradius
