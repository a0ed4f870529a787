// Test-only oracles, independent of the library's solution paths: sphere
// sampling for norms and radii, finite differences, and a plain power-method
// polish. Everything is seeded through the same counter-based generator.
#ifndef OPRADIUS_TESTS_ORACLES_HPP
#define OPRADIUS_TESTS_ORACLES_HPP

#include "opradius/rng.hpp"
#include "opradius/types.hpp"

#include <cmath>

namespace oracles {

using opradius::Complex;
using opradius::ComplexMatrix;
using opradius::ComplexVector;
using opradius::CounterRng;

inline ComplexVector random_unit(int dim, CounterRng& rng) {
  ComplexVector x(dim);
  for (int i = 0; i < dim; ++i) {
    double re, im;
    rng.normal_pair(re, im);
    x[i] = Complex(re, im);
  }
  return x / x.norm();
}

// Largest singular value: best of `samples` sphere draws, then plain power
// iteration on T^* T from the best draw.
inline double operator_norm_oracle(const ComplexMatrix& t, int samples, std::uint64_t seed,
                                   double* sample_max_out = nullptr) {
  CounterRng rng(seed);
  const int dim = static_cast<int>(t.rows());
  double best = 0.0;
  ComplexVector best_x = ComplexVector::Zero(dim);
  best_x[0] = Complex(1.0, 0.0);
  for (int s = 0; s < samples; ++s) {
    const ComplexVector x = random_unit(dim, rng);
    const double val = (t * x).norm();
    if (val > best) {
      best = val;
      best_x = x;
    }
  }
  if (sample_max_out != nullptr) *sample_max_out = best;
  const ComplexMatrix gram = t.adjoint() * t;
  ComplexVector v = best_x;
  for (int it = 0; it < 500; ++it) {
    v = gram * v;
    const double n = v.norm();
    if (n == 0.0) return 0.0;
    v /= n;
  }
  return std::sqrt(std::abs(v.dot(gram * v).real()));
}

inline double w_objective(const ComplexMatrix& a, const ComplexVector& x) {
  return std::abs(x.dot(a * x));
}

// Numerical radius by sphere sampling only.
inline double w_sample_oracle(const ComplexMatrix& a, int samples, std::uint64_t seed) {
  CounterRng rng(seed);
  const int dim = static_cast<int>(a.rows());
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    best = std::max(best, w_objective(a, random_unit(dim, rng)));
  }
  return best;
}

// Numerical radius: sampling plus a simple projected ascent polish on
// |<Ax,x>| from the best draw. Independent of the angle-sweep route.
inline double w_polished_oracle(const ComplexMatrix& a, int samples, std::uint64_t seed) {
  CounterRng rng(seed);
  const int dim = static_cast<int>(a.rows());
  double best = 0.0;
  ComplexVector best_x = ComplexVector::Zero(dim);
  best_x[0] = Complex(1.0, 0.0);
  for (int s = 0; s < samples; ++s) {
    const ComplexVector x = random_unit(dim, rng);
    const double val = w_objective(a, x);
    if (val > best) {
      best = val;
      best_x = x;
    }
  }
  ComplexVector x = best_x;
  double f = best;
  for (int it = 0; it < 2000; ++it) {
    const Complex z = x.dot(a * x);
    const double m = std::abs(z);
    if (m < 1e-14) break;
    ComplexVector g = (std::conj(z) * (a * x) + z * (a.adjoint() * x)) / (2.0 * m);
    g -= x.dot(g) * x;
    if (g.norm() < 1e-13) break;
    double step = 1.0;
    bool moved = false;
    while (step > 1e-16) {
      ComplexVector xc = x + step * g;
      xc /= xc.norm();
      const double fc = w_objective(a, xc);
      if (fc > f + 1e-12 * step) {
        x = xc;
        f = fc;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return f;
}

}  // namespace oracles

#endif
