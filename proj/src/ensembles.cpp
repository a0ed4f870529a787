#include "opradius/ensembles.hpp"

#include "opradius/rng.hpp"

#include <cmath>

namespace opradius {

namespace {

void check_spec(const EnsembleSpec& spec) {
  if (spec.dim < 1) throw InvalidSpecError("ensemble: dim must be >= 1");
  if (spec.length < 1) throw InvalidSpecError("ensemble: length must be >= 1");
  if (!(spec.scale > 0.0)) throw InvalidSpecError("ensemble: scale must be > 0");
}

// Row-major fill, one Box-Muller pair per entry.
ComplexMatrix ginibre(int dim, std::uint64_t seed, double scale) {
  CounterRng rng(seed);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double re, im;
      rng.normal_pair(re, im);
      g(i, j) = Complex(scale * re, scale * im);
    }
  }
  return g;
}

ComplexMatrix gram_schmidt_unitary(int dim, std::uint64_t seed) {
  ComplexMatrix q = ginibre(dim, seed, 1.0);
  // Two MGS passes; the second pass restores orthogonality lost to rounding.
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
      }
      const double norm = q.col(j).norm();
      if (norm < 1e-8) {
        // Degenerate draw; fall back to a canonical direction and re-project.
        q.col(j).setZero();
        q(j % dim, j) = Complex(1.0, 0.0);
        for (int k = 0; k < j; ++k) {
          q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
        }
      }
      q.col(j) /= q.col(j).norm();
    }
  }
  return q;
}

}  // namespace

ComplexMatrix draw_matrix(const EnsembleSpec& spec) {
  check_spec(spec);
  const int n = spec.dim;
  if (spec.kind == "ginibre") {
    return ginibre(n, spec.seed, spec.scale);
  }
  if (spec.kind == "hermitian") {
    ComplexMatrix g = ginibre(n, spec.seed, spec.scale);
    return ((g + g.adjoint()) / 2.0).eval();
  }
  if (spec.kind == "psd") {
    ComplexMatrix g = ginibre(n, spec.seed, spec.scale);
    return (g.adjoint() * g).eval();
  }
  if (spec.kind == "unitary") {
    return gram_schmidt_unitary(n, spec.seed);
  }
  if (spec.kind == "diagonal") {
    CounterRng rng(spec.seed);
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      double z0, z1;
      rng.normal_pair(z0, z1);
      d(i, i) = Complex(spec.scale * z0, 0.0);
    }
    return d;
  }
  if (spec.kind == "nilpotent_jordan") {
    ComplexMatrix j = ComplexMatrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
      j(i, i + 1) = Complex(spec.scale, 0.0);
    }
    return j;
  }
  throw InvalidSpecError("ensemble: unknown kind '" + spec.kind + "'");
}

OperatorTuple draw_tuple(const EnsembleSpec& spec) {
  check_spec(spec);
  std::string element = "ginibre";
  if (spec.kind == "tuple") {
    // default element kind
  } else if (spec.kind.rfind("tuple:", 0) == 0) {
    element = spec.kind.substr(6);
  } else {
    throw InvalidSpecError("draw_tuple: kind must be 'tuple' or 'tuple:<element>'");
  }

  OperatorTuple t;
  t.operators.reserve(static_cast<std::size_t>(spec.length));
  for (int i = 0; i < spec.length; ++i) {
    EnsembleSpec elem;
    elem.kind = element;
    elem.dim = spec.dim;
    elem.seed = child_seed(spec.seed, static_cast<std::uint64_t>(i));
    elem.scale = spec.scale;
    t.operators.push_back(draw_matrix(elem));
  }
  return t;
}

ComplexVector draw_unit_vector(int dim, std::uint64_t seed) {
  if (dim < 1) throw InvalidSpecError("draw_unit_vector: dim must be >= 1");
  CounterRng rng(seed);
  ComplexVector x(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      double re, im;
      rng.normal_pair(re, im);
      x[i] = Complex(re, im);
    }
    norm2 = x.squaredNorm();
  } while (norm2 < 1e-280);
  return x / std::sqrt(norm2);
}

}  // namespace opradius
