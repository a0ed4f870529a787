#ifndef OPRADIUS_TYPES_HPP
#define OPRADIUS_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace opradius {

using Complex = std::complex<double>;

// Dense square complex matrix; the working representation of an operator.
using ComplexMatrix = Eigen::MatrixXcd;

// Complex column vector; unit vectors are validated where the contract needs it.
using ComplexVector = Eigen::VectorXcd;

// Ordered tuple (T_1, ..., T_n) of equal-dimension operators.
struct OperatorTuple {
  std::vector<ComplexMatrix> operators;

  OperatorTuple() = default;
  explicit OperatorTuple(std::vector<ComplexMatrix> ops) : operators(std::move(ops)) {}

  int size() const { return static_cast<int>(operators.size()); }
  int dim() const { return operators.empty() ? 0 : static_cast<int>(operators.front().rows()); }
};

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitianError : Error {
  explicit NotHermitianError(const std::string& what) : Error(what) {}
};

struct NoConvergenceError : Error {
  explicit NoConvergenceError(const std::string& what) : Error(what) {}
};

struct NotPsdError : Error {
  explicit NotPsdError(const std::string& what) : Error(what) {}
};

struct InvalidExponentError : Error {
  explicit InvalidExponentError(const std::string& what) : Error(what) {}
};

struct NonsmoothPointError : Error {
  explicit NonsmoothPointError(const std::string& what) : Error(what) {}
};

struct UnknownCheckError : Error {
  explicit UnknownCheckError(const std::string& what) : Error(what) {}
};

struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string& what) : Error(what) {}
};

struct InvalidSpecError : Error {
  explicit InvalidSpecError(const std::string& what) : Error(what) {}
};

struct InvalidConfigError : Error {
  explicit InvalidConfigError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Throws InvalidSpecError unless the matrix is square, nonempty and finite.
void validate_matrix(const ComplexMatrix& m, const std::string& context = "matrix");

// Throws InvalidSpecError unless the tuple is nonempty with homogeneous dimension.
void validate_tuple(const OperatorTuple& t, const std::string& context = "tuple");

// Throws InvalidSpecError unless the vector has unit Euclidean norm within 1e-12.
void validate_unit_vector(const ComplexVector& x, const std::string& context = "vector");

// Rotates the global phase so the first component with modulus > 1e-12 is real
// and positive. Keeps reports comparable across runs.
ComplexVector gauge_fixed(const ComplexVector& x);

}  // namespace opradius

#endif
