#include "opradius/types.hpp"

#include <cmath>

namespace opradius {

void validate_matrix(const ComplexMatrix& m, const std::string& context) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidSpecError(context + ": expected a nonempty square matrix, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw InvalidSpecError(context + ": entries must be finite");
  }
}

void validate_tuple(const OperatorTuple& t, const std::string& context) {
  if (t.operators.empty()) {
    throw InvalidSpecError(context + ": tuple must hold at least one operator");
  }
  const auto dim = t.operators.front().rows();
  for (std::size_t i = 0; i < t.operators.size(); ++i) {
    validate_matrix(t.operators[i], context + "[" + std::to_string(i) + "]");
    if (t.operators[i].rows() != dim) {
      throw InvalidSpecError(context + ": operators must share one dimension");
    }
  }
}

void validate_unit_vector(const ComplexVector& x, const std::string& context) {
  if (x.size() < 1) {
    throw InvalidSpecError(context + ": empty vector");
  }
  if (std::abs(x.norm() - 1.0) > 1e-12) {
    throw InvalidSpecError(context + ": expected unit Euclidean norm");
  }
}

ComplexVector gauge_fixed(const ComplexVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double mod = std::abs(x[i]);
    if (mod > 1e-12) {
      return x * (std::conj(x[i]) / mod);
    }
  }
  return x;
}

}  // namespace opradius
