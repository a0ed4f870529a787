#ifndef OPRADIUS_CATALOG_HPP
#define OPRADIUS_CATALOG_HPP

#include "opradius/radius.hpp"
#include "opradius/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace opradius {

// The power pair f(t) = t^beta, g(t) = t^{1-beta}; f(t) g(t) = t identically.
struct FunctionPair {
  double beta = 0.5;
};

enum class Verdict { Holds, Inconclusive, Violation };

const char* verdict_name(Verdict v);

// Parameter bundle for a catalog entry. Exponents and weights have neutral
// defaults; inputs the entry needs but the caller omitted (aux tuples, the
// transformation matrix, probe vectors) are drawn deterministically from
// opts.rng_seed.
struct CheckParams {
  double p = 2.0;
  std::optional<double> q;  // conjugate or ordering partner where required
  double r = 1.0;
  double alpha = 0.5;
  std::optional<std::vector<double>> alphas;  // weights for sign-combination bounds
  Complex lambda = Complex(0.75, -0.5);
  std::optional<FunctionPair> pair;
  OperatorTuple primary;
  std::optional<OperatorTuple> aux_A;
  std::optional<OperatorTuple> aux_B;
  std::optional<ComplexMatrix> aux_X;
  std::vector<ComplexVector> vectors;
  OptimizerOptions opts;
  double tolerance = 1e-7;  // relative slack tolerance, normalized by max(|lhs|,|rhs|,1)
};

struct InequalityCheck {
  std::string id;
  std::string description;
  std::string applicability;
  std::string sensitivity;
  std::string source;
  std::vector<std::string> flags;
};

// One evaluated inequality a <= b.
struct CheckPair {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  Verdict verdict = Verdict::Holds;
};

struct CheckReport {
  std::string id;
  std::vector<CheckPair> pairs;
  Verdict verdict = Verdict::Holds;  // worst pairwise verdict
  std::optional<ComplexVector> witness;
  std::string digest;
  bool escalated = false;
  // parameter echo
  double p = 2.0;
  std::optional<double> q;
  double r = 1.0;
  double alpha = 0.5;
  std::optional<double> beta;
  Complex lambda{0.0, 0.0};
  std::uint64_t rng_seed = 0;
  double tolerance = 1e-7;
};

// All 39 entries (C1-C30, LC1-LC5, P1-P4) in stable order.
std::vector<InequalityCheck> catalog_list();

bool is_known_check(const std::string& id);

// Evaluates both sides of the entry on the given inputs. Throws
// UnknownCheckError or NotApplicableError (naming the violated constraint).
// An inconclusive first pass is retried once with restarts x4 and
// max_iters x2 before reporting.
CheckReport evaluate_check(const std::string& id, const CheckParams& params);

}  // namespace opradius

#endif
