#ifndef OPRADIUS_CATALOG_DETAIL_HPP
#define OPRADIUS_CATALOG_DETAIL_HPP

#include "opradius/catalog.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>

namespace opradius::detail {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A computed side of an inequality: the point value plus whatever certified
// bracket is available. Ascent estimates certify only a lower bound; the
// angle-sweep radius certifies both ends; norms and eigenvalue arithmetic are
// treated as exact.
struct Quantity {
  double point = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

inline Quantity q_exact(double v) { return {v, v, v}; }
inline Quantity q_lower(double v) { return {v, v, kInf}; }
inline Quantity q_encl(double v, double u) { return {v, v, u}; }

Quantity q_add(const Quantity& a, const Quantity& b);
Quantity q_scale(double c, const Quantity& a);  // c >= 0
Quantity q_max(const Quantity& a, const Quantity& b);
Quantity q_pow(const Quantity& a, double e);  // e > 0, nonnegative base

struct PairSpec {
  std::string label;
  Quantity lhs;
  Quantity rhs;
};

// Shared evaluation state: optimizer options, a memo for radius calls keyed
// by input bytes, and the first witness seen (surfaced in reports).
struct EvalContext {
  OptimizerOptions opts;
  std::unordered_map<std::uint64_t, RadiusEstimate> memo;
  std::optional<ComplexVector> witness;

  explicit EvalContext(const OptimizerOptions& o) : opts(o) {}

  Quantity w(const ComplexMatrix& a);
  Quantity wp(const OperatorTuple& t, double p);
};

// How the verification suite draws inputs for an entry.
struct InputRecipe {
  enum class Kind {
    Matrix1,      // primary = single matrix
    Pair2,        // primary = general pair
    HermPair2,    // primary = Hermitian pair
    TupleVar,     // primary = tuple, length in [len_min, len_max]
    TripleTuples, // primary = T, aux_A = A, aux_B = B
    PairTuples,   // primary plus aux_A of the same shape
    Scalars1x1,   // primary = two 1x1 operators (scalar operands)
    MatrixXY,     // primary = single matrix, two unit probe vectors
    PsdX,         // primary = PSD matrix, one unit probe vector
    VectorsXY,    // two free (non-unit) probe vectors
    TupleWithX,   // primary tuple plus transformation matrix aux_X
  };
  Kind kind = Kind::Matrix1;
  int len_min = 1;
  int len_max = 4;
};

struct EntryDef {
  InequalityCheck meta;
  InputRecipe recipe;
  bool degree1 = false;  // every side scales linearly with the inputs

  bool axis_p = false;
  std::function<bool(double)> p_ok;  // null = any p >= 1
  std::string p_constraint;          // message when p_ok fails
  enum class QRule { None, Conjugate, Partner } q_rule = QRule::None;
  bool axis_r = false;
  std::vector<double> r_grid;  // empty = suite default
  bool axis_alpha = false;
  bool axis_beta = false;
  bool needs_lambda = false;

  // Extra applicability validation beyond the p/q machinery; returns the
  // violated constraint or an empty string.
  std::function<std::string(const CheckParams&)> validate;

  std::function<std::vector<PairSpec>(const CheckParams&, EvalContext&)> eval;
};

const std::vector<EntryDef>& entry_table();
const EntryDef* find_entry(const std::string& id);

// Fills in derived q and drawn inputs; returns the violated constraint or "".
std::string prepare_params(const EntryDef& entry, CheckParams& params);

// Single evaluation pass (no escalation); params must be prepared.
CheckReport run_entry(const EntryDef& entry, const CheckParams& params, EvalContext& ctx);

std::uint64_t fnv_bytes(const void* data, std::size_t size, std::uint64_t h);
std::uint64_t params_digest(const EntryDef& entry, const CheckParams& params);

}  // namespace opradius::detail

#endif
