#include "opradius/catalog.hpp"

#include "opradius/ensembles.hpp"
#include "opradius/linalg.hpp"
#include "opradius/rng.hpp"
#include "src/catalog_detail.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

namespace opradius {

namespace detail {

Quantity q_add(const Quantity& a, const Quantity& b) {
  return {a.point + b.point, a.lo + b.lo, a.hi + b.hi};
}

Quantity q_scale(double c, const Quantity& a) {
  if (c == 0.0) return q_exact(0.0);
  return {c * a.point, c * a.lo, c * a.hi};
}

Quantity q_max(const Quantity& a, const Quantity& b) {
  return {std::max(a.point, b.point), std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Quantity q_pow(const Quantity& a, double e) {
  const auto f = [e](double v) { return std::pow(std::max(v, 0.0), e); };
  return {f(a.point), f(a.lo), std::isinf(a.hi) ? kInf : f(a.hi)};
}

std::uint64_t fnv_bytes(const void* data, std::size_t size, std::uint64_t h) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

namespace {

constexpr std::uint64_t kFnvSeed = 0xCBF29CE484222325ULL;

std::uint64_t fnv_double(double v, std::uint64_t h) {
  return fnv_bytes(&v, sizeof(v), h);
}

std::uint64_t fnv_matrix(const ComplexMatrix& m, std::uint64_t h) {
  const auto rows = static_cast<std::int64_t>(m.rows());
  h = fnv_bytes(&rows, sizeof(rows), h);
  return fnv_bytes(m.data(), sizeof(Complex) * static_cast<std::size_t>(m.size()), h);
}

std::uint64_t fnv_tuple(const OperatorTuple& t, std::uint64_t h) {
  for (const auto& op : t.operators) h = fnv_matrix(op, h);
  return h;
}

std::uint64_t fnv_opts(const OptimizerOptions& o, std::uint64_t h) {
  h = fnv_bytes(&o.restarts, sizeof(o.restarts), h);
  h = fnv_bytes(&o.max_iters, sizeof(o.max_iters), h);
  h = fnv_double(o.gtol, h);
  h = fnv_bytes(&o.theta_grid, sizeof(o.theta_grid), h);
  h = fnv_bytes(&o.rng_seed, sizeof(o.rng_seed), h);
  return h;
}

double pow2(double e) { return std::pow(2.0, e); }

bool nearly_hermitian(const ComplexMatrix& m) { return hermitian_defect(m) <= 1e-10; }

// |T|^e computed from one eigendecomposition of T^* T.
ComplexMatrix abs_power(const ComplexMatrix& t, double e) {
  const ComplexMatrix gram = t.adjoint() * t;
  HermitianEig eig = hermitian_eig((gram + gram.adjoint()) / 2.0);
  Eigen::VectorXd powered(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    powered[i] = std::pow(std::max(eig.eigenvalues[i], 0.0), e / 2.0);
  }
  ComplexMatrix out = eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

// X^e for Hermitian positive semidefinite X (tiny negative rounding clamped).
ComplexMatrix psd_matrix_power(const ComplexMatrix& x, double e) {
  HermitianEig eig = hermitian_eig((x + x.adjoint()) / 2.0);
  Eigen::VectorXd powered(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    powered[i] = std::pow(std::max(eig.eigenvalues[i], 0.0), e);
  }
  ComplexMatrix out = eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

Complex inner(const ComplexMatrix& a, const ComplexVector& x, const ComplexVector& y) {
  // <Ax, y> with the inner product linear in its first argument.
  return y.dot(a * x);
}

OperatorTuple make_pair_tuple(const ComplexMatrix& b, const ComplexMatrix& c) {
  OperatorTuple t;
  t.operators = {b, c};
  return t;
}

}  // namespace

Quantity EvalContext::w(const ComplexMatrix& a) {
  std::uint64_t key = fnv_bytes("W", 1, kFnvSeed);
  key = fnv_matrix(a, key);
  key = fnv_opts(opts, key);
  auto it = memo.find(key);
  if (it == memo.end()) {
    it = memo.emplace(key, numerical_radius(a, opts)).first;
  }
  if (!witness.has_value()) witness = it->second.witness;
  return q_encl(it->second.value, it->second.upper.value_or(kInf));
}

Quantity EvalContext::wp(const OperatorTuple& t, double p) {
  std::uint64_t key = fnv_bytes("P", 1, kFnvSeed);
  key = fnv_tuple(t, key);
  key = fnv_double(p, key);
  key = fnv_opts(opts, key);
  auto it = memo.find(key);
  if (it == memo.end()) {
    it = memo.emplace(key, wp_radius(t, p, opts)).first;
  }
  witness = it->second.witness;
  return q_lower(it->second.value);
}

std::uint64_t params_digest(const EntryDef& entry, const CheckParams& params) {
  std::uint64_t h = fnv_bytes(entry.meta.id.data(), entry.meta.id.size(), kFnvSeed);
  h = fnv_double(params.p, h);
  h = fnv_double(params.q.value_or(-1.0), h);
  h = fnv_double(params.r, h);
  h = fnv_double(params.alpha, h);
  h = fnv_double(params.pair ? params.pair->beta : -1.0, h);
  h = fnv_double(params.lambda.real(), h);
  h = fnv_double(params.lambda.imag(), h);
  h = fnv_bytes(&params.opts.rng_seed, sizeof(params.opts.rng_seed), h);
  h = fnv_tuple(params.primary, h);
  if (params.aux_A) h = fnv_tuple(*params.aux_A, h);
  if (params.aux_B) h = fnv_tuple(*params.aux_B, h);
  if (params.aux_X) h = fnv_matrix(*params.aux_X, h);
  for (const auto& v : params.vectors) {
    h = fnv_bytes(v.data(), sizeof(Complex) * static_cast<std::size_t>(v.size()), h);
  }
  return h;
}

namespace {

Verdict classify(const Quantity& lhs, const Quantity& rhs, double tolerance) {
  const double tol =
      tolerance * std::max({std::abs(lhs.point), std::abs(rhs.point), 1.0});
  if (rhs.point - lhs.point >= -tol) return Verdict::Holds;
  if (!std::isinf(rhs.hi) && lhs.lo > rhs.hi + tol) return Verdict::Violation;
  return Verdict::Inconclusive;
}

Verdict worse(Verdict a, Verdict b) {
  const auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Holds: return 0;
      case Verdict::Inconclusive: return 1;
      case Verdict::Violation: return 2;
    }
    return 2;
  };
  return rank(a) >= rank(b) ? a : b;
}

std::string hex16(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return s;
}

}  // namespace

CheckReport run_entry(const EntryDef& entry, const CheckParams& params, EvalContext& ctx) {
  CheckReport report;
  report.id = entry.meta.id;
  report.p = params.p;
  report.q = params.q;
  report.r = params.r;
  report.alpha = params.alpha;
  if (params.pair) report.beta = params.pair->beta;
  report.lambda = params.lambda;
  report.rng_seed = params.opts.rng_seed;
  report.tolerance = params.tolerance;
  report.digest = hex16(params_digest(entry, params));

  ctx.witness.reset();
  std::vector<PairSpec> pairs = entry.eval(params, ctx);
  report.verdict = Verdict::Holds;
  for (const auto& pair : pairs) {
    CheckPair out;
    out.label = pair.label;
    out.lhs = pair.lhs.point;
    out.rhs = pair.rhs.point;
    out.slack = pair.rhs.point - pair.lhs.point;
    out.verdict = classify(pair.lhs, pair.rhs, params.tolerance);
    report.verdict = worse(report.verdict, out.verdict);
    report.pairs.push_back(std::move(out));
  }
  report.witness = ctx.witness;
  return report;
}

std::string prepare_params(const EntryDef& entry, CheckParams& params) {
  using Kind = InputRecipe::Kind;
  const Kind kind = entry.recipe.kind;

  if (params.primary.operators.empty()) return "primary input is required";
  try {
    validate_tuple(params.primary, "primary");
  } catch (const InvalidSpecError& e) {
    return e.what();
  }

  const int n = params.primary.size();
  const int dim = params.primary.dim();

  if ((kind == Kind::Matrix1 || kind == Kind::MatrixXY || kind == Kind::PsdX) && n != 1) {
    return "requires a single operator";
  }
  if ((kind == Kind::Pair2 || kind == Kind::HermPair2 || kind == Kind::Scalars1x1) && n != 2) {
    return "requires a pair (tuple of length 2)";
  }

  if (params.p < 1.0) return "p must be >= 1";
  if (entry.p_ok && !entry.p_ok(params.p)) return entry.p_constraint;

  if (entry.q_rule == EntryDef::QRule::Conjugate) {
    if (!params.q.has_value()) {
      params.q = params.p / (params.p - 1.0);
    } else if (std::abs(1.0 / params.p + 1.0 / *params.q - 1.0) > 1e-12) {
      return "p and q must be conjugate exponents (1/p + 1/q = 1)";
    }
  } else if (entry.q_rule == EntryDef::QRule::Partner) {
    if (!params.q.has_value()) params.q = params.p;
    if (*params.q < 1.0 || *params.q > params.p) return "requires p >= q >= 1";
  }

  if (entry.axis_r && entry.r_grid.empty() && params.r < 1.0) return "r must be >= 1";
  if (entry.axis_alpha && (params.alpha < 0.0 || params.alpha > 1.0)) {
    return "alpha must lie in [0, 1]";
  }
  if (entry.axis_beta) {
    if (!params.pair.has_value()) params.pair = FunctionPair{0.5};
    if (!(params.pair->beta > 0.0) || params.pair->beta > 1.0) {
      return "function pair exponent must lie in (0, 1]";
    }
  }

  // Tuples and matrices the entry needs but the caller omitted are drawn
  // deterministically from the rng seed.
  const std::uint64_t seed = params.opts.rng_seed;
  if (kind == Kind::PairTuples || kind == Kind::TripleTuples) {
    if (!params.aux_A.has_value()) {
      EnsembleSpec spec{"tuple", dim, n, child_seed(seed, 201), 1.0};
      params.aux_A = draw_tuple(spec);
    } else if (params.aux_A->size() != n || params.aux_A->dim() != dim) {
      return "aux_A must match the primary tuple's shape";
    }
  }
  if (kind == Kind::TripleTuples) {
    if (!params.aux_B.has_value()) {
      EnsembleSpec spec{"tuple", dim, n, child_seed(seed, 202), 1.0};
      params.aux_B = draw_tuple(spec);
    } else if (params.aux_B->size() != n || params.aux_B->dim() != dim) {
      return "aux_B must match the primary tuple's shape";
    }
  }
  if (kind == Kind::TupleWithX) {
    if (!params.aux_X.has_value()) {
      EnsembleSpec spec{"ginibre", dim, 1, child_seed(seed, 203), 1.0};
      params.aux_X = draw_matrix(spec);
    } else if (params.aux_X->rows() != dim || params.aux_X->cols() != dim) {
      return "aux_X must be square with the primary dimension";
    }
  }
  if (kind == Kind::MatrixXY || kind == Kind::PsdX) {
    const std::size_t need = (kind == Kind::PsdX) ? 1 : 2;
    while (params.vectors.size() < need) {
      params.vectors.push_back(
          draw_unit_vector(dim, child_seed(seed, 301 + params.vectors.size())));
    }
    for (std::size_t i = 0; i < need; ++i) {
      if (params.vectors[i].size() != dim) return "probe vectors must match the dimension";
      try {
        validate_unit_vector(params.vectors[i], "probe vector");
      } catch (const InvalidSpecError&) {
        return "probe vectors must have unit norm";
      }
    }
  }
  if (kind == Kind::VectorsXY) {
    while (params.vectors.size() < 2) {
      CounterRng rng(child_seed(seed, 301 + params.vectors.size()));
      ComplexVector v(dim);
      for (int i = 0; i < dim; ++i) {
        double re, im;
        rng.normal_pair(re, im);
        v[i] = Complex(re, im);
      }
      params.vectors.push_back(std::move(v));
    }
    if (params.vectors[0].size() != params.vectors[1].size()) {
      return "probe vectors must share a dimension";
    }
  }
  if (kind == Kind::PsdX) {
    const ComplexMatrix& a = params.primary.operators[0];
    if (!nearly_hermitian(a)) return "requires a positive semidefinite operator";
    HermitianEig eig = hermitian_eig((a + a.adjoint()) / 2.0);
    if (eig.eigenvalues.minCoeff() < -1e-8) {
      return "requires a positive semidefinite operator";
    }
  }

  if (entry.validate) {
    std::string err = entry.validate(params);
    if (!err.empty()) return err;
  }
  return "";
}

namespace {

// ---------------------------------------------------------------------------
// Entry table
// ---------------------------------------------------------------------------

using PairList = std::vector<PairSpec>;

EntryDef make_entry(std::string id, std::string description, std::string applicability,
                    std::string sensitivity, std::string source) {
  EntryDef e;
  e.meta.id = std::move(id);
  e.meta.description = std::move(description);
  e.meta.applicability = std::move(applicability);
  e.meta.sensitivity = std::move(sensitivity);
  e.meta.source = std::move(source);
  return e;
}

const char* kEstGreater = "estimate on the greater side; failures are inconclusive";
const char* kEstLesser = "estimate on the lesser side; violations certifiable";
const char* kCertified = "both sides certified";
const char* kMixed = "mixed: per-part sensitivity";

std::vector<EntryDef> build_entries() {
  std::vector<EntryDef> entries;

  // -- C1 -------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C1", "Norm equivalence: ||A||/2 <= w(A) <= ||A||",
        "any square matrix; p unused (any p >= 1)", kMixed, "intro display");
    e.recipe = {InputRecipe::Kind::Matrix1, 1, 1};
    e.degree1 = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const double nrm = operator_norm(a);
      const Quantity w = C.w(a);
      return {{"norm/2 <= w", q_exact(nrm / 2.0), w}, {"w <= norm", w, q_exact(nrm)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C2 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("C2", "Power inequality: w(A^2) <= w(A)^2",
                            "any square matrix; p unused (any p >= 1)", kCertified,
                            "intro display (power inequality)");
    e.recipe = {InputRecipe::Kind::Matrix1, 1, 1};
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const Quantity lhs = C.w(a * a);
      const Quantity rhs = q_pow(C.w(a), 2.0);
      return {{"w(A^2) <= w(A)^2", lhs, rhs}};
    };
    entries.push_back(std::move(e));
  }

  // -- C3 -------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C3", "Euclidean radius bound: ||S||^{1/2}/(2 sqrt(n)) <= w_e <= ||S||^{1/2}, S = sum T_i T_i^*",
        "tuple of any length; p = 2", kMixed, "two-sided display (1.1)");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const auto& ops = P.primary.operators;
      ComplexMatrix s = ComplexMatrix::Zero(P.primary.dim(), P.primary.dim());
      for (const auto& t : ops) s += t * t.adjoint();
      const double root = std::sqrt(operator_norm(s));
      const Quantity we = C.wp(P.primary, 2.0);
      const double inv = 1.0 / (2.0 * std::sqrt(static_cast<double>(ops.size())));
      return {{"lower <= w_e", q_exact(inv * root), we},
              {"w_e <= upper", we, q_exact(root)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C4 -------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C4", "1/16 ||A^*A + AA^*|| <= w(A)^2 <= 1/2 ||A^*A + AA^*||",
        "any square matrix; p unused (any p >= 1)", kMixed, "intro display");
    e.recipe = {InputRecipe::Kind::Matrix1, 1, 1};
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const double s = operator_norm(a.adjoint() * a + a * a.adjoint());
      const Quantity w2 = q_pow(C.w(a), 2.0);
      return {{"s/16 <= w^2", q_exact(s / 16.0), w2},
              {"w^2 <= s/2", w2, q_exact(s / 2.0)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C5 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("C5", "w_p(T) <= (sum w(T_i)^p)^{1/p} <= sum w(T_i)",
                            "tuple; p >= 1", kMixed, "opening display before Thm 3.1");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const Quantity wp = C.wp(P.primary, P.p);
      Quantity mid_pow = q_exact(0.0);
      Quantity total = q_exact(0.0);
      for (const auto& t : P.primary.operators) {
        const Quantity w = C.w(t);
        mid_pow = q_add(mid_pow, q_pow(w, P.p));
        total = q_add(total, w);
      }
      const Quantity mid = q_pow(mid_pow, 1.0 / P.p);
      return {{"w_p <= lp-mean", wp, mid}, {"lp-mean <= sum", mid, total}};
    };
    entries.push_back(std::move(e));
  }

  // -- C6 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("C6",
                            "Exponent ordering: w_p <= w_q <= 2^{1/q-1/p} w_p for p >= q >= 1",
                            "pair (tuple of length 2); p >= q >= 1", kEstGreater, "Prop 2.4");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.q_rule = EntryDef::QRule::Partner;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const double q = *P.q;
      const Quantity wp = C.wp(P.primary, P.p);
      const Quantity wq = C.wp(P.primary, q);
      return {{"w_p <= w_q", wp, wq},
              {"w_q <= 2^{1/q-1/p} w_p", wq, q_scale(pow2(1.0 / q - 1.0 / P.p), wp)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C7 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("C7", "2^{1/p-2} ||B^*B + C^*C||^{1/2} <= w_p(B,C), p >= 2",
                            "pair; p >= 2", kEstGreater, "Cor 2.5");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const double root = std::sqrt(operator_norm(b.adjoint() * b + c.adjoint() * c));
      return {{"bound <= w_p", q_exact(pow2(1.0 / P.p - 2.0) * root), C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C8 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("C8",
                            "Sharp lower bound: 2^{1/p-1} max(w(B+C), w(B-C)) <= w_p(B,C)",
                            "pair; p >= 1", kEstGreater, "display (2.2)");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const Quantity lhs =
          q_scale(pow2(1.0 / P.p - 1.0), q_max(C.w(b + c), C.w(b - c)));
      return {{"2^{1/p-1} max w(B+-C) <= w_p", lhs, C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C9 -------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C9", "Cartesian lower bounds from the parts of A, p >= 2",
        "single matrix (Cartesian parts derived); p >= 2", kMixed, "Cor 2.6");
    e.recipe = {InputRecipe::Kind::Matrix1, 1, 1};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      auto [b, c] = cartesian_parts(a);
      const double m1 = std::max(operator_norm(b + c), operator_norm(b - c));
      const ComplexMatrix j1 = Complex(1, -1) * a + Complex(1, 1) * a.adjoint();
      const ComplexMatrix j2 = Complex(1, 1) * a + Complex(1, -1) * a.adjoint();
      const double m2 = std::max(operator_norm(j1), operator_norm(j2));
      return {{"2^{1/p-1} max||B+-C|| <= w_p(B,C)", q_exact(pow2(1.0 / P.p - 1.0) * m1),
               C.wp(make_pair_tuple(b, c), P.p)},
              {"2^{1/p-2} max combo <= w(A)", q_exact(pow2(1.0 / P.p - 2.0) * m2), C.w(a)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C10 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C10", "2^{1/p-1} max(w(B), w(C)) <= w_p(B,C); self-adjoint ||A +- A^*|| form",
        "pair; p >= 1; second part needs a self-adjoint pair and p >= 2", kMixed,
        "Cor 2.7 / display (2.3)");
    e.recipe = {InputRecipe::Kind::HermPair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      PairList out;
      out.push_back({"2^{1/p-1} max(w(B),w(C)) <= w_p",
                     q_scale(pow2(1.0 / P.p - 1.0), q_max(C.w(b), C.w(c))),
                     C.wp(P.primary, P.p)});
      if (P.p >= 2.0 && nearly_hermitian(b) && nearly_hermitian(c)) {
        const ComplexMatrix a = b + Complex(0, 1) * c;
        const double m =
            std::max(operator_norm(a + a.adjoint()), operator_norm(a - a.adjoint()));
        out.push_back({"2^{1/p-2} max||A+-A^*|| <= w(A)",
                       q_exact(pow2(1.0 / P.p - 2.0) * m), C.w(a)});
      }
      return out;
    };
    entries.push_back(std::move(e));
  }

  // -- C11 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C11", "Two-sided bounds linking w_p(B,C) and w_p(B+C, B-C), both exponent regimes",
        "pair; p > 1 (regimes p >= 2 and 1 < p <= 2)", kEstGreater, "Prop 2.10");
    e.meta.flags = {"reversed-regime"};
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const OperatorTuple sums = make_pair_tuple(b + c, b - c);
      const Quantity wbc = C.wp(P.primary, P.p);
      const Quantity wpm = C.wp(sums, P.p);
      const Quantity radsum =
          q_pow(q_add(q_pow(C.w(b + c), P.p), q_pow(C.w(b - c), P.p)), 1.0 / P.p);
      const double lo_c = (P.p >= 2.0) ? pow2(1.0 / P.p - 1.0) : pow2(-1.0 / P.p);
      const double hi_c = (P.p >= 2.0) ? pow2(-1.0 / P.p) : pow2(1.0 / P.p - 1.0);
      return {{"scaled w_p(B+C,B-C) <= w_p(B,C)", q_scale(lo_c, wpm), wbc},
              {"w_p(B,C) <= scaled w_p(B+C,B-C)", wbc, q_scale(hi_c, wpm)},
              {"w_p(B,C) <= scaled lp-mean of w(B+-C)", wbc, q_scale(hi_c, radsum)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C12 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C12",
        "2^{2/p-2} max w(B+-C) <= w_p(B,C) <= 2^{1-2/p} (w(B)^p + w(C)^p)^{1/p}",
        "pair; p >= 2; norm forms evaluated for a self-adjoint pair", kMixed, "Remark 2.11");
    e.recipe = {InputRecipe::Kind::HermPair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const Quantity wbc = C.wp(P.primary, P.p);
      const double lo_c = pow2(2.0 / P.p - 2.0);
      const double hi_c = pow2(1.0 - 2.0 / P.p);
      PairList out;
      out.push_back({"2^{2/p-2} max w(B+-C) <= w_p",
                     q_scale(lo_c, q_max(C.w(b + c), C.w(b - c))), wbc});
      out.push_back({"w_p <= 2^{1-2/p} lp-mean of w",
                     wbc,
                     q_scale(hi_c, q_pow(q_add(q_pow(C.w(b), P.p), q_pow(C.w(c), P.p)),
                                         1.0 / P.p))});
      if (nearly_hermitian(b) && nearly_hermitian(c)) {
        const double mlow = std::max(operator_norm(b + c), operator_norm(b - c));
        const double mhigh = std::pow(std::pow(operator_norm(b), P.p) +
                                          std::pow(operator_norm(c), P.p),
                                      1.0 / P.p);
        out.push_back({"2^{2/p-2} max||B+-C|| <= w_p", q_exact(lo_c * mlow), wbc});
        out.push_back({"w_p <= 2^{1-2/p} lp-mean of norms", wbc, q_exact(hi_c * mhigh)});
      }
      return out;
    };
    entries.push_back(std::move(e));
  }

  // -- C13 ------------------------------------------------------------------
  {
    EntryDef e = make_entry("C13", "2^{1/p-1} w(B^2 + C^2)^{1/2} <= w_p(B,C)",
                            "pair; p >= 1", kEstGreater, "Thm 2.12");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const Quantity lhs =
          q_scale(pow2(1.0 / P.p - 1.0), q_pow(C.w(b * b + c * c), 0.5));
      return {{"2^{1/p-1} w(B^2+C^2)^{1/2} <= w_p", lhs, C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C14 ------------------------------------------------------------------
  {
    EntryDef e = make_entry("C14", "Cartesian forms of the B^2 + C^2 lower bound, p >= 2",
                            "single matrix; p >= 2", kMixed, "Cor 2.13");
    e.recipe = {InputRecipe::Kind::Matrix1, 1, 1};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      auto [b, c] = cartesian_parts(a);
      const double root1 = std::sqrt(operator_norm(b * b + c * c));
      const double root2 = std::sqrt(operator_norm(a.adjoint() * a + a * a.adjoint()));
      return {{"2^{1/p-1} ||B^2+C^2||^{1/2} <= w_p(B,C)",
               q_exact(pow2(1.0 / P.p - 1.0) * root1), C.wp(make_pair_tuple(b, c), P.p)},
              {"2^{1/p-3/2} ||A^*A+AA^*||^{1/2} <= w(A)",
               q_exact(pow2(1.0 / P.p - 1.5) * root2), C.w(a)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C15 ------------------------------------------------------------------
  {
    EntryDef e = make_entry("C15", "2^{2/p-3/2} w(B^2 + C^2)^{1/2} <= w_p(B,C), p >= 2",
                            "pair; p >= 2", kEstGreater, "Cor 2.14");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const Quantity lhs =
          q_scale(pow2(2.0 / P.p - 1.5), q_pow(C.w(b * b + c * c), 0.5));
      return {{"2^{2/p-3/2} w(B^2+C^2)^{1/2} <= w_p", lhs, C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C16 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C16", "w_p(B,C) vs w_q((B+C)/2, (B-C)/2) with conjugate exponents, both regimes",
        "pair; p > 1 with conjugate q (regimes p >= 2 and 1 < p <= 2)", kEstGreater,
        "Prop 2.15");
    e.meta.flags = {"reversed-regime"};
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1 (conjugate exponents)";
    e.q_rule = EntryDef::QRule::Conjugate;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const OperatorTuple halves = make_pair_tuple((b + c) / 2.0, (b - c) / 2.0);
      const Quantity wbc = C.wp(P.primary, P.p);
      const Quantity whalves = C.wp(halves, *P.q);
      if (P.p >= 2.0) {
        return {{"w_p(B,C) <= 2^{1/p} w_q(halves)", wbc, q_scale(pow2(1.0 / P.p), whalves)}};
      }
      return {{"w_q(halves) <= w_p(B,C)", whalves, wbc}};
    };
    entries.push_back(std::move(e));
  }

  // -- C17 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C17", "w_p(B,C) vs the q-mean of w((B+-C)/2); self-adjoint norm form",
        "pair; p > 1 with conjugate q; norm form for a self-adjoint pair", kMixed,
        "Cor 2.16");
    e.meta.flags = {"reversed-regime", "both-reverse"};
    e.recipe = {InputRecipe::Kind::HermPair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1 (conjugate exponents)";
    e.q_rule = EntryDef::QRule::Conjugate;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const double q = *P.q;
      const Quantity wbc = C.wp(P.primary, P.p);
      const Quantity qmean = q_pow(
          q_add(q_pow(C.w((b + c) / 2.0), q), q_pow(C.w((b - c) / 2.0), q)), 1.0 / q);
      const bool herm = nearly_hermitian(b) && nearly_hermitian(c);
      const double norm_mean =
          herm ? 0.5 * std::pow(std::pow(operator_norm(b + c), q) +
                                    std::pow(operator_norm(b - c), q),
                                1.0 / q)
               : 0.0;
      PairList out;
      if (P.p >= 2.0) {
        out.push_back({"w_p <= 2^{1/p} q-mean of w", wbc, q_scale(pow2(1.0 / P.p), qmean)});
        if (herm) {
          out.push_back({"w_p <= 2^{1/p} norm form", wbc,
                         q_exact(pow2(1.0 / P.p) * norm_mean)});
        }
      } else {
        out.push_back({"q-mean of w <= w_p", qmean, wbc});
        if (herm) {
          out.push_back({"norm form <= w_p", q_exact(norm_mean), wbc});
        }
      }
      return out;
    };
    entries.push_back(std::move(e));
  }

  // -- C18 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C18", "Conjugate-exponent comparison of w_q and w_p on ((B+C)/2, (B-C)/2)",
        "pair; p > 1 with conjugate q", kEstGreater, "Cor 2.17");
    e.meta.flags = {"reversed-regime"};
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1 (conjugate exponents)";
    e.q_rule = EntryDef::QRule::Conjugate;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const OperatorTuple halves = make_pair_tuple((b + c) / 2.0, (b - c) / 2.0);
      const Quantity wq = C.wp(halves, *P.q);
      const Quantity wp = C.wp(halves, P.p);
      if (P.p <= 2.0) {
        return {{"w_q(halves) <= 2^{1/p} w_p(halves)", wq, q_scale(pow2(1.0 / P.p), wp)}};
      }
      return {{"w_p(halves) <= w_q(halves)", wp, wq}};
    };
    entries.push_back(std::move(e));
  }

  // -- C19 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C19",
        "Weighted sign combinations: max over signs of w(sum +- a_i^{1-1/p} T_i) <= w_p, p > 1",
        "tuple of length <= 6; p > 1; weights in [0,1] summing to 1", kEstGreater,
        "Thm 3.1");
    e.recipe = {InputRecipe::Kind::TupleVar, 2, 6};
    e.degree1 = true;
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1";
    e.validate = [](const CheckParams& P) -> std::string {
      if (P.primary.size() > 6) return "sign enumeration capped at 6 operators";
      if (P.alphas.has_value()) {
        if (static_cast<int>(P.alphas->size()) != P.primary.size()) {
          return "weights must match the tuple length";
        }
        double sum = 0.0;
        for (double a : *P.alphas) {
          if (a < 0.0 || a > 1.0) return "weights must lie in [0, 1]";
          sum += a;
        }
        if (std::abs(sum - 1.0) > 1e-12) return "weights must sum to 1";
      }
      return "";
    };
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const auto& ops = P.primary.operators;
      const int n = P.primary.size();
      std::vector<double> weights =
          P.alphas.value_or(std::vector<double>(n, 1.0 / static_cast<double>(n)));
      std::vector<double> coeff(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        coeff[static_cast<std::size_t>(i)] = std::pow(weights[static_cast<std::size_t>(i)],
                                                      1.0 - 1.0 / P.p);
      }
      Quantity best = q_exact(0.0);
      const unsigned patterns = 1u << (n - 1);
      for (unsigned s = 0; s < patterns; ++s) {
        ComplexMatrix combo = coeff[0] * ops[0];
        for (int i = 1; i < n; ++i) {
          const double sign = ((s >> (i - 1)) & 1u) ? -1.0 : 1.0;
          combo += sign * coeff[static_cast<std::size_t>(i)] * ops[static_cast<std::size_t>(i)];
        }
        best = q_max(best, C.w(combo));
      }
      return {{"max over signs w(combo) <= w_p", best, C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C20 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C20",
        "w_p^{rp}(A_i^* T_i B_i) <= n^{r-1}/2 ||sum ([B_i^* f^2(|T_i|) B_i]^{rp} + [A_i^* g^2(|T_i^*|) A_i]^{rp})||",
        "tuples T, A, B of equal shape; p >= 1; r >= 1; function pair exponent in (0, 1]",
        kEstLesser, "Thm 3.2");
    e.recipe = {InputRecipe::Kind::TripleTuples, 1, 3};
    e.axis_p = true;
    e.axis_r = true;
    e.axis_beta = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const auto& ts = P.primary.operators;
      const auto& as = P.aux_A->operators;
      const auto& bs = P.aux_B->operators;
      const double beta = P.pair->beta;
      const double rp = P.r * P.p;
      const int dim = P.primary.dim();
      OperatorTuple products;
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        products.operators.push_back(as[i].adjoint() * ts[i] * bs[i]);
        const ComplexMatrix bf = bs[i].adjoint() * abs_power(ts[i], 2.0 * beta) * bs[i];
        const ComplexMatrix ag =
            as[i].adjoint() * abs_power(ts[i].adjoint(), 2.0 * (1.0 - beta)) * as[i];
        sum += psd_matrix_power(bf, rp) + psd_matrix_power(ag, rp);
      }
      const Quantity lhs = q_pow(C.wp(products, P.p), rp);
      const double factor = 0.5 * std::pow(static_cast<double>(ts.size()), P.r - 1.0);
      return {{"w_p^{rp}(products) <= bound", lhs, q_exact(factor * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C21 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C21", "w_p^{rp}(T) <= n^{r-1}/2 ||sum (f^{2rp}(|T_i|) + g^{2rp}(|T_i^*|))||",
        "tuple; p >= 1; r >= 1; function pair exponent in (0, 1]", kEstLesser, "Cor 3.3");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.axis_p = true;
    e.axis_r = true;
    e.axis_beta = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const double beta = P.pair->beta;
      const double rp = P.r * P.p;
      const int dim = P.primary.dim();
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (const auto& t : P.primary.operators) {
        sum += abs_power(t, 2.0 * rp * beta) + abs_power(t.adjoint(), 2.0 * rp * (1.0 - beta));
      }
      const Quantity lhs = q_pow(C.wp(P.primary, P.p), rp);
      const double factor =
          0.5 * std::pow(static_cast<double>(P.primary.size()), P.r - 1.0);
      return {{"w_p^{rp} <= bound", lhs, q_exact(factor * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C22 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C22",
        "Square-root pair: w_p^{rp}(A_i^* T_i B_i) <= n^{r-1}/2 ||sum ((B_i^*|T_i|B_i)^{rp} + (A_i^*|T_i^*|A_i)^{rp})||",
        "tuples T, A, B of equal shape; p >= 1; r >= 1", kEstLesser, "Cor 3.4");
    e.recipe = {InputRecipe::Kind::TripleTuples, 1, 3};
    e.axis_p = true;
    e.axis_r = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const auto& ts = P.primary.operators;
      const auto& as = P.aux_A->operators;
      const auto& bs = P.aux_B->operators;
      const double rp = P.r * P.p;
      const int dim = P.primary.dim();
      OperatorTuple products;
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        products.operators.push_back(as[i].adjoint() * ts[i] * bs[i]);
        const ComplexMatrix bf = bs[i].adjoint() * abs_power(ts[i], 1.0) * bs[i];
        const ComplexMatrix ag = as[i].adjoint() * abs_power(ts[i].adjoint(), 1.0) * as[i];
        sum += psd_matrix_power(bf, rp) + psd_matrix_power(ag, rp);
      }
      const Quantity lhs = q_pow(C.wp(products, P.p), rp);
      const double factor = 0.5 * std::pow(static_cast<double>(ts.size()), P.r - 1.0);
      return {{"w_p^{rp}(products) <= bound", lhs, q_exact(factor * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C23 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C23", "w_p^{rp}(A_i^* B_i) <= n^{r-1}/2 ||sum (|B_i|^{2rp} + |A_i|^{2rp})||",
        "tuples A, B of equal shape; p >= 1; r >= 1", kEstLesser, "Cor 3.5");
    e.recipe = {InputRecipe::Kind::PairTuples, 1, 4};
    e.axis_p = true;
    e.axis_r = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const auto& as = P.primary.operators;  // A-tuple
      const auto& bs = P.aux_A->operators;   // B-tuple
      const double rp = P.r * P.p;
      const int dim = P.primary.dim();
      OperatorTuple products;
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (std::size_t i = 0; i < as.size(); ++i) {
        products.operators.push_back(as[i].adjoint() * bs[i]);
        sum += abs_power(bs[i], 2.0 * rp) + abs_power(as[i], 2.0 * rp);
      }
      const Quantity lhs = q_pow(C.wp(products, P.p), rp);
      const double factor = 0.5 * std::pow(static_cast<double>(as.size()), P.r - 1.0);
      return {{"w_p^{rp}(A_i^* B_i) <= bound", lhs, q_exact(factor * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C24 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C24", "w_p^p(T) <= 1/2 ||sum (|T_i|^{2ap} + |T_i^*|^{2(1-a)p})||",
        "tuple; p >= 1; weight alpha in [0, 1]", kEstLesser, "Cor 3.6");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.axis_p = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const int dim = P.primary.dim();
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (const auto& t : P.primary.operators) {
        sum += abs_power(t, 2.0 * P.alpha * P.p) +
               abs_power(t.adjoint(), 2.0 * (1.0 - P.alpha) * P.p);
      }
      const Quantity lhs = q_pow(C.wp(P.primary, P.p), P.p);
      return {{"w_p^p <= bound", lhs, q_exact(0.5 * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C25 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C25", "Two-operator form: w_p^p(B,C) <= 1/2 || |B|^{2ap} + |B^*|^{2(1-a)p} + |C|^{2ap} + |C^*|^{2(1-a)p} ||",
        "pair; p >= 1; alpha in [0, 1]", kEstLesser, "Cor 3.7");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.axis_p = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const double ea = 2.0 * P.alpha * P.p;
      const double eb = 2.0 * (1.0 - P.alpha) * P.p;
      const ComplexMatrix sum = abs_power(b, ea) + abs_power(b.adjoint(), eb) +
                                abs_power(c, ea) + abs_power(c.adjoint(), eb);
      const Quantity lhs = q_pow(C.wp(P.primary, P.p), P.p);
      return {{"w_p^p(B,C) <= bound", lhs, q_exact(0.5 * operator_norm(sum))}};
    };
    entries.push_back(std::move(e));
  }

  // -- C26 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C26", "w_p(T) <= 1/2 ||sum (|T_i|^{2a} + |T_i^*|^{2(1-a)})^p||^{1/p}",
        "tuple; p >= 1; alpha in [0, 1]", kEstLesser, "Prop 3.8");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const int dim = P.primary.dim();
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (const auto& t : P.primary.operators) {
        const ComplexMatrix term =
            abs_power(t, 2.0 * P.alpha) + abs_power(t.adjoint(), 2.0 * (1.0 - P.alpha));
        sum += psd_matrix_power(term, P.p);
      }
      const double rhs = 0.5 * std::pow(operator_norm(sum), 1.0 / P.p);
      return {{"w_p <= bound", C.wp(P.primary, P.p), q_exact(rhs)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C27 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C27", "w_p(T) <= ||sum (a |T_i|^p + (1-a) |T_i^*|^p)||^{1/p}, p >= 2",
        "tuple; p >= 2; alpha in [0, 1]", kEstLesser, "Prop 3.9");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.axis_alpha = true;
    e.p_ok = [](double p) { return p >= 2.0; };
    e.p_constraint = "requires p >= 2";
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const int dim = P.primary.dim();
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      for (const auto& t : P.primary.operators) {
        sum += P.alpha * abs_power(t, P.p) + (1.0 - P.alpha) * abs_power(t.adjoint(), P.p);
      }
      const double rhs = std::pow(operator_norm(sum), 1.0 / P.p);
      return {{"w_p <= bound", C.wp(P.primary, P.p), q_exact(rhs)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C28 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C28", "Special cases of the a-weighted |T|^p bound (a = 1/2; two operators)",
        "pair; alpha = 1/2 part needs p >= 1; general alpha part needs p >= 2", kEstLesser,
        "Remark 3.10");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.axis_p = true;
    e.axis_alpha = true;
    e.validate = [](const CheckParams& P) -> std::string {
      if (P.p < 2.0 && std::abs(P.alpha - 0.5) > 1e-15) {
        return "general weights need p >= 2; weight 1/2 allows p >= 1";
      }
      return "";
    };
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const Quantity lhs = q_pow(C.wp(P.primary, P.p), P.p);
      PairList out;
      if (std::abs(P.alpha - 0.5) <= 1e-15) {
        const ComplexMatrix sum = abs_power(b, P.p) + abs_power(b.adjoint(), P.p) +
                                  abs_power(c, P.p) + abs_power(c.adjoint(), P.p);
        out.push_back({"w_p^p <= half-weight bound", lhs,
                       q_exact(0.5 * operator_norm(sum))});
      }
      if (P.p >= 2.0) {
        const ComplexMatrix sum = P.alpha * abs_power(b, P.p) +
                                  (1.0 - P.alpha) * abs_power(b.adjoint(), P.p) +
                                  P.alpha * abs_power(c, P.p) +
                                  (1.0 - P.alpha) * abs_power(c.adjoint(), P.p);
        out.push_back({"w_p^p <= weighted bound", lhs, q_exact(operator_norm(sum))});
      }
      return out;
    };
    entries.push_back(std::move(e));
  }

  // -- C29 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C29", "w_p(T) <= (sum ||a |T_i|^{2r} + (1-a) |T_i^*|^{2r}||^{p/2r})^{1/p}",
        "tuple; p >= 1; r >= 1; alpha in [0, 1]", kEstLesser, "Prop 3.11");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.axis_r = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      double sum = 0.0;
      for (const auto& t : P.primary.operators) {
        const ComplexMatrix mix = P.alpha * abs_power(t, 2.0 * P.r) +
                                  (1.0 - P.alpha) * abs_power(t.adjoint(), 2.0 * P.r);
        sum += std::pow(operator_norm(mix), P.p / (2.0 * P.r));
      }
      const double rhs = std::pow(sum, 1.0 / P.p);
      return {{"w_p <= bound", C.wp(P.primary, P.p), q_exact(rhs)}};
    };
    entries.push_back(std::move(e));
  }

  // -- C30 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "C30", "Two-operator special cases of the 2r-power bound",
        "pair; p >= 1; r >= 1; alpha in [0, 1]", kEstLesser, "Remark 3.12");
    e.recipe = {InputRecipe::Kind::Pair2, 2, 2};
    e.degree1 = true;
    e.axis_p = true;
    e.axis_r = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& b = P.primary.operators[0];
      const ComplexMatrix& c = P.primary.operators[1];
      const double ex = P.p / (2.0 * P.r);
      const ComplexMatrix mb = P.alpha * abs_power(b, 2.0 * P.r) +
                               (1.0 - P.alpha) * abs_power(b.adjoint(), 2.0 * P.r);
      const ComplexMatrix mc = P.alpha * abs_power(c, 2.0 * P.r) +
                               (1.0 - P.alpha) * abs_power(c.adjoint(), 2.0 * P.r);
      const double rhs =
          std::pow(std::pow(operator_norm(mb), ex) + std::pow(operator_norm(mc), ex),
                   1.0 / P.p);
      return {{"w_p(B,C) <= bound", C.wp(P.primary, P.p), q_exact(rhs)}};
    };
    entries.push_back(std::move(e));
  }

  // -- LC1 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "LC1",
        "Scalar Young / power-mean chain: a^t b^{1-t} <= t a + (1-t) b <= (t a^r + (1-t) b^r)^{1/r}",
        "scalar operands |T1(0,0)|, |T2(0,0)|; alpha in [0,1]; r >= 1; p unused (any p >= 1)",
        kCertified, "Lemma 2.1(a)");
    e.recipe = {InputRecipe::Kind::Scalars1x1, 2, 2};
    e.degree1 = true;
    e.axis_r = true;
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext&) -> PairList {
      const double a = std::abs(P.primary.operators[0](0, 0));
      const double b = std::abs(P.primary.operators[1](0, 0));
      const double t = P.alpha;
      const double v1 = std::pow(a, t) * std::pow(b, 1.0 - t);
      const double v2 = t * a + (1.0 - t) * b;
      const double v3 = std::pow(t * std::pow(a, P.r) + (1.0 - t) * std::pow(b, P.r), 1.0 / P.r);
      return {{"geometric <= arithmetic", q_exact(v1), q_exact(v2)},
              {"arithmetic <= power mean", q_exact(v2), q_exact(v3)}};
    };
    entries.push_back(std::move(e));
  }

  // -- LC2 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "LC2", "Mixed Schwarz: |<Ax,y>|^2 <= <|A|^{2a} x,x> <|A^*|^{2(1-a)} y,y>",
        "matrix with unit vectors x, y; alpha in [0,1]; p unused (any p >= 1)", kCertified,
        "Lemma 2.1(b)");
    e.recipe = {InputRecipe::Kind::MatrixXY, 1, 1};
    e.axis_alpha = true;
    e.eval = [](const CheckParams& P, EvalContext&) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const ComplexVector& x = P.vectors[0];
      const ComplexVector& y = P.vectors[1];
      const double lhs = std::norm(inner(a, x, y));
      const double t1 = x.dot(abs_power(a, 2.0 * P.alpha) * x).real();
      const double t2 = y.dot(abs_power(a.adjoint(), 2.0 * (1.0 - P.alpha)) * y).real();
      return {{"|<Ax,y>|^2 <= product", q_exact(lhs), q_exact(t1 * t2)}};
    };
    entries.push_back(std::move(e));
  }

  // -- LC3 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "LC3", "Function-pair Schwarz: |<Ax,y>| <= ||f(|A|) x|| ||g(|A^*|) y||",
        "matrix with unit vectors x, y; exponent beta in (0,1]; p unused (any p >= 1)",
        kCertified, "Lemma 2.1(c)");
    e.recipe = {InputRecipe::Kind::MatrixXY, 1, 1};
    e.axis_beta = true;
    e.eval = [](const CheckParams& P, EvalContext&) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const ComplexVector& x = P.vectors[0];
      const ComplexVector& y = P.vectors[1];
      const double beta = P.pair->beta;
      const double lhs = std::abs(inner(a, x, y));
      const double rhs = (abs_power(a, beta) * x).norm() *
                         (abs_power(a.adjoint(), 1.0 - beta) * y).norm();
      return {{"|<Ax,y>| <= product of norms", q_exact(lhs), q_exact(rhs)}};
    };
    entries.push_back(std::move(e));
  }

  // -- LC4 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "LC4",
        "Convexity bound: <Ax,x>^r <= <A^r x,x> for r >= 1 (reversed for 0 < r <= 1), A PSD",
        "positive semidefinite matrix with unit vector; r > 0 (regime split at 1); p unused (any p >= 1)",
        kCertified, "Lemma 2.2 (McCarthy)");
    e.recipe = {InputRecipe::Kind::PsdX, 1, 1};
    e.axis_r = true;
    e.r_grid = {0.5, 1.0, 2.0};
    e.validate = [](const CheckParams& P) -> std::string {
      if (!(P.r > 0.0)) return "r must be > 0";
      return "";
    };
    e.eval = [](const CheckParams& P, EvalContext&) -> PairList {
      const ComplexMatrix& a = P.primary.operators[0];
      const ComplexVector& x = P.vectors[0];
      const double u = std::max(x.dot(a * x).real(), 0.0);
      const double v = x.dot(psd_power(a, P.r) * x).real();
      if (P.r >= 1.0) {
        return {{"<Ax,x>^r <= <A^r x,x>", q_exact(std::pow(u, P.r)), q_exact(v)}};
      }
      return {{"<A^r x,x> <= <Ax,x>^r", q_exact(v), q_exact(std::pow(u, P.r))}};
    };
    entries.push_back(std::move(e));
  }

  // -- LC5 ------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "LC5", "Parallelogram-type norm inequalities in both exponent regimes",
        "vector pair (plus the scalar pair of their first components); p > 1 with conjugate q",
        kCertified, "Lemma 2.3 (Clarkson)");
    e.recipe = {InputRecipe::Kind::VectorsXY, 1, 1};
    e.axis_p = true;
    e.p_ok = [](double p) { return p > 1.0; };
    e.p_constraint = "requires p > 1 (conjugate exponents)";
    e.q_rule = EntryDef::QRule::Conjugate;
    e.eval = [](const CheckParams& P, EvalContext&) -> PairList {
      const double p = P.p;
      const double q = *P.q;
      PairList out;
      const auto emit = [&](double nx, double ny, double npl, double nmi,
                            const std::string& tag) {
        const double sp = std::pow(nx, p) + std::pow(ny, p);
        const double sq = std::pow(nx, q) + std::pow(ny, q);
        const double tp = std::pow(npl, p) + std::pow(nmi, p);
        const double tq = std::pow(npl, q) + std::pow(nmi, q);
        const Quantity a1 = q_exact(2.0 * std::pow(sp, q - 1.0));
        const Quantity a2 = q_exact(tq);
        const Quantity b1 = q_exact(2.0 * sp);
        const Quantity b2 = q_exact(tp);
        const Quantity b3 = q_exact(std::pow(2.0, p - 1.0) * sp);
        const Quantity c1 = q_exact(tp);
        const Quantity c2 = q_exact(2.0 * std::pow(sq, p - 1.0));
        if (p >= 2.0) {
          out.push_back({tag + " (a)", a1, a2});
          out.push_back({tag + " (b) lower", b1, b2});
          out.push_back({tag + " (b) upper", b2, b3});
          out.push_back({tag + " (c)", c1, c2});
        } else {
          out.push_back({tag + " (a)", a2, a1});
          out.push_back({tag + " (b) lower", b2, b1});
          out.push_back({tag + " (b) upper", b3, b2});
          out.push_back({tag + " (c)", c2, c1});
        }
      };
      const ComplexVector& x = P.vectors[0];
      const ComplexVector& y = P.vectors[1];
      emit(x.norm(), y.norm(), (x + y).norm(), (x - y).norm(), "vectors");
      const Complex sx = x[0];
      const Complex sy = y[0];
      emit(std::abs(sx), std::abs(sy), std::abs(sx + sy), std::abs(sx - sy), "scalars");
      return out;
    };
    entries.push_back(std::move(e));
  }

  // -- P1 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("P1", "Definiteness: w_p(T) = 0 exactly for the zero tuple",
                            "tuple; p >= 1", kMixed, "norm axiom (i)");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      double maxentry = 0.0;
      double maxnorm = 0.0;
      for (const auto& t : P.primary.operators) {
        maxentry = std::max(maxentry, t.cwiseAbs().maxCoeff());
        maxnorm = std::max(maxnorm, operator_norm(t));
      }
      if (maxentry == 0.0) {
        return {{"w_p(zero tuple) <= 0", C.wp(P.primary, P.p), q_exact(0.0)}};
      }
      return {{"max ||T_i||/2 <= w_p", q_exact(maxnorm / 2.0), C.wp(P.primary, P.p)}};
    };
    entries.push_back(std::move(e));
  }

  // -- P2 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("P2", "Absolute homogeneity: w_p(lambda T) = |lambda| w_p(T)",
                            "tuple and scalar lambda; p >= 1", kEstGreater,
                            "norm axiom (ii)");
    e.recipe = {InputRecipe::Kind::TupleVar, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.needs_lambda = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      OperatorTuple scaled;
      for (const auto& t : P.primary.operators) scaled.operators.push_back(P.lambda * t);
      const Quantity lhs = C.wp(scaled, P.p);
      const Quantity rhs = q_scale(std::abs(P.lambda), C.wp(P.primary, P.p));
      return {{"w_p(lambda T) <= |lambda| w_p(T)", lhs, rhs},
              {"|lambda| w_p(T) <= w_p(lambda T)", rhs, lhs}};
    };
    entries.push_back(std::move(e));
  }

  // -- P3 -------------------------------------------------------------------
  {
    EntryDef e = make_entry("P3", "Triangle inequality: w_p(T + T') <= w_p(T) + w_p(T')",
                            "two tuples of equal shape; p >= 1", kEstGreater,
                            "norm axiom (iii)");
    e.recipe = {InputRecipe::Kind::PairTuples, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      OperatorTuple sum;
      for (int i = 0; i < P.primary.size(); ++i) {
        sum.operators.push_back(P.primary.operators[static_cast<std::size_t>(i)] +
                                P.aux_A->operators[static_cast<std::size_t>(i)]);
      }
      const Quantity lhs = C.wp(sum, P.p);
      const Quantity rhs = q_add(C.wp(P.primary, P.p), C.wp(*P.aux_A, P.p));
      return {{"w_p(T+T') <= w_p(T) + w_p(T')", lhs, rhs}};
    };
    entries.push_back(std::move(e));
  }

  // -- P4 -------------------------------------------------------------------
  {
    EntryDef e = make_entry(
        "P4", "Transformation bound: w_p(X^* T_1 X, ...) <= ||X||^2 w_p(T)",
        "tuple and a matrix X; p >= 1", kEstGreater, "norm axiom (iv)");
    e.recipe = {InputRecipe::Kind::TupleWithX, 1, 4};
    e.degree1 = true;
    e.axis_p = true;
    e.eval = [](const CheckParams& P, EvalContext& C) -> PairList {
      const ComplexMatrix& x = *P.aux_X;
      OperatorTuple conj;
      for (const auto& t : P.primary.operators) {
        conj.operators.push_back(x.adjoint() * t * x);
      }
      const double xnorm = operator_norm(x);
      const Quantity lhs = C.wp(conj, P.p);
      const Quantity rhs = q_scale(xnorm * xnorm, C.wp(P.primary, P.p));
      return {{"w_p(X^* T X) <= ||X||^2 w_p(T)", lhs, rhs}};
    };
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<EntryDef>& entry_table() {
  static const std::vector<EntryDef> table = build_entries();
  return table;
}

const EntryDef* find_entry(const std::string& id) {
  for (const auto& entry : entry_table()) {
    if (entry.meta.id == id) return &entry;
  }
  return nullptr;
}

}  // namespace detail

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Violation: return "VIOLATION";
  }
  return "VIOLATION";
}

std::vector<InequalityCheck> catalog_list() {
  std::vector<InequalityCheck> out;
  out.reserve(detail::entry_table().size());
  for (const auto& entry : detail::entry_table()) out.push_back(entry.meta);
  return out;
}

bool is_known_check(const std::string& id) { return detail::find_entry(id) != nullptr; }

CheckReport evaluate_check(const std::string& id, const CheckParams& params) {
  const detail::EntryDef* entry = detail::find_entry(id);
  if (entry == nullptr) {
    throw UnknownCheckError("unknown check id '" + id + "'");
  }
  CheckParams prepared = params;
  const std::string err = detail::prepare_params(*entry, prepared);
  if (!err.empty()) {
    throw NotApplicableError(id + ": " + err);
  }

  detail::EvalContext ctx(prepared.opts);
  CheckReport report = detail::run_entry(*entry, prepared, ctx);
  if (report.verdict != Verdict::Inconclusive) {
    return report;
  }

  CheckParams bumped = prepared;
  bumped.opts.restarts *= 4;
  bumped.opts.max_iters *= 2;
  detail::EvalContext ctx2(bumped.opts);
  CheckReport retry = detail::run_entry(*entry, bumped, ctx2);
  retry.escalated = true;
  return retry;
}

}  // namespace opradius
