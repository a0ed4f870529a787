#include "opradius/serialization.hpp"

#include <fstream>
#include <sstream>

namespace opradius {

namespace {

double number_at(const Json& j, const std::string& context) {
  if (!j.is_number()) throw ParseError(context + ": expected a number");
  return j.get<double>();
}

Complex complex_at(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(context + ": expected [re, im]");
  }
  return {number_at(j[0], context), number_at(j[1], context)};
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    entries.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ParseError("matrix: expected {\"dim\":..., \"entries\":...}");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw ParseError("matrix: dim must be a positive integer");
  }
  const Eigen::Index n = j["dim"].get<Eigen::Index>();
  const Json& entries = j["entries"];
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n) {
    throw ParseError("matrix: entries must be an n-row array");
  }
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("matrix: row " + std::to_string(i) + " must hold n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = complex_at(row[static_cast<std::size_t>(k)],
                           "matrix entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  }
  if (!m.allFinite()) throw ParseError("matrix: entries must be finite");
  return m;
}

Json tuple_to_json(const OperatorTuple& t) {
  Json ops = Json::array();
  for (const auto& op : t.operators) ops.push_back(matrix_to_json(op));
  return Json{{"dim", t.dim()}, {"operators", std::move(ops)}};
}

OperatorTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("operators")) {
    throw ParseError("tuple: expected {\"dim\":..., \"operators\":[...]}");
  }
  const Json& ops = j["operators"];
  if (!ops.is_array() || ops.empty()) {
    throw ParseError("tuple: operators must be a nonempty array");
  }
  OperatorTuple t;
  t.operators.reserve(ops.size());
  for (const auto& op : ops) t.operators.push_back(matrix_from_json(op));
  validate_tuple(t, "tuple");
  if (j.contains("dim") && j["dim"].get<Eigen::Index>() != t.dim()) {
    throw ParseError("tuple: dim field disagrees with operators");
  }
  return t;
}

Json vector_to_json(const ComplexVector& x) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    arr.push_back(Json::array({x[i].real(), x[i].imag()}));
  }
  return arr;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector: expected a nonempty array");
  ComplexVector x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    x[static_cast<Eigen::Index>(i)] = complex_at(j[i], "vector entry " + std::to_string(i));
  }
  return x;
}

Json estimate_to_json(const RadiusEstimate& e) {
  Json j;
  j["value"] = e.value;
  if (e.upper.has_value()) {
    j["upper"] = *e.upper;
  } else {
    j["upper"] = nullptr;
  }
  j["witness"] = vector_to_json(e.witness);
  j["restarts_used"] = e.restarts_used;
  j["converged"] = e.converged;
  return j;
}

Json ensemble_to_json(const EnsembleSpec& spec) {
  return Json{{"kind", spec.kind},
              {"dim", spec.dim},
              {"length", spec.length},
              {"seed", spec.seed},
              {"scale", spec.scale}};
}

EnsembleSpec ensemble_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("ensemble: expected {\"kind\":..., ...}");
  }
  EnsembleSpec spec;
  spec.kind = j["kind"].get<std::string>();
  if (j.contains("dim")) spec.dim = j["dim"].get<int>();
  if (j.contains("length")) spec.length = j["length"].get<int>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("scale")) spec.scale = j["scale"].get<double>();
  return spec;
}

Json parse_json(const std::string& text, const std::string& context) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(context + ": invalid JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

}  // namespace opradius
