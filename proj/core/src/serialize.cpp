// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#include "svqe/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "svqe/errors.hpp"

namespace svqe {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("malformed JSON");
  return j;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key))
    throw SchemaError(std::string("missing JSON key `") + key + "`");
  return j.at(key);
}

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

json qubit_params_to_json(const QubitNoiseParams& q) {
  return {{"t1_us", q.t1_us},
          {"t2_star_us", q.t2_star_us},
          {"p_residual", q.p_residual}};
}

QubitNoiseParams qubit_params_from_json(const json& j) {
  QubitNoiseParams q;
  q.t1_us = require(j, "t1_us").get<double>();
  q.t2_star_us = require(j, "t2_star_us").get<double>();
  q.p_residual = require(j, "p_residual").get<double>();
  return q;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_json_string(const PauliVector& vec, int indent) {
  json coeffs = json::object();
  for (std::uint32_t c = 0; c < vec.size(); ++c)
    coeffs[PauliLabel(vec.n_qubits, c).str()] = vec.coeffs[c];
  return dump({{"n_qubits", vec.n_qubits}, {"coeffs", coeffs}}, indent);
}

namespace {

PauliVector pauli_vector_from_json(const json& j) {
  PauliVector vec;
  vec.n_qubits = require(j, "n_qubits").get<int>();
  if (vec.n_qubits < 1 || vec.n_qubits > 6)
    throw SchemaError("PauliVector: n_qubits out of range");
  vec.coeffs = Eigen::VectorXd::Zero(1 << (2 * vec.n_qubits));
  for (const auto& [label, value] : require(j, "coeffs").items()) {
    PauliLabel p = PauliLabel::identity(vec.n_qubits);
    try {
      p = PauliLabel::from_string(label);
    } catch (const std::exception&) {
      throw SchemaError("PauliVector: bad label `" + label + "`");
    }
    if (p.n_qubits() != vec.n_qubits)
      throw SchemaError("PauliVector: label length mismatch");
    vec.coeffs[p.code()] = value.get<double>();
  }
  if (std::abs(vec.coeffs[0] - 1.0) > 1e-9)
    throw SchemaError("PauliVector: identity coefficient must be 1");
  vec.coeffs[0] = 1.0;
  return vec;
}

}  // namespace

PauliVector pauli_vector_from_json_string(const std::string& text) {
  return pauli_vector_from_json(parse(text));
}

std::string to_json_string(const NoiseModel& noise, int indent) {
  return dump({{"q0", qubit_params_to_json(noise.q0)},
               {"q1", qubit_params_to_json(noise.q1)},
               {"t2_star_red_us", noise.t2_star_red_us},
               {"t_int_us", noise.t_int_us},
               {"level", to_string(noise.level)}},
              indent);
}

NoiseModel noise_model_from_json_string(const std::string& text) {
  const json j = parse(text);
  NoiseModel noise;
  noise.q0 = qubit_params_from_json(require(j, "q0"));
  noise.q1 = qubit_params_from_json(require(j, "q1"));
  noise.t2_star_red_us = require(j, "t2_star_red_us").get<double>();
  noise.t_int_us = require(j, "t_int_us").get<double>();
  noise.level = error_level_from_string(require(j, "level").get<std::string>());
  noise.validate();
  return noise;
}

std::string to_json_string(const MeasurementModel& model, int indent) {
  static const char* kChannelNames[3] = {"q1", "q0", "correlation"};
  static const char* kBetaNames[4] = {"II", "IZ", "ZI", "ZZ"};
  json j = json::object();
  for (int ch = 0; ch < 3; ++ch) {
    json betas = json::object();
    for (int b = 0; b < 4; ++b) betas[kBetaNames[b]] = model.betas(ch, b);
    j[kChannelNames[ch]] = betas;
  }
  return dump(j, indent);
}

MeasurementModel measurement_model_from_json_string(const std::string& text) {
  static const char* kChannelNames[3] = {"q1", "q0", "correlation"};
  static const char* kBetaNames[4] = {"II", "IZ", "ZI", "ZZ"};
  const json j = parse(text);
  MeasurementModel model;
  for (int ch = 0; ch < 3; ++ch) {
    const json& betas = require(j, kChannelNames[ch]);
    for (int b = 0; b < 4; ++b)
      model.betas(ch, b) = require(betas, kBetaNames[b]).get<double>();
  }
  return model;
}

std::string to_json_string(const SymmetrySpec& spec, int indent) {
  return dump({{"operator", spec.op.str()}, {"eigenvalue", spec.eigenvalue}},
              indent);
}

SymmetrySpec symmetry_spec_from_json_string(const std::string& text) {
  const json j = parse(text);
  const std::string label = require(j, "operator").get<std::string>();
  const int eigenvalue = require(j, "eigenvalue").get<int>();
  try {
    return {PauliLabel::from_string(label), eigenvalue};
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("SymmetrySpec: ") + e.what());
  }
}

std::string to_json_string(const ProjectionReport& report, int indent) {
  return dump(
      {{"input_min_eigenvalue", report.input_min_eigenvalue},
       {"output", json::parse(to_json_string(report.output))},
       {"l2_distance", report.l2_distance},
       {"converged", report.converged}},
      indent);
}

std::string to_json_string(const RunResult& run, int indent) {
  json trace = json::array();
  for (const auto& [theta, e] : run.trace)
    trace.push_back({{"theta", theta}, {"energy", e}});
  return dump({{"bond_distance", run.bond_distance},
               {"converged_theta", run.converged_theta},
               {"raw_vector", json::parse(to_json_string(run.raw_vector))},
               {"sv_vector", json::parse(to_json_string(run.sv_vector))},
               {"metrics",
                {{"E_raw", run.metrics.E_raw},
                 {"E_sv", run.metrics.E_sv},
                 {"dE_raw", run.metrics.dE_raw},
                 {"dE_sv", run.metrics.dE_sv},
                 {"F_raw", run.metrics.F_raw},
                 {"F_sv", run.metrics.F_sv}}},
               {"trace", trace},
               {"generations", run.generations},
               {"hit_max_generations", run.hit_max_generations}},
              indent);
}

RunResult run_result_from_json_string(const std::string& text) {
  const json j = parse(text);
  RunResult run;
  run.bond_distance = require(j, "bond_distance").get<double>();
  run.converged_theta = require(j, "converged_theta").get<double>();
  run.raw_vector = pauli_vector_from_json(require(j, "raw_vector"));
  run.sv_vector = pauli_vector_from_json(require(j, "sv_vector"));
  const json& m = require(j, "metrics");
  run.metrics.E_raw = require(m, "E_raw").get<double>();
  run.metrics.E_sv = require(m, "E_sv").get<double>();
  run.metrics.dE_raw = require(m, "dE_raw").get<double>();
  run.metrics.dE_sv = require(m, "dE_sv").get<double>();
  run.metrics.F_raw = require(m, "F_raw").get<double>();
  run.metrics.F_sv = require(m, "F_sv").get<double>();
  for (const auto& entry : require(j, "trace"))
    run.trace.emplace_back(require(entry, "theta").get<double>(),
                           require(entry, "energy").get<double>());
  run.generations = require(j, "generations").get<int>();
  run.hit_max_generations = require(j, "hit_max_generations").get<bool>();
  return run;
}

std::string records_to_csv(const std::vector<TomographyRecord>& records) {
  std::ostringstream out;
  out << "prerotation_index,m_q1,m_q0,m_corr,n_meas\n";
  for (const auto& rec : records)
    out << rec.prerotation_index << ',' << format_double(rec.m_q1) << ','
        << format_double(rec.m_q0) << ',' << format_double(rec.m_corr) << ','
        << rec.n_meas << '\n';
  return out.str();
}

std::vector<TomographyRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "prerotation_index,m_q1,m_q0,m_corr,n_meas")
    throw SchemaError("records_from_csv: bad header");
  std::vector<TomographyRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    TomographyRecord rec;
    char* end = nullptr;
    const char* s = line.c_str();
    rec.prerotation_index = static_cast<int>(std::strtol(s, &end, 10));
    for (double* field : {&rec.m_q1, &rec.m_q0, &rec.m_corr}) {
      if (*end != ',') throw ParseError("records_from_csv: bad row", row, 0);
      *field = std::strtod(end + 1, &end);
    }
    if (*end != ',') throw ParseError("records_from_csv: bad row", row, 0);
    rec.n_meas = std::strtoll(end + 1, &end, 10);
    records.push_back(rec);
  }
  return records;
}

}  // namespace svqe
