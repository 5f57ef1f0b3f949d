// Copyright (c) 2026 The svqe developers
// SPDX-License-Identifier: Apache-2.0

#ifndef SVQE_SERIALIZE_HPP
#define SVQE_SERIALIZE_HPP

#include <string>
#include <vector>

#include "svqe/noise.hpp"
#include "svqe/pauli.hpp"
#include "svqe/positivity.hpp"
#include "svqe/symmetry.hpp"
#include "svqe/tomography.hpp"
#include "svqe/vqe.hpp"

namespace svqe {

/// Deterministic shortest-precision-preserving text form of a double
/// (printf %.17g); infinities serialize as "inf" / "-inf".
std::string format_double(double value);

// JSON round trips for the file-format types. Parsing throws SchemaError on
// malformed input.

std::string to_json_string(const PauliVector& vec, int indent = -1);
PauliVector pauli_vector_from_json_string(const std::string& text);

std::string to_json_string(const NoiseModel& noise, int indent = -1);
NoiseModel noise_model_from_json_string(const std::string& text);

std::string to_json_string(const MeasurementModel& model, int indent = -1);
MeasurementModel measurement_model_from_json_string(const std::string& text);

std::string to_json_string(const SymmetrySpec& spec, int indent = -1);
SymmetrySpec symmetry_spec_from_json_string(const std::string& text);

std::string to_json_string(const ProjectionReport& report, int indent = -1);

std::string to_json_string(const RunResult& run, int indent = -1);
RunResult run_result_from_json_string(const std::string& text);

/// CSV with header `prerotation_index,m_q1,m_q0,m_corr,n_meas`.
std::string records_to_csv(const std::vector<TomographyRecord>& records);
std::vector<TomographyRecord> records_from_csv(const std::string& text);

}  // namespace svqe

#endif  // SVQE_SERIALIZE_HPP
