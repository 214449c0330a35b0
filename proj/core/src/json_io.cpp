// Copyright 2026 The sepfaces developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepfaces/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace sepfaces {

double round_for_wire(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

OrderedJson complex_to_json(Complex z) {
  return OrderedJson::array({round_for_wire(z.real()), round_for_wire(z.imag())});
}

OrderedJson amplitudes_to_json(const Vector& amps) {
  OrderedJson arr = OrderedJson::array();
  for (Eigen::Index i = 0; i < amps.size(); ++i)
    arr.push_back(complex_to_json(amps[i]));
  return arr;
}

OrderedJson subset_to_json(PartySubset subset) {
  OrderedJson arr = OrderedJson::array();
  for (int p : subset.members()) arr.push_back(p + 1);
  return arr;
}

}  // namespace

OrderedJson state_to_json(const PureState& state) {
  OrderedJson doc;
  doc["dims"] = state.shape().dims();
  doc["amplitudes"] = amplitudes_to_json(state.amplitudes());
  return doc;
}

PureState state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("state: expected a JSON object");

  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw std::invalid_argument(
        "dims: expected a nonempty array of party dimensions");
  std::vector<int> dims;
  for (const auto& entry : doc["dims"]) {
    if (!entry.is_number_integer() || entry.get<int>() < 1)
      throw std::invalid_argument("dims: entries must be integers >= 1");
    dims.push_back(entry.get<int>());
  }
  SystemShape shape(dims);

  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
    throw std::invalid_argument("amplitudes: expected an array of [re, im] pairs");
  const auto& amps_doc = doc["amplitudes"];
  if (static_cast<int>(amps_doc.size()) != shape.total_dim())
    throw std::invalid_argument(
        "amplitudes: expected " + std::to_string(shape.total_dim()) +
        " entries for the given dims, got " + std::to_string(amps_doc.size()));
  Vector amps(shape.total_dim());
  for (int i = 0; i < shape.total_dim(); ++i) {
    const auto& pair = amps_doc[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw std::invalid_argument("amplitudes: entries must be [re, im] pairs");
    amps[i] = Complex{pair[0].get<double>(), pair[1].get<double>()};
  }
  if (amps.norm() == 0.0)
    throw std::invalid_argument("amplitudes: zero state");
  return PureState(std::move(shape), std::move(amps));
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("malformed JSON in " + path + ": " +
                                err.what());
  }
  return state_from_json(doc);
}

OrderedJson decomposition_to_json(const GeDecomposition& decomp) {
  OrderedJson doc;
  OrderedJson blocks = OrderedJson::array();
  OrderedJson components = OrderedJson::array();
  for (const GeBlock& block : decomp.blocks()) {
    blocks.push_back(subset_to_json(block.parties));
    components.push_back(amplitudes_to_json(block.component));
  }
  doc["blocks"] = std::move(blocks);
  doc["components"] = std::move(components);
  doc["m"] = decomp.block_count();
  return doc;
}

OrderedJson oracle_result_to_json(const OracleResult& result) {
  OrderedJson doc;
  doc["span_rank"] = result.span_rank;
  doc["dim"] = result.dim;
  doc["saturated"] = result.saturated;
  doc["sv_gap"] = round_for_wire(result.sv_gap);
  doc["seed"] = result.seed;
  doc["samples"] = result.samples;
  return doc;
}

OrderedJson face_report_to_json(const FaceReport& report) {
  OrderedJson doc;
  doc["formula_dim"] = report.formula_dim;
  if (report.oracle) {
    doc["oracle_dim"] = report.oracle->dim;
    doc["saturated"] = report.oracle->saturated;
  } else {
    doc["oracle_dim"] = nullptr;
    doc["saturated"] = nullptr;
  }
  doc["max_induced_dim"] = report.max_induced_dim;
  doc["genuinely_entangled"] = report.genuinely_entangled;
  if (report.theta_scan.empty()) {
    doc["theta_scan"] = nullptr;
  } else {
    OrderedJson scan = OrderedJson::array();
    for (const ThetaScanEntry& entry : report.theta_scan) {
      OrderedJson row;
      row["S"] = subset_to_json(entry.subset);
      row["range_rank"] = entry.range_rank;
      row["in_theta_prime"] = entry.in_theta_prime;
      row["fixes_face"] = entry.fixes_face;
      scan.push_back(std::move(row));
    }
    doc["theta_scan"] = std::move(scan);
  }
  return doc;
}

OrderedJson dual_report_to_json(const DualFaceReport& report) {
  OrderedJson doc;
  doc["zeros_on_V"] = report.zeros_on_v;
  doc["positives_off_V"] = report.positives_off_v;
  doc["max_residual"] = round_for_wire(report.max_residual);
  return doc;
}

OrderedJson hakye33_to_json(const HaKye33Dims& dims) {
  OrderedJson doc;
  doc["per_family_dims"] = dims.per_family_dims;
  doc["total_dim"] = dims.total_dim;
  doc["face_dim"] = dims.face_dim;
  return doc;
}

OrderedJson hakye24_to_json(const HaKye24Dim& dim) {
  OrderedJson doc;
  doc["span_dim"] = dim.span_dim;
  doc["face_dim"] = dim.face_dim;
  doc["bound_ok"] = dim.bound_ok;
  return doc;
}

}  // namespace sepfaces
