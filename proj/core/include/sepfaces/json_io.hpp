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

#ifndef SEPFACES_JSON_IO_HPP
#define SEPFACES_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "sepfaces/duality.hpp"
#include "sepfaces/faces.hpp"
#include "sepfaces/ge_decomp.hpp"
#include "sepfaces/hakye.hpp"
#include "sepfaces/span_oracle.hpp"

namespace sepfaces {

// JSON interchange. Key order is fixed (ordered_json) and every floating
// point value is rounded to 12 significant digits before serialization, so
// identical inputs and seeds yield byte-identical documents. Complex
// numbers are [re, im] pairs; party indices are 1-based on the wire.

using OrderedJson = nlohmann::ordered_json;

/// Round to 12 significant digits (the wire format for floats).
double round_for_wire(double value);

OrderedJson state_to_json(const PureState& state);
/// Parse {"dims": [...], "amplitudes": [[re, im], ...]}; throws
/// std::invalid_argument naming the offending field.
PureState state_from_json(const nlohmann::json& doc);
PureState read_state_file(const std::string& path);

OrderedJson decomposition_to_json(const GeDecomposition& decomp);
OrderedJson oracle_result_to_json(const OracleResult& result);
OrderedJson face_report_to_json(const FaceReport& report);
OrderedJson dual_report_to_json(const DualFaceReport& report);
OrderedJson hakye33_to_json(const HaKye33Dims& dims);
OrderedJson hakye24_to_json(const HaKye24Dim& dim);

}  // namespace sepfaces

#endif
