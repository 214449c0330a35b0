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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sepfaces/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitInvalidInput = 2;

struct CommonFlags {
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = sepfaces::kRankTol;
  std::string out_path;
  bool strict = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed, "RNG seed (default 0)");
  cmd->add_option("--samples", flags->samples,
                  "Monte-Carlo sample budget (default 4 d^2)");
  cmd->add_option("--tol", flags->tol,
                  "relative singular-value threshold for ranks");
  cmd->add_option("--out", flags->out_path,
                  "also write the JSON report to this file");
  cmd->add_flag("--strict", flags->strict,
                "treat a non-saturated rank estimate as an error");
}

sepfaces::OracleConfig oracle_config(const CommonFlags& flags) {
  sepfaces::OracleConfig cfg;
  cfg.seed = flags.seed;
  cfg.samples = flags.samples;
  cfg.rel_tol = flags.tol;
  return cfg;
}

int emit(const sepfaces::OrderedJson& doc, const CommonFlags& flags) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << flags.out_path << "\n";
      return kExitInvalidInput;
    }
    out << text;
  }
  return kExitOk;
}

int require_saturated(bool saturated, const CommonFlags& flags) {
  if (flags.strict && !saturated) {
    std::cerr << "error: rank estimate did not saturate; rerun with more "
                 "--samples\n";
    return kExitNumeric;
  }
  return kExitOk;
}

std::vector<sepfaces::PartySubset> parse_subsets(
    const std::vector<std::string>& subset_texts, int party_count) {
  std::vector<sepfaces::PartySubset> subsets;
  for (const std::string& text : subset_texts) {
    sepfaces::PartySubset subset;
    if (text != "empty" && !text.empty()) {
      std::stringstream stream(text);
      std::string item;
      while (std::getline(stream, item, ',')) {
        const int party = std::stoi(item);
        if (party < 1 || party > party_count)
          throw std::invalid_argument("subset: party index out of range: " +
                                      item);
        subset = subset.with(party - 1);
      }
    }
    subsets.push_back(subset);
  }
  return subsets;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sepfaces: dimensions of induced maximal faces of the separable-state "
      "body, genuine-entanglement decompositions, and the product-vector "
      "span oracles behind them"};
  app.require_subcommand(1);

  std::string state_path;
  CommonFlags flags;

  auto* ge = app.add_subcommand("ge-decompose",
                                "genuine-entanglement decomposition");
  ge->add_option("--state", state_path, "PureState JSON file")->required();
  add_common_flags(ge, &flags);

  auto* face = app.add_subcommand("face-dim",
                                  "dimension of the induced maximal face");
  face->add_option("--state", state_path, "PureState JSON file")->required();
  bool formula_only = false;
  bool with_oracle = false;
  face->add_flag("--formula-only", formula_only,
                 "closed-form dimension only (default)");
  face->add_flag("--with-oracle", with_oracle,
                 "confirm the formula with the Monte-Carlo span oracle");
  add_common_flags(face, &flags);

  auto* scan = app.add_subcommand(
      "theta-scan", "range ranks and stabilizer data per partial transpose");
  scan->add_option("--state", state_path, "PureState JSON file")->required();
  std::vector<std::string> subset_texts;
  scan->add_option("--subset", subset_texts,
                   "comma-separated 1-based parties, e.g. 1,3; repeatable; "
                   "'empty' for the identity; default all 2^n when n <= 6");
  add_common_flags(scan, &flags);

  auto* oracle = app.add_subcommand(
      "oracle", "Monte-Carlo face dimension without the closed form");
  oracle->add_option("--state", state_path, "PureState JSON file")->required();
  add_common_flags(oracle, &flags);

  auto* dual = app.add_subcommand(
      "dual-check", "verify the dual face of phi_L against the hyperplane "
                    "face of Psi^{-1}(L)");
  dual->add_option("--state", state_path,
                   "bipartite PureState JSON file defining L")
      ->required();
  add_common_flags(dual, &flags);

  auto* h33 = app.add_subcommand("hakye33",
                                 "3x3 non-induced family: span dimensions");
  double b33 = 0.0;
  h33->add_option("--b", b33, "family parameter, b > 0, b != 1")->required();
  add_common_flags(h33, &flags);

  auto* h24 = app.add_subcommand("hakye24",
                                 "2x4 non-induced family: span dimensions");
  double a24 = 0, b24 = 0, c24 = 0, d24 = 0;
  h24->add_option("--a", a24, "positive parameter")->required();
  h24->add_option("--b", b24, "positive parameter (needs a b > 1)")->required();
  h24->add_option("--c", c24, "positive parameter")->required();
  h24->add_option("--d", d24, "positive parameter")->required();
  add_common_flags(h24, &flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitInvalidInput;
  }

  try {
    if (ge->parsed()) {
      const sepfaces::PureState state = sepfaces::read_state_file(state_path);
      const sepfaces::GeDecomposition decomp =
          sepfaces::ge_decompose(state, flags.tol);
      return emit(sepfaces::decomposition_to_json(decomp), flags);
    }

    if (face->parsed()) {
      if (formula_only && with_oracle)
        throw std::invalid_argument(
            "face-dim: --formula-only and --with-oracle are exclusive");
      const sepfaces::PureState state = sepfaces::read_state_file(state_path);
      sepfaces::FaceReportOptions options;
      options.with_oracle = with_oracle;
      options.oracle = oracle_config(flags);
      const sepfaces::FaceReport report = sepfaces::face_report(state, options);
      const int code = emit(sepfaces::face_report_to_json(report), flags);
      if (code != kExitOk) return code;
      return require_saturated(!report.oracle || report.oracle->saturated,
                               flags);
    }

    if (scan->parsed()) {
      const sepfaces::PureState state = sepfaces::read_state_file(state_path);
      sepfaces::FaceReportOptions options;
      options.with_theta_scan = true;
      options.oracle = oracle_config(flags);
      options.scan_subsets =
          parse_subsets(subset_texts, state.shape().party_count());
      const sepfaces::FaceReport report = sepfaces::face_report(state, options);
      return emit(sepfaces::face_report_to_json(report), flags);
    }

    if (oracle->parsed()) {
      const sepfaces::PureState state = sepfaces::read_state_file(state_path);
      const sepfaces::OracleResult result =
          sepfaces::face_dim_oracle(state, oracle_config(flags));
      const int code = emit(sepfaces::oracle_result_to_json(result), flags);
      if (code != kExitOk) return code;
      return require_saturated(result.saturated, flags);
    }

    if (dual->parsed()) {
      const sepfaces::PureState state = sepfaces::read_state_file(state_path);
      const sepfaces::KrausVector kraus = sepfaces::kraus_from_state(state);
      const int per_side = flags.samples > 0 ? flags.samples : 100;
      const sepfaces::DualFaceReport report =
          sepfaces::verify_dual_face_equals_fv(kraus, oracle_config(flags),
                                               per_side);
      return emit(sepfaces::dual_report_to_json(report), flags);
    }

    if (h33->parsed()) {
      const sepfaces::HaKye33Dims dims =
          sepfaces::hakye33_dims(b33, oracle_config(flags));
      const int code = emit(sepfaces::hakye33_to_json(dims), flags);
      if (code != kExitOk) return code;
      return require_saturated(dims.saturated, flags);
    }

    if (h24->parsed()) {
      const sepfaces::HaKye24Dim dim = sepfaces::hakye24_dim(
          sepfaces::hakye24_params(a24, b24, c24, d24), oracle_config(flags));
      const int code = emit(sepfaces::hakye24_to_json(dim), flags);
      if (code != kExitOk) return code;
      return require_saturated(dim.saturated, flags);
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
