// Copyright 2026 The Steerage Authors
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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steerage/steerage.hpp"

namespace {

using namespace steerage;

// Exit codes: 0 success, 2 parse/usage/domain error, 3 invalid state,
// 4 numeric failure.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitNumeric = 4;

struct GridConfig {
  int n_theta = 128;
  int n_phi = 256;
  int scale = 0;  // --grid k scales both factors by 2^k

  void apply_env() {
    const char* env = std::getenv("STEERAGE_GRID");
    if (env == nullptr) return;
    int t = 0, p = 0;
    if (std::sscanf(env, "%dx%d", &t, &p) == 2 && t >= 4 && p >= 8) {
      n_theta = t;
      n_phi = p;
    } else {
      throw spec_parse_error("STEERAGE_GRID must look like \"128x256\"");
    }
  }

  int theta() const { return scale >= 0 ? n_theta << scale : n_theta >> -scale; }
  int phi() const { return scale >= 0 ? n_phi << scale : n_phi >> -scale; }
};

int run_analyze(const std::string& input, const std::string& format, const GridConfig& grid) {
  const StateSpec spec = load_state_spec(input);
  const CorrelationMatrix g = spec.to_correlation();
  const ValidityReport validity = validate_state(g);
  if (!validity.valid) {
    std::cout << render_text(validity);
    return kExitInvalidState;
  }
  const AnalysisReport rep = analyze_state(spec, grid.theta(), grid.phi());
  if (format == "json") {
    std::cout << render_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  return kExitOk;
}

int run_asymmetry(const std::string& input, const std::string& format, const GridConfig& grid) {
  const StateSpec spec = load_state_spec(input);
  if (spec.kind != StateKind::PhiState && spec.kind != StateKind::RefState29) {
    throw spec_parse_error("asymmetry expects a phi_state (or ref_state_29) input");
  }
  const AsymmetryReport rep =
      asymmetry_report(spec.p, spec.u, QuadratureGrid::product(grid.theta(), grid.phi()));
  if (format == "json") {
    std::cout << render_json(rep).dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  return kExitOk;
}

int run_quantity(const std::string& input, const GridConfig& grid) {
  const StateSpec spec = load_state_spec(input);
  const CorrelationMatrix g = spec.to_correlation();
  const ValidityReport validity = validate_state(g);
  if (!validity.valid) {
    std::cout << render_text(validity);
    return kExitInvalidState;
  }
  const SteeringQuantity q = steering_quantity(g, Steering::AliceToBob,
                                               QuadratureGrid::product(grid.theta(), grid.phi()));
  std::cout << "S_G = " << fmt_num(q.value) << "  dimension = " << q.dimension
            << "  method = " << to_string(q.method) << "  est_error = " << fmt_num(q.est_error)
            << "\n";
  return kExitOk;
}

int run_mesh(const std::string& input, Steering direction, std::size_t samples) {
  const StateSpec spec = load_state_spec(input);
  const CorrelationMatrix g = spec.to_correlation();
  const ValidityReport validity = validate_state(g);
  if (!validity.valid) {
    std::cout << render_text(validity);
    return kExitInvalidState;
  }
  const auto dirs = fibonacci_directions(samples);
  const auto assemblage = sample_assemblage(g, dirs, direction);
  std::string out = "x1,x2,x3,prob,s1,s2,s3\n";
  for (const auto& sample : assemblage) {
    out += fmt_num(sample.direction.x()) + "," + fmt_num(sample.direction.y()) + "," +
           fmt_num(sample.direction.z()) + "," + fmt_num(sample.plus.prob) + "," +
           fmt_num(sample.plus.shrinked.x()) + "," + fmt_num(sample.plus.shrinked.y()) + "," +
           fmt_num(sample.plus.shrinked.z()) + "\n";
  }
  std::cout << out;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steerage: steering-ellipsoid and local-model analysis for two-qubit states"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "text";
  std::string direction = "a2b";
  std::size_t samples = 1000;
  GridConfig grid;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("input", input, "state description (JSON file)")->required();
    cmd->add_option("--grid", grid.scale, "scale the default grid by 2^k")
        ->check(CLI::Range(-4, 4));
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"text", "json"}));
    }
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report: figures, S_G, verdicts");
  add_common(analyze, true);
  CLI::App* asym = app.add_subcommand("asymmetry", "asymmetric-steering demonstration");
  add_common(asym, true);
  CLI::App* quantity = app.add_subcommand("quantity", "steering quantity of the basic figure");
  add_common(quantity, false);
  CLI::App* mesh = app.add_subcommand("mesh", "assemblage samples as CSV");
  add_common(mesh, false);
  mesh->add_option("--direction", direction, "steering direction")
      ->check(CLI::IsMember({"a2b", "b2a"}));
  mesh->add_option("--samples", samples, "number of mesh directions")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    grid.apply_env();
    const Steering dir = direction == "b2a" ? Steering::BobToAlice : Steering::AliceToBob;
    if (app.got_subcommand(analyze)) return run_analyze(input, format, grid);
    if (app.got_subcommand(asym)) return run_asymmetry(input, format, grid);
    if (app.got_subcommand(quantity)) return run_quantity(input, grid);
    if (app.got_subcommand(mesh)) return run_mesh(input, dir, samples);
    return kExitParse;
  } catch (const spec_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const invalid_state_error& e) {
    std::cerr << "error: invalid state: " << e.what() << "\n";
    return kExitInvalidState;
  } catch (const std::exception& e) {
    std::cerr << "error: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
}
