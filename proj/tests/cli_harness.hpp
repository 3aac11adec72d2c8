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

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_harness {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "steerage_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

/// Runs the CLI with the given argument string; stdout is captured, stderr
/// routed to a scratch file. `env` may carry VAR=value assignments.
inline RunResult run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto out_path = scratch_dir() / ("out_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(STEERAGE_BIN) + " " + args + " > " +
      out_path.string() + " 2> " + (scratch_dir() / "err.txt").string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = read_file(out_path);
  std::filesystem::remove(out_path);
  return r;
}

}  // namespace cli_harness
