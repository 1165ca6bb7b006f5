// Copyright 2026 The NLA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLASIM_EXPERIMENT_HPP
#define NLASIM_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "csv.hpp"

namespace nlasim {

inline constexpr const char* kToolVersion = "0.3.0";

enum class Experiment { Gain, Psucc, Skr, Sensing, Entangle, Verify };
enum class OpSelection { One, Two, Both, Avg };

std::string to_string(Experiment e);
std::string to_string(OpSelection op);
OpSelection parse_op(const std::string& text);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// start:stop:count with inclusive endpoints, or a single value.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    bool swept() const { return count > 1; }
    std::vector<double> values() const;
    std::string text() const;
};

Range parse_range(const std::string& field, const std::string& text);

struct ExperimentConfig {
    Experiment experiment = Experiment::Gain;
    std::map<std::string, Range> params;  // as given on the command line
    OpSelection op = OpSelection::Both;
    std::string out_path;  // empty: standard output
    std::uint64_t seed = 0;

    bool has(const std::string& name) const { return params.count(name) != 0; }
};

// Range-checks every parameter and enforces per-experiment rules.
// Throws ConfigError naming the offending field.
void validate(const ExperimentConfig& config);

CsvTable run_experiment(const ExperimentConfig& config);

// Writes the CSV (or the verification report) and returns the exit status:
// 0 success, 1 configuration error, 2 verification failure.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

// Full command-line entry point used by the binary and by tests.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlasim

#endif  // NLASIM_EXPERIMENT_HPP
