// Copyright 2026 The pntlab Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pntlab/arith.hpp"

namespace pntlab::cli {

/// Raised for malformed command lines; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every parameter any subcommand understands. Unused fields keep their
/// defaults and are still serialized, so the JSON form is schema-stable.
struct ExperimentConfig {
    std::string command;
    std::vector<u64> x;
    u64 q = 1;
    u64 a = 0;
    u64 lo = 1;
    u64 hi = 0;
    std::string kind = "mobius";
    u64 segment = kSegmentLength;
    std::vector<u64> grid;
    u64 grid_points = 64;
    bool partial_summation = false;
    double B = 3.0;
    double C = 1.5;
    double D = 1.0;
    double epsilon = 0.0;
    std::vector<u64> checkpoints;
    std::string series = "both";
    double limit = -1.0;
    std::string input;
    u64 max_n = 100'000;
    std::string cache;
    std::string out;
    std::string format = "csv";
    unsigned threads = 0;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

nlohmann::ordered_json to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::ordered_json& j);

/// Non-negative threshold; accepts integers and scientific notation (1e6).
/// Fractional values are floored.
u64 parse_threshold(std::string_view text);

/// Comma-separated thresholds.
std::vector<u64> parse_threshold_list(std::string_view text);

/// Either a comma-separated list or `lo:hi:per_decade` for a log-spaced grid.
std::vector<u64> parse_grid(std::string_view text);

/// Builds the class, turning a non-coprime pair into a UsageError that
/// reports gcd(a, q).
ProgressionClass parse_class(u64 q, u64 a);

}  // namespace pntlab::cli
