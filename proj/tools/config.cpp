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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "pntlab/analysis.hpp"

namespace pntlab::cli {

using nlohmann::ordered_json;

ordered_json to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["command"] = cfg.command;
    j["x"] = cfg.x;
    j["q"] = cfg.q;
    j["a"] = cfg.a;
    j["lo"] = cfg.lo;
    j["hi"] = cfg.hi;
    j["kind"] = cfg.kind;
    j["segment"] = cfg.segment;
    j["grid"] = cfg.grid;
    j["grid_points"] = cfg.grid_points;
    j["partial_summation"] = cfg.partial_summation;
    j["B"] = cfg.B;
    j["C"] = cfg.C;
    j["D"] = cfg.D;
    j["epsilon"] = cfg.epsilon;
    j["checkpoints"] = cfg.checkpoints;
    j["series"] = cfg.series;
    j["limit"] = cfg.limit;
    j["input"] = cfg.input;
    j["max_n"] = cfg.max_n;
    j["cache"] = cfg.cache;
    j["out"] = cfg.out;
    j["format"] = cfg.format;
    j["threads"] = cfg.threads;
    return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
    ExperimentConfig cfg;
    try {
        j.at("command").get_to(cfg.command);
        j.at("x").get_to(cfg.x);
        j.at("q").get_to(cfg.q);
        j.at("a").get_to(cfg.a);
        j.at("lo").get_to(cfg.lo);
        j.at("hi").get_to(cfg.hi);
        j.at("kind").get_to(cfg.kind);
        j.at("segment").get_to(cfg.segment);
        j.at("grid").get_to(cfg.grid);
        j.at("grid_points").get_to(cfg.grid_points);
        j.at("partial_summation").get_to(cfg.partial_summation);
        j.at("B").get_to(cfg.B);
        j.at("C").get_to(cfg.C);
        j.at("D").get_to(cfg.D);
        j.at("epsilon").get_to(cfg.epsilon);
        j.at("checkpoints").get_to(cfg.checkpoints);
        j.at("series").get_to(cfg.series);
        j.at("limit").get_to(cfg.limit);
        j.at("input").get_to(cfg.input);
        j.at("max_n").get_to(cfg.max_n);
        j.at("cache").get_to(cfg.cache);
        j.at("out").get_to(cfg.out);
        j.at("format").get_to(cfg.format);
        j.at("threads").get_to(cfg.threads);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid experiment config: ") + e.what());
    }
    return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

u64 parse_threshold(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw UsageError("empty numeric value");
    const char* first = text.data();
    const char* last = text.data() + text.size();
    u64 exact = 0;
    if (auto [p, ec] = std::from_chars(first, last, exact); ec == std::errc() && p == last)
        return exact;
    double v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || !std::isfinite(v))
        throw UsageError("not a number: '" + std::string(text) + "'");
    if (v < 0) throw UsageError("value must be non-negative: '" + std::string(text) + "'");
    if (v >= 18446744073709551616.0) throw UsageError("value too large: '" + std::string(text) + "'");
    return static_cast<u64>(std::floor(v));
}

std::vector<u64> parse_threshold_list(std::string_view text) {
    std::vector<u64> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_threshold(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<u64> parse_grid(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) return parse_threshold_list(text);
    const auto second = text.find(':', colon + 1);
    if (second == std::string_view::npos)
        throw UsageError("grid must be 'lo:hi:per_decade' or a comma list");
    const u64 lo = parse_threshold(text.substr(0, colon));
    const u64 hi = parse_threshold(text.substr(colon + 1, second - colon - 1));
    const u64 per = parse_threshold(text.substr(second + 1));
    if (lo < 1 || hi < lo || per == 0 || per > 1000)
        throw UsageError("grid needs 1 <= lo <= hi and 1 <= per_decade <= 1000");
    return log_grid(lo, hi, static_cast<unsigned>(per));
}

ProgressionClass parse_class(u64 q, u64 a) {
    try {
        return ProgressionClass::coprime(q, a);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

}  // namespace pntlab::cli
