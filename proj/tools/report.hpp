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

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace pntlab::report {

using Cell = std::variant<std::uint64_t, std::int64_t, double, bool, std::string>;

/// A fixed-column table. Column order is part of each subcommand's output
/// contract.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

std::string format_cell(const Cell& cell);

/// Header row, comma separated, '\n' line endings.
void write_csv(std::ostream& out, const Table& table);

inline constexpr int kJsonSchemaVersion = 1;

/// {"config": ..., "rows": [{column: value, ...}, ...], "version": 1}
void write_json(std::ostream& out, const Table& table, const nlohmann::ordered_json& config);

}  // namespace pntlab::report
