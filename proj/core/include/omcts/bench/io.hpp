// Copyright 2026 The omcts Authors.
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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omcts/bench/aggregate.hpp"
#include "omcts/bench/rank_tests.hpp"
#include "omcts/bench/runner.hpp"

namespace omcts::bench {

inline constexpr std::string_view kCsvHeader =
    "game,agent,budget,C,RL,Q,seed,episode,win,score,decisions,fm_calls,ms";

enum class Format { kCsv, kJson };

// Parses "csv" or "json"; throws ConfigError.
Format parse_format(std::string_view text);

// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

// CSV rows follow kCsvHeader. Absent Q and untimed ms are empty fields; a
// failed episode keeps its spec columns and leaves the result columns empty.
// Fields containing commas or quotes are quoted.
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunRecord& record);
void write_csv(std::ostream& out, std::span<const RunRecord> records);

// Inverse of write_csv. Failed rows come back with error "failed".
// Throws IoError on a wrong header or malformed row.
std::vector<RunRecord> read_csv(std::istream& in);
std::vector<RunRecord> read_csv_file(const std::filesystem::path& path);

// JSON array of objects with the CSV fields (null when absent) plus "error".
void write_json(std::ostream& out, std::span<const RunRecord> records);

// Writes to `path`, or stdout when it is empty or "-". Throws IoError.
void write_records(std::span<const RunRecord> records, Format format,
                   const std::filesystem::path& path);

void write_rank_table_csv(std::ostream& out, const RankTable& table);
void write_rank_table_text(std::ostream& out, const RankTable& table);

void write_friedman_text(std::ostream& out, const FriedmanResult& result,
                         double alpha);

}  // namespace omcts::bench
