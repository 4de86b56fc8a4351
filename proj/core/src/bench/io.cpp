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

#include "omcts/bench/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "omcts/errors.hpp"

namespace omcts::bench {
namespace {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') {
        field += ch;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) throw IoError("unterminated quote on line " + std::to_string(line_no));
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_field(const std::string& text, std::string_view name, std::size_t line_no) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw IoError("bad " + std::string(name) + " '" + text + "' on line " +
                  std::to_string(line_no));
  }
  return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

nlohmann::json optional_number(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw ConfigError("unknown output format '" + std::string(text) + "'");
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw IoError("cannot format number");
  return std::string(buf, ptr);
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const RunRecord& r) {
  out << csv_field(r.game) << ',' << csv_field(r.agent) << ',' << r.budget << ','
      << format_number(r.c) << ',' << r.rl << ',' << (r.q ? format_number(*r.q) : "")
      << ',' << r.seed << ',' << r.episode << ',';
  if (r.failed()) {
    out << ",,,,\n";
    return;
  }
  out << (r.win ? 1 : 0) << ',' << format_number(r.score) << ',' << r.decisions << ','
      << r.fm_calls << ',' << (r.ms ? format_number(*r.ms) : "") << '\n';
}

void write_csv(std::ostream& out, std::span<const RunRecord> records) {
  write_csv_header(out);
  for (const RunRecord& r : records) write_csv_row(out, r);
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw IoError("unexpected CSV header '" + line + "'");

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 13) {
      throw IoError("expected 13 fields on line " + std::to_string(line_no) + ", got " +
                    std::to_string(f.size()));
    }
    RunRecord r;
    r.game = f[0];
    r.agent = f[1];
    r.budget = parse_field<std::int64_t>(f[2], "budget", line_no);
    r.c = parse_field<double>(f[3], "C", line_no);
    r.rl = parse_field<int>(f[4], "RL", line_no);
    if (!f[5].empty()) r.q = parse_field<double>(f[5], "Q", line_no);
    r.seed = parse_field<std::uint64_t>(f[6], "seed", line_no);
    r.episode = parse_field<int>(f[7], "episode", line_no);
    if (f[8].empty()) {
      r.error = "failed";
    } else {
      const int win = parse_field<int>(f[8], "win", line_no);
      if (win != 0 && win != 1) throw IoError("bad win on line " + std::to_string(line_no));
      r.win = win == 1;
      r.score = parse_field<double>(f[9], "score", line_no);
      r.decisions = parse_field<int>(f[10], "decisions", line_no);
      r.fm_calls = parse_field<std::int64_t>(f[11], "fm_calls", line_no);
      if (!f[12].empty()) r.ms = parse_field<double>(f[12], "ms", line_no);
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RunRecord> read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in);
}

void write_json(std::ostream& out, std::span<const RunRecord> records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RunRecord& r : records) {
    const bool ok = !r.failed();
    nlohmann::json row;
    row["game"] = r.game;
    row["agent"] = r.agent;
    row["budget"] = r.budget;
    row["C"] = r.c;
    row["RL"] = r.rl;
    row["Q"] = optional_number(r.q);
    row["seed"] = r.seed;
    row["episode"] = r.episode;
    row["win"] = ok ? nlohmann::json(r.win) : nlohmann::json(nullptr);
    row["score"] = ok ? nlohmann::json(r.score) : nlohmann::json(nullptr);
    row["decisions"] = ok ? nlohmann::json(r.decisions) : nlohmann::json(nullptr);
    row["fm_calls"] = ok ? nlohmann::json(r.fm_calls) : nlohmann::json(nullptr);
    row["ms"] = ok ? optional_number(r.ms) : nlohmann::json(nullptr);
    row["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

void write_records(std::span<const RunRecord> records, Format format,
                   const std::filesystem::path& path) {
  auto emit = [&](std::ostream& out) {
    if (format == Format::kCsv) {
      write_csv(out, records);
    } else {
      write_json(out, records);
    }
    out.flush();
    if (!out) throw IoError("write failed");
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out = open_output(path);
  emit(out);
}

void write_rank_table_csv(std::ostream& out, const RankTable& table) {
  out << "game,budget,algorithm,win_rate,mean_score,rank\n";
  for (std::size_t p = 0; p < table.problems.size(); ++p) {
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      const Performance& perf = table.performance[p][a];
      out << csv_field(table.problems[p].game) << ',' << table.problems[p].budget << ','
          << csv_field(table.algorithms[a]) << ',' << format_number(perf.win_rate) << ','
          << format_number(perf.mean_score) << ',' << format_number(table.ranks[p][a])
          << '\n';
    }
  }
  for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
    out << "*,*," << csv_field(table.algorithms[a]) << ",,,"
        << format_number(table.average_rank[a]) << '\n';
  }
}

void write_rank_table_text(std::ostream& out, const RankTable& table) {
  std::size_t width = 9;
  for (const auto& name : table.algorithms) width = std::max(width, name.size());
  for (std::size_t p = 0; p < table.problems.size(); ++p) {
    out << table.problems[p].game << " @ " << table.problems[p].budget << '\n';
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
      const Performance& perf = table.performance[p][a];
      out << "  " << std::left << std::setw(static_cast<int>(width)) << table.algorithms[a]
          << std::right << std::fixed << std::setprecision(1) << std::setw(7)
          << 100.0 * perf.win_rate << "%" << std::setprecision(2) << std::setw(10)
          << perf.mean_score << "   rank " << std::setprecision(1) << table.ranks[p][a]
          << '\n';
    }
  }
  out << "average rank\n";
  for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << table.algorithms[a]
        << std::right << std::fixed << std::setprecision(2) << std::setw(7)
        << table.average_rank[a] << '\n';
  }
  out.unsetf(std::ios::floatfield);
  out << std::setprecision(6);
}

void write_friedman_text(std::ostream& out, const FriedmanResult& result, double alpha) {
  out << "Friedman chi2 = " << result.statistic << ", df = " << result.df
      << ", p = " << result.p_value
      << (result.p_value < alpha ? " (significant" : " (not significant") << " at alpha "
      << alpha << ")\n";
}

}  // namespace omcts::bench
