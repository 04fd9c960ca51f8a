// SPDX-License-Identifier: Apache-2.0

#include "drs/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace drs::cli {

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

void write_steps_header(std::ostream& out) { out << kStepsHeader << "\r\n"; }

void write_step_row(std::ostream& out, const StepRecord& r) {
  const auto n = [](double x) { return format_number(x); };
  out << r.step << ',' << n(r.time_s) << ',' << r.pair_id << ',' << r.cycle_index << ',' << n(r.tx.x) << ','
      << n(r.tx.y) << ',' << n(r.rx.x) << ',' << n(r.rx.y) << ',' << n(r.drs.position().x) << ','
      << n(r.drs.position().y) << ',' << n(r.drs.position().z) << ',' << n(r.drs.yaw()) << ',' << n(r.alpha) << ','
      << to_string(r.null_mode) << ',' << n(r.pl_desired.db()) << ',' << n(r.pl_interference.db()) << ','
      << n(to_db(r.sinr)) << ',' << n(r.rate_bps) << ',' << (r.control ? "on" : "off") << "\r\n";
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

template <typename T>
T parse_cell(const std::string& cell, int line_no, const char* column) {
  T value{};
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || p != cell.data() + cell.size()) {
    throw CsvError("line " + std::to_string(line_no) + ": bad " + column + " '" + cell + "'");
  }
  return value;
}

}  // namespace

std::vector<StepRow> read_steps_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kStepsHeader) throw CsvError("unexpected header");
  const std::size_t columns = split(kStepsHeader).size();

  std::vector<StepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (cells.size() != columns) throw CsvError("line " + std::to_string(line_no) + ": wrong column count");
    StepRow row;
    row.cycle_index = parse_cell<long>(cells[3], line_no, "cycle_index");
    row.rate_bps = parse_cell<double>(cells[17], line_no, "rate_bps");
    if (cells[18] == "on") row.control = true;
    else if (cells[18] == "off") row.control = false;
    else throw CsvError("line " + std::to_string(line_no) + ": bad control '" + cells[18] + "'");
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const SweepRow& aggregate) {
  out << "seed,mean_rate_on,mean_rate_off,improvement_pct\r\n";
  for (const SweepRow& r : rows) {
    out << r.seed << ',' << format_number(r.mean_rate_on) << ',' << format_number(r.mean_rate_off) << ','
        << format_number(r.improvement_pct) << "\r\n";
  }
  out << "aggregate," << format_number(aggregate.mean_rate_on) << ',' << format_number(aggregate.mean_rate_off)
      << ',' << format_number(aggregate.improvement_pct) << "\r\n";
}

}  // namespace drs::cli
