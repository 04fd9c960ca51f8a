// SPDX-License-Identifier: Apache-2.0
//
// steps.csv / summary.json / sweep.csv writers and the steps.csv reader used
// by the plot command. CSV lines end in CRLF; numbers use the shortest
// round-trip decimal form and infinite path loss is written as `inf`.

#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "drs/engine.hpp"

namespace drs::cli {

inline constexpr const char* kStepsHeader =
    "step,time_s,pair_id,cycle_index,tx_x,tx_y,rx_x,rx_y,drs_x,drs_y,drs_z,drs_yaw_rad,alpha_rad,null_mode,"
    "pl_desired_db,pl_interf_db,sinr_db,rate_bps,control";

std::string format_number(double x);
double to_db(double linear);

void write_steps_header(std::ostream& out);
void write_step_row(std::ostream& out, const StepRecord& rec);

/// One parsed steps.csv row; only the columns the plots need are kept.
struct StepRow {
  long cycle_index = 0;
  double rate_bps = 0.0;
  bool control = false;
};

class CsvError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Throws CsvError on a wrong header, a short row or a malformed number.
std::vector<StepRow> read_steps_csv(std::istream& in);

struct SweepRow {
  std::uint64_t seed = 0;
  double mean_rate_on = 0.0;
  double mean_rate_off = 0.0;
  double improvement_pct = 0.0;
};

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const SweepRow& aggregate);

}  // namespace drs::cli
