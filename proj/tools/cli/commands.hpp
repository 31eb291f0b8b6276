// Copyright 2026 The gqd Authors
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

#ifndef GQD_TOOLS_COMMANDS_HPP
#define GQD_TOOLS_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gqd/discord.hpp"
#include "gqd/error.hpp"
#include "gqd/sudden_change.hpp"
#include "gqd/thermal_channel.hpp"

namespace gqd::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

int exit_code_for(ErrorCode code);

Topology parse_topology(std::string_view name);  // "ab", "a", "b"

/// "0.3,0.5, 0.7" -> {0.3, 0.5, 0.7}. Blank input gives an empty list; any
/// field that is not a number throws Error(ValidationError).
std::vector<double> parse_number_list(std::string_view text);
std::string_view topology_name(Topology topology);

struct Panel {
    std::string id;        // file stem, e.g. "fig2b_ea"
    std::string subplot;   // "a", "b" or "c"
    std::string label;     // legend text
    double alpha_sq = 0.5;
    ReservoirConfig config;
    bool dashed = false;
};

/// Panels of fig1, fig2 or fig3. Throws Error(ValidationError).
std::vector<Panel> figure_panels(std::string_view figure);

struct EventMarker {
    SuddenChangeEvent event;
    double value = 0.0;  // discord at gamma_t_c, for plotting
};

struct PanelResult {
    Panel panel;
    std::vector<TrajectoryPoint> trajectory;
    std::vector<EventMarker> events;
};

PanelResult run_panel(const Panel &panel, const ScanConfig &scan);

/// Header gamma_t,d_tdd,d_bdd,d_hdd,theta_bdd,theta_hdd; "%.12g" fields.
std::string format_trajectory_csv(const std::vector<TrajectoryPoint> &trajectory);

std::string format_events_json(const std::vector<PanelResult> &results);

/// gnuplot script plotting every panel of a figure with SC markers.
std::string format_plot_script(std::string_view figure, const std::vector<PanelResult> &results);

/// Writes through a temporary file in the same directory and renames it into
/// place. Throws Error(IoError).
void write_file_atomic(const std::filesystem::path &path, std::string_view contents);

DensityMatrix4 parse_state_json(std::string_view text);  // ParseError, InvalidState
DensityMatrix4 read_state_file(const std::filesystem::path &path);

struct FigureOptions {
    std::string figure;
    std::filesystem::path out_dir = ".";
    int points = 1501;
    double t_max = 1.5;
};

struct SweepOptions {
    std::vector<double> alpha_sq;
    double nbar = 0.6;
    Topology topology = Topology::TwoSided;
    std::filesystem::path out_dir = ".";
    int points = 1501;
    double t_max = 1.5;
    double time_scale = 1.0;
};

struct SweepRow {
    double alpha_sq = 0.0;
    std::vector<SuddenChangeEvent> bdd;
    std::vector<SuddenChangeEvent> hdd;
    bool tdd_monotone = true;
    bool bdd_monotone = true;
    bool hdd_monotone = true;
};

struct DiscordOptions {
    std::filesystem::path state_file;
    Measure measure = Measure::BDD;
};

struct DiscordReport {
    DiscordResult result;
    double oracle_value = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepOptions &options);
std::string format_sweep_csv(const SweepOptions &options, const std::vector<SweepRow> &rows);
DiscordReport run_discord(const DensityMatrix4 &rho, Measure measure);
std::string format_discord_report(const DiscordReport &report);

/// Each command writes a short summary to its stream. Library errors
/// propagate as gqd::Error.
void cmd_figure(const FigureOptions &options, std::ostream &log);
void cmd_sweep(const SweepOptions &options, std::ostream &log);
void cmd_discord(const DiscordOptions &options, std::ostream &out);

}  // namespace gqd::cli

#endif  // GQD_TOOLS_COMMANDS_HPP
