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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace gqd::cli {
namespace {

using nlohmann::json;

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string f12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string join_times(const std::vector<SuddenChangeEvent> &events) {
    std::string out;
    for (const SuddenChangeEvent &e : events) {
        if (!out.empty()) {
            out += ';';
        }
        out += g12(e.gamma_t_c);
    }
    return out;
}

bool monotone_non_increasing(const std::vector<TrajectoryPoint> &trajectory, Measure measure) {
    auto windows = monotonicity_windows(trajectory, measure);
    return windows.size() == 1 && windows.front().direction == Trend::Decreasing;
}

ScanConfig scan_for(int points, double t_max, double time_scale) {
    ScanConfig scan;
    scan.n_points = points;
    scan.t_max = t_max;
    scan.time_scale = time_scale;
    scan.validate();
    return scan;
}

Panel make_panel(std::string id, std::string subplot, std::string label, double alpha_sq, double nbar,
                 Topology topology, bool dashed = false) {
    return Panel{std::move(id), std::move(subplot), std::move(label), alpha_sq,
                 ReservoirConfig{nbar, 1.0, 1.0, topology}, dashed};
}

std::string measure_color(Measure m) {
    switch (m) {
        case Measure::TDD:
            return "black";
        case Measure::BDD:
            return "red";
        case Measure::HDD:
            return "blue";
    }
    return "black";
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::IoError:
            return kExitIo;
        case ErrorCode::OptimizerStall:
        case ErrorCode::NoConvergence:
        case ErrorCode::NotPositiveSemiDefinite:
        case ErrorCode::StepTooLarge:
            return kExitNumerical;
        default:
            return kExitValidation;
    }
}

Topology parse_topology(std::string_view name) {
    if (name == "ab") return Topology::TwoSided;
    if (name == "a") return Topology::OneSidedA;
    if (name == "b") return Topology::OneSidedB;
    throw Error(ErrorCode::ValidationError, "unknown topology '" + std::string(name) + "' (expected ab, a or b)");
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> values;
    if (text.find_first_not_of(" \t") == std::string_view::npos) {
        return values;
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::size_t first = field.find_first_not_of(" \t");
        std::size_t last = field.find_last_not_of(" \t");
        field = first == std::string_view::npos ? std::string_view{} : field.substr(first, last - first + 1);
        double v = 0.0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
            throw Error(ErrorCode::ValidationError, "not a number: '" + std::string(field) + "'");
        }
        values.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return values;
}

std::string_view topology_name(Topology topology) {
    switch (topology) {
        case Topology::TwoSided:
            return "ab";
        case Topology::OneSidedA:
            return "a";
        case Topology::OneSidedB:
            return "b";
    }
    return "ab";
}

std::vector<Panel> figure_panels(std::string_view figure) {
    if (figure == "fig1") {
        return {make_panel("fig1a", "a", "E_AB", 0.3, 0.6, Topology::TwoSided),
                make_panel("fig1b", "b", "E_AB", 0.5, 0.6, Topology::TwoSided),
                make_panel("fig1c", "c", "E_AB", 0.7, 0.6, Topology::TwoSided)};
    }
    if (figure == "fig2") {
        std::vector<Panel> panels;
        const char *subplots[] = {"a", "b", "c"};
        const double alphas[] = {0.3, 0.5, 0.7};
        for (int k = 0; k < 3; ++k) {
            std::string stem = std::string("fig2") + subplots[k];
            panels.push_back(make_panel(stem + "_ea", subplots[k], "E_A", alphas[k], 0.6, Topology::OneSidedA));
            panels.push_back(
                make_panel(stem + "_eb", subplots[k], "E_B", alphas[k], 0.6, Topology::OneSidedB, true));
        }
        return panels;
    }
    if (figure == "fig3") {
        return {make_panel("fig3a", "a", "E_AB", 0.5, 0.0, Topology::TwoSided),
                make_panel("fig3b", "b", "E_A", 0.5, 0.0, Topology::OneSidedA),
                make_panel("fig3c", "c", "E_B", 0.5, 0.0, Topology::OneSidedB)};
    }
    throw Error(ErrorCode::ValidationError, "unknown figure '" + std::string(figure) + "' (expected fig1, fig2 or fig3)");
}

PanelResult run_panel(const Panel &panel, const ScanConfig &scan) {
    PanelResult result{panel, compute_trajectory(panel.alpha_sq, panel.config, scan), {}};
    PointEvaluator refiner = make_point_evaluator(panel.alpha_sq, panel.config, scan);
    for (const SuddenChangeEvent &e : detect_sudden_changes(result.trajectory, scan, refiner)) {
        result.events.push_back({e, value_of(refiner(e.gamma_t_c), e.measure)});
    }
    return result;
}

std::string format_trajectory_csv(const std::vector<TrajectoryPoint> &trajectory) {
    std::string out = "gamma_t,d_tdd,d_bdd,d_hdd,theta_bdd,theta_hdd\n";
    for (const TrajectoryPoint &p : trajectory) {
        out += g12(p.gamma_t) + ',' + g12(p.d_t) + ',' + g12(p.d_b) + ',' + g12(p.d_h) + ',' + g12(p.theta_b) +
               ',' + g12(p.theta_h) + '\n';
    }
    return out;
}

std::string format_events_json(const std::vector<PanelResult> &results) {
    json events = json::array();
    for (const PanelResult &r : results) {
        for (const EventMarker &m : r.events) {
            events.push_back(json{{"panel", r.panel.id},
                                  {"measure", measure_name(m.event.measure)},
                                  {"gamma_t_c", m.event.gamma_t_c},
                                  {"theta_before", m.event.theta_before},
                                  {"theta_after", m.event.theta_after},
                                  {"bracket_width", m.event.bracket_width}});
        }
    }
    return events.dump(2) + "\n";
}

std::string format_plot_script(std::string_view figure, const std::vector<PanelResult> &results) {
    std::vector<std::string> subplots;
    for (const PanelResult &r : results) {
        if (subplots.empty() || subplots.back() != r.panel.subplot) {
            subplots.push_back(r.panel.subplot);
        }
    }
    std::ostringstream os;
    os << "# gnuplot script for " << figure << "; run from the directory holding the CSV files.\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size " << 500 * subplots.size() << ",420\n"
       << "set output '" << figure << ".png'\n"
       << "set xlabel 'gamma t'\n"
       << "set yrange [0:1.05]\n"
       << "set key top right\n"
       << "set multiplot layout 1," << subplots.size() << "\n";
    const std::pair<Measure, int> columns[] = {{Measure::TDD, 2}, {Measure::BDD, 3}, {Measure::HDD, 4}};
    for (const std::string &sub : subplots) {
        os << "set title '(" << sub << ")'\n";
        std::vector<std::string> terms;
        std::vector<std::string> inline_blocks;
        for (const PanelResult &r : results) {
            if (r.panel.subplot != sub) {
                continue;
            }
            std::string dash = r.panel.dashed ? "4" : "1";
            for (auto [measure, column] : columns) {
                std::ostringstream t;
                t << "'" << r.panel.id << ".csv' using 1:" << column << " with lines lc rgb '"
                  << measure_color(measure) << "' dt " << dash << " title '" << measure_name(measure) << " "
                  << r.panel.label << "'";
                terms.push_back(t.str());
            }
            for (const EventMarker &m : r.events) {
                std::ostringstream t;
                t << "'-' using 1:2 with points pt " << (r.panel.dashed ? 4 : 6) << " ps 1.5 lc rgb '"
                  << measure_color(m.event.measure) << "' notitle";
                terms.push_back(t.str());
                inline_blocks.push_back(g12(m.event.gamma_t_c) + "," + g12(m.value) + "\ne\n");
            }
        }
        os << "plot ";
        for (std::size_t k = 0; k < terms.size(); ++k) {
            os << (k ? ", \\\n     " : "") << terms[k];
        }
        os << "\n";
        for (const std::string &block : inline_blocks) {
            os << block;
        }
    }
    os << "unset multiplot\n";
    return os.str();
}

void write_file_atomic(const std::filesystem::path &path, std::string_view contents) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::path dir = path.parent_path();
    if (!dir.empty()) {
        fs::create_directories(dir, ec);
        if (ec) {
            throw Error(ErrorCode::IoError, "cannot create directory " + dir.string() + ": " + ec.message());
        }
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw Error(ErrorCode::IoError, "failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot move " + tmp.string() + " to " + path.string());
    }
}

DensityMatrix4 parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("state file is not valid JSON: ") + e.what());
    }
    auto part = [&](const char *key, bool required) -> Eigen::Matrix4d {
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        if (!doc.is_object() || !doc.contains(key)) {
            if (required) {
                throw Error(ErrorCode::ParseError, std::string("state file lacks the \"") + key + "\" matrix");
            }
            return m;
        }
        const json &rows = doc.at(key);
        if (!rows.is_array() || rows.size() != 4) {
            throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a 4x4 array");
        }
        for (int i = 0; i < 4; ++i) {
            if (!rows[i].is_array() || rows[i].size() != 4) {
                throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a 4x4 array");
            }
            for (int j = 0; j < 4; ++j) {
                if (!rows[i][j].is_number()) {
                    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" entries must be numbers");
                }
                m(i, j) = rows[i][j].get<double>();
            }
        }
        return m;
    };
    Eigen::Matrix4d re = part("re", true);
    Eigen::Matrix4d im = part("im", false);
    Mat4 m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m(i, j) = Complex(re(i, j), im(i, j));
        }
    }
    return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read state file " + path.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_state_json(text);
}

std::vector<SweepRow> run_sweep(const SweepOptions &options) {
    if (options.alpha_sq.empty()) {
        throw Error(ErrorCode::ValidationError, "the alpha^2 list is empty");
    }
    for (double a : options.alpha_sq) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw Error(ErrorCode::ValidationError, "alpha^2 values must lie in [0, 1]");
        }
    }
    ReservoirConfig config{options.nbar, 1.0, 1.0, options.topology};
    config.validate();
    ScanConfig scan = scan_for(options.points, options.t_max, options.time_scale);

    std::vector<SweepRow> rows;
    for (double a : options.alpha_sq) {
        auto trajectory = compute_trajectory(a, config, scan);
        PointEvaluator refiner = make_point_evaluator(a, config, scan);
        SweepRow row;
        row.alpha_sq = a;
        row.bdd = detect_sudden_changes(trajectory, scan, refiner, Measure::BDD);
        row.hdd = detect_sudden_changes(trajectory, scan, refiner, Measure::HDD);
        row.tdd_monotone = monotone_non_increasing(trajectory, Measure::TDD);
        row.bdd_monotone = monotone_non_increasing(trajectory, Measure::BDD);
        row.hdd_monotone = monotone_non_increasing(trajectory, Measure::HDD);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_sweep_csv(const SweepOptions &options, const std::vector<SweepRow> &rows) {
    std::string out =
        "alpha_sq,nbar,topology,n_bdd,n_hdd,bdd_gamma_t_c,hdd_gamma_t_c,tdd_monotone,bdd_monotone,hdd_monotone\n";
    for (const SweepRow &r : rows) {
        out += g12(r.alpha_sq) + ',' + g12(options.nbar) + ',' + std::string(topology_name(options.topology)) + ',' +
               std::to_string(r.bdd.size()) + ',' + std::to_string(r.hdd.size()) + ',' + join_times(r.bdd) + ',' +
               join_times(r.hdd) + ',' + (r.tdd_monotone ? "1" : "0") + ',' + (r.bdd_monotone ? "1" : "0") +
               ',' + (r.hdd_monotone ? "1" : "0") + '\n';
    }
    return out;
}

DiscordReport run_discord(const DensityMatrix4 &rho, Measure measure) {
    return DiscordReport{compute_discord(rho, measure), compute_discord_oracle(rho, measure).value};
}

std::string format_discord_report(const DiscordReport &report) {
    const DiscordResult &r = report.result;
    char diff[64];
    std::snprintf(diff, sizeof(diff), "%.3e", std::abs(r.value - report.oracle_value));
    std::ostringstream os;
    os << "measure     " << measure_name(r.measure) << "\n"
       << "value       " << f12(r.value) << "\n"
       << "theta       " << f12(r.optimal_direction.theta) << "\n"
       << "phi         " << f12(r.optimal_direction.phi) << "\n"
       << "angle       " << f12(measurement_angle(r.optimal_direction)) << "\n"
       << "tie         " << (r.tie ? "yes" : "no") << "\n"
       << "oracle      " << f12(report.oracle_value) << "\n"
       << "difference  " << diff << "\n";
    return os.str();
}

void cmd_figure(const FigureOptions &options, std::ostream &log) {
    std::vector<Panel> panels = figure_panels(options.figure);
    ScanConfig scan = scan_for(options.points, options.t_max, 1.0);
    std::vector<PanelResult> results;
    for (const Panel &panel : panels) {
        results.push_back(run_panel(panel, scan));
        const PanelResult &r = results.back();
        write_file_atomic(options.out_dir / (panel.id + ".csv"), format_trajectory_csv(r.trajectory));
        log << panel.id << ": alpha^2=" << g12(panel.alpha_sq) << " nbar=" << g12(panel.config.nbar)
            << " topology=" << topology_name(panel.config.topology) << " events=" << r.events.size();
        for (const EventMarker &m : r.events) {
            log << " " << measure_name(m.event.measure) << "@" << g12(m.event.gamma_t_c);
        }
        log << "\n";
    }
    write_file_atomic(options.out_dir / "events.json", format_events_json(results));
    write_file_atomic(options.out_dir / (options.figure + ".gp"), format_plot_script(options.figure, results));
}

void cmd_sweep(const SweepOptions &options, std::ostream &log) {
    std::vector<SweepRow> rows = run_sweep(options);
    write_file_atomic(options.out_dir / "sweep.csv", format_sweep_csv(options, rows));
    json events = json::array();
    for (const SweepRow &r : rows) {
        for (const auto *list : {&r.bdd, &r.hdd}) {
            for (const SuddenChangeEvent &e : *list) {
                events.push_back(json{{"panel", "alpha_sq=" + g12(r.alpha_sq)},
                                      {"measure", measure_name(e.measure)},
                                      {"gamma_t_c", e.gamma_t_c},
                                      {"theta_before", e.theta_before},
                                      {"theta_after", e.theta_after},
                                      {"bracket_width", e.bracket_width}});
            }
        }
    }
    write_file_atomic(options.out_dir / "events.json", events.dump(2) + "\n");
    for (const SweepRow &r : rows) {
        log << "alpha^2=" << g12(r.alpha_sq) << " bdd=" << r.bdd.size() << " hdd=" << r.hdd.size() << "\n";
    }
}

void cmd_discord(const DiscordOptions &options, std::ostream &out) {
    out << format_discord_report(run_discord(read_state_file(options.state_file), options.measure));
}

}  // namespace gqd::cli
