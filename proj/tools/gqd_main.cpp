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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char **argv) {
    using namespace gqd::cli;

    CLI::App app{"Geometric quantum discord of two qubits in thermal reservoirs"};
    app.require_subcommand(1);

    FigureOptions figure;
    CLI::App *fig = app.add_subcommand("figure", "Reproduce a figure as CSV data, events.json and a gnuplot script");
    fig->add_option("figure", figure.figure, "fig1, fig2 or fig3")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    fig->add_option("--out", figure.out_dir, "Output directory")->capture_default_str();
    fig->add_option("--points", figure.points, "Grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
    fig->add_option("--tmax", figure.t_max, "Largest gamma t")->check(CLI::PositiveNumber)->capture_default_str();

    SweepOptions sweep;
    std::string topology = "ab";
    std::string alpha_list;
    CLI::App *sw = app.add_subcommand("sweep", "Count sudden changes over a list of alpha^2 values");
    sw->add_option("--alpha-sq", alpha_list, "Comma separated alpha^2 values")->required();
    sw->add_option("--nbar", sweep.nbar, "Mean thermal photon number")->required();
    sw->add_option("--topology", topology, "ab, a or b")
        ->check(CLI::IsMember({"ab", "a", "b"}))
        ->capture_default_str();
    sw->add_option("--out", sweep.out_dir, "Output directory")->capture_default_str();
    sw->add_option("--points", sweep.points, "Grid points")->check(CLI::Range(2, 1000000))->capture_default_str();
    sw->add_option("--tmax", sweep.t_max, "Largest scan time")->check(CLI::PositiveNumber)->capture_default_str();
    sw->add_option("--time-scale", sweep.time_scale, "Scan time per unit gamma t (use nbar for gamma_0 t)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    DiscordOptions discord;
    std::string measure;
    CLI::App *dc = app.add_subcommand("discord", "Evaluate one discord of a state read from JSON");
    dc->add_option("--state", discord.state_file, "JSON file with \"re\" and \"im\" 4x4 arrays")->required();
    dc->add_option("--measure", measure, "tdd, hdd or bdd")->required()->check(CLI::IsMember({"tdd", "hdd", "bdd"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*fig) {
            cmd_figure(figure, std::cout);
        } else if (*sw) {
            sweep.alpha_sq = parse_number_list(alpha_list);
            sweep.topology = parse_topology(topology);
            cmd_sweep(sweep, std::cout);
        } else if (*dc) {
            discord.measure = gqd::parse_measure(measure);
            cmd_discord(discord, std::cout);
        }
    } catch (const gqd::Error &e) {
        std::cerr << "gqd: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "gqd: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
