// Copyright 2026 The magblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magblock/app.hpp"
#include "magblock/config.hpp"
#include "magblock/errors.hpp"

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  invalid argument\n"
    "  3  dimension mismatch\n"
    "  4  non-unique steady state\n"
    "  5  solver did not converge\n"
    "  6  g2(0) undefined (no magnon population)\n"
    "  7  thermal threshold not bracketed\n"
    "  8  configuration error\n"
    "  9  I/O error\n"
    " 10  sweep aborted at a grid point\n"
    " 11  self-check failed\n"
    "Errors are also printed to stderr as one JSON line.";

struct Options {
    std::string config_path;
    std::vector<std::string> sets;
    std::string out;
    std::string format;
    int workers = -1;
    int fock = -1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw magblock::IoError("cannot read config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state magnon blockade simulator for a driven dispersive qubit-magnon system"};
    app.footer(kExitCodes);
    app.require_subcommand(1);

    Options opts;
    const std::vector<std::pair<std::string, std::string>> modes = {
        {"steady", "Solve one steady state and print g2(0), P_n and diagnostics as JSON"},
        {"sweep", "Run a 1-D or 2-D parameter grid and write CSV"},
        {"resonance", "Print the closed-form single- and two-magnon resonance detunings"},
        {"thermal-threshold", "Find the thermal occupation where g2(0) crosses 1"},
        {"check", "Run the invariant self-check suite"},
    };
    for (const auto& [name, help] : modes) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "Flat key = value configuration file");
        sub->add_option("--set", opts.sets, "Override a configuration key (key=value), repeatable");
        sub->add_option("--out", opts.out, "Output path (default: stdout)");
        sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--workers", opts.workers, "Worker threads for sweeps (0: runtime default)");
        sub->add_option("--fock", opts.fock, "Magnon Fock truncation");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string mode = app.get_subcommands().front()->get_name();
    std::vector<std::string> overrides{"mode=" + mode};
    overrides.insert(overrides.end(), opts.sets.begin(), opts.sets.end());
    if (!opts.out.empty()) overrides.push_back("output=" + opts.out);
    if (!opts.format.empty()) overrides.push_back("format=" + opts.format);
    if (opts.workers >= 0) overrides.push_back("workers=" + std::to_string(opts.workers));
    if (opts.fock >= 0) overrides.push_back("n_fock=" + std::to_string(opts.fock));

    try {
        const std::string text = opts.config_path.empty() ? std::string() : read_file(opts.config_path);
        const magblock::RunConfig config = magblock::parse_config(text, overrides);
        return magblock::run(config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        return magblock::report_error(e, std::cerr);
    }
}
