// Copyright 2026 The Qudit Block Simulator Authors
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
#include "qudit/cli/bench.hpp"
#include "qudit/cli/simulate.hpp"
#include "qudit/cli/verify.hpp"

namespace {

bool parse_seed_range(const std::string &spec, uint64_t &seed, uint64_t &count) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    try {
        size_t used = 0;
        seed = std::stoull(spec.substr(0, colon), &used);
        if (used != colon) return false;
        auto rest = spec.substr(colon + 1);
        count = std::stoull(rest, &used);
        return used == rest.size();
    } catch (const std::exception &) {
        return false;
    }
}

}  // namespace

int main(int argc, char **argv) {
    using namespace qudit;
    CLI::App app{"Block-kernel statevector simulator for mixed-dimensional qudit circuits"};
    app.require_subcommand(1);

    std::string sim_file;
    std::string sim_backend = "sparse";
    std::string sim_output = "amplitudes";
    std::string sim_format = "json";
    cli::SimulateOptions sim;
    auto *simulate = app.add_subcommand("simulate", "Run a circuit file and print the final state");
    simulate->add_option("file", sim_file, "Circuit file")->required();
    simulate->add_option("--backend", sim_backend, "State backend")->check(CLI::IsMember({"dense", "sparse"}))
        ->capture_default_str();
    simulate->add_option("--threshold", sim.threshold, "Sparse prune threshold")->capture_default_str();
    simulate->add_option("--dense-cap", sim.dense_cap, "Largest dense statevector, in amplitudes")
        ->capture_default_str();
    simulate->add_option("--output", sim_output, "Result payload")
        ->check(CLI::IsMember({"amplitudes", "probabilities"}))
        ->capture_default_str();
    simulate->add_option("--format", sim_format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    cli::VerifyOptions ver;
    std::string random_spec;
    auto *verify = app.add_subcommand("verify", "Compare both backends against the brute-force oracle");
    auto *ver_file = verify->add_option("file", ver.file, "Circuit file");
    auto *ver_random = verify->add_option("--random", random_spec, "Seeded random sweep, <seed>:<count>");
    ver_file->excludes(ver_random);
    verify->add_option("--cap", ver.cap, "Largest dimension the oracle accepts")->capture_default_str();

    cli::BenchOptions bench;
    std::string bench_backend = "sparse";
    auto *bench_cmd = app.add_subcommand("bench", "Scaling benchmarks");
    bench_cmd->require_subcommand(1);
    auto *ghz_cmd = bench_cmd->add_subcommand("ghz", "GHZ preparation over a range of register sizes (CSV)");
    ghz_cmd->add_option("--dim", bench.dim, "Qudit dimension")->required();
    ghz_cmd->add_option("--min", bench.n_min, "Smallest register")->required();
    ghz_cmd->add_option("--max", bench.n_max, "Largest register")->required();
    ghz_cmd->add_option("--repeat", bench.repeat, "Executions per size; the median is reported")
        ->capture_default_str();
    ghz_cmd->add_option("--backend", bench_backend, "State backend")
        ->check(CLI::IsMember({"dense", "sparse"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    auto backend_of = [](const std::string &name) { return name == "dense" ? Backend::Dense : Backend::Sparse; };

    if (simulate->parsed()) {
        sim.backend = backend_of(sim_backend);
        sim.output = sim_output == "probabilities" ? cli::OutputMode::Probabilities : cli::OutputMode::Amplitudes;
        sim.format = sim_format == "csv" ? cli::Format::Csv : sim_format == "text" ? cli::Format::Text : cli::Format::Json;
        return cli::cmd_simulate(sim_file, sim, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        if (!random_spec.empty()) {
            ver.random = true;
            if (!parse_seed_range(random_spec, ver.seed, ver.count)) {
                std::cerr << "error: --random expects <seed>:<count>, got '" << random_spec << "'\n";
                return cli::kExitInput;
            }
        } else if (ver.file.empty()) {
            std::cerr << "error: verify needs a circuit file or --random <seed>:<count>\n";
            return cli::kExitInput;
        }
        return cli::cmd_verify(ver, std::cout, std::cerr);
    }
    if (ghz_cmd->parsed()) {
        bench.backend = backend_of(bench_backend);
        return cli::cmd_bench_ghz(bench, std::cout, std::cerr);
    }
    return cli::kExitInput;
}
