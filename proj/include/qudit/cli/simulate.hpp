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

#pragma once

#include <ostream>
#include <string>

#include "qudit/cli/report.hpp"
#include "qudit/parser.hpp"
#include "qudit/simulator.hpp"

namespace qudit::cli {

struct SimulateOptions {
    Backend backend = Backend::Sparse;
    double threshold = kDefaultPruneThreshold;
    BasisIndex dense_cap = kDefaultDenseCap;
    OutputMode output = OutputMode::Amplitudes;
    Format format = Format::Json;
};

inline int simulate_text(const std::string &text, const std::string &name, const SimulateOptions &opts,
                         std::ostream &out, std::ostream &err) {
    try {
        Circuit c = parse_circuit(text, name);
        auto result = run(c, opts.backend, StateOptions{opts.dense_cap, opts.threshold});
        write_report(out, make_report(c, opts.backend, opts.output, result), opts.format);
        return kExitOk;
    } catch (const SimError &e) {
        return report_error(err, e);
    }
}

inline int cmd_simulate(const std::string &path, const SimulateOptions &opts, std::ostream &out, std::ostream &err) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const SimError &e) {
        return report_error(err, e);
    }
    return simulate_text(text, stem_of(path), opts, out, err);
}

}  // namespace qudit::cli
