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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/cli/report.hpp"
#include "qudit/oracle.hpp"
#include "qudit/parser.hpp"
#include "qudit/simulator.hpp"

namespace qudit::cli {

inline constexpr double kVerifyTolerance = 1e-10;

struct VerifyOutcome {
    std::string name;
    double dense_diff = 0.0;
    double sparse_diff = 0.0;

    bool passed() const {
        return dense_diff < kVerifyTolerance && sparse_diff < kVerifyTolerance;
    }
};

/// Runs both kernel backends and the oracle on `c` and records the largest
/// amplitude deviation of each backend.
inline VerifyOutcome verify_circuit(const Circuit &c, BasisIndex cap = oracle::kDefaultOracleCap) {
    auto reference = State(oracle::oracle_run(c, c.initial_index(), cap));
    VerifyOutcome out{c.name};
    out.dense_diff = max_abs_diff(run(c, Backend::Dense).state, reference);
    out.sparse_diff = max_abs_diff(run(c, Backend::Sparse).state, reference);
    return out;
}

/// Random verification workload for `seed`: 1..4 qudits with dimensions from
/// {2, 3, 4, 5}, depth 1..20, every gate family, up to two controls.
inline Circuit sweep_circuit(uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const uint32_t n = 1 + detail::pick(rng, 4);
    std::vector<uint32_t> dims(n);
    for (auto &d : dims) d = 2 + detail::pick(rng, 4);
    const uint32_t depth = 1 + detail::pick(rng, 20);
    return random_circuit(seed, std::move(dims), depth);
}

struct VerifyOptions {
    std::string file;
    bool random = false;
    uint64_t seed = 0;
    uint64_t count = 0;
    BasisIndex cap = oracle::kDefaultOracleCap;
};

inline void write_outcome(std::ostream &out, const VerifyOutcome &o) {
    out << (o.passed() ? "PASS " : "FAIL ") << o.name << " dense_diff=" << o.dense_diff
        << " sparse_diff=" << o.sparse_diff << "\n";
}

/// Exit 0 when every circuit agrees with the oracle below 1e-10, 3 on any
/// mismatch, 1/2 on input/resource errors.
inline int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err) {
    try {
        std::vector<Circuit> circuits;
        if (opts.random) {
            for (uint64_t k = 0; k < opts.count; ++k) circuits.push_back(sweep_circuit(opts.seed + k));
        } else {
            circuits.push_back(parse_circuit(read_file(opts.file), stem_of(opts.file)));
        }
        size_t failed = 0;
        out << std::setprecision(3);
        for (const auto &c : circuits) {
            auto o = verify_circuit(c, opts.cap);
            write_outcome(out, o);
            if (!o.passed()) ++failed;
        }
        out << (circuits.size() - failed) << "/" << circuits.size() << " circuits match the oracle\n";
        return failed == 0 ? kExitOk : kExitVerifyFailed;
    } catch (const SimError &e) {
        return report_error(err, e);
    }
}

}  // namespace qudit::cli
