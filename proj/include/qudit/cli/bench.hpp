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

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/cli/report.hpp"
#include "qudit/simulator.hpp"

namespace qudit::cli {

struct BenchOptions {
    uint32_t dim = 2;
    uint32_t n_min = 1;
    uint32_t n_max = 1;
    uint32_t repeat = 100;
    Backend backend = Backend::Sparse;
};

struct BenchRow {
    uint32_t d = 0;
    uint32_t n = 0;
    BasisIndex total_dim = 0;
    uint64_t median_wall_time_ns = 0;
    uint64_t amp_writes = 0;
    uint64_t nonzero_count = 0;
    /// "ok" or the error kind that stopped the run (IndexOverflow past 64 bits).
    std::string status = "ok";
};

inline constexpr const char *kBenchCsvHeader = "d,n,D,median_wall_time_ns,amp_writes,nonzero_count,status";

inline uint64_t median(std::vector<uint64_t> v) {
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

inline BenchRow bench_ghz_point(uint32_t d, uint32_t n, uint32_t repeat, Backend backend) {
    BenchRow row{d, n};
    try {
        Circuit c = ghz(d, n);
        row.total_dim = c.system.total_dim();
        std::vector<uint64_t> times;
        times.reserve(repeat);
        for (uint32_t r = 0; r < std::max<uint32_t>(repeat, 1); ++r) {
            auto result = run(c, backend);
            times.push_back(result.wall_time_ns);
            row.amp_writes = result.counter.amp_writes;
            row.nonzero_count = result.amplitudes.size();
        }
        row.median_wall_time_ns = median(std::move(times));
    } catch (const SimError &e) {
        row = BenchRow{d, n};
        row.status = std::string(to_string(e.kind()));
    }
    return row;
}

inline void write_bench_row(std::ostream &out, const BenchRow &r) {
    out << r.d << ',' << r.n << ',';
    if (r.status == "ok") {
        out << r.total_dim << ',' << r.median_wall_time_ns << ',' << r.amp_writes << ',' << r.nonzero_count;
    } else {
        out << ",,,";
    }
    out << ',' << r.status << "\n";
}

/// One CSV row per n in [n_min, n_max]. Overflowing sizes produce an error
/// row instead of aborting the sweep.
inline int cmd_bench_ghz(const BenchOptions &opts, std::ostream &out, std::ostream &err) {
    if (opts.dim < 2 || opts.n_min < 1 || opts.n_min > opts.n_max) {
        err << "error: need --dim >= 2 and 1 <= --min <= --max\n";
        return kExitInput;
    }
    try {
        out << kBenchCsvHeader << "\n";
        for (uint32_t n = opts.n_min; n <= opts.n_max; ++n) {
            write_bench_row(out, bench_ghz_point(opts.dim, n, opts.repeat, opts.backend));
        }
        return kExitOk;
    } catch (const SimError &e) {
        return report_error(err, e);
    }
}

}  // namespace qudit::cli
