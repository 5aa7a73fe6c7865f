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

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/kernel.hpp"
#include "qudit/state.hpp"

namespace qudit {

struct RunResult {
    State state;
    OpCounter counter;
    /// Time spent applying ops, excluding state preparation and result readout.
    uint64_t wall_time_ns = 0;
    /// Nonzero amplitudes in index order.
    std::vector<std::pair<BasisIndex, Amplitude>> amplitudes;
};

/// Runs `circuit` from its initial basis state. `after_each(state, op_index)`
/// is invoked after every op. The final readout of nonzero amplitudes into
/// index order counts one write per amplitude.
template <typename Observer>
RunResult run(const Circuit &circuit, Backend backend, const StateOptions &opts, Observer &&after_each) {
    RunResult result{init_basis(circuit.system, circuit.initial_index(), backend, opts), {}, 0, {}};
    auto t0 = std::chrono::steady_clock::now();
    for (size_t k = 0; k < circuit.ops.size(); ++k) {
        apply_op(result.state, circuit.ops[k], result.counter);
        after_each(std::as_const(result.state), k);
    }
    auto t1 = std::chrono::steady_clock::now();
    result.wall_time_ns = static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    result.amplitudes = amplitudes_sorted(result.state);
    result.counter.amp_writes += result.amplitudes.size();
    return result;
}

inline RunResult run(const Circuit &circuit, Backend backend, const StateOptions &opts = {}) {
    return run(circuit, backend, opts, [](const State &, size_t) {});
}

}  // namespace qudit
