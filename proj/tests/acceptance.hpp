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

#include <cstddef>
#include <cstdint>

namespace acceptance {

struct DenseRunFootprint {
    uint64_t total_dim = 0;
    uint64_t max_dim = 0;
    uint64_t peak_state_amplitudes = 0;
    uint64_t peak_scratch = 0;
    size_t largest_allocation_bytes = 0;
    size_t nonzero = 0;
};

/// Runs ghz(d, n) on the dense backend through the simulation headers only.
DenseRunFootprint dense_ghz_footprint(uint32_t d, uint32_t n);

void reset_allocation_tracking();
size_t largest_allocation();

}  // namespace acceptance
