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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qudit/qudit.hpp"

namespace qudit::test_util {

/// Normalized dense state with Gaussian amplitudes on every basis index.
template <typename Rng>
DenseState random_dense(const QuditSystem &sys, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Amplitude> amps(sys.total_dim());
    double acc = 0.0;
    for (auto &a : amps) {
        a = {normal(rng), normal(rng)};
        acc += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(acc);
    for (auto &a : amps) a *= scale;
    return DenseState(sys, std::move(amps));
}

/// Normalized state supported on roughly `fill` of the basis, as both backends.
template <typename Rng>
std::pair<DenseState, SparseState> random_pair(const QuditSystem &sys, Rng &rng, double fill = 1.0) {
    auto dense = random_dense(sys, rng);
    std::bernoulli_distribution keep(fill);
    auto amps = dense.amplitudes();
    bool any = false;
    for (auto &a : amps) {
        if (!keep(rng)) a = 0.0;
        any = any || a != Amplitude{};
    }
    if (!any) amps[0] = 1.0;
    double n = norm(dense);
    for (auto &a : amps) a /= n;
    return {dense, to_sparse(dense)};
}

inline double diff(const DenseState &a, const DenseState &b) {
    return max_abs_diff(State(a), State(b));
}

}  // namespace qudit::test_util
