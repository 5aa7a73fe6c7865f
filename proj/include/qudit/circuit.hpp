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
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qudit/error.hpp"
#include "qudit/gates.hpp"
#include "qudit/op.hpp"
#include "qudit/system.hpp"

namespace qudit {

struct Circuit {
    QuditSystem system;
    std::vector<GateOp> ops;
    std::string name = "circuit";
    /// Initial basis state digits, least significant first. Empty means |0...0>.
    std::vector<uint32_t> initial;

    BasisIndex initial_index() const {
        if (initial.empty()) return 0;
        return system.encode(initial);
    }

    void append(GateOp op) {
        validate(system, op);
        ops.push_back(std::move(op));
    }

    /// Structural equality: system, initial state and op list. The name is a label only.
    bool same_structure(const Circuit &other) const {
        return system == other.system && ops == other.ops && initial_index() == other.initial_index();
    }
};

/// GHZ preparation on n qudits of dimension d: Fourier on q0, then for every
/// neighbouring pair a fan of value-controlled shifts X_{+v} on q_k @ q_{k-1}=v.
/// From |0...0> it yields (1/sqrt d) sum_v |v v ... v>.
inline Circuit ghz(uint32_t d, uint32_t n) {
    if (n == 0) throw SimError(ErrorKind::EmptySystem, "GHZ circuit needs at least one qudit");
    Circuit c{QuditSystem(std::vector<uint32_t>(n, d)), {}, "ghz_d" + std::to_string(d) + "_n" + std::to_string(n), {}};
    c.ops.reserve(1 + size_t{n - 1} * (d - 1));
    c.append({fourier_h(d), 0, {}});
    for (uint32_t k = 1; k < n; ++k) {
        for (uint32_t v = 1; v < d; ++v) c.append({shift_x(d, v), k, {{k - 1, v}}});
    }
    return c;
}

/// Two registers of dimensions 2 and 3: generalized Hadamard on q1, then
/// X_{+1} on q0 controlled by q1 = 2.
inline Circuit example_2x3() {
    Circuit c{QuditSystem{2, 3}, {}, "example_2x3", {}};
    c.append({fourier_h(3), 1, {}});
    c.append({shift_x(2, 1), 0, {{1, 2}}});
    return c;
}

/// Relative weights of the op families drawn by random_circuit.
struct GateMix {
    double phase = 1.0;
    double permutation = 1.0;
    double general = 1.0;
    double controlled = 1.0;
};

/// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
/// Returned row-major.
template <typename Rng>
std::vector<Amplitude> random_unitary(uint32_t d, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    // Columns stored contiguously while orthonormalizing.
    std::vector<Amplitude> cols(size_t{d} * d);
    for (auto &z : cols) z = {normal(rng), normal(rng)};
    for (uint32_t c = 0; c < d; ++c) {
        Amplitude *v = &cols[size_t{c} * d];
        // Two passes of modified Gram-Schmidt keep the deviation near machine precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (uint32_t p = 0; p < c; ++p) {
                const Amplitude *u = &cols[size_t{p} * d];
                Amplitude dot = 0.0;
                for (uint32_t k = 0; k < d; ++k) dot += std::conj(u[k]) * v[k];
                for (uint32_t k = 0; k < d; ++k) v[k] -= dot * u[k];
            }
        }
        double len = 0.0;
        for (uint32_t k = 0; k < d; ++k) len += std::norm(v[k]);
        len = std::sqrt(len);
        for (uint32_t k = 0; k < d; ++k) v[k] /= len;
    }
    std::vector<Amplitude> row_major(cols.size());
    for (uint32_t r = 0; r < d; ++r) {
        for (uint32_t c = 0; c < d; ++c) row_major[size_t{r} * d + c] = cols[size_t{c} * d + r];
    }
    return row_major;
}

namespace detail {

template <typename Rng>
uint32_t pick(Rng &rng, uint32_t n) {
    return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng);
}

template <typename Rng>
Gate random_phase(uint32_t d, Rng &rng) {
    if (pick(rng, 2) == 0) return clock_z(d, 1 + pick(rng, d - 1));
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> angles(d);
    for (auto &a : angles) a = angle(rng);
    return phase_gate(d, std::move(angles));
}

template <typename Rng>
Gate random_permutation(uint32_t d, Rng &rng) {
    if (pick(rng, 2) == 0) return shift_x(d, 1 + pick(rng, d - 1));
    std::vector<uint32_t> sigma(d);
    for (uint32_t j = 0; j < d; ++j) sigma[j] = j;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Amplitude> m(size_t{d} * d);
    for (uint32_t j = 0; j < d; ++j) m[size_t{sigma[j]} * d + j] = 1.0;
    return arbitrary(d, m);
}

template <typename Rng>
Gate random_general(uint32_t d, Rng &rng) {
    if (pick(rng, 2) == 0) return fourier_h(d);
    return arbitrary(d, random_unitary(d, rng));
}

}  // namespace detail

/// Seeded random circuit over `dims`. Each of the `depth` ops is drawn from
/// the families in `mix`; controlled ops carry 1..min(2, n-1) distinct
/// controls with random values and a gate from any family.
inline Circuit random_circuit(uint64_t seed, std::vector<uint32_t> dims, uint32_t depth, GateMix mix = {}) {
    std::array<double, 4> weights{mix.phase, mix.permutation, mix.general, mix.controlled};
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw SimError(ErrorKind::InvalidWeights, "gate mix weights must be finite and non-negative");
        }
        total += w;
    }
    if (!(total > 0.0)) throw SimError(ErrorKind::InvalidWeights, "gate mix weights must not all be zero");
    if (depth == 0) throw SimError(ErrorKind::InvalidWeights, "random circuit depth must be >= 1");

    Circuit c{QuditSystem(std::move(dims)), {}, "random_" + std::to_string(seed), {}};
    const auto n = static_cast<uint32_t>(c.system.num_qudits());
    if (n < 2) weights[3] = 0.0;
    if (weights[0] + weights[1] + weights[2] + weights[3] == 0.0) {
        throw SimError(ErrorKind::InvalidWeights, "only controlled ops requested but the system has one qudit");
    }

    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> family(weights.begin(), weights.end());
    auto gate_of = [&](int fam, uint32_t d) {
        switch (fam) {
            case 0: return detail::random_phase(d, rng);
            case 1: return detail::random_permutation(d, rng);
            default: return detail::random_general(d, rng);
        }
    };
    c.ops.reserve(depth);
    for (uint32_t step = 0; step < depth; ++step) {
        int fam = family(rng);
        GateOp op;
        op.target = detail::pick(rng, n);
        const uint32_t d = c.system.dim(op.target);
        if (fam == 3) {
            op.gate = gate_of(static_cast<int>(detail::pick(rng, 3)), d);
            uint32_t count = 1 + detail::pick(rng, std::min<uint32_t>(2, n - 1));
            std::vector<uint32_t> others;
            for (uint32_t q = 0; q < n; ++q) {
                if (q != op.target) others.push_back(q);
            }
            std::shuffle(others.begin(), others.end(), rng);
            for (uint32_t i = 0; i < count; ++i) {
                op.controls.push_back({others[i], detail::pick(rng, c.system.dim(others[i]))});
            }
        } else {
            op.gate = gate_of(fam, d);
        }
        c.append(std::move(op));
    }
    return c;
}

}  // namespace qudit
