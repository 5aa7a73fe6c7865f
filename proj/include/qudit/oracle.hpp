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

// Brute-force reference simulator. Builds the full D x D operator of every
// op from Kronecker products and multiplies it into a dense vector. It exists
// to check the block kernels and is never used by the simulation path.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/error.hpp"
#include "qudit/gates.hpp"
#include "qudit/op.hpp"
#include "qudit/state.hpp"
#include "qudit/system.hpp"

#define QUDIT_ORACLE_INCLUDED 1

namespace qudit::oracle {

inline constexpr BasisIndex kDefaultOracleCap = 4096;

/// Square complex matrix, row-major.
struct Matrix {
    size_t n = 0;
    std::vector<Amplitude> data;

    static Matrix identity(size_t n) {
        Matrix m{n, std::vector<Amplitude>(n * n)};
        for (size_t i = 0; i < n; ++i) m.data[i * n + i] = 1.0;
        return m;
    }
    Amplitude &operator()(size_t r, size_t c) {
        return data[r * n + c];
    }
    Amplitude operator()(size_t r, size_t c) const {
        return data[r * n + c];
    }
};

/// a (x) b, with `a` on the more significant index.
inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out{a.n * b.n, std::vector<Amplitude>(a.n * b.n * a.n * b.n)};
    for (size_t ar = 0; ar < a.n; ++ar) {
        for (size_t ac = 0; ac < a.n; ++ac) {
            const Amplitude s = a(ar, ac);
            if (s == Amplitude{}) continue;
            for (size_t br = 0; br < b.n; ++br) {
                for (size_t bc = 0; bc < b.n; ++bc) out(ar * b.n + br, ac * b.n + bc) = s * b(br, bc);
            }
        }
    }
    return out;
}

/// factors[k] acts on qudit k; qudit 0 is least significant, so the product
/// is factors[n-1] (x) ... (x) factors[0].
inline Matrix kron_all(const std::vector<Matrix> &factors) {
    Matrix acc = factors.back();
    for (size_t k = factors.size() - 1; k-- > 0;) acc = kron(acc, factors[k]);
    return acc;
}

struct FullOperator {
    QuditSystem system;
    Matrix matrix;
};

inline void check_cap(const QuditSystem &sys, BasisIndex cap) {
    if (sys.total_dim() > cap) {
        throw SimError(ErrorKind::SystemTooLarge, "oracle limited to dimension " + std::to_string(cap) +
                                                      ", system has " + std::to_string(sys.total_dim()));
    }
}

/// Uncontrolled: I (x) ... (x) U (x) ... (x) I.
/// Controlled:   I_D + (x)_t B_t with B_t = |v_t><v_t| on controls,
///               U - I on the target and I elsewhere.
inline FullOperator full_operator(const QuditSystem &sys, const GateOp &op, BasisIndex cap = kDefaultOracleCap) {
    check_cap(sys, cap);
    validate(sys, op);
    const size_t n = sys.num_qudits();
    const size_t d = op.gate.dim();

    Matrix u{d, op.gate.row_major()};
    std::vector<Matrix> factors;
    factors.reserve(n);
    for (size_t k = 0; k < n; ++k) factors.push_back(Matrix::identity(sys.dims()[k]));

    if (op.controls.empty()) {
        factors[op.target] = u;
        return {sys, kron_all(factors)};
    }

    for (size_t i = 0; i < d; ++i) u(i, i) -= 1.0;
    factors[op.target] = u;
    for (const auto &c : op.controls) {
        Matrix proj{sys.dims()[c.qudit], std::vector<Amplitude>(size_t{sys.dims()[c.qudit]} * sys.dims()[c.qudit])};
        proj(c.value, c.value) = 1.0;
        factors[c.qudit] = proj;
    }
    Matrix m = kron_all(factors);
    for (size_t i = 0; i < m.n; ++i) m(i, i) += 1.0;
    return {sys, std::move(m)};
}

inline std::vector<Amplitude> multiply(const Matrix &m, const std::vector<Amplitude> &v) {
    std::vector<Amplitude> out(m.n);
    for (size_t r = 0; r < m.n; ++r) {
        Amplitude acc = 0.0;
        for (size_t c = 0; c < m.n; ++c) acc += m(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

/// Sequential full-matrix multiplication starting from basis state `initial`.
inline DenseState oracle_run(const Circuit &circuit, BasisIndex initial, BasisIndex cap = kDefaultOracleCap) {
    check_cap(circuit.system, cap);
    circuit.system.check_index(initial);
    std::vector<Amplitude> psi(circuit.system.total_dim());
    psi[initial] = 1.0;
    for (const auto &op : circuit.ops) psi = multiply(full_operator(circuit.system, op, cap).matrix, psi);
    return DenseState(circuit.system, std::move(psi));
}

}  // namespace qudit::oracle
