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

// Block kernels. Every single-qudit gate on qudit t acts independently on
// equivalence classes of d_t basis states that differ only in digit t:
//
//   member(rep, offset, j) = rep * (d_t * b_t) + j * b_t + offset
//
// with rep < repetitions(t), offset < block_size(t), j < d_t. Nothing larger
// than a d_t-element scratch vector is ever allocated per class.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qudit/error.hpp"
#include "qudit/gates.hpp"
#include "qudit/op.hpp"
#include "qudit/state.hpp"
#include "qudit/system.hpp"

namespace qudit {

/// Amplitude traffic of the kernels. A class-based kernel reads each stored
/// class member and writes back all d_t class slots; per-entry kernels read
/// and write once per touched amplitude.
struct OpCounter {
    uint64_t amp_reads = 0;
    uint64_t amp_writes = 0;
    /// Largest per-class scratch buffer used so far, in amplitudes.
    uint64_t peak_scratch = 0;
    uint64_t ops = 0;

    void note_scratch(uint64_t n) noexcept {
        peak_scratch = std::max(peak_scratch, n);
    }
};

/// Position of one equivalence class for target qudit t.
struct ClassAddress {
    BasisIndex rep = 0;
    BasisIndex offset = 0;

    BasisIndex member(uint32_t j, BasisIndex block, uint32_t dim) const noexcept {
        return rep * (BasisIndex{dim} * block) + BasisIndex{j} * block + offset;
    }
};

namespace detail {

/// Per-class scratch, stack allocated for the common small dimensions.
class ClassBuffer {
   public:
    explicit ClassBuffer(uint32_t d) : d_(d) {
        if (d_ > kInline) heap_.resize(size_t{2} * d_);
    }
    std::span<Amplitude> in() noexcept {
        return {data(), d_};
    }
    std::span<Amplitude> out() noexcept {
        return {data() + d_, d_};
    }

   private:
    static constexpr uint32_t kInline = 16;
    Amplitude *data() noexcept {
        return d_ > kInline ? heap_.data() : inline_.data();
    }
    uint32_t d_;
    std::array<Amplitude, 2 * kInline> inline_{};
    std::vector<Amplitude> heap_;
};

struct PhaseRule {
    std::span<const Amplitude> diag;
    static constexpr bool kPrunes = false;
    void operator()(std::span<const Amplitude> x, std::span<Amplitude> y) const noexcept {
        for (size_t j = 0; j < x.size(); ++j) y[j] = diag[j] * x[j];
    }
};

struct PermutationRule {
    std::span<const uint32_t> sigma;
    static constexpr bool kPrunes = false;
    void operator()(std::span<const Amplitude> x, std::span<Amplitude> y) const noexcept {
        for (size_t j = 0; j < x.size(); ++j) y[sigma[j]] = x[j];
    }
};

/// y = sum_j x_j * U[:, j], skipping zero x_j.
struct GeneralRule {
    const Gate *gate;
    static constexpr bool kPrunes = true;
    void operator()(std::span<const Amplitude> x, std::span<Amplitude> y) const noexcept {
        std::fill(y.begin(), y.end(), Amplitude{});
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] == Amplitude{}) continue;
            auto col = gate->column(j);
            for (size_t k = 0; k < y.size(); ++k) y[k] += x[j] * col[k];
        }
    }
};

inline bool controls_hold(const QuditSystem &sys, BasisIndex i, std::span<const Control> controls) noexcept {
    for (const auto &c : controls) {
        if (sys.digit_unchecked(i, c.qudit) != c.value) return false;
    }
    return true;
}

/// Visits every class of `target` whose representative passes the control
/// filter, applying `rule` to the class vector in place.
template <typename Rule>
void dense_class_pass(DenseState &state, uint32_t target, std::span<const Control> controls, const Rule &rule,
                      OpCounter &counter) {
    const auto &sys = state.system();
    const uint32_t d = sys.dim(target);
    const BasisIndex block = sys.block_size(target);
    const BasisIndex reps = sys.repetitions(target);
    auto amps = state.amplitudes();
    ClassBuffer buf(d);
    auto x = buf.in();
    auto y = buf.out();
    counter.note_scratch(d);
    for (BasisIndex rep = 0; rep < reps; ++rep) {
        for (BasisIndex offset = 0; offset < block; ++offset) {
            ClassAddress cls{rep, offset};
            const BasisIndex first = cls.member(0, block, d);
            if (!controls.empty() && !controls_hold(sys, first, controls)) continue;
            for (uint32_t j = 0; j < d; ++j) x[j] = amps[first + j * block];
            rule(x, y);
            for (uint32_t j = 0; j < d; ++j) amps[first + j * block] = y[j];
            counter.amp_reads += d;
            counter.amp_writes += d;
        }
    }
}

/// Sparse counterpart: groups stored entries (that pass the control filter)
/// by class key i - digit_t(i) * b_t, then rewrites each touched class.
template <typename Rule>
void sparse_class_pass(SparseState &state, uint32_t target, std::span<const Control> controls, const Rule &rule,
                       OpCounter &counter) {
    const auto &sys = state.system();
    const uint32_t d = sys.dim(target);
    const BasisIndex block = sys.block_size(target);
    auto &entries = state.entries();

    std::vector<BasisIndex> keys;
    keys.reserve(entries.size());
    for (const auto &[i, a] : entries) {
        if (!controls.empty() && !controls_hold(sys, i, controls)) continue;
        keys.push_back(i - BasisIndex{sys.digit_unchecked(i, target)} * block);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    ClassBuffer buf(d);
    auto x = buf.in();
    auto y = buf.out();
    counter.note_scratch(d);
    const double eps = state.threshold();
    for (BasisIndex key : keys) {
        for (uint32_t j = 0; j < d; ++j) {
            auto it = entries.find(key + j * block);
            if (it == entries.end()) {
                x[j] = Amplitude{};
            } else {
                x[j] = it->second;
                ++counter.amp_reads;
            }
        }
        rule(x, y);
        for (uint32_t j = 0; j < d; ++j) {
            const BasisIndex idx = key + j * block;
            const bool drop = Rule::kPrunes ? std::abs(y[j]) < eps : y[j] == Amplitude{};
            if (drop) {
                entries.erase(idx);
            } else {
                entries[idx] = y[j];
            }
        }
        counter.amp_writes += d;
    }
}

inline void check_diag(const QuditSystem &sys, uint32_t target, std::span<const Amplitude> diag) {
    sys.check_qudit(target);
    if (diag.size() != sys.dim(target)) {
        throw SimError(ErrorKind::LengthMismatch, "diagonal has " + std::to_string(diag.size()) +
                                                      " entries but qudit " + std::to_string(target) +
                                                      " has dimension " + std::to_string(sys.dim(target)));
    }
}

inline void check_sigma(const QuditSystem &sys, uint32_t target, std::span<const uint32_t> sigma) {
    sys.check_qudit(target);
    const uint32_t d = sys.dim(target);
    if (sigma.size() != d) {
        throw SimError(ErrorKind::LengthMismatch, "digit map has " + std::to_string(sigma.size()) +
                                                      " entries but qudit " + std::to_string(target) +
                                                      " has dimension " + std::to_string(d));
    }
    std::vector<bool> seen(d, false);
    for (auto s : sigma) {
        if (s >= d || seen[s]) throw SimError(ErrorKind::NotBijection, "digit map is not a bijection");
        seen[s] = true;
    }
}

inline void check_matrix(const QuditSystem &sys, uint32_t target, const Gate &gate) {
    sys.check_qudit(target);
    if (gate.dim() != sys.dim(target)) {
        throw SimError(ErrorKind::ShapeMismatch, "gate of dimension " + std::to_string(gate.dim()) +
                                                     " cannot act on qudit " + std::to_string(target) +
                                                     " of dimension " + std::to_string(sys.dim(target)));
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Phase: scale block j of every group by diag[j]. No amplitude moves.

inline void apply_phase(DenseState &state, uint32_t target, std::span<const Amplitude> diag, OpCounter &counter) {
    const auto &sys = state.system();
    detail::check_diag(sys, target, diag);
    const uint32_t d = sys.dim(target);
    const BasisIndex block = sys.block_size(target);
    const BasisIndex reps = sys.repetitions(target);
    auto amps = state.amplitudes();
    for (BasisIndex rep = 0; rep < reps; ++rep) {
        Amplitude *group = amps.data() + rep * d * block;
        for (uint32_t j = 0; j < d; ++j) {
            const Amplitude s = diag[j];
            if (s == Amplitude{1.0}) continue;
            Amplitude *blk = group + j * block;
            for (BasisIndex o = 0; o < block; ++o) blk[o] *= s;
        }
    }
    counter.amp_reads += sys.total_dim();
    counter.amp_writes += sys.total_dim();
}

inline void apply_phase(SparseState &state, uint32_t target, std::span<const Amplitude> diag, OpCounter &counter) {
    const auto &sys = state.system();
    detail::check_diag(sys, target, diag);
    for (auto &[i, a] : state.entries()) a *= diag[sys.digit_unchecked(i, target)];
    counter.amp_reads += state.entries().size();
    counter.amp_writes += state.entries().size();
}

// ---------------------------------------------------------------------------
// Permutation: block j of every group moves to block sigma(j). For the shift
// X_{+a} this is a cyclic rotation of the d blocks by a.

inline void apply_permutation(DenseState &state, uint32_t target, std::span<const uint32_t> sigma,
                              OpCounter &counter) {
    detail::check_sigma(state.system(), target, sigma);
    detail::dense_class_pass(state, target, {}, detail::PermutationRule{sigma}, counter);
}

inline void apply_permutation(SparseState &state, uint32_t target, std::span<const uint32_t> sigma,
                              OpCounter &counter) {
    const auto &sys = state.system();
    detail::check_sigma(sys, target, sigma);
    const BasisIndex block = sys.block_size(target);
    SparseState::Map moved;
    moved.reserve(state.entries().size());
    for (const auto &[i, a] : state.entries()) {
        const uint32_t v = sys.digit_unchecked(i, target);
        moved.emplace(i - BasisIndex{v} * block + BasisIndex{sigma[v]} * block, a);
    }
    counter.amp_reads += moved.size();
    counter.amp_writes += moved.size();
    state.entries() = std::move(moved);
}

// ---------------------------------------------------------------------------
// General: per class, y = sum_j x_j * U[:, j].

inline void apply_general(DenseState &state, uint32_t target, const Gate &gate, OpCounter &counter) {
    detail::check_matrix(state.system(), target, gate);
    detail::dense_class_pass(state, target, {}, detail::GeneralRule{&gate}, counter);
}

inline void apply_general(SparseState &state, uint32_t target, const Gate &gate, OpCounter &counter) {
    detail::check_matrix(state.system(), target, gate);
    detail::sparse_class_pass(state, target, {}, detail::GeneralRule{&gate}, counter);
}

// ---------------------------------------------------------------------------
// Controlled: only classes whose members satisfy every control condition
// floor(i / b_k) mod d_k == v_k are touched. Controls never include the
// target, so the condition is constant across a class and testing the class
// representative suffices. The filter is a brute-force scan over classes
// (dense) or stored entries (sparse).

template <typename StateT>
void apply_controlled(StateT &state, std::span<const Control> controls, uint32_t target, const Gate &gate,
                      OpCounter &counter) {
    const auto &sys = state.system();
    validate_controls(sys, target, controls);
    detail::check_matrix(sys, target, gate);
    auto pass = [&](const auto &rule) {
        if constexpr (std::is_same_v<StateT, DenseState>) {
            detail::dense_class_pass(state, target, controls, rule, counter);
        } else {
            detail::sparse_class_pass(state, target, controls, rule, counter);
        }
    };
    switch (gate.kind()) {
        case GateKind::Phase: pass(detail::PhaseRule{gate.diagonal()}); break;
        case GateKind::Permutation: pass(detail::PermutationRule{gate.permutation()}); break;
        case GateKind::General: pass(detail::GeneralRule{&gate}); break;
    }
}

/// Dispatches on gate kind and control presence.
template <typename StateT>
void apply_op(StateT &state, const GateOp &op, OpCounter &counter) {
    if (!op.controls.empty()) {
        apply_controlled(state, op.controls, op.target, op.gate, counter);
    } else {
        switch (op.gate.kind()) {
            case GateKind::Phase: apply_phase(state, op.target, op.gate.diagonal(), counter); break;
            case GateKind::Permutation: apply_permutation(state, op.target, op.gate.permutation(), counter); break;
            case GateKind::General: apply_general(state, op.target, op.gate, counter); break;
        }
    }
    ++counter.ops;
}

inline void apply_op(State &state, const GateOp &op, OpCounter &counter) {
    std::visit([&](auto &s) { apply_op(s, op, counter); }, state);
}

}  // namespace qudit
