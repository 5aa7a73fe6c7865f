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

#include "qudit/kernel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qudit/oracle.hpp"
#include "test_util.hpp"

using namespace qudit;

namespace {

const double kInvSqrt3 = 1 / std::sqrt(3.0);
const double kInvSqrt2 = 1 / std::sqrt(2.0);

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const SimError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected SimError";
    return ErrorKind::ValidationError;
}

DenseState dense_of(QuditSystem sys, std::vector<Amplitude> amps) {
    return DenseState(std::move(sys), std::move(amps));
}

/// Applies op via the oracle's full D x D matrix.
DenseState oracle_apply(const DenseState &s, const GateOp &op) {
    auto m = oracle::full_operator(s.system(), op).matrix;
    std::vector<Amplitude> v(s.amplitudes().begin(), s.amplitudes().end());
    return DenseState(s.system(), oracle::multiply(m, v));
}

Gate random_library_gate(uint32_t d, std::mt19937_64 &rng) {
    switch (rng() % 6) {
        case 0: return shift_x(d, 1 + rng() % (d - 1));
        case 1: return clock_z(d, 1 + rng() % (d - 1));
        case 2: return fourier_h(d);
        case 3: {
            std::uniform_real_distribution<double> a(-3, 3);
            std::vector<double> angles(d);
            for (auto &x : angles) x = a(rng);
            return phase_gate(d, angles);
        }
        default: return arbitrary(d, random_unitary(d, rng));
    }
}

}  // namespace

TEST(kernel, phase_examples) {
    OpCounter c;
    auto plus = dense_of(QuditSystem{2}, {kInvSqrt2, kInvSqrt2});
    apply_phase(plus, 0, clock_z(2, 1).diagonal(), c);
    EXPECT_LT(test_util::diff(plus, dense_of(QuditSystem{2}, {kInvSqrt2, -kInvSqrt2})), 1e-15);

    auto uniform = dense_of(QuditSystem{3}, {kInvSqrt3, kInvSqrt3, kInvSqrt3});
    apply_phase(uniform, 0, clock_z(3, 1).diagonal(), c);
    const Amplitude w = std::polar(1.0, 2 * std::numbers::pi / 3);
    EXPECT_LT(test_util::diff(uniform, dense_of(QuditSystem{3}, {kInvSqrt3, kInvSqrt3 * w, kInvSqrt3 * w * w})),
              1e-15);

    std::mt19937_64 rng(1);
    auto [dense, sparse] = test_util::random_pair(QuditSystem{3, 2}, rng);
    auto before = dense;
    auto sparse_before = sparse;
    apply_phase(dense, 1, phase_gate(2, {0, 0}).diagonal(), c);
    apply_phase(sparse, 0, phase_gate(3, {0, 0, 0}).diagonal(), c);
    EXPECT_EQ(test_util::diff(dense, before), 0.0);
    EXPECT_EQ(max_abs_diff(State(sparse), State(sparse_before)), 0.0);
}

TEST(kernel, phase_errors) {
    OpCounter c;
    auto s = DenseState::basis(QuditSystem{2, 3}, 0);
    EXPECT_EQ(kind_of([&] { apply_phase(s, 1, clock_z(2, 1).diagonal(), c); }), ErrorKind::LengthMismatch);
    EXPECT_EQ(kind_of([&] { apply_phase(s, 2, clock_z(2, 1).diagonal(), c); }), ErrorKind::QuditOutOfRange);
}

TEST(kernel, permutation_examples) {
    OpCounter c;
    auto s = SparseState::basis(QuditSystem{2, 2}, 0);
    apply_permutation(s, 0, shift_x(2, 1).permutation(), c);
    EXPECT_EQ(s.at(1), Amplitude(1.0));
    EXPECT_EQ(s.entries().size(), 1u);

    auto wrap = DenseState::basis(QuditSystem{2, 3}, 4);
    apply_permutation(wrap, 1, shift_x(3, 1).permutation(), c);
    EXPECT_EQ(wrap.at(0), Amplitude(1.0));

    auto wrap_sparse = SparseState::basis(QuditSystem{2, 3}, 4);
    apply_permutation(wrap_sparse, 1, shift_x(3, 1).permutation(), c);
    EXPECT_EQ(wrap_sparse.at(0), Amplitude(1.0));
}

TEST(kernel, permutation_then_inverse_is_bit_exact) {
    std::mt19937_64 rng(2);
    QuditSystem sys{3, 4, 2};
    for (int t = 0; t < 20; ++t) {
        auto [dense, sparse] = test_util::random_pair(sys, rng, 0.6);
        const uint32_t target = rng() % 3;
        const uint32_t d = sys.dim(target);
        std::vector<uint32_t> sigma(d);
        for (uint32_t j = 0; j < d; ++j) sigma[j] = j;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::vector<uint32_t> inverse(d);
        for (uint32_t j = 0; j < d; ++j) inverse[sigma[j]] = j;

        auto d0 = dense;
        auto s0 = sparse;
        OpCounter c;
        apply_permutation(dense, target, sigma, c);
        apply_permutation(dense, target, inverse, c);
        apply_permutation(sparse, target, sigma, c);
        apply_permutation(sparse, target, inverse, c);
        EXPECT_EQ(test_util::diff(dense, d0), 0.0);
        EXPECT_EQ(max_abs_diff(State(sparse), State(s0)), 0.0);
        EXPECT_EQ(norm(dense), norm(d0));
    }
}

TEST(kernel, permutation_errors) {
    OpCounter c;
    auto s = SparseState::basis(QuditSystem{3}, 0);
    std::vector<uint32_t> bad{0, 0, 1};
    EXPECT_EQ(kind_of([&] { apply_permutation(s, 0, bad, c); }), ErrorKind::NotBijection);
    EXPECT_EQ(kind_of([&] { apply_permutation(s, 1, shift_x(3, 1).permutation(), c); }),
              ErrorKind::QuditOutOfRange);
}

TEST(kernel, general_examples) {
    OpCounter c;
    // Fourier on q1 of |00>, dims [2,3]: equal weight on indices 0, 2, 4.
    for (auto backend : {Backend::Dense, Backend::Sparse}) {
        auto s = init_basis(QuditSystem{2, 3}, 0, backend);
        apply_op(s, GateOp{fourier_h(3), 1, {}}, c);
        auto expected = dense_of(QuditSystem{2, 3}, {kInvSqrt3, 0, kInvSqrt3, 0, kInvSqrt3, 0});
        EXPECT_LT(max_abs_diff(s, State(expected)), 1e-15);
        EXPECT_EQ(nonzero_count(s), 3u);
    }

    auto one = DenseState::basis(QuditSystem{2}, 1);
    apply_general(one, 0, fourier_h(2), c);
    EXPECT_LT(test_util::diff(one, dense_of(QuditSystem{2}, {kInvSqrt2, -kInvSqrt2})), 1e-15);
}

TEST(kernel, hadamard_twice_is_identity) {
    std::mt19937_64 rng(4);
    QuditSystem sys{2, 3, 2};
    for (int t = 0; t < 10; ++t) {
        auto [dense, sparse] = test_util::random_pair(sys, rng, 0.5);
        auto d0 = dense;
        auto s0 = sparse;
        const uint32_t target = rng() % 2 ? 0 : 2;
        OpCounter c;
        apply_general(dense, target, fourier_h(2), c);
        apply_general(dense, target, fourier_h(2), c);
        apply_general(sparse, target, fourier_h(2), c);
        apply_general(sparse, target, fourier_h(2), c);
        EXPECT_LT(test_util::diff(dense, d0), 1e-12);
        EXPECT_LT(max_abs_diff(State(sparse), State(s0)), 1e-12);
    }
}

TEST(kernel, general_errors) {
    OpCounter c;
    auto s = DenseState::basis(QuditSystem{2, 3}, 0);
    EXPECT_EQ(kind_of([&] { apply_general(s, 0, fourier_h(3), c); }), ErrorKind::ShapeMismatch);
    EXPECT_EQ(kind_of([&] { apply_general(s, 4, fourier_h(3), c); }), ErrorKind::QuditOutOfRange);
}

TEST(kernel, controlled_examples) {
    // dims [2,3]: X_{+1} on q0 controlled by q1 = 2 moves index 4 to 5.
    for (auto backend : {Backend::Dense, Backend::Sparse}) {
        OpCounter c;
        auto s = State(dense_of(QuditSystem{2, 3}, {kInvSqrt3, 0, kInvSqrt3, 0, kInvSqrt3, 0}));
        if (backend == Backend::Sparse) s = to_sparse(s);
        apply_op(s, GateOp{shift_x(2, 1), 0, {{1, 2}}}, c);
        auto expected = dense_of(QuditSystem{2, 3}, {kInvSqrt3, 0, kInvSqrt3, 0, 0, kInvSqrt3});
        EXPECT_LT(max_abs_diff(s, State(expected)), 1e-15);
    }

    GateOp toffoli{shift_x(2, 1), 0, {{2, 1}, {1, 1}}};
    for (auto backend : {Backend::Dense, Backend::Sparse}) {
        OpCounter c;
        auto on = init_basis(QuditSystem{2, 2, 2}, 6, backend);
        apply_op(on, toffoli, c);
        EXPECT_EQ(max_abs_diff(on, init_basis(QuditSystem{2, 2, 2}, 7, Backend::Sparse)), 0.0);
        auto off = init_basis(QuditSystem{2, 2, 2}, 2, backend);
        apply_op(off, toffoli, c);
        EXPECT_EQ(max_abs_diff(off, init_basis(QuditSystem{2, 2, 2}, 2, Backend::Sparse)), 0.0);
    }
}

TEST(kernel, controlled_errors) {
    OpCounter c;
    auto s = SparseState::basis(QuditSystem{2, 3, 2}, 0);
    auto x = shift_x(2, 1);
    EXPECT_EQ(kind_of([&] { apply_controlled(s, std::vector<Control>{{0, 1}}, 0, x, c); }),
              ErrorKind::ControlTargetOverlap);
    EXPECT_EQ(kind_of([&] { apply_controlled(s, std::vector<Control>{{1, 1}, {1, 2}}, 0, x, c); }),
              ErrorKind::DuplicateControl);
    EXPECT_EQ(kind_of([&] { apply_controlled(s, std::vector<Control>{{1, 3}}, 0, x, c); }),
              ErrorKind::ValueOutOfRange);
    EXPECT_EQ(kind_of([&] { apply_controlled(s, std::vector<Control>{{5, 0}}, 0, x, c); }),
              ErrorKind::QuditOutOfRange);
}

TEST(kernel, apply_op_dispatch) {
    QuditSystem sys{3, 2};
    auto s = State(SparseState::basis(sys, 0));
    OpCounter c;
    apply_op(s, GateOp{clock_z(3, 1), 0, {}}, c);
    // Phase on a single stored entry: one read, one write.
    EXPECT_EQ(c.amp_reads, 1u);
    EXPECT_EQ(c.amp_writes, 1u);
    EXPECT_EQ(c.ops, 1u);

    OpCounter cc;
    auto t = State(SparseState::basis(QuditSystem{2, 2, 2}, 6));
    apply_op(t, GateOp{shift_x(2, 1), 0, {{1, 1}, {2, 1}}}, cc);
    // Controlled path rewrites the whole matching class.
    EXPECT_EQ(cc.amp_writes, 2u);
    EXPECT_EQ(std::get<SparseState>(t).at(7), Amplitude(1.0));
}

// Oracle equivalence on random systems, states and ops (with and without controls).
TEST(kernel, matches_oracle_on_random_ops) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const uint32_t n = 1 + rng() % 4;
        std::vector<uint32_t> dims(n);
        for (auto &d : dims) d = 2 + rng() % 4;
        QuditSystem sys(dims);
        auto [dense, sparse] = test_util::random_pair(sys, rng, (rng() % 2) ? 1.0 : 0.3);

        GateOp op;
        op.target = rng() % n;
        op.gate = random_library_gate(sys.dim(op.target), rng);
        if (n > 1 && rng() % 2) {
            std::vector<uint32_t> others;
            for (uint32_t q = 0; q < n; ++q) {
                if (q != op.target) others.push_back(q);
            }
            std::shuffle(others.begin(), others.end(), rng);
            const size_t count = 1 + rng() % std::min<size_t>(2, others.size());
            for (size_t k = 0; k < count; ++k) op.controls.push_back({others[k], uint32_t(rng() % sys.dim(others[k]))});
        }

        auto expected = oracle_apply(dense, op);
        OpCounter c;
        apply_op(dense, op, c);
        apply_op(sparse, op, c);
        ASSERT_LT(test_util::diff(dense, expected), 1e-10) << "trial " << trial;
        ASSERT_LT(max_abs_diff(State(sparse), State(expected)), 1e-10) << "trial " << trial;
        EXPECT_LT(std::abs(norm(dense) - 1.0), 1e-9);
        EXPECT_LT(std::abs(norm(sparse) - 1.0), 1e-9);
        for (const auto &[i, a] : sparse.entries()) ASSERT_GE(std::abs(a), sparse.threshold());
    }
}

// Phase and permutation gates routed through the general kernel.
TEST(kernel, specialized_paths_match_general_path) {
    std::mt19937_64 rng(8);
    for (uint32_t d = 2; d <= 6; ++d) {
        QuditSystem sys{2, d, 3};
        std::vector<Gate> gates;
        for (uint32_t a = 0; a < d; ++a) {
            gates.push_back(shift_x(d, a));
            gates.push_back(clock_z(d, a));
        }
        for (auto &g : gates) {
            auto [dense, sparse] = test_util::random_pair(sys, rng, 0.7);
            auto dense_general = dense;
            auto sparse_general = sparse;
            OpCounter c;
            apply_op(dense, GateOp{g, 1, {}}, c);
            apply_op(sparse, GateOp{g, 1, {}}, c);
            apply_op(dense_general, GateOp{g.as_general(), 1, {}}, c);
            apply_op(sparse_general, GateOp{g.as_general(), 1, {}}, c);
            EXPECT_LT(test_util::diff(dense, dense_general), 1e-12);
            EXPECT_LT(max_abs_diff(State(sparse), State(sparse_general)), 1e-12);
        }
    }
}

TEST(kernel, clock_power_d_and_shift_inverse_are_identity) {
    std::mt19937_64 rng(12);
    for (uint32_t d = 2; d <= 6; ++d) {
        QuditSystem sys{d, 2};
        auto [dense, sparse] = test_util::random_pair(sys, rng);
        auto d0 = dense;
        auto s0 = sparse;
        OpCounter c;
        for (uint32_t k = 0; k < d; ++k) {
            apply_op(dense, GateOp{clock_z(d, 1), 0, {}}, c);
            apply_op(sparse, GateOp{clock_z(d, 1), 0, {}}, c);
        }
        EXPECT_LT(test_util::diff(dense, d0), 1e-10);
        EXPECT_LT(max_abs_diff(State(sparse), State(s0)), 1e-10);
        for (uint32_t a = 0; a < d; ++a) {
            apply_op(dense, GateOp{shift_x(d, a), 0, {}}, c);
            apply_op(dense, GateOp{shift_x(d, d - a), 0, {}}, c);
        }
        EXPECT_LT(test_util::diff(dense, d0), 1e-10);
    }
}

TEST(kernel, control_reduction) {
    std::mt19937_64 rng(21);
    // Control qudit q2 (dim 3) prepared exactly in |2>: controlled == uncontrolled.
    QuditSystem sys{3, 2, 3};
    QuditSystem rest{3, 2};
    for (int t = 0; t < 10; ++t) {
        auto psi = test_util::random_dense(rest, rng);
        std::vector<Amplitude> amps(sys.total_dim());
        for (BasisIndex i = 0; i < rest.total_dim(); ++i) amps[i + 2 * sys.block_size(2)] = psi.amplitudes()[i];
        DenseState full(sys, amps);
        auto g = random_library_gate(3, rng);
        auto controlled = full;
        auto plain = full;
        OpCounter c;
        apply_op(controlled, GateOp{g, 0, {{2, 2}}}, c);
        apply_op(plain, GateOp{g, 0, {}}, c);
        EXPECT_LT(test_util::diff(controlled, plain), 1e-15);

        // Same state, control value 1 is never met: untouched bit for bit.
        auto unmet = full;
        apply_op(unmet, GateOp{g, 0, {{2, 1}}}, c);
        EXPECT_EQ(test_util::diff(unmet, full), 0.0);
        auto unmet_sparse = to_sparse(full);
        auto sparse_before = unmet_sparse;
        apply_op(unmet_sparse, GateOp{g, 0, {{2, 0}}}, c);
        EXPECT_EQ(max_abs_diff(State(unmet_sparse), State(sparse_before)), 0.0);
    }
}

// Every class computed independently from a snapshot equals the in-place result,
// so any class processing order gives the same state.
TEST(kernel, class_order_independence) {
    std::mt19937_64 rng(33);
    QuditSystem sys{2, 3, 4};
    for (uint32_t target = 0; target < 3; ++target) {
        const uint32_t d = sys.dim(target);
        auto g = arbitrary(d, random_unitary(d, rng));
        auto snapshot = test_util::random_dense(sys, rng);
        auto inplace = snapshot;
        OpCounter c;
        apply_general(inplace, target, g, c);

        std::vector<Amplitude> reversed(sys.total_dim());
        const BasisIndex b = sys.block_size(target);
        for (BasisIndex rep = sys.repetitions(target); rep-- > 0;) {
            for (BasisIndex off = b; off-- > 0;) {
                ClassAddress cls{rep, off};
                for (uint32_t k = 0; k < d; ++k) {
                    Amplitude acc = 0.0;
                    for (uint32_t j = 0; j < d; ++j) acc += g.entry(k, j) * snapshot.amplitudes()[cls.member(j, b, d)];
                    reversed[cls.member(k, b, d)] = acc;
                }
            }
        }
        EXPECT_EQ(test_util::diff(inplace, DenseState(sys, reversed)), 0.0);
    }
}

TEST(kernel, class_members_differ_only_in_target_digit) {
    QuditSystem sys{3, 2, 4, 2};
    for (uint32_t t = 0; t < 4; ++t) {
        const BasisIndex b = sys.block_size(t);
        const uint32_t d = sys.dim(t);
        std::vector<bool> seen(sys.total_dim(), false);
        for (BasisIndex rep = 0; rep < sys.repetitions(t); ++rep) {
            for (BasisIndex off = 0; off < b; ++off) {
                ClassAddress cls{rep, off};
                auto base = sys.decode(cls.member(0, b, d));
                for (uint32_t j = 0; j < d; ++j) {
                    const BasisIndex m = cls.member(j, b, d);
                    ASSERT_LT(m, sys.total_dim());
                    ASSERT_FALSE(seen[m]);
                    seen[m] = true;
                    auto digits = sys.decode(m);
                    EXPECT_EQ(digits[t], j);
                    digits[t] = base[t];
                    EXPECT_EQ(digits, base);
                }
            }
        }
        EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(sys.total_dim()));
    }
}

TEST(kernel, scratch_and_complexity_bounds) {
    std::mt19937_64 rng(5);
    QuditSystem sys{4, 3, 5, 2};
    auto [dense, sparse] = test_util::random_pair(sys, rng, 0.05);
    for (uint32_t target = 0; target < 4; ++target) {
        const uint32_t d = sys.dim(target);
        auto g = arbitrary(d, random_unitary(d, rng));

        OpCounter cd;
        apply_general(dense, target, g, cd);
        EXPECT_LE(cd.amp_reads + cd.amp_writes, 2 * sys.total_dim());
        EXPECT_LE(cd.peak_scratch, sys.max_dim());

        std::vector<BasisIndex> classes;
        for (const auto &[i, a] : sparse.entries()) {
            classes.push_back(i - sys.digit(i, target) * sys.block_size(target));
        }
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        OpCounter cs;
        apply_general(sparse, target, g, cs);
        EXPECT_LE(cs.amp_reads + cs.amp_writes, 2 * d * classes.size());
        EXPECT_EQ(cs.amp_writes, d * classes.size());
        EXPECT_LE(cs.peak_scratch, sys.max_dim());
    }
}

TEST(kernel, sparse_general_prunes_cancelled_amplitudes) {
    // H on (|0> + |1>)/sqrt2 cancels |1> exactly.
    SparseState s(QuditSystem{2});
    s.set(0, kInvSqrt2);
    s.set(1, kInvSqrt2);
    OpCounter c;
    apply_general(s, 0, fourier_h(2), c);
    EXPECT_EQ(s.entries().size(), 1u);
    EXPECT_NEAR(s.at(0).real(), 1.0, 1e-15);
}
