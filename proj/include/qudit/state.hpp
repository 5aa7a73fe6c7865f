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
#include <cmath>
#include <complex>
#include <span>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "qudit/error.hpp"
#include "qudit/system.hpp"

namespace qudit {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultPruneThreshold = 1e-12;
inline constexpr BasisIndex kDefaultDenseCap = BasisIndex{1} << 28;

enum class Backend { Dense, Sparse };

inline std::string_view to_string(Backend b) {
    return b == Backend::Dense ? "dense" : "sparse";
}

struct StateOptions {
    BasisIndex dense_cap = kDefaultDenseCap;
    double threshold = kDefaultPruneThreshold;
};

namespace detail {

inline void check_finite(Amplitude a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw SimError(ErrorKind::ValidationError, "amplitudes must be finite");
    }
}

inline void check_dense_cap(const QuditSystem &sys, BasisIndex cap) {
    if (sys.total_dim() > cap) {
        throw SimError(ErrorKind::AllocationTooLarge,
                       "dense state of " + std::to_string(sys.total_dim()) + " amplitudes exceeds the cap of " +
                           std::to_string(cap));
    }
}

}  // namespace detail

/// Contiguous statevector of length D.
class DenseState {
   public:
    DenseState(QuditSystem sys, std::vector<Amplitude> amps) : sys_(std::move(sys)), amps_(std::move(amps)) {
        if (amps_.size() != sys_.total_dim()) {
            throw SimError(ErrorKind::LengthMismatch, "dense state needs " + std::to_string(sys_.total_dim()) +
                                                          " amplitudes, got " + std::to_string(amps_.size()));
        }
        for (auto a : amps_) detail::check_finite(a);
    }

    static DenseState zeros(const QuditSystem &sys, BasisIndex cap = kDefaultDenseCap) {
        detail::check_dense_cap(sys, cap);
        return DenseState(sys, std::vector<Amplitude>(sys.total_dim()));
    }

    static DenseState basis(const QuditSystem &sys, BasisIndex i, BasisIndex cap = kDefaultDenseCap) {
        sys.check_index(i);
        auto s = zeros(sys, cap);
        s.amps_[i] = 1.0;
        return s;
    }

    const QuditSystem &system() const noexcept {
        return sys_;
    }
    std::span<Amplitude> amplitudes() noexcept {
        return amps_;
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    Amplitude at(BasisIndex i) const {
        sys_.check_index(i);
        return amps_[i];
    }
    size_t nonzero_count() const noexcept {
        return static_cast<size_t>(std::count_if(amps_.begin(), amps_.end(), [](Amplitude a) {
            return a != Amplitude{};
        }));
    }

   private:
    QuditSystem sys_;
    std::vector<Amplitude> amps_;
};

/// Associative statevector holding only amplitudes with magnitude >= threshold.
class SparseState {
   public:
    using Map = std::unordered_map<BasisIndex, Amplitude>;

    explicit SparseState(QuditSystem sys, double threshold = kDefaultPruneThreshold)
        : sys_(std::move(sys)), threshold_(threshold) {
    }

    static SparseState basis(const QuditSystem &sys, BasisIndex i, double threshold = kDefaultPruneThreshold) {
        sys.check_index(i);
        SparseState s(sys, threshold);
        s.entries_.emplace(i, 1.0);
        return s;
    }

    const QuditSystem &system() const noexcept {
        return sys_;
    }
    double threshold() const noexcept {
        return threshold_;
    }
    const Map &entries() const noexcept {
        return entries_;
    }
    Map &entries() noexcept {
        return entries_;
    }
    size_t nonzero_count() const noexcept {
        return entries_.size();
    }

    Amplitude at(BasisIndex i) const {
        sys_.check_index(i);
        auto it = entries_.find(i);
        return it == entries_.end() ? Amplitude{} : it->second;
    }

    /// Stores `a` at `i`, or erases the entry when |a| falls below the threshold.
    void set(BasisIndex i, Amplitude a) {
        sys_.check_index(i);
        detail::check_finite(a);
        if (std::abs(a) < threshold_) {
            entries_.erase(i);
        } else {
            entries_[i] = a;
        }
    }

    /// Sorted (index, amplitude) pairs.
    std::vector<std::pair<BasisIndex, Amplitude>> sorted_entries() const {
        std::vector<std::pair<BasisIndex, Amplitude>> out(entries_.begin(), entries_.end());
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
            return a.first < b.first;
        });
        return out;
    }

   private:
    QuditSystem sys_;
    double threshold_;
    Map entries_;
};

using State = std::variant<DenseState, SparseState>;

inline State init_basis(const QuditSystem &sys, BasisIndex i, Backend backend, const StateOptions &opts = {}) {
    if (backend == Backend::Dense) return DenseState::basis(sys, i, opts.dense_cap);
    return SparseState::basis(sys, i, opts.threshold);
}

inline const QuditSystem &system_of(const State &s) {
    return std::visit([](const auto &st) -> const QuditSystem & { return st.system(); }, s);
}

inline size_t nonzero_count(const State &s) {
    return std::visit([](const auto &st) { return st.nonzero_count(); }, s);
}

inline double norm(const DenseState &s) {
    double acc = 0.0;
    for (auto a : s.amplitudes()) acc += std::norm(a);
    return std::sqrt(acc);
}

inline double norm(const SparseState &s) {
    // Sum in index order so the result does not depend on hash layout.
    double acc = 0.0;
    for (const auto &[i, a] : s.sorted_entries()) acc += std::norm(a);
    return std::sqrt(acc);
}

inline double norm(const State &s) {
    return std::visit([](const auto &st) { return norm(st); }, s);
}

/// Nonzero (index, |amplitude|^2) pairs sorted by index.
inline std::vector<std::pair<BasisIndex, double>> probabilities(const DenseState &s) {
    std::vector<std::pair<BasisIndex, double>> out;
    auto amps = s.amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        double p = std::norm(amps[i]);
        if (p != 0.0) out.emplace_back(i, p);
    }
    return out;
}

inline std::vector<std::pair<BasisIndex, double>> probabilities(const SparseState &s) {
    std::vector<std::pair<BasisIndex, double>> out;
    for (const auto &[i, a] : s.sorted_entries()) {
        double p = std::norm(a);
        if (p != 0.0) out.emplace_back(i, p);
    }
    return out;
}

inline std::vector<std::pair<BasisIndex, double>> probabilities(const State &s) {
    return std::visit([](const auto &st) { return probabilities(st); }, s);
}

/// Nonzero (index, amplitude) pairs sorted by index.
inline std::vector<std::pair<BasisIndex, Amplitude>> amplitudes_sorted(const State &s) {
    if (auto *sp = std::get_if<SparseState>(&s)) return sp->sorted_entries();
    std::vector<std::pair<BasisIndex, Amplitude>> out;
    auto amps = std::get<DenseState>(s).amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        if (amps[i] != Amplitude{}) out.emplace_back(i, amps[i]);
    }
    return out;
}

inline DenseState to_dense(const SparseState &s, BasisIndex cap = kDefaultDenseCap) {
    auto out = DenseState::zeros(s.system(), cap);
    auto amps = out.amplitudes();
    for (const auto &[i, a] : s.entries()) amps[i] = a;
    return out;
}

inline DenseState to_dense(const State &s, BasisIndex cap = kDefaultDenseCap) {
    if (auto *d = std::get_if<DenseState>(&s)) {
        detail::check_dense_cap(d->system(), cap);
        return *d;
    }
    return to_dense(std::get<SparseState>(s), cap);
}

inline SparseState to_sparse(const DenseState &s, double threshold = kDefaultPruneThreshold) {
    SparseState out(s.system(), threshold);
    auto amps = s.amplitudes();
    for (BasisIndex i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) >= threshold) out.entries().emplace(i, amps[i]);
    }
    return out;
}

inline SparseState to_sparse(const State &s, double threshold = kDefaultPruneThreshold) {
    if (auto *d = std::get_if<DenseState>(&s)) return to_sparse(*d, threshold);
    const auto &sp = std::get<SparseState>(s);
    SparseState out(sp.system(), threshold);
    for (const auto &[i, a] : sp.entries()) {
        if (std::abs(a) >= threshold) out.entries().emplace(i, a);
    }
    return out;
}

/// max_i |a_i - b_i|, with entries missing from a sparse state read as zero.
inline double max_abs_diff(const State &a, const State &b) {
    if (!(system_of(a) == system_of(b))) {
        throw SimError(ErrorKind::SystemMismatch, "cannot compare states over different qudit systems");
    }
    auto lookup = [](const State &s, BasisIndex i) {
        if (auto *d = std::get_if<DenseState>(&s)) return d->amplitudes()[i];
        const auto &m = std::get<SparseState>(s).entries();
        auto it = m.find(i);
        return it == m.end() ? Amplitude{} : it->second;
    };
    double worst = 0.0;
    auto scan = [&](const State &x, const State &y) {
        if (auto *d = std::get_if<DenseState>(&x)) {
            auto amps = d->amplitudes();
            for (BasisIndex i = 0; i < amps.size(); ++i) worst = std::max(worst, std::abs(amps[i] - lookup(y, i)));
        } else {
            for (const auto &[i, v] : std::get<SparseState>(x).entries()) {
                worst = std::max(worst, std::abs(v - lookup(y, i)));
            }
        }
    };
    scan(a, b);
    // Indices stored only in b (both sparse case) are covered by the reverse scan.
    scan(b, a);
    return worst;
}

}  // namespace qudit
