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
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qudit/error.hpp"
#include "qudit/state.hpp"

namespace qudit {

inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kStructureTolerance = 1e-14;

enum class GateKind { Phase, Permutation, General };

inline std::string_view to_string(GateKind k) {
    switch (k) {
        case GateKind::Phase: return "phase";
        case GateKind::Permutation: return "permutation";
        case GateKind::General: return "general";
    }
    return "?";
}

/// How a gate was built. Used for faithful text serialization.
namespace origin {
struct Fourier {
    bool operator==(const Fourier &) const = default;
};
struct Shift {
    int64_t amount;
    bool operator==(const Shift &) const = default;
};
struct Clock {
    int64_t power;
    bool operator==(const Clock &) const = default;
};
struct Angles {
    std::vector<double> radians;
    bool operator==(const Angles &) const = default;
};
struct Matrix {
    bool operator==(const Matrix &) const = default;
};
}  // namespace origin

using GateOrigin = std::variant<origin::Fourier, origin::Shift, origin::Clock, origin::Angles, origin::Matrix>;

/// Max entry magnitude of U^dagger U - I for a row-major d x d matrix.
inline double check_unitary(std::span<const Amplitude> row_major, size_t d) {
    if (row_major.size() != d * d) {
        throw SimError(ErrorKind::ShapeMismatch, "matrix has " + std::to_string(row_major.size()) +
                                                     " entries, expected " + std::to_string(d * d));
    }
    double worst = 0.0;
    for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < d; ++c) {
            Amplitude acc = 0.0;
            for (size_t k = 0; k < d; ++k) acc += std::conj(row_major[k * d + r]) * row_major[k * d + c];
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

/// A single-qudit unitary, classified into the kernel family that applies it.
///
/// The full matrix is always kept (column-major) so any gate can also be
/// pushed through the general kernel. Phase gates additionally expose their
/// diagonal; permutation gates expose the digit map j -> sigma(j).
class Gate {
   public:
    uint32_t dim() const noexcept {
        return dim_;
    }
    GateKind kind() const noexcept {
        return kind_;
    }
    const GateOrigin &origin() const noexcept {
        return origin_;
    }

    std::span<const Amplitude> diagonal() const noexcept {
        return diag_;
    }
    std::span<const uint32_t> permutation() const noexcept {
        return perm_;
    }

    /// Column j of the matrix, i.e. the image of basis state |j>.
    std::span<const Amplitude> column(size_t j) const noexcept {
        return std::span<const Amplitude>(cols_).subspan(j * dim_, dim_);
    }

    Amplitude entry(size_t row, size_t col) const noexcept {
        return cols_[col * dim_ + row];
    }

    std::vector<Amplitude> row_major() const {
        std::vector<Amplitude> out(cols_.size());
        for (size_t r = 0; r < dim_; ++r) {
            for (size_t c = 0; c < dim_; ++c) out[r * dim_ + c] = entry(r, c);
        }
        return out;
    }

    /// Same matrix, reclassified as General.
    Gate as_general() const {
        Gate g = *this;
        g.kind_ = GateKind::General;
        g.diag_.clear();
        g.perm_.clear();
        return g;
    }

    bool operator==(const Gate &other) const = default;

    friend Gate make_phase(uint32_t d, std::vector<Amplitude> diag, GateOrigin origin);
    friend Gate make_permutation(uint32_t d, std::vector<uint32_t> sigma, GateOrigin origin);
    friend Gate make_general(uint32_t d, std::vector<Amplitude> row_major, GateOrigin origin);

   private:
    uint32_t dim_ = 0;
    GateKind kind_ = GateKind::General;
    std::vector<Amplitude> cols_;
    std::vector<Amplitude> diag_;
    std::vector<uint32_t> perm_;
    GateOrigin origin_ = origin::Matrix{};
};

namespace detail {

inline void check_gate_dim(uint32_t d) {
    if (d < 2) throw SimError(ErrorKind::DimTooSmall, "gate dimension " + std::to_string(d) + " must be >= 2");
}

inline uint32_t mod_reduce(int64_t a, uint32_t d) {
    int64_t r = a % static_cast<int64_t>(d);
    return static_cast<uint32_t>(r < 0 ? r + d : r);
}

/// exp(2 pi i k / d), with k reduced first so that k = 0 is exactly 1.
inline Amplitude root_of_unity(uint64_t k, uint32_t d) {
    k %= d;
    if (k == 0) return 1.0;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / d;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

inline Gate make_phase(uint32_t d, std::vector<Amplitude> diag, GateOrigin origin) {
    detail::check_gate_dim(d);
    if (diag.size() != d) {
        throw SimError(ErrorKind::LengthMismatch, "phase gate of dimension " + std::to_string(d) + " needs " +
                                                      std::to_string(d) + " diagonal entries");
    }
    for (auto z : diag) {
        if (std::abs(std::abs(z) - 1.0) > kUnitarityTolerance) {
            throw SimError(ErrorKind::NotUnitary, "phase gate diagonal entries must have unit magnitude");
        }
    }
    Gate g;
    g.dim_ = d;
    g.kind_ = GateKind::Phase;
    g.cols_.assign(size_t{d} * d, 0.0);
    for (uint32_t j = 0; j < d; ++j) g.cols_[j * d + j] = diag[j];
    g.diag_ = std::move(diag);
    g.origin_ = std::move(origin);
    return g;
}

inline Gate make_permutation(uint32_t d, std::vector<uint32_t> sigma, GateOrigin origin) {
    detail::check_gate_dim(d);
    if (sigma.size() != d) {
        throw SimError(ErrorKind::LengthMismatch, "permutation of dimension " + std::to_string(d) + " needs " +
                                                      std::to_string(d) + " entries");
    }
    std::vector<bool> seen(d, false);
    for (auto s : sigma) {
        if (s >= d || seen[s]) throw SimError(ErrorKind::NotBijection, "digit map is not a bijection");
        seen[s] = true;
    }
    Gate g;
    g.dim_ = d;
    g.kind_ = GateKind::Permutation;
    g.cols_.assign(size_t{d} * d, 0.0);
    for (uint32_t j = 0; j < d; ++j) g.cols_[j * d + sigma[j]] = 1.0;
    g.perm_ = std::move(sigma);
    g.origin_ = std::move(origin);
    return g;
}

inline Gate make_general(uint32_t d, std::vector<Amplitude> row_major, GateOrigin origin) {
    detail::check_gate_dim(d);
    double dev = check_unitary(row_major, d);
    if (!(dev <= kUnitarityTolerance)) {
        throw SimError(ErrorKind::NotUnitary, "matrix is not unitary (max |U^dagger U - I| = " +
                                                  std::to_string(dev) + ")");
    }
    Gate g;
    g.dim_ = d;
    g.kind_ = GateKind::General;
    g.cols_.resize(size_t{d} * d);
    for (size_t r = 0; r < d; ++r) {
        for (size_t c = 0; c < d; ++c) g.cols_[c * d + r] = row_major[r * d + c];
    }
    g.origin_ = std::move(origin);
    return g;
}

/// X_{+a}: |j> -> |(j + a) mod d>.
inline Gate shift_x(uint32_t d, int64_t a) {
    detail::check_gate_dim(d);
    uint32_t shift = detail::mod_reduce(a, d);
    std::vector<uint32_t> sigma(d);
    for (uint32_t j = 0; j < d; ++j) sigma[j] = (j + shift) % d;
    return make_permutation(d, std::move(sigma), origin::Shift{a});
}

/// Clock matrix raised to `power`: diag(omega^(j * power)), omega = exp(2 pi i / d).
inline Gate clock_z(uint32_t d, int64_t power) {
    detail::check_gate_dim(d);
    uint32_t p = detail::mod_reduce(power, d);
    std::vector<Amplitude> diag(d);
    for (uint32_t j = 0; j < d; ++j) diag[j] = detail::root_of_unity(uint64_t{j} * p, d);
    return make_phase(d, std::move(diag), origin::Clock{power});
}

/// diag(exp(i * angles[j])).
inline Gate phase_gate(uint32_t d, std::vector<double> angles) {
    detail::check_gate_dim(d);
    if (angles.size() != d) {
        throw SimError(ErrorKind::LengthMismatch, "phase gate of dimension " + std::to_string(d) + " needs " +
                                                      std::to_string(d) + " angles, got " +
                                                      std::to_string(angles.size()));
    }
    std::vector<Amplitude> diag(d);
    for (uint32_t j = 0; j < d; ++j) {
        diag[j] = angles[j] == 0.0 ? Amplitude{1.0} : std::polar(1.0, angles[j]);
    }
    return make_phase(d, std::move(diag), origin::Angles{std::move(angles)});
}

/// Qubit S and T.
inline Gate s_gate() {
    return phase_gate(2, {0.0, std::numbers::pi / 2});
}
inline Gate t_gate() {
    return phase_gate(2, {0.0, std::numbers::pi / 4});
}

/// Generalized Hadamard: the discrete Fourier matrix U[k][j] = omega^(jk) / sqrt(d).
inline Gate fourier_h(uint32_t d) {
    detail::check_gate_dim(d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Amplitude> m(size_t{d} * d);
    for (uint32_t k = 0; k < d; ++k) {
        for (uint32_t j = 0; j < d; ++j) m[k * d + j] = detail::root_of_unity(uint64_t{j} * k, d) * scale;
    }
    return make_general(d, std::move(m), origin::Fourier{});
}

/// Classifies a row-major d x d unitary. Diagonal matrices become Phase gates,
/// 0/1 monomial matrices become Permutation gates, anything else is General.
inline Gate arbitrary(uint32_t d, std::span<const Amplitude> row_major) {
    detail::check_gate_dim(d);
    if (row_major.size() != size_t{d} * d) {
        throw SimError(ErrorKind::ShapeMismatch, "matrix has " + std::to_string(row_major.size()) +
                                                     " entries, expected " + std::to_string(size_t{d} * d));
    }
    double dev = check_unitary(row_major, d);
    if (!(dev <= kUnitarityTolerance)) {
        throw SimError(ErrorKind::NotUnitary, "matrix is not unitary (max |U^dagger U - I| = " +
                                                  std::to_string(dev) + ")");
    }
    auto at = [&](size_t r, size_t c) { return row_major[r * d + c]; };

    bool diagonal = true;
    for (size_t r = 0; r < d && diagonal; ++r) {
        for (size_t c = 0; c < d; ++c) {
            if (r != c && !(std::abs(at(r, c)) < kStructureTolerance)) {
                diagonal = false;
                break;
            }
        }
    }
    if (diagonal) {
        std::vector<Amplitude> diag(d);
        for (size_t j = 0; j < d; ++j) diag[j] = at(j, j);
        Gate g = make_phase(d, std::move(diag), origin::Matrix{});
        return g;
    }

    std::vector<uint32_t> sigma(d, d);
    bool monomial = true;
    for (size_t c = 0; c < d && monomial; ++c) {
        for (size_t r = 0; r < d; ++r) {
            auto z = at(r, c);
            if (std::abs(z - 1.0) < kStructureTolerance) {
                if (sigma[c] != d) {
                    monomial = false;
                    break;
                }
                sigma[c] = static_cast<uint32_t>(r);
            } else if (!(std::abs(z) < kStructureTolerance)) {
                monomial = false;
                break;
            }
        }
        if (sigma[c] == d) monomial = false;
    }
    if (monomial) {
        try {
            return make_permutation(d, std::move(sigma), origin::Matrix{});
        } catch (const SimError &) {
            // Two columns hitting the same row cannot happen for a unitary; fall through.
        }
    }

    return make_general(d, std::vector<Amplitude>(row_major.begin(), row_major.end()), origin::Matrix{});
}

inline Gate arbitrary(uint32_t d, std::initializer_list<Amplitude> row_major) {
    return arbitrary(d, std::span<const Amplitude>(row_major.begin(), row_major.size()));
}

}  // namespace qudit
