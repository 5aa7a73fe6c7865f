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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qudit/error.hpp"

namespace qudit {

/// Basis-state index. The whole register index space must fit in 64 bits.
using BasisIndex = uint64_t;

/// Mixed-radix bookkeeping for an ordered register of qudits.
///
/// Qudit 0 is the least significant digit. Basis index i decomposes as
/// i = sum_k digit_k * block_size(k), where block_size(k) is the product of the
/// dimensions of all less significant qudits. For a single-qudit gate on qudit
/// k the index space is made of repetitions(k) groups, each group holding
/// dims[k] contiguous blocks of block_size(k) amplitudes.
class QuditSystem {
   public:
    QuditSystem() = default;

    explicit QuditSystem(std::vector<uint32_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) {
            throw SimError(ErrorKind::EmptySystem, "qudit system must contain at least one qudit");
        }
        block_sizes_.reserve(dims_.size());
        BasisIndex product = 1;
        for (size_t k = 0; k < dims_.size(); ++k) {
            if (dims_[k] < 2) {
                throw SimError(ErrorKind::DimTooSmall, "qudit " + std::to_string(k) + " has dimension " +
                                                           std::to_string(dims_[k]) + " (must be >= 2)");
            }
            block_sizes_.push_back(product);
            if (product > std::numeric_limits<BasisIndex>::max() / dims_[k]) {
                throw SimError(ErrorKind::IndexOverflow,
                               "total dimension of " + std::to_string(dims_.size()) +
                                   " qudits exceeds the 64-bit basis index range");
            }
            product *= dims_[k];
        }
        total_dim_ = product;
    }

    QuditSystem(std::initializer_list<uint32_t> dims) : QuditSystem(std::vector<uint32_t>(dims)) {
    }

    size_t num_qudits() const noexcept {
        return dims_.size();
    }
    BasisIndex total_dim() const noexcept {
        return total_dim_;
    }
    std::span<const uint32_t> dims() const noexcept {
        return dims_;
    }
    std::span<const BasisIndex> block_sizes() const noexcept {
        return block_sizes_;
    }

    uint32_t dim(size_t k) const {
        check_qudit(k);
        return dims_[k];
    }

    uint32_t max_dim() const noexcept {
        uint32_t m = 0;
        for (auto d : dims_) m = std::max(m, d);
        return m;
    }

    BasisIndex block_size(size_t k) const {
        check_qudit(k);
        return block_sizes_[k];
    }

    BasisIndex repetitions(size_t k) const {
        check_qudit(k);
        return total_dim_ / (block_sizes_[k] * dims_[k]);
    }

    uint32_t digit(BasisIndex i, size_t k) const {
        check_index(i);
        check_qudit(k);
        return digit_unchecked(i, k);
    }

    uint32_t digit_unchecked(BasisIndex i, size_t k) const noexcept {
        return static_cast<uint32_t>((i / block_sizes_[k]) % dims_[k]);
    }

    /// Digits of `i`, least significant qudit first.
    std::vector<uint32_t> decode(BasisIndex i) const {
        check_index(i);
        std::vector<uint32_t> out(dims_.size());
        for (size_t k = 0; k < dims_.size(); ++k) {
            out[k] = static_cast<uint32_t>(i % dims_[k]);
            i /= dims_[k];
        }
        return out;
    }

    BasisIndex encode(std::span<const uint32_t> digits) const {
        if (digits.size() != dims_.size()) {
            throw SimError(ErrorKind::LengthMismatch, "expected " + std::to_string(dims_.size()) +
                                                          " digits, got " + std::to_string(digits.size()));
        }
        BasisIndex i = 0;
        for (size_t k = 0; k < dims_.size(); ++k) {
            if (digits[k] >= dims_[k]) {
                throw SimError(ErrorKind::DigitOutOfRange, "digit " + std::to_string(digits[k]) + " for qudit " +
                                                               std::to_string(k) + " must be < " +
                                                               std::to_string(dims_[k]));
            }
            i += digits[k] * block_sizes_[k];
        }
        return i;
    }

    BasisIndex encode(std::initializer_list<uint32_t> digits) const {
        return encode(std::span<const uint32_t>(digits.begin(), digits.size()));
    }

    /// Most significant qudit first, the way basis kets are usually written.
    /// Digits are concatenated when every dimension is at most 10 and joined
    /// with '.' otherwise.
    std::string digit_string(BasisIndex i) const {
        auto digits = decode(i);
        bool compact = max_dim() <= 10;
        std::string out;
        for (size_t k = digits.size(); k-- > 0;) {
            if (!compact && k + 1 != digits.size()) out += '.';
            out += std::to_string(digits[k]);
        }
        return out;
    }

    void check_qudit(size_t k) const {
        if (k >= dims_.size()) {
            throw SimError(ErrorKind::QuditOutOfRange, "qudit " + std::to_string(k) + " out of range (system has " +
                                                           std::to_string(dims_.size()) + " qudits)");
        }
    }

    void check_index(BasisIndex i) const {
        if (i >= total_dim_) {
            throw SimError(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i) +
                                                           " out of range (dimension " +
                                                           std::to_string(total_dim_) + ")");
        }
    }

    bool operator==(const QuditSystem &other) const noexcept {
        return dims_ == other.dims_;
    }

   private:
    std::vector<uint32_t> dims_;
    std::vector<BasisIndex> block_sizes_;
    BasisIndex total_dim_ = 0;
};

}  // namespace qudit
