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

#include <cstdint>
#include <string>
#include <vector>

#include "qudit/error.hpp"
#include "qudit/gates.hpp"
#include "qudit/system.hpp"

namespace qudit {

/// Condition "qudit `qudit` holds `value`".
struct Control {
    uint32_t qudit = 0;
    uint32_t value = 0;

    bool operator==(const Control &) const = default;
};

/// A gate bound to a target qudit, optionally conditioned on control values.
struct GateOp {
    Gate gate;
    uint32_t target = 0;
    std::vector<Control> controls;

    bool operator==(const GateOp &) const = default;
};

/// Checks target/control placement against the system. Errors carry the
/// specific kind (QuditOutOfRange, ShapeMismatch, ControlTargetOverlap,
/// DuplicateControl, ValueOutOfRange).
inline void validate_controls(const QuditSystem &sys, uint32_t target, std::span<const Control> controls) {
    sys.check_qudit(target);
    for (size_t a = 0; a < controls.size(); ++a) {
        const auto &c = controls[a];
        sys.check_qudit(c.qudit);
        if (c.qudit == target) {
            throw SimError(ErrorKind::ControlTargetOverlap,
                           "qudit " + std::to_string(target) + " is both control and target");
        }
        for (size_t b = 0; b < a; ++b) {
            if (controls[b].qudit == c.qudit) {
                throw SimError(ErrorKind::DuplicateControl,
                               "qudit " + std::to_string(c.qudit) + " appears twice as a control");
            }
        }
        if (c.value >= sys.dim(c.qudit)) {
            throw SimError(ErrorKind::ValueOutOfRange, "control value " + std::to_string(c.value) + " for qudit " +
                                                           std::to_string(c.qudit) + " must be < " +
                                                           std::to_string(sys.dim(c.qudit)));
        }
    }
}

inline void validate(const QuditSystem &sys, const GateOp &op) {
    validate_controls(sys, op.target, op.controls);
    if (op.gate.dim() != sys.dim(op.target)) {
        throw SimError(ErrorKind::ShapeMismatch, "gate of dimension " + std::to_string(op.gate.dim()) +
                                                     " cannot act on qudit " + std::to_string(op.target) +
                                                     " of dimension " + std::to_string(sys.dim(op.target)));
    }
}

}  // namespace qudit
