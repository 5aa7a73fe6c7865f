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

// Line-oriented circuit text format:
//
//   # comment
//   dims 2 3            least significant qudit first; first statement
//   init 0 2            optional starting digits, least significant first
//   h 1                 generalized Hadamard
//   x 0 1 @ 1=2         shift by 1 on q0, controlled by q1 = 2
//   z 1 2               clock power 2
//   p 0 0 1.5707963     phase angles in radians, one per level
//   u 0 <2 d^2 floats>  row-major matrix as (re, im) pairs
//   cx 1 0              X_{+1} on q0 controlled by q1 = d_1 - 1

#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qudit/circuit.hpp"
#include "qudit/error.hpp"
#include "qudit/gates.hpp"

namespace qudit {

namespace detail {

struct Token {
    std::string_view text;
    size_t col;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineParser {
   public:
    LineParser(size_t line_no, std::vector<Token> tokens) : line_(line_no), tokens_(std::move(tokens)) {
    }

    bool done() const {
        return pos_ >= tokens_.size();
    }
    const Token &peek() const {
        return tokens_[pos_];
    }
    size_t end_col() const {
        if (tokens_.empty()) return 1;
        const auto &t = tokens_.back();
        return t.col + t.text.size();
    }

    [[noreturn]] void fail(size_t col, const std::string &msg) const {
        throw ParseError(line_, col, msg);
    }

    const Token &next(const char *what) {
        if (done()) fail(end_col(), std::string("expected ") + what);
        return tokens_[pos_++];
    }

    template <typename Int>
    Int integer(const char *what) {
        const auto &tok = next(what);
        Int value{};
        auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
            fail(tok.col, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    double real(const char *what) {
        const auto &tok = next(what);
        double value{};
        auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || p != tok.text.data() + tok.text.size() || !std::isfinite(value)) {
            fail(tok.col, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'");
        }
        return value;
    }

    /// `q=v` pair of a control suffix.
    Control control() {
        const auto &tok = next("control 'q=v'");
        auto eq = tok.text.find('=');
        if (eq == std::string_view::npos) fail(tok.col, "expected control 'q=v', got '" + std::string(tok.text) + "'");
        Control c;
        auto parse_part = [&](std::string_view part, uint32_t &out, size_t col) {
            auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
            if (part.empty() || ec != std::errc() || p != part.data() + part.size()) {
                fail(col, "expected control 'q=v', got '" + std::string(tok.text) + "'");
            }
        };
        parse_part(tok.text.substr(0, eq), c.qudit, tok.col);
        parse_part(tok.text.substr(eq + 1), c.value, tok.col + eq + 1);
        return c;
    }

    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

[[noreturn]] inline void validation_failure(size_t line, const SimError &err) {
    if (err.is_resource_error() || err.kind() == ErrorKind::ValidationError) throw err;
    throw SimError(ErrorKind::ValidationError, "line " + std::to_string(line) + ": " + err.what());
}

}  // namespace detail

/// Parses and validates a circuit. Malformed tokens raise ParseError
/// (SyntaxError kind, with line and column); well-formed statements that do
/// not fit the system raise ValidationError; oversized systems keep their
/// resource error kind.
inline Circuit parse_circuit(std::string_view text, std::string name = "circuit") {
    Circuit circuit;
    circuit.name = std::move(name);
    bool have_dims = false;
    bool have_init = false;

    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        detail::LineParser p(line_no, std::move(tokens));
        const auto head = p.next("statement");
        const std::string_view cmd = head.text;

        if (!have_dims) {
            if (cmd != "dims") p.fail(head.col, "first statement must be 'dims', got '" + std::string(cmd) + "'");
            std::vector<uint32_t> dims;
            while (!p.done()) dims.push_back(p.integer<uint32_t>("qudit dimension"));
            if (dims.empty()) p.fail(p.end_col(), "expected at least one qudit dimension");
            try {
                circuit.system = QuditSystem(std::move(dims));
            } catch (const SimError &e) {
                detail::validation_failure(line_no, e);
            }
            have_dims = true;
            continue;
        }
        if (cmd == "dims") p.fail(head.col, "duplicate 'dims' statement");

        if (cmd == "init") {
            if (have_init) p.fail(head.col, "duplicate 'init' statement");
            std::vector<uint32_t> digits;
            while (!p.done()) digits.push_back(p.integer<uint32_t>("initial digit"));
            try {
                circuit.system.encode(digits);
            } catch (const SimError &e) {
                detail::validation_failure(line_no, e);
            }
            circuit.initial = std::move(digits);
            have_init = true;
            continue;
        }

        auto target_of = [&]() {
            auto q = p.integer<uint32_t>("qudit index");
            return q;
        };
        auto dim_of = [&](uint32_t q) {
            try {
                return circuit.system.dim(q);
            } catch (const SimError &e) {
                detail::validation_failure(line_no, e);
            }
        };

        GateOp op;
        try {
            if (cmd == "h") {
                op.target = target_of();
                op.gate = fourier_h(dim_of(op.target));
            } else if (cmd == "x") {
                op.target = target_of();
                auto a = p.integer<int64_t>("shift amount");
                op.gate = shift_x(dim_of(op.target), a);
            } else if (cmd == "z") {
                op.target = target_of();
                auto power = p.integer<int64_t>("clock power");
                op.gate = clock_z(dim_of(op.target), power);
            } else if (cmd == "p") {
                op.target = target_of();
                const uint32_t d = dim_of(op.target);
                std::vector<double> angles;
                for (uint32_t j = 0; j < d; ++j) angles.push_back(p.real("phase angle"));
                op.gate = phase_gate(d, std::move(angles));
            } else if (cmd == "u") {
                op.target = target_of();
                const uint32_t d = dim_of(op.target);
                std::vector<Amplitude> m(size_t{d} * d);
                for (auto &z : m) {
                    double re = p.real("matrix entry (real part)");
                    double im = p.real("matrix entry (imaginary part)");
                    z = {re, im};
                }
                op.gate = arbitrary(d, m);
            } else if (cmd == "cx") {
                auto ctrl = p.integer<uint32_t>("control qudit");
                op.target = target_of();
                const uint32_t dc = dim_of(ctrl);
                op.gate = shift_x(dim_of(op.target), 1);
                op.controls.push_back({ctrl, dc - 1});
            } else {
                p.fail(head.col, "unknown statement '" + std::string(cmd) + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const SimError &e) {
            detail::validation_failure(line_no, e);
        }

        if (!p.done()) {
            const auto &at = p.next("'@'");
            if (at.text != "@") p.fail(at.col, "unexpected '" + std::string(at.text) + "', expected '@' or end of line");
            if (p.done()) p.fail(p.end_col(), "expected control 'q=v' after '@'");
            while (!p.done()) op.controls.push_back(p.control());
        }
        try {
            circuit.append(std::move(op));
        } catch (const SimError &e) {
            detail::validation_failure(line_no, e);
        }
    }
    if (!have_dims) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'dims' statement");
    return circuit;
}

namespace detail {

inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// Text form that parse_circuit reads back to a structurally equal circuit.
inline std::string serialize_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "# " << c.name << "\n";
    out << "dims";
    for (auto d : c.system.dims()) out << ' ' << d;
    out << "\n";
    if (c.initial_index() != 0) {
        out << "init";
        for (auto v : c.initial) out << ' ' << v;
        out << "\n";
    }
    for (const auto &op : c.ops) {
        std::visit(
            [&](const auto &o) {
                using O = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<O, origin::Fourier>) {
                    out << "h " << op.target;
                } else if constexpr (std::is_same_v<O, origin::Shift>) {
                    out << "x " << op.target << ' ' << o.amount;
                } else if constexpr (std::is_same_v<O, origin::Clock>) {
                    out << "z " << op.target << ' ' << o.power;
                } else if constexpr (std::is_same_v<O, origin::Angles>) {
                    out << "p " << op.target;
                    for (double a : o.radians) out << ' ' << detail::format_real(a);
                } else {
                    out << "u " << op.target;
                    for (auto z : op.gate.row_major()) {
                        out << ' ' << detail::format_real(z.real()) << ' ' << detail::format_real(z.imag());
                    }
                }
            },
            op.gate.origin());
        if (!op.controls.empty()) {
            out << " @";
            for (const auto &ctl : op.controls) out << ' ' << ctl.qudit << '=' << ctl.value;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qudit
