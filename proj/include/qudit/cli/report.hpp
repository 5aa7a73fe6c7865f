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

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qudit/error.hpp"
#include "qudit/parser.hpp"
#include "qudit/simulator.hpp"

namespace qudit::cli {

enum class OutputMode { Amplitudes, Probabilities };
enum class Format { Json, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitVerifyFailed = 3;

struct ResultRecord {
    BasisIndex index = 0;
    std::string digits;
    Amplitude amplitude;
    double probability = 0.0;
};

struct RunReport {
    std::string name;
    std::vector<uint32_t> dims;
    Backend backend = Backend::Sparse;
    uint64_t wall_time_ns = 0;
    uint64_t amp_reads = 0;
    uint64_t amp_writes = 0;
    OutputMode output = OutputMode::Amplitudes;
    std::vector<ResultRecord> results;
};

inline RunReport make_report(const Circuit &c, Backend backend, OutputMode output, const RunResult &r) {
    RunReport rep;
    rep.name = c.name;
    rep.dims.assign(c.system.dims().begin(), c.system.dims().end());
    rep.backend = backend;
    rep.wall_time_ns = r.wall_time_ns;
    rep.amp_reads = r.counter.amp_reads;
    rep.amp_writes = r.counter.amp_writes;
    rep.output = output;
    rep.results.reserve(r.amplitudes.size());
    for (const auto &[i, a] : r.amplitudes) {
        rep.results.push_back({i, c.system.digit_string(i), a, std::norm(a)});
    }
    return rep;
}

inline nlohmann::json to_json(const RunReport &rep) {
    nlohmann::json j;
    j["name"] = rep.name;
    j["dims"] = rep.dims;
    j["backend"] = std::string(to_string(rep.backend));
    j["output"] = rep.output == OutputMode::Amplitudes ? "amplitudes" : "probabilities";
    j["wall_time_ns"] = rep.wall_time_ns;
    j["amp_reads"] = rep.amp_reads;
    j["amp_writes"] = rep.amp_writes;
    auto results = nlohmann::json::array();
    for (const auto &r : rep.results) {
        if (rep.output == OutputMode::Amplitudes) {
            results.push_back({{"index", r.index}, {"digits", r.digits}, {"re", r.amplitude.real()},
                               {"im", r.amplitude.imag()}});
        } else {
            results.push_back({{"index", r.index}, {"digits", r.digits}, {"p", r.probability}});
        }
    }
    j["results"] = std::move(results);
    return j;
}

inline void write_report(std::ostream &out, const RunReport &rep, Format format) {
    const bool amps = rep.output == OutputMode::Amplitudes;
    switch (format) {
        case Format::Json:
            out << to_json(rep).dump(2) << "\n";
            break;
        case Format::Csv:
            out << (amps ? "index,digits,re,im\n" : "index,digits,p\n");
            out << std::setprecision(17);
            for (const auto &r : rep.results) {
                out << r.index << ',' << r.digits << ',';
                if (amps) {
                    out << r.amplitude.real() << ',' << r.amplitude.imag() << "\n";
                } else {
                    out << r.probability << "\n";
                }
            }
            break;
        case Format::Text:
            out << rep.name << " [" << to_string(rep.backend) << "] dims";
            for (auto d : rep.dims) out << ' ' << d;
            out << "\n";
            out << "wall_time_ns " << rep.wall_time_ns << "  amp_reads " << rep.amp_reads << "  amp_writes "
                << rep.amp_writes << "\n";
            out << std::setprecision(12);
            for (const auto &r : rep.results) {
                out << '|' << r.digits << ">  " << r.index << "  ";
                if (amps) {
                    out << r.amplitude.real() << (r.amplitude.imag() < 0 ? " - " : " + ") << std::abs(r.amplitude.imag())
                        << "i\n";
                } else {
                    out << r.probability << "\n";
                }
            }
            break;
    }
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SimError(ErrorKind::ValidationError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string stem_of(const std::string &path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

/// Maps library errors to the CLI exit convention: 2 for resource failures,
/// 1 for everything else.
inline int report_error(std::ostream &err, const SimError &e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_error() ? kExitResource : kExitInput;
}

}  // namespace qudit::cli
