// Copyright 2026 The sqir Authors
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

// Random circuit documents and a small OpenQASM reader for round-trip checks.

#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqir/harness.h"
#include "sqir/text_format.h"
#include "support/oracles.h"

namespace sqir::testing {

inline double random_angle(harness::Rng& rng) {
    // Mix "nice" and arbitrary values so the printer sees both.
    switch (harness::uniform_below(rng, 4)) {
        case 0:
            return 0.0;
        case 1:
            return kPi / static_cast<double>(1 + harness::uniform_below(rng, 8));
        case 2:
            return -kPi * static_cast<double>(harness::uniform_below(rng, 5));
        default:
            return harness::uniform_real(rng, -10, 10);
    }
}

inline std::vector<text::Statement> random_statements(harness::Rng& rng, std::size_t d, std::size_t count,
                                                      std::size_t depth, bool allow_meas) {
    std::vector<text::Statement> out;
    static const char* const kNamed[] = {"x", "h", "z", "t", "tdg"};
    for (std::size_t i = 0; i < count; ++i) {
        const Qubit q = harness::uniform_below(rng, d);
        const std::size_t kind = harness::uniform_below(rng, allow_meas && depth > 0 ? 6 : 5);
        text::Statement s;
        switch (kind) {
            case 0:
                s.body = text::UrStmt{random_angle(rng), random_angle(rng), random_angle(rng), q};
                break;
            case 1: {
                if (d < 2) {
                    s.body = text::NamedStmt{"h", q};
                    break;
                }
                Qubit t = harness::uniform_below(rng, d - 1);
                if (t >= q) ++t;
                s.body = text::CnotStmt{q, t};
                break;
            }
            case 2:
                s.body = text::NamedStmt{kNamed[harness::uniform_below(rng, 5)], q};
                break;
            case 3:
                s.body = text::RzStmt{random_angle(rng), q};
                break;
            case 4:
                s.body = text::SkipStmt{};
                break;
            default:
                s.body = text::MeasStmt{q, random_statements(rng, d, harness::uniform_below(rng, 3), depth - 1, true),
                                        random_statements(rng, d, harness::uniform_below(rng, 3), depth - 1, true)};
                break;
        }
        out.push_back(std::move(s));
    }
    return out;
}

/// A well-typed document on 1..max_d qubits.
inline text::CircuitDocument random_document(harness::Rng& rng, std::size_t max_d, bool allow_meas = true) {
    text::CircuitDocument doc;
    doc.qubits = 1 + harness::uniform_below(rng, max_d);
    doc.statements = random_statements(rng, doc.qubits, 1 + harness::uniform_below(rng, 12), 2, allow_meas);
    return doc;
}

/// Re-denotes the U/CX lines of an OpenQASM 2.0 text. Returns nullopt on any
/// line it does not understand.
inline std::optional<Matrix> denote_qasm(const std::string& qasm) {
    std::istringstream in(qasm);
    std::string line;
    std::optional<std::size_t> d;
    std::optional<Matrix> acc;
    auto number = [](std::string_view s) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("bad number '" + std::string(s) + "'");
        return v;
    };
    auto index = [&](std::string_view s) {
        // q[i]
        const auto open = s.find('[');
        const auto close = s.find(']');
        return static_cast<std::size_t>(number(s.substr(open + 1, close - open - 1)));
    };
    try {
        while (std::getline(in, line)) {
            if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
            if (line.rfind("qreg q[", 0) == 0) {
                d = index(line);
                acc = Matrix::identity(std::size_t{1} << *d);
                continue;
            }
            if (!d) return std::nullopt;
            if (line.rfind("U(", 0) == 0) {
                const auto close = line.find(')');
                std::string_view args(line.data() + 2, close - 2);
                const auto c1 = args.find(',');
                const auto c2 = args.find(',', c1 + 1);
                const double th = number(args.substr(0, c1));
                const double ph = number(args.substr(c1 + 1, c2 - c1 - 1));
                const double la = number(args.substr(c2 + 1));
                const std::size_t q = index(std::string_view(line).substr(close + 1));
                acc = embed(*d, {q}, ur_literal(th, ph, la)) * *acc;
            } else if (line.rfind("CX ", 0) == 0) {
                const auto comma = line.find(',');
                const std::size_t a = index(std::string_view(line).substr(3, comma - 3));
                const std::size_t b = index(std::string_view(line).substr(comma + 1));
                acc = cnot_permutation(*d, a, b) * *acc;
            } else {
                return std::nullopt;
            }
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return acc;
}

}  // namespace sqir::testing
