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

#include "sqir/text_format.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sqir::text {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class TokenKind { kWord, kSeparator, kOpen, kClose, kEnd };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            out.push_back({TokenKind::kSeparator, "\n", line});
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == ';') {
            out.push_back({TokenKind::kSeparator, ";", line});
            ++i;
        } else if (c == '{') {
            out.push_back({TokenKind::kOpen, "{", line});
            ++i;
        } else if (c == '}') {
            out.push_back({TokenKind::kClose, "}", line});
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && std::string_view(" \t\r\n;{}#").find(text[i]) == std::string_view::npos) ++i;
            out.push_back({TokenKind::kWord, std::string(text.substr(start, i - start)), line});
        }
    }
    out.push_back({TokenKind::kEnd, "", line});
    return out;
}

bool parse_unsigned(std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_decimal(std::string_view s, double& out) {
    if (s.empty() || s.front() == '+' || s.front() == '-') return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

// [-] ( decimal [*pi] | pi ) [/ decimal]
bool parse_angle(std::string_view s, double& out) {
    double sign = 1.0;
    if (!s.empty() && s.front() == '-') {
        sign = -1.0;
        s.remove_prefix(1);
    }
    double divisor = 1.0;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        if (!parse_decimal(s.substr(slash + 1), divisor) || divisor == 0.0) return false;
        s = s.substr(0, slash);
    }
    double value = 0.0;
    if (s == "pi") {
        value = std::numbers::pi;
    } else if (s.size() > 3 && s.substr(s.size() - 3) == "*pi") {
        if (!parse_decimal(s.substr(0, s.size() - 3), value)) return false;
        value *= std::numbers::pi;
    } else {
        if (!parse_decimal(s, value)) return false;
        // A bare decimal with a divisor is still c/d radians.
    }
    out = sign * value / divisor;
    return std::isfinite(out);
}

class Parser {
   public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    CircuitDocument document() {
        skip_separators();
        const Token& head = peek();
        if (head.kind != TokenKind::kWord || head.text != "qubits") {
            throw ParseError(head.line, "expected 'qubits <d>' header");
        }
        advance();
        CircuitDocument doc;
        doc.qubits = count("qubit count");
        end_of_statement();
        doc.statements = block();
        if (peek().kind != TokenKind::kEnd) throw ParseError(peek().line, "unmatched '}'");
        return doc;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    void skip_separators() {
        while (peek().kind == TokenKind::kSeparator) ++pos_;
    }

    void end_of_statement() {
        const Token& t = peek();
        if (t.kind == TokenKind::kSeparator) {
            ++pos_;
        } else if (t.kind != TokenKind::kEnd && t.kind != TokenKind::kClose) {
            throw ParseError(t.line, "unexpected '" + t.text + "' after statement");
        }
    }

    const Token& word(const char* what) {
        const Token& t = peek();
        if (t.kind != TokenKind::kWord) throw ParseError(t.line, std::string("expected ") + what);
        return advance();
    }

    std::size_t count(const char* what) {
        const Token& t = word(what);
        std::size_t v = 0;
        if (!parse_unsigned(t.text, v)) throw ParseError(t.line, "malformed " + std::string(what) + " '" + t.text + "'");
        return v;
    }

    Qubit qubit() { return count("qubit index"); }

    double angle() {
        const Token& t = word("angle");
        double v = 0.0;
        if (!parse_angle(t.text, v)) throw ParseError(t.line, "malformed angle '" + t.text + "'");
        return v;
    }

    void expect(TokenKind kind, const char* text) {
        const Token& t = peek();
        if (t.kind != kind) throw ParseError(t.line, std::string("expected '") + text + "'");
        advance();
    }

    std::vector<Statement> block() {
        std::vector<Statement> out;
        for (;;) {
            skip_separators();
            const TokenKind k = peek().kind;
            if (k == TokenKind::kEnd || k == TokenKind::kClose) return out;
            out.push_back(statement());
            end_of_statement();
        }
    }

    std::vector<Statement> braced() {
        expect(TokenKind::kOpen, "{");
        std::vector<Statement> body = block();
        expect(TokenKind::kClose, "}");
        return body;
    }

    Statement statement() {
        const Token& head = peek();
        if (head.kind != TokenKind::kWord) throw ParseError(head.line, "expected a statement");
        advance();
        const std::size_t line = head.line;
        const std::string& name = head.text;
        if (name == "ur") {
            const double theta = angle();
            const double phi = angle();
            const double lambda = angle();
            return {UrStmt{theta, phi, lambda, qubit()}, line};
        }
        if (name == "cnot") {
            const Qubit a = qubit();
            return {CnotStmt{a, qubit()}, line};
        }
        if (name == "x" || name == "h" || name == "z" || name == "t" || name == "tdg") {
            return {NamedStmt{name, qubit()}, line};
        }
        if (name == "rz") {
            const double lambda = angle();
            return {RzStmt{lambda, qubit()}, line};
        }
        if (name == "meas") {
            const Qubit q = qubit();
            auto if1 = braced();
            auto if0 = braced();
            return {MeasStmt{q, std::move(if1), std::move(if0)}, line};
        }
        if (name == "skip") return {SkipStmt{}, line};
        throw ParseError(line, "unknown gate '" + name + "'");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void print_statement(std::ostringstream& os, const Statement& s);

void print_block(std::ostringstream& os, const std::vector<Statement>& stmts) {
    os << '{';
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        os << (i == 0 ? " " : "; ");
        print_statement(os, stmts[i]);
    }
    os << " }";
}

void print_statement(std::ostringstream& os, const Statement& s) {
    std::visit(overloaded{
                   [&](const UrStmt& g) {
                       os << "ur " << format_double(g.theta) << ' ' << format_double(g.phi) << ' '
                          << format_double(g.lambda) << ' ' << g.q;
                   },
                   [&](const CnotStmt& g) { os << "cnot " << g.q1 << ' ' << g.q2; },
                   [&](const NamedStmt& g) { os << g.name << ' ' << g.q; },
                   [&](const RzStmt& g) { os << "rz " << format_double(g.lambda) << ' ' << g.q; },
                   [&](const MeasStmt& g) {
                       os << "meas " << g.q << ' ';
                       print_block(os, g.if1);
                       os << ' ';
                       print_block(os, g.if0);
                   },
                   [&](const SkipStmt&) { os << "skip"; },
               },
               s.body);
}

UnitaryProgram statement_unitary(std::size_t d, const Statement& s) {
    return std::visit(overloaded{
                          [&](const UrStmt& g) { return gates::ur(d, g.theta, g.phi, g.lambda, g.q); },
                          [&](const CnotStmt& g) { return gates::cnot(d, g.q1, g.q2); },
                          [&](const NamedStmt& g) {
                              if (g.name == "x") return gates::x(d, g.q);
                              if (g.name == "h") return gates::h(d, g.q);
                              if (g.name == "z") return gates::z(d, g.q);
                              if (g.name == "t") return gates::t(d, g.q);
                              if (g.name == "tdg") return gates::tdg(d, g.q);
                              throw Error("unknown gate '" + g.name + "'");
                          },
                          [&](const RzStmt& g) { return gates::rz(d, g.lambda, g.q); },
                          [&](const MeasStmt&) -> UnitaryProgram { throw Error("measurement is not unitary"); },
                          [&](const SkipStmt&) { return skip(d); },
                      },
                      s.body);
}

Program block_program(std::size_t d, const std::vector<Statement>& stmts) {
    std::vector<Program> parts;
    std::optional<UnitaryProgram> run;
    auto flush = [&] {
        if (run) parts.push_back(Program::uc(*run));
        run.reset();
    };
    for (const auto& s : stmts) {
        if (const auto* m = std::get_if<MeasStmt>(&s.body)) {
            flush();
            parts.push_back(Program::meas(m->q, block_program(d, m->if1), block_program(d, m->if0)));
        } else if (std::holds_alternative<SkipStmt>(s.body)) {
            flush();
            parts.push_back(Program::skip(d));
        } else {
            const UnitaryProgram u = statement_unitary(d, s);
            run = run ? (*run >> u) : u;
        }
    }
    flush();
    if (parts.empty()) return Program::skip(d);
    Program acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = acc >> parts[i];
    return acc;
}

bool has_measurement(const std::vector<Statement>& stmts) {
    for (const auto& s : stmts) {
        if (std::holds_alternative<MeasStmt>(s.body)) return true;
    }
    return false;
}

std::optional<TypeProblem> block_problem(std::size_t d, const std::vector<Statement>& stmts) {
    auto out_of_range = [&](const Statement& s, Qubit q) -> std::optional<TypeProblem> {
        if (q < d) return std::nullopt;
        return TypeProblem{s.line, "qubit " + std::to_string(q) + " out of range for " + std::to_string(d) +
                                       " qubits"};
    };
    for (const auto& s : stmts) {
        std::optional<TypeProblem> p = std::visit(
            overloaded{
                [&](const UrStmt& g) { return out_of_range(s, g.q); },
                [&](const CnotStmt& g) -> std::optional<TypeProblem> {
                    if (auto r = out_of_range(s, g.q1)) return r;
                    if (auto r = out_of_range(s, g.q2)) return r;
                    if (g.q1 == g.q2) return TypeProblem{s.line, "cnot uses qubit " + std::to_string(g.q1) + " twice"};
                    return std::nullopt;
                },
                [&](const NamedStmt& g) { return out_of_range(s, g.q); },
                [&](const RzStmt& g) { return out_of_range(s, g.q); },
                [&](const MeasStmt& g) -> std::optional<TypeProblem> {
                    if (auto r = out_of_range(s, g.q)) return r;
                    if (auto r = block_problem(d, g.if1)) return r;
                    return block_problem(d, g.if0);
                },
                [&](const SkipStmt&) -> std::optional<TypeProblem> { return std::nullopt; },
            },
            s.body);
        if (p) return p;
    }
    return std::nullopt;
}

// OpenQASM reals need a decimal point.
std::string qasm_real(double v) {
    std::string s = format_double(v);
    const auto e = s.find_first_of("eE");
    const std::string mantissa = s.substr(0, e);
    if (mantissa.find('.') == std::string::npos) s.insert(e == std::string::npos ? s.size() : e, ".0");
    return s;
}

bool trivially_skip(const com::Node& n) {
    if (std::holds_alternative<com::Skip>(n.v)) return true;
    if (const auto* s = std::get_if<com::Seq>(&n.v)) return trivially_skip(*s->first) && trivially_skip(*s->second);
    return false;
}

bool is_x_on(const com::Node& n, Qubit q, std::size_t d) {
    const auto* uc = std::get_if<com::Uc>(&n.v);
    return uc != nullptr && uc->u == gates::x(d, q);
}

class QasmWriter {
   public:
    explicit QasmWriter(std::size_t d) : d_(d) {}

    void unitary(const UnitaryProgram& u) {
        for (const auto& app : flatten(u)) {
            std::visit(overloaded{
                           [&](const ucom::App1& a) {
                               const URotation& r = a.gate;
                               body_ << "U(" << qasm_real(r.theta) << "," << qasm_real(r.phi) << ","
                                     << qasm_real(r.lambda) << ") q[" << a.q << "];\n";
                           },
                           [&](const ucom::App2& a) { body_ << "CX q[" << a.q1 << "],q[" << a.q2 << "];\n"; },
                           [&](const ucom::AppOpaque&) { throw Error("oracle not exportable"); },
                       },
                       app);
        }
    }

    void program(const com::Node& n) {
        std::visit(overloaded{
                       [&](const com::Uc& x) { unitary(x.u); },
                       [&](const com::Skip&) {},
                       [&](const com::Seq& s) {
                           program(*s.first);
                           program(*s.second);
                       },
                       [&](const com::Meas& m) {
                           if (!trivially_skip(*m.if0)) {
                               throw Error("measurement with classically controlled branches is not exportable");
                           }
                           measured_ = true;
                           body_ << "measure q[" << m.q << "] -> c[" << m.q << "];\n";
                           if (trivially_skip(*m.if1)) return;
                           if (!is_x_on(*m.if1, m.q, d_)) {
                               throw Error("measurement with classically controlled branches is not exportable");
                           }
                           body_ << "reset q[" << m.q << "];\n";
                       },
                   },
                   n.v);
    }

    std::string finish() const {
        std::ostringstream os;
        os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << d_ << "];\n";
        if (measured_) os << "creg c[" << d_ << "];\n";
        os << body_.str();
        return os.str();
    }

   private:
    std::size_t d_;
    bool measured_ = false;
    std::ostringstream body_;
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

bool MeasStmt::operator==(const MeasStmt& other) const {
    return q == other.q && if1 == other.if1 && if0 == other.if0;
}

CircuitDocument parse(std::string_view text) { return Parser(text).document(); }

std::string print(const CircuitDocument& doc) {
    std::ostringstream os;
    os << "qubits " << doc.qubits << '\n';
    for (const auto& s : doc.statements) {
        print_statement(os, s);
        os << '\n';
    }
    return os.str();
}

Program to_program(const CircuitDocument& doc) { return block_program(doc.qubits, doc.statements); }

Program parse_circuit(std::string_view text) { return to_program(parse(text)); }

std::optional<UnitaryProgram> to_unitary(const CircuitDocument& doc) {
    if (has_measurement(doc.statements)) return std::nullopt;
    std::optional<UnitaryProgram> acc;
    for (const auto& s : doc.statements) {
        const UnitaryProgram u = statement_unitary(doc.qubits, s);
        acc = acc ? (*acc >> u) : u;
    }
    return acc ? *acc : skip(doc.qubits);
}

std::optional<TypeProblem> find_type_problem(const CircuitDocument& doc) {
    return block_problem(doc.qubits, doc.statements);
}

std::string export_qasm(const Program& p) {
    QasmWriter w(p.dim());
    w.program(p.node());
    return w.finish();
}

std::string export_qasm(const UnitaryProgram& u) {
    QasmWriter w(u.dim());
    w.unitary(u);
    return w.finish();
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw Error("cannot format number");
    return std::string(buf, ptr);
}

}  // namespace sqir::text
