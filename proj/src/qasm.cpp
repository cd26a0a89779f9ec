// Copyright 2026 The lazyroute developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lazyroute/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace lazyroute {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  detail::fail("qasm parse error at line " + std::to_string(line) + ": " + message);
}

struct Statement {
  std::string text;
  int line;
};

// Splits the source into ';'-terminated statements, stripping // comments
// and remembering the line each statement starts on.
std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  std::string current;
  int line = 1;
  int start_line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      --i;
      continue;
    }
    if (c == '\n') {
      ++line;
      if (current.empty())
        start_line = line;
      else
        current.push_back(' ');
      continue;
    }
    if (c == ';') {
      out.push_back({current, start_line});
      current.clear();
      start_line = line;
      continue;
    }
    if (current.empty() && std::isspace(static_cast<unsigned char>(c))) {
      start_line = line;
      continue;
    }
    current.push_back(c);
  }
  for (char c : current)
    if (!std::isspace(static_cast<unsigned char>(c)))
      parse_fail(start_line, "statement missing terminating ';'");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// An angle expression: optional sign, then factors joined by '*' or '/'.
// Factors are numeric literals or the keyword pi. The value is always
// evaluated in double; in parallel we track whether the expression is an
// exact integer-rational multiple of pi.
Angle parse_angle(const std::string& expr, int line) {
  struct Token {
    enum Kind { Number, Pi, Mul, Div } kind;
    double value = 0.0;
    bool integral = false;
    long long int_value = 0;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  bool negate = false;
  std::string s = trim(expr);
  if (s.empty()) parse_fail(line, "empty angle expression");
  if (s[0] == '+' || s[0] == '-') {
    negate = s[0] == '-';
    i = 1;
  }
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '*') {
      tokens.push_back({Token::Mul});
      ++i;
    } else if (c == '/') {
      tokens.push_back({Token::Div});
      ++i;
    } else if (s.compare(i, 2, "pi") == 0) {
      tokens.push_back({Token::Pi});
      i += 2;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
                              s[i] == 'e' || s[i] == 'E' ||
                              ((s[i] == '+' || s[i] == '-') &&
                               (s[i - 1] == 'e' || s[i - 1] == 'E'))))
        ++i;
      std::string lit = s.substr(start, i - start);
      Token t{Token::Number};
      try {
        t.value = std::stod(lit);
      } catch (const std::exception&) {
        parse_fail(line, "bad numeric literal '" + lit + "'");
      }
      t.integral = lit.find_first_not_of("0123456789") == std::string::npos && lit.size() < 18;
      if (t.integral) t.int_value = std::stoll(lit);
      tokens.push_back(t);
    } else {
      parse_fail(line, "unexpected character '" + std::string(1, c) + "' in angle");
    }
  }

  double value = 1.0;
  bool exact = true;       // integer-rational coefficient so far
  long long num = 1, den = 1;
  int pi_power = 0;
  bool expect_factor = true;
  bool first = true;
  bool dividing = false;
  for (const Token& t : tokens) {
    if (t.kind == Token::Mul || t.kind == Token::Div) {
      if (expect_factor) parse_fail(line, "misplaced operator in angle");
      dividing = t.kind == Token::Div;
      expect_factor = true;
      continue;
    }
    if (!expect_factor && !first) parse_fail(line, "missing operator in angle");
    double v = t.kind == Token::Pi ? std::numbers::pi : t.value;
    if (dividing) {
      if (v == 0.0) parse_fail(line, "division by zero in angle");
      value /= v;
    } else {
      value *= v;
    }
    if (t.kind == Token::Pi) {
      pi_power += dividing ? -1 : 1;
    } else if (t.integral) {
      long long x = t.int_value;
      if (dividing) {
        if (x == 0) parse_fail(line, "division by zero in angle");
        den *= x;
      } else {
        num *= x;
      }
      if (std::llabs(num) > (1LL << 40) || std::llabs(den) > (1LL << 40)) exact = false;
    } else {
      exact = false;
    }
    expect_factor = false;
    first = false;
    dividing = false;
  }
  if (expect_factor) parse_fail(line, "angle expression ends with an operator");

  if (negate) {
    value = -value;
    num = -num;
  }
  if (exact && pi_power == 1 && den != 0 && (4 * num) % den == 0)
    return Angle::exact(4 * num / den);
  return Angle::real(value);
}

struct Operand {
  std::string reg;
  long long index;
};

Operand parse_operand(const std::string& text, int line) {
  std::string s = trim(text);
  auto lb = s.find('[');
  auto rb = s.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb || rb != s.size() - 1)
    parse_fail(line, "expected operand of the form reg[i], got '" + s + "'");
  std::string idx = s.substr(lb + 1, rb - lb - 1);
  if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(line, "bad operand index '" + idx + "'");
  return {trim(s.substr(0, lb)), std::stoll(idx)};
}

std::vector<std::string> split_on_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  std::optional<std::string> reg_name;
  long long reg_size = 0;
  Circuit circuit;
  bool saw_qreg = false;

  auto resolve = [&](const Operand& op, int line) -> Qubit {
    if (!saw_qreg) parse_fail(line, "gate before qreg declaration");
    if (op.reg != *reg_name)
      parse_fail(line, "unknown register '" + op.reg + "'");
    if (op.index >= reg_size)
      parse_fail(line, "operand index " + std::to_string(op.index) + " exceeds register size " +
                           std::to_string(reg_size));
    return static_cast<Qubit>(op.index);
  };

  for (const Statement& st : split_statements(text)) {
    std::string body = trim(st.text);
    if (body.empty()) continue;

    if (body.rfind("OPENQASM", 0) == 0 || body.rfind("include", 0) == 0) continue;

    if (body.rfind("qreg", 0) == 0) {
      if (saw_qreg) parse_fail(st.line, "multiple qreg declarations");
      Operand op = parse_operand(body.substr(4), st.line);
      if (op.index <= 0) parse_fail(st.line, "qreg size must be positive");
      reg_name = op.reg;
      reg_size = op.index;
      saw_qreg = true;
      circuit.n_qubits = static_cast<Qubit>(reg_size);
      continue;
    }

    // Split "name(params)? operands".
    std::size_t p = 0;
    while (p < body.size() && (std::isalnum(static_cast<unsigned char>(body[p])) || body[p] == '_'))
      ++p;
    std::string name = body.substr(0, p);
    std::string params;
    if (p < body.size() && body[p] == '(') {
      auto close = body.find(')', p);
      if (close == std::string::npos) parse_fail(st.line, "unbalanced '(' in statement");
      params = body.substr(p + 1, close - p - 1);
      p = close + 1;
    }
    std::string operand_text = trim(body.substr(p));
    if (name.empty()) parse_fail(st.line, "cannot parse statement '" + body + "'");

    std::vector<Qubit> operands;
    if (!operand_text.empty())
      for (const std::string& part : split_on_commas(operand_text))
        operands.push_back(resolve(parse_operand(part, st.line), st.line));

    auto expect_arity = [&](std::size_t arity) {
      if (operands.size() != arity)
        parse_fail(st.line, "gate '" + name + "' expects " + std::to_string(arity) +
                                " operand(s), got " + std::to_string(operands.size()));
      if (arity == 2 && operands[0] == operands[1])
        parse_fail(st.line, "gate '" + name + "' operands must be distinct");
    };
    auto expect_no_params = [&]() {
      if (!params.empty()) parse_fail(st.line, "gate '" + name + "' takes no parameters");
    };

    if (name == "rz") {
      expect_arity(1);
      circuit.append(Gate::rz(operands[0], parse_angle(params, st.line)));
    } else if (name == "cx") {
      expect_no_params();
      expect_arity(2);
      circuit.append(Gate::cnot(operands[0], operands[1]));
    } else if (name == "swap") {
      expect_no_params();
      expect_arity(2);
      circuit.append(Gate::swap(operands[0], operands[1]));
    } else {
      GateKind kind;
      if (name == "h")
        kind = GateKind::H;
      else if (name == "x")
        kind = GateKind::X;
      else if (name == "y")
        kind = GateKind::Y;
      else if (name == "z")
        kind = GateKind::Z;
      else if (name == "s")
        kind = GateKind::S;
      else if (name == "sdg")
        kind = GateKind::Sdg;
      else if (name == "t")
        kind = GateKind::T;
      else if (name == "tdg")
        kind = GateKind::Tdg;
      else if (name == "sx")
        kind = GateKind::SqrtX;
      else if (name == "sxdg")
        kind = GateKind::SqrtXdg;
      else
        parse_fail(st.line, "unsupported statement '" + name + "'");
      expect_no_params();
      expect_arity(1);
      circuit.append(Gate{kind, {operands[0]}, Angle(), std::nullopt});
    }
  }

  if (!saw_qreg) detail::fail("qasm parse error: no qreg declaration found");
  return circuit;
}

Circuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open qasm file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str());
}

namespace {

std::string format_angle(const Angle& a) {
  if (!a.is_exact()) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a.radians());
    return buf;
  }
  long long k = a.exact_k();
  if (k == 0) return "0";
  long long g = std::gcd(std::llabs(k), 4LL);
  long long p = k / g, q = 4 / g;
  std::string s;
  if (p == -1)
    s = "-pi";
  else if (p == 1)
    s = "pi";
  else
    s = std::to_string(p) + "*pi";
  if (q != 1) s += "/" + std::to_string(q);
  return s;
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    detail::require(g.kind != GateKind::PauliRot,
                    "PauliRot gates have no QASM form; lower them first");
    out += gate_kind_name(g.kind);
    if (g.kind == GateKind::Rz) out += "(" + format_angle(g.angle) + ")";
    out += " ";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      if (i) out += ",";
      out += "q[" + std::to_string(g.qubits[i]) + "]";
    }
    out += ";\n";
  }
  return out;
}

}  // namespace lazyroute
