#include <cstdio>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "mcg/circuit.hpp"

namespace mcg {

std::string export_qasm(const Circuit& c) {
  if (!is_lowered(c)) throw std::invalid_argument("export_qasm: circuit contains mid-level gates");
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits << "];\n";
  char buf[64];
  for (const auto& g : c.gates) {
    os << op_name(g.op);
    if (g.op == Op::Rx || g.op == Op::Rz) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      os << '(' << buf << ')';
    }
    os << ' ';
    for (int i = 0; i < g.arity(); ++i) os << (i ? "," : "") << "q[" << g.q[i] << ']';
    os << ";\n";
  }
  return os.str();
}

Circuit import_qasm(const std::string& text) {
  static const std::regex qreg_re(R"(^\s*qreg\s+q\s*\[\s*(\d+)\s*\]\s*;\s*$)");
  static const std::regex gate_re(
      R"(^\s*([a-z]+)\s*(?:\(\s*([^)]*)\))?\s+q\[(\d+)\]\s*(?:,\s*q\[(\d+)\])?\s*;\s*$)");
  Circuit c;
  bool have_reg = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto p = line.find("//"); p != std::string::npos) line.erase(p);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
    std::smatch m;
    if (std::regex_match(line, m, qreg_re)) {
      if (have_reg) throw std::runtime_error("import_qasm: more than one register");
      c.num_qubits = std::stoi(m[1]);
      have_reg = true;
      continue;
    }
    if (!have_reg || !std::regex_match(line, m, gate_re))
      throw std::runtime_error("import_qasm: cannot parse line " + std::to_string(lineno));
    const std::string name = m[1];
    int a = std::stoi(m[3]);
    int b = m[4].matched ? std::stoi(m[4]) : -1;
    auto want = [&](bool two, bool param) {
      if (two != (b >= 0) || param != m[2].matched)
        throw std::runtime_error("import_qasm: bad operands on line " + std::to_string(lineno));
    };
    if (name == "cx") {
      want(true, false);
      c.add(cx(a, b));
      continue;
    }
    if (name == "rx" || name == "rz") {
      want(false, true);
      double th = std::stod(m[2]);
      c.add(name == "rx" ? rx(a, th) : rz(a, th));
      continue;
    }
    want(false, false);
    if (name == "h") c.add(h(a));
    else if (name == "t") c.add(t(a));
    else if (name == "tdg") c.add(tdg(a));
    else if (name == "s") c.add(s(a));
    else if (name == "sdg") c.add(sdg(a));
    else if (name == "x") c.add(x(a));
    else throw std::runtime_error("import_qasm: unknown gate '" + name + "'");
  }
  if (!have_reg) throw std::runtime_error("import_qasm: missing qreg");
  return c;
}

}  // namespace mcg
