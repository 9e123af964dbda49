#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mcg {

enum class Op : std::uint8_t {
  H, T, Tdg, S, Sdg, X, Z, Rx, Rz, CX, CZ, SWAP, XDelta, XDelta3, IZ
};

// Qubit slots by kind:
//   CX(control, target), CZ(a, b), SWAP(a, b)
//   XDelta(c1, c2, t)      CS(c1,c2) CZ(c2,t) CCX(c1,c2->t), CCX first in time
//   XDelta3(c0, c1, c2, t) CS(c1,c2) CCS(c0,c1;c2) CCZ(c1,t,c2) CCCX(c0,c1,c2->t)
//   IZ(c1, c2, t)          i*Z on t when c1 = c2 = 1
struct Gate {
  Op op = Op::H;
  std::array<int, 4> q{-1, -1, -1, -1};
  double angle = 0.0;
  bool inv = false;

  int arity() const;
  bool operator==(const Gate&) const = default;
};

Gate h(int q);
Gate t(int q);
Gate tdg(int q);
Gate s(int q);
Gate sdg(int q);
Gate x(int q);
Gate z(int q);
Gate rx(int q, double theta);
Gate rz(int q, double theta);
Gate cx(int c, int tgt);
Gate cz(int a, int b);
Gate swap(int a, int b);
Gate xdelta(int c1, int c2, int tgt, bool inv = false);
Gate xdelta3(int c0, int c1, int c2, int tgt, bool inv = false);
Gate iz(int c1, int c2, int tgt, bool inv = false);

bool is_mid_level(Op op);
const char* op_name(Op op);

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}

  Circuit& add(const Gate& g);
  Circuit& append(const Circuit& c);
  Circuit& append(const std::vector<Gate>& gs);
  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }
  bool operator==(const Circuit&) const = default;
};

Gate dagger(const Gate& g);
Circuit inverse(const Circuit& c);
Circuit compose(const Circuit& a, const Circuit& b);
// Relabels qubit i to map[i].
Circuit remap(const Circuit& c, const std::vector<int>& map, int num_qubits);

enum class Style { standard, tdepth };

std::vector<Gate> lower_gate(const Gate& g, Style style);
Circuit lower(const Circuit& c, Style style = Style::standard);
bool is_lowered(const Circuit& c);

enum class GateClass : std::uint8_t { cnot, t, h, s, rot, x };
const char* class_name(GateClass k);

struct GateCounts {
  long cnot = 0;
  long t = 0;
  long h = 0;
  long s = 0;
  long rot = 0;
  long x = 0;
  std::map<GateClass, long> per_type_depth;

  long depth(GateClass k) const;
};

// Throws std::invalid_argument when the circuit still holds mid-level gates.
GateCounts counts(const Circuit& c);

// Longest chain of gates of class k when every other gate takes zero time.
long class_depth(const Circuit& c, GateClass k);

// Indices of 2-qubit gates whose qubits are not adjacent on the line.
std::vector<std::size_t> validate_lnn(const Circuit& c);

std::size_t count_op(const Circuit& c, Op op);

std::string export_qasm(const Circuit& c);
Circuit import_qasm(const std::string& text);

}  // namespace mcg
