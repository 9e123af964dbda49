#include "mcg/circuit.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace mcg {

namespace {

Gate make(Op op, std::initializer_list<int> qs, double angle = 0.0, bool inv = false) {
  Gate g;
  g.op = op;
  int i = 0;
  for (int q : qs) g.q[i++] = q;
  g.angle = angle;
  g.inv = inv;
  return g;
}

std::optional<GateClass> class_of(Op op) {
  switch (op) {
    case Op::CX: return GateClass::cnot;
    case Op::T:
    case Op::Tdg: return GateClass::t;
    case Op::H: return GateClass::h;
    case Op::S:
    case Op::Sdg: return GateClass::s;
    case Op::Rx:
    case Op::Rz: return GateClass::rot;
    case Op::X: return GateClass::x;
    default: return std::nullopt;
  }
}

std::vector<Gate> reversed_dagger(std::vector<Gate> gs) {
  std::reverse(gs.begin(), gs.end());
  for (auto& g : gs) g = dagger(g);
  return gs;
}

}  // namespace

int Gate::arity() const {
  switch (op) {
    case Op::CX:
    case Op::CZ:
    case Op::SWAP: return 2;
    case Op::XDelta:
    case Op::IZ: return 3;
    case Op::XDelta3: return 4;
    default: return 1;
  }
}

Gate h(int q) { return make(Op::H, {q}); }
Gate t(int q) { return make(Op::T, {q}); }
Gate tdg(int q) { return make(Op::Tdg, {q}); }
Gate s(int q) { return make(Op::S, {q}); }
Gate sdg(int q) { return make(Op::Sdg, {q}); }
Gate x(int q) { return make(Op::X, {q}); }
Gate z(int q) { return make(Op::Z, {q}); }
Gate rx(int q, double theta) { return make(Op::Rx, {q}, theta); }
Gate rz(int q, double theta) { return make(Op::Rz, {q}, theta); }
Gate cx(int c, int tgt) { return make(Op::CX, {c, tgt}); }
Gate cz(int a, int b) { return make(Op::CZ, {a, b}); }
Gate swap(int a, int b) { return make(Op::SWAP, {a, b}); }
Gate xdelta(int c1, int c2, int tgt, bool inv) { return make(Op::XDelta, {c1, c2, tgt}, 0.0, inv); }
Gate xdelta3(int c0, int c1, int c2, int tgt, bool inv) {
  return make(Op::XDelta3, {c0, c1, c2, tgt}, 0.0, inv);
}
Gate iz(int c1, int c2, int tgt, bool inv) { return make(Op::IZ, {c1, c2, tgt}, 0.0, inv); }

bool is_mid_level(Op op) {
  return op == Op::XDelta || op == Op::XDelta3 || op == Op::IZ || op == Op::CZ ||
         op == Op::SWAP || op == Op::Z;
}

const char* op_name(Op op) {
  switch (op) {
    case Op::H: return "h";
    case Op::T: return "t";
    case Op::Tdg: return "tdg";
    case Op::S: return "s";
    case Op::Sdg: return "sdg";
    case Op::X: return "x";
    case Op::Z: return "z";
    case Op::Rx: return "rx";
    case Op::Rz: return "rz";
    case Op::CX: return "cx";
    case Op::CZ: return "cz";
    case Op::SWAP: return "swap";
    case Op::XDelta: return "xdelta";
    case Op::XDelta3: return "xdelta3";
    case Op::IZ: return "iz";
  }
  return "?";
}

Circuit& Circuit::add(const Gate& g) {
  for (int i = 0; i < g.arity(); ++i) {
    if (g.q[i] < 0 || g.q[i] >= num_qubits) throw std::out_of_range("gate qubit outside register");
    for (int j = 0; j < i; ++j)
      if (g.q[i] == g.q[j]) throw std::invalid_argument("repeated qubit in gate");
  }
  gates.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& c) {
  for (const auto& g : c.gates) add(g);
  return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gs) {
  for (const auto& g : gs) add(g);
  return *this;
}

Gate dagger(const Gate& g) {
  Gate d = g;
  switch (g.op) {
    case Op::T: d.op = Op::Tdg; break;
    case Op::Tdg: d.op = Op::T; break;
    case Op::S: d.op = Op::Sdg; break;
    case Op::Sdg: d.op = Op::S; break;
    case Op::Rx:
    case Op::Rz: d.angle = -g.angle; break;
    case Op::XDelta:
    case Op::XDelta3:
    case Op::IZ: d.inv = !g.inv; break;
    default: break;
  }
  return d;
}

Circuit inverse(const Circuit& c) {
  Circuit r(c.num_qubits);
  r.gates = reversed_dagger(c.gates);
  return r;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit r(std::max(a.num_qubits, b.num_qubits));
  r.append(a).append(b);
  return r;
}

Circuit remap(const Circuit& c, const std::vector<int>& map, int num_qubits) {
  Circuit r(num_qubits);
  for (Gate g : c.gates) {
    for (int i = 0; i < g.arity(); ++i) g.q[i] = map.at(g.q[i]);
    r.add(g);
  }
  return r;
}

std::vector<Gate> lower_gate(const Gate& g, Style style) {
  const auto& q = g.q;
  std::vector<Gate> out;
  switch (g.op) {
    case Op::CZ:
      return {h(q[1]), cx(q[0], q[1]), h(q[1])};
    case Op::SWAP:
      return {cx(q[0], q[1]), cx(q[1], q[0]), cx(q[0], q[1])};
    case Op::Z:
      return {s(q[0]), s(q[0])};
    case Op::XDelta: {
      int a = q[0], b = q[1], tg = q[2];
      if (style == Style::standard)
        out = {h(tg), tdg(tg), cx(a, tg), t(tg), cx(b, tg), tdg(tg), cx(a, tg), t(tg), h(tg)};
      else
        out = {h(tg), cx(tg, a), t(a), tdg(tg), cx(b, tg), cx(b, a),
               tdg(a), t(tg), cx(tg, a), h(tg)};
      break;
    }
    case Op::IZ: {
      int a = q[0], b = q[1], tg = q[2];
      if (style == Style::standard)
        out = {tdg(tg), cx(a, tg), t(tg), cx(b, tg), tdg(tg), cx(a, tg), t(tg), cx(b, tg)};
      else
        out = {cx(tg, a), t(a), tdg(tg), cx(b, a), cx(b, tg), tdg(a), t(tg), cx(tg, a), cx(b, tg)};
      break;
    }
    case Op::XDelta3: {
      int a = q[0], b = q[1], c = q[2], tg = q[3];
      if (style == Style::standard)
        out = {h(tg), tdg(tg), cx(a, tg), t(tg), h(tg), tdg(tg), cx(b, tg), t(tg),
               cx(c, tg), tdg(tg), cx(b, tg), t(tg), cx(c, tg), h(tg), tdg(tg), cx(a, tg), t(tg), h(tg)};
      else
        out = {h(tg), tdg(tg), cx(a, tg), t(tg), cx(a, tg), h(tg), tdg(tg), cx(b, tg), t(tg), cx(b, tg),
               cx(c, tg), cx(tg, b), tdg(b), t(tg), cx(tg, b), cx(c, tg), h(tg), cx(tg, a), tdg(a), t(tg),
               cx(tg, a), h(tg)};
      break;
    }
    default:
      return {g};
  }
  return g.inv ? reversed_dagger(out) : out;
}

Circuit lower(const Circuit& c, Style style) {
  Circuit r(c.num_qubits);
  r.gates.reserve(c.gates.size() * 3);
  for (const auto& g : c.gates)
    for (const auto& l : lower_gate(g, style)) r.gates.push_back(l);
  return r;
}

bool is_lowered(const Circuit& c) {
  return std::none_of(c.gates.begin(), c.gates.end(), [](const Gate& g) { return is_mid_level(g.op); });
}

const char* class_name(GateClass k) {
  switch (k) {
    case GateClass::cnot: return "cnot";
    case GateClass::t: return "t";
    case GateClass::h: return "h";
    case GateClass::s: return "s";
    case GateClass::rot: return "rot";
    case GateClass::x: return "x";
  }
  return "?";
}

long GateCounts::depth(GateClass k) const {
  auto it = per_type_depth.find(k);
  return it == per_type_depth.end() ? 0 : it->second;
}

GateCounts counts(const Circuit& c) {
  if (!is_lowered(c)) throw std::invalid_argument("counts: circuit contains mid-level gates");
  GateCounts r;
  std::vector<long> level(c.num_qubits, 0);
  std::map<GateClass, std::vector<bool>> seen;
  for (const auto& g : c.gates) {
    GateClass k = *class_of(g.op);
    switch (k) {
      case GateClass::cnot: ++r.cnot; break;
      case GateClass::t: ++r.t; break;
      case GateClass::h: ++r.h; break;
      case GateClass::s: ++r.s; break;
      case GateClass::rot: ++r.rot; break;
      case GateClass::x: ++r.x; break;
    }
    long layer = 0;
    for (int i = 0; i < g.arity(); ++i) layer = std::max(layer, level[g.q[i]]);
    for (int i = 0; i < g.arity(); ++i) level[g.q[i]] = layer + 1;
    auto& v = seen[k];
    if (v.size() <= static_cast<std::size_t>(layer)) v.resize(layer + 1, false);
    if (!v[layer]) {
      v[layer] = true;
      ++r.per_type_depth[k];
    }
  }
  return r;
}

long class_depth(const Circuit& c, GateClass k) {
  if (!is_lowered(c)) throw std::invalid_argument("class_depth: circuit contains mid-level gates");
  std::vector<long> level(c.num_qubits, 0);
  long best = 0;
  for (const auto& g : c.gates) {
    long d = 0;
    for (int i = 0; i < g.arity(); ++i) d = std::max(d, level[g.q[i]]);
    if (*class_of(g.op) == k) ++d;
    for (int i = 0; i < g.arity(); ++i) level[g.q[i]] = d;
    best = std::max(best, d);
  }
  return best;
}

std::vector<std::size_t> validate_lnn(const Circuit& c) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (g.arity() < 2) continue;
    bool ok = true;
    if (g.arity() == 2) {
      ok = std::abs(g.q[0] - g.q[1]) == 1;
    } else {
      ok = false;
    }
    if (!ok) bad.push_back(i);
  }
  return bad;
}

std::size_t count_op(const Circuit& c, Op op) {
  return std::count_if(c.gates.begin(), c.gates.end(), [op](const Gate& g) { return g.op == op; });
}

}  // namespace mcg
