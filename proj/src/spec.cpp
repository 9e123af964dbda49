#include "mcg/spec.hpp"

#include <stdexcept>

namespace mcg {

Mat2<double> MCGateSpec::target_op(int j) const {
  switch (kind) {
    case GateKind::X: {
      Mat2<double> m;
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::SU2:
      return rot_matrix(su2.at(j));
    case GateKind::U2:
      return std::polar(1.0, u2.at(j).phase) * rot_matrix(u2.at(j).su2);
  }
  throw std::logic_error("target_op: bad kind");
}

MCGateSpec make_mcx(int n, int m, int dirty) {
  MCGateSpec s;
  s.kind = GateKind::X;
  s.n = n;
  s.m = m;
  s.ancilla = dirty > 0 ? AncillaKind::dirty : AncillaKind::none;
  s.ancilla_count = dirty;
  return s;
}

MCGateSpec make_mcsu2(int n, const std::vector<AxisAngle>& targets, int dirty) {
  MCGateSpec s;
  s.kind = GateKind::SU2;
  s.n = n;
  s.m = static_cast<int>(targets.size());
  s.su2 = targets;
  s.ancilla = dirty > 0 ? AncillaKind::dirty : AncillaKind::none;
  s.ancilla_count = dirty;
  return s;
}

MCGateSpec make_mcu2(int n, const std::vector<U2Spec>& targets) {
  MCGateSpec s;
  s.kind = GateKind::U2;
  s.n = n;
  s.m = static_cast<int>(targets.size());
  s.u2 = targets;
  s.ancilla = AncillaKind::clean;
  s.ancilla_count = 1;
  return s;
}

Roles default_roles(const MCGateSpec& spec) {
  Roles r;
  r.num_qubits = spec.num_qubits();
  int q = 0;
  for (int i = 0; i < spec.n; ++i) r.controls.push_back(q++);
  for (int i = 0; i < spec.m; ++i) r.targets.push_back(q++);
  for (int i = 0; i < spec.ancilla_count; ++i) r.ancillae.push_back(q++);
  return r;
}

void validate(const MCGateSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("spec: need at least one control");
  if (spec.m < 1) throw std::invalid_argument("spec: need at least one target");
  if (spec.kind == GateKind::SU2 && static_cast<int>(spec.su2.size()) != spec.m)
    throw std::invalid_argument("spec: one rotation per target required");
  if (spec.kind == GateKind::U2 && static_cast<int>(spec.u2.size()) != spec.m)
    throw std::invalid_argument("spec: one unitary per target required");
  if (spec.kind == GateKind::U2 && (spec.ancilla != AncillaKind::clean || spec.ancilla_count != 1))
    throw std::invalid_argument("spec: U2 gates need exactly one clean ancilla");
  if (spec.kind != GateKind::U2 && spec.ancilla == AncillaKind::clean)
    throw std::invalid_argument("spec: clean ancilla only supported for U2 gates");
  if ((spec.ancilla == AncillaKind::none) != (spec.ancilla_count == 0))
    throw std::invalid_argument("spec: ancilla kind and count disagree");
}

}  // namespace mcg
