#pragma once

#include <vector>

#include "mcg/su2.hpp"

namespace mcg {

enum class GateKind { X, SU2, U2 };
enum class AncillaKind { none, dirty, clean };

// Multi-target variants are the same kinds with m > 1.
struct MCGateSpec {
  GateKind kind = GateKind::SU2;
  int n = 1;
  int m = 1;
  std::vector<AxisAngle> su2;  // per target, kind SU2
  std::vector<U2Spec> u2;      // per target, kind U2
  AncillaKind ancilla = AncillaKind::none;
  int ancilla_count = 0;

  Mat2<double> target_op(int j) const;
  int num_qubits() const { return n + m + ancilla_count; }
};

MCGateSpec make_mcx(int n, int m = 1, int dirty = 0);
MCGateSpec make_mcsu2(int n, const std::vector<AxisAngle>& targets, int dirty = 0);
MCGateSpec make_mcu2(int n, const std::vector<U2Spec>& targets);

// Where each role sits on the register.
struct Roles {
  int num_qubits = 0;
  std::vector<int> controls;
  std::vector<int> targets;
  std::vector<int> ancillae;
};

// Controls first, then targets, then ancillae.
Roles default_roles(const MCGateSpec& spec);

void validate(const MCGateSpec& spec);

}  // namespace mcg
