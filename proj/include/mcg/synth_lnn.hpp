#pragma once

#include <vector>

#include "mcg/circuit.hpp"
#include "mcg/spec.hpp"

namespace mcg {

// Roles on a line of k qubits; position i neighbors i-1 and i+1.
struct LnnPlacement {
  int k = 0;
  std::vector<int> controls;
  std::vector<int> targets;   // targets[j] carries spec target j
  std::vector<int> ancillae;
  AncillaKind ancilla = AncillaKind::none;

  Roles roles() const;
  int lo() const;  // window Q = [lo, hi]
  int hi() const;
};

void validate(const LnnPlacement& p, const MCGateSpec& spec);

// Masks over the window; index 0 is the top. l0 values are 1-based.
struct LnnPartition {
  std::vector<bool> c1_mask, c2_mask;
  int l0_1 = 0, l0_2 = 0;
  int l0_prime_1 = 0, l0_prime_2 = 0;
};

// Single-target mode needs a control on top. Multi-target mode takes the target mask so
// that controls on both sides of a target block count as neighbors.
LnnPartition partition_controls_lnn(const std::vector<bool>& control_mask, bool multi_target_mode = false,
                                    const std::vector<bool>& target_mask = {});

// {Z}-bar chain on `window` (physical qubits, top to bottom; the bottom one is the chain target).
// With l0' = 1 the circuit also applies SWAP then CS on the head pair (swap_a, swap_b).
struct ZbarChain {
  Circuit circuit;
  int l0_prime = 0;
  int swap_a = -1, swap_b = -1;
};

ZbarChain synth_zbar_chain(const std::vector<bool>& control_mask, const std::vector<int>& window, int num_qubits,
                           bool inverse = false);

enum class RouteStyle { target_swap, plain };

struct Route {
  Circuit prefix, suffix;
  LnnPlacement placement;
  std::vector<int> moved;  // moved[p] = position of the qubit that started at p
  bool to_top = false;
};

// Moves `mover` to the nearer window edge (ties go to index 0). target_swap uses 2-CX partial swaps,
// valid around any block that acts on the mover as an X-type operator.
Route route_to_edge(const LnnPlacement& p, int mover, RouteStyle style = RouteStyle::target_swap);

struct LnnOptions {
  RouteStyle route = RouteStyle::target_swap;
  // Single-target SU(2) with an empty second control set uses six rotations and two chains.
  bool collapse_empty_c2 = true;
};

Circuit synth_mcsu2_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt = {});
Circuit synth_mcx_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt = {});
Circuit synth_mcu2_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt = {});
Circuit synth_mcmt_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt = {});
Circuit synth_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt = {});

}  // namespace mcg
