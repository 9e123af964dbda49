#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mcg/circuit.hpp"
#include "mcg/spec.hpp"

namespace mcg {

struct SynthOptions {
  Style variant = Style::standard;
  // Ξ-layer merges at block boundaries (and the T-depth edge cancellations).
  bool apply_depth_reductions = true;
};

// Control sets of the four-block macro. chain1 entries are single controls or
// borrowed-ancilla pairs; d1/d2 end with the first target.
struct ControlPartition {
  std::vector<int> c1, c2;
  std::vector<int> c1_prime, c2_prime;
  std::vector<int> c1_chi;  // paired controls
  std::vector<int> c1_sq;   // remaining chain-1 controls
  int n_chi = 0;
  std::vector<std::vector<int>> chain1;
  std::vector<int> chain2;
  std::vector<int> d1, d2;
  std::vector<std::pair<int, int>> merge_pairs;  // (C1[j], C2[j]) for 3 <= j <= n1
};

ControlPartition partition_controls(const std::vector<int>& controls, int target, const std::vector<int>& chi = {});

// {Z}^n_{C,D} CS(c1,c2) as mid-level gates: 2n-4 XDelta around one IZ.
Circuit synth_vchain_z(const std::vector<int>& controls, const std::vector<int>& borrows, int num_qubits,
                       const SynthOptions& opt = {});

// Operate on default_roles(spec).
Circuit synth_mcsu2_ata(const MCGateSpec& spec, const SynthOptions& opt = {});
Circuit synth_mcx_ata(const MCGateSpec& spec, const SynthOptions& opt = {});
Circuit synth_mcu2_ata(const MCGateSpec& spec, const SynthOptions& opt = {});
Circuit synth_ata(const MCGateSpec& spec, const SynthOptions& opt = {});

// Same structure before lowering and before any merges.
Circuit synth_ata_midlevel(const MCGateSpec& spec, const SynthOptions& opt = {});

enum class XDeltaKind { two_control, three_control };

struct XDeltaTemplate {
  Gate gate;                 // on slots 0..arity-1
  Eigen::MatrixXcd matrix;   // defining matrix, slot i = bit i
  std::vector<Gate> lowering;
};

XDeltaTemplate build_xdelta(XDeltaKind kind, Style style, bool inverse);

// Removes adjacent self-inverse or mutually inverse 1-qubit gate pairs.
Circuit cancel_inverse_pairs(const Circuit& c);

}  // namespace mcg
