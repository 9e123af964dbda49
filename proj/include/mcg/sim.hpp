#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mcg/circuit.hpp"
#include "mcg/spec.hpp"

namespace mcg {

// Row i is basis state i; qubit q is bit q of i.
template <typename Scalar>
using DenseT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using DenseUnitary = DenseT<double>;
using State = Eigen::VectorXcd;

constexpr int kMaxFullQubits = 12;
constexpr int kMaxOracleQubits = 16;

// Defining matrix over the gate's own qubit slots (slot i is bit i).
Eigen::MatrixXcd gate_matrix(const Gate& g);

void apply_gate(DenseUnitary& u, const Gate& g);
void apply_gate(State& psi, const Gate& g);
void apply_controlled(DenseUnitary& u, const std::vector<int>& controls, int target, const Mat2<double>& m);
void apply_controlled(State& psi, const std::vector<int>& controls, int target, const Mat2<double>& m);

DenseUnitary simulate(const Circuit& c);
State simulate(const Circuit& c, State psi);

struct McOracle {
  int num_qubits = 0;
  std::vector<int> controls;
  std::vector<int> targets;
  std::vector<Mat2<double>> ops;

  State apply(State psi) const;
};

McOracle make_oracle(const MCGateSpec& spec, const Roles& roles);
DenseUnitary oracle_unitary(const MCGateSpec& spec, const Roles& roles);
DenseUnitary oracle_unitary(const McOracle& o);

enum class EquivMode { exact, global_phase, subspace, tensor_identity };
const char* mode_name(EquivMode m);

struct EquivReport {
  EquivMode mode = EquivMode::exact;
  double max_error = 0;
  bool pass = false;
  std::string note;
};

constexpr double kEndToEndTol = 1e-9;
constexpr double kAlgebraTol = 1e-12;

// subspace: columns with every qubit in `fixed` equal to 0; rows outside must vanish.
// tensor_identity: u must equal w (x) I on `fixed`; w is compared to v's block.
// subspace and tensor_identity allow one global phase.
EquivReport equivalent(const DenseUnitary& u, const DenseUnitary& v, EquivMode mode,
                       const std::vector<int>& fixed = {}, double tol = kEndToEndTol);

struct RandomEquivOptions {
  int trials = 20;
  std::uint64_t seed = 12345;
  bool allow_global_phase = true;
  std::vector<int> zero_qubits;  // prepared in |0> (clean ancillae)
  double tol = 1e-8;
};

EquivReport randomized_equiv(const Circuit& c, const std::function<State(const State&)>& oracle,
                             int num_qubits, const RandomEquivOptions& opt = {});

}  // namespace mcg
