#include "mcg/sim.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mcg {

using cd = std::complex<double>;

namespace {

const cd I1(0, 1);

Mat2<double> single_matrix(const Gate& g) {
  const double r = 1 / std::sqrt(2.0);
  Mat2<double> m;
  switch (g.op) {
    case Op::H: m << r, r, r, -r; break;
    case Op::T: m << 1, 0, 0, std::polar(1.0, M_PI / 4); break;
    case Op::Tdg: m << 1, 0, 0, std::polar(1.0, -M_PI / 4); break;
    case Op::S: m << 1, 0, 0, I1; break;
    case Op::Sdg: m << 1, 0, 0, -I1; break;
    case Op::X: m << 0, 1, 1, 0; break;
    case Op::Z: m << 1, 0, 0, -1; break;
    case Op::Rx: m = rx_matrix(g.angle); break;
    case Op::Rz: m = rz_matrix(g.angle); break;
    default: throw std::logic_error("single_matrix: not a 1-qubit gate");
  }
  return m;
}

template <typename M>
void apply_1q(M& u, int q, const Mat2<double>& m, std::uint64_t ctrl_mask = 0) {
  const std::uint64_t dim = u.rows(), bit = 1ULL << q;
  const bool diag = m(0, 1) == cd(0) && m(1, 0) == cd(0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    if ((i & ctrl_mask) != ctrl_mask) continue;
    const std::uint64_t j = i | bit;
    if (diag) {
      if (m(0, 0) != cd(1)) u.row(i) *= m(0, 0);
      if (m(1, 1) != cd(1)) u.row(j) *= m(1, 1);
      continue;
    }
    auto a = u.row(i).eval();
    auto b = u.row(j).eval();
    u.row(i) = m(0, 0) * a + m(0, 1) * b;
    u.row(j) = m(1, 0) * a + m(1, 1) * b;
  }
}

template <typename M>
void apply_cx(M& u, int c, int t) {
  const std::uint64_t dim = u.rows(), cb = 1ULL << c, tb = 1ULL << t;
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & cb) && !(i & tb)) u.row(i).swap(u.row(i | tb));
}

template <typename M>
void apply_small(M& u, const std::vector<int>& qs, const Eigen::MatrixXcd& g) {
  const int k = static_cast<int>(qs.size());
  const std::uint64_t dim = u.rows();
  std::uint64_t mask = 0;
  for (int q : qs) mask |= 1ULL << q;
  const int sub = 1 << k;
  std::vector<std::uint64_t> idx(sub);
  using Row = Eigen::Matrix<cd, 1, Eigen::Dynamic>;
  std::vector<Row> rows(sub);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & mask) continue;
    for (int s = 0; s < sub; ++s) {
      std::uint64_t i = base;
      for (int b = 0; b < k; ++b)
        if (s >> b & 1) i |= 1ULL << qs[b];
      idx[s] = i;
      rows[s] = u.row(i);
    }
    for (int r = 0; r < sub; ++r) {
      Row acc = Row::Zero(u.cols());
      for (int s = 0; s < sub; ++s)
        if (g(r, s) != cd(0)) acc += g(r, s) * rows[s];
      u.row(idx[r]) = acc;
    }
  }
}

template <typename M>
void apply_any(M& u, const Gate& g) {
  switch (g.op) {
    case Op::CX: apply_cx(u, g.q[0], g.q[1]); return;
    case Op::H:
    case Op::T:
    case Op::Tdg:
    case Op::S:
    case Op::Sdg:
    case Op::X:
    case Op::Z:
    case Op::Rx:
    case Op::Rz: apply_1q(u, g.q[0], single_matrix(g)); return;
    default: {
      std::vector<int> qs(g.q.begin(), g.q.begin() + g.arity());
      apply_small(u, qs, gate_matrix(g));
    }
  }
}

std::uint64_t mask_of(const std::vector<int>& qs) {
  std::uint64_t m = 0;
  for (int q : qs) m |= 1ULL << q;
  return m;
}

}  // namespace

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  const int k = g.arity();
  const int dim = 1 << k;
  auto bit = [](int i, int b) { return (i >> b) & 1; };
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  switch (g.op) {
    case Op::CX:
      for (int i = 0; i < dim; ++i) m(bit(i, 0) ? i ^ 2 : i, i) = 1;
      return m;
    case Op::CZ:
      for (int i = 0; i < dim; ++i) m(i, i) = (i == 3) ? -1 : 1;
      return m;
    case Op::SWAP:
      for (int i = 0; i < dim; ++i) m(((i & 1) << 1) | (i >> 1), i) = 1;
      return m;
    case Op::XDelta:
      // CS(c1,c2) CZ(c2,t) CCX(c1,c2->t)
      for (int i = 0; i < dim; ++i) {
        int j = (bit(i, 0) && bit(i, 1)) ? i ^ 4 : i;
        cd d = 1;
        if (bit(j, 0) && bit(j, 1)) d *= I1;
        if (bit(j, 1) && bit(j, 2)) d *= -1;
        m(j, i) = d;
      }
      break;
    case Op::XDelta3:
      // CS(c1,c2) CCS(c0,c1;c2) CCZ(c1,t,c2) CCCX(c0,c1,c2->t)
      for (int i = 0; i < dim; ++i) {
        int j = (bit(i, 0) && bit(i, 1) && bit(i, 2)) ? i ^ 8 : i;
        cd d = 1;
        if (bit(j, 1) && bit(j, 2)) d *= I1;
        if (bit(j, 0) && bit(j, 1) && bit(j, 2)) d *= I1;
        if (bit(j, 1) && bit(j, 2) && bit(j, 3)) d *= -1;
        m(j, i) = d;
      }
      break;
    case Op::IZ:
      for (int i = 0; i < dim; ++i) m(i, i) = (bit(i, 0) && bit(i, 1)) ? (bit(i, 2) ? -I1 : I1) : cd(1);
      break;
    default:
      return single_matrix(g);
  }
  if (g.inv) m.adjointInPlace();
  return m;
}

void apply_gate(DenseUnitary& u, const Gate& g) { apply_any(u, g); }
void apply_gate(State& psi, const Gate& g) { apply_any(psi, g); }

void apply_controlled(DenseUnitary& u, const std::vector<int>& controls, int target, const Mat2<double>& m) {
  apply_1q(u, target, m, mask_of(controls));
}

void apply_controlled(State& psi, const std::vector<int>& controls, int target, const Mat2<double>& m) {
  apply_1q(psi, target, m, mask_of(controls));
}

DenseUnitary simulate(const Circuit& c) {
  if (c.num_qubits > kMaxFullQubits) throw std::length_error("simulate: too many qubits for full-matrix mode");
  const Eigen::Index dim = Eigen::Index(1) << c.num_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (const auto& g : c.gates) apply_gate(u, g);
  return u;
}

State simulate(const Circuit& c, State psi) {
  if (psi.size() != (Eigen::Index(1) << c.num_qubits)) throw std::invalid_argument("simulate: state size mismatch");
  for (const auto& g : c.gates) apply_gate(psi, g);
  return psi;
}

State McOracle::apply(State psi) const {
  for (std::size_t j = 0; j < targets.size(); ++j) apply_controlled(psi, controls, targets[j], ops[j]);
  return psi;
}

McOracle make_oracle(const MCGateSpec& spec, const Roles& roles) {
  McOracle o;
  o.num_qubits = roles.num_qubits;
  o.controls = roles.controls;
  o.targets = roles.targets;
  for (int j = 0; j < spec.m; ++j) o.ops.push_back(spec.target_op(j));
  return o;
}

DenseUnitary oracle_unitary(const McOracle& o) {
  if (o.num_qubits > kMaxOracleQubits) throw std::length_error("oracle_unitary: too many qubits");
  const Eigen::Index dim = Eigen::Index(1) << o.num_qubits;
  DenseUnitary u = DenseUnitary::Identity(dim, dim);
  for (std::size_t j = 0; j < o.targets.size(); ++j) apply_controlled(u, o.controls, o.targets[j], o.ops[j]);
  return u;
}

DenseUnitary oracle_unitary(const MCGateSpec& spec, const Roles& roles) {
  return oracle_unitary(make_oracle(spec, roles));
}

const char* mode_name(EquivMode m) {
  switch (m) {
    case EquivMode::exact: return "exact";
    case EquivMode::global_phase: return "global-phase";
    case EquivMode::subspace: return "subspace";
    case EquivMode::tensor_identity: return "tensor-id";
  }
  return "?";
}

namespace {

// Unit phase p with u ~ p v, anchored at the first entry of v above the threshold.
cd anchor_phase(const DenseUnitary& u, const DenseUnitary& v) {
  const double thr = 0.5 / std::sqrt(double(v.rows()));
  for (Eigen::Index r = 0; r < v.rows(); ++r)
    for (Eigen::Index c = 0; c < v.cols(); ++c)
      if (std::abs(v(r, c)) > thr) {
        cd ratio = u(r, c) / v(r, c);
        if (std::abs(ratio) < 1e-300) throw std::domain_error("equivalent: degenerate anchor");
        return ratio / std::abs(ratio);
      }
  throw std::domain_error("equivalent: no anchor entry");
}

DenseUnitary pick(const DenseUnitary& u, const std::vector<Eigen::Index>& rows, const std::vector<Eigen::Index>& cols) {
  DenseUnitary r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = u(rows[i], cols[j]);
  return r;
}

}  // namespace

EquivReport equivalent(const DenseUnitary& u, const DenseUnitary& v, EquivMode mode, const std::vector<int>& fixed,
                       double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) throw std::invalid_argument("equivalent: dimension mismatch");
  EquivReport rep;
  rep.mode = mode;
  const std::uint64_t fmask = mask_of(fixed);
  const Eigen::Index dim = u.rows();
  switch (mode) {
    case EquivMode::exact:
      rep.max_error = (u - v).cwiseAbs().maxCoeff();
      break;
    case EquivMode::global_phase: {
      cd p = anchor_phase(u, v);
      rep.max_error = (u - p * v).cwiseAbs().maxCoeff();
      break;
    }
    case EquivMode::subspace: {
      std::vector<Eigen::Index> in, out;
      for (Eigen::Index i = 0; i < dim; ++i) ((std::uint64_t(i) & fmask) ? out : in).push_back(i);
      DenseUnitary ub = pick(u, in, in), vb = pick(v, in, in);
      cd p = anchor_phase(ub, vb);
      rep.max_error = (ub - p * vb).cwiseAbs().maxCoeff();
      if (!out.empty()) rep.max_error = std::max(rep.max_error, pick(u, out, in).cwiseAbs().maxCoeff());
      break;
    }
    case EquivMode::tensor_identity: {
      // u(r, c) must equal w(r', c') when r, c agree on the fixed bits, and vanish otherwise.
      std::vector<Eigen::Index> base;
      for (Eigen::Index i = 0; i < dim; ++i)
        if (!(std::uint64_t(i) & fmask)) base.push_back(i);
      DenseUnitary w = pick(u, base, base);
      double err = 0;
      for (std::uint64_t f = fmask;; f = (f - 1) & fmask) {
        for (std::uint64_t g = fmask;; g = (g - 1) & fmask) {
          for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j) {
              cd want = (f == g) ? w(i, j) : cd(0);
              err = std::max(err, std::abs(u(base[i] | f, base[j] | g) - want));
            }
          if (g == 0) break;
        }
        if (f == 0) break;
      }
      DenseUnitary vb = pick(v, base, base);
      cd p = anchor_phase(w, vb);
      rep.max_error = std::max(err, (w - p * vb).cwiseAbs().maxCoeff());
      break;
    }
  }
  rep.pass = rep.max_error <= tol;
  return rep;
}

EquivReport randomized_equiv(const Circuit& c, const std::function<State(const State&)>& oracle, int num_qubits,
                             const RandomEquivOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("randomized_equiv: trials must be positive");
  if (num_qubits > kMaxOracleQubits) throw std::length_error("randomized_equiv: too many qubits");
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> nd;
  const Eigen::Index dim = Eigen::Index(1) << num_qubits;
  const std::uint64_t zmask = mask_of(opt.zero_qubits);
  EquivReport rep;
  rep.mode = opt.allow_global_phase ? EquivMode::global_phase : EquivMode::exact;
  cd phase = 1;
  for (int trial = 0; trial < opt.trials; ++trial) {
    State psi = State::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      if (!(std::uint64_t(i) & zmask)) psi(i) = cd(nd(rng), nd(rng));
    psi.normalize();
    State a = simulate(c, psi);
    State b = oracle(psi);
    if (trial == 0 && opt.allow_global_phase) {
      cd ov = b.dot(a);
      if (std::abs(ov) > 1e-12) phase = ov / std::abs(ov);
    }
    rep.max_error = std::max(rep.max_error, (a - phase * b).norm());
  }
  rep.pass = rep.max_error <= opt.tol;
  return rep;
}

}  // namespace mcg
