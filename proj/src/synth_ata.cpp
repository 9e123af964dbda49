#include "mcg/synth_ata.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mcg/sim.hpp"
#include "mcg/su2.hpp"
#include "synth_common.hpp"

namespace mcg {

namespace {

std::vector<Gate> rdag(std::vector<Gate> gs) {
  std::reverse(gs.begin(), gs.end());
  for (auto& g : gs) g = dagger(g);
  return gs;
}

void push(std::vector<Gate>& out, const std::vector<Gate>& gs) { out.insert(out.end(), gs.begin(), gs.end()); }

// One chain {Z}^n_{C,D} CS(c1,c2); controls may be borrowed-ancilla pairs.
struct ChainPlan {
  std::vector<std::vector<int>> controls;
  std::vector<int> d;
};

struct Step {
  std::vector<int> c;  // 1 or 2 qubits
  int dc = -1;         // control taken from D
  int dt = -1;         // target in D
};

// First-half order: j = n down to 3.
std::vector<Step> chain_steps(const ChainPlan& ch) {
  const int n = static_cast<int>(ch.controls.size());
  std::vector<Step> steps;
  for (int j = n; j >= 3; --j) steps.push_back({ch.controls[j - 1], ch.d[j - 2], ch.d[j - 3]});
  return steps;
}

Gate step_gate(const Step& st, bool inv) {
  if (st.c.size() == 1) return xdelta(st.c[0], st.dc, st.dt, inv);
  return xdelta3(st.c[0], st.c[1], st.dc, st.dt, inv);
}

void check_chain(const ChainPlan& ch) {
  const std::size_t n = ch.controls.size();
  if (n == 0) throw std::invalid_argument("chain: no controls");
  if (ch.d.size() != std::max<std::size_t>(n - 1, 1)) throw std::invalid_argument("chain: |D| must be |C|-1");
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 2); ++i)
    if (ch.controls[i].size() != 1) throw std::invalid_argument("chain: first two controls must be single qubits");
}

std::vector<Gate> chain_midlevel(const ChainPlan& ch, bool inverse) {
  check_chain(ch);
  const int n = static_cast<int>(ch.controls.size());
  std::vector<Gate> out;
  if (n == 1) {
    out.push_back(cz(ch.controls[0][0], ch.d[0]));
    return out;
  }
  auto steps = chain_steps(ch);
  for (const auto& st : steps) out.push_back(step_gate(st, false));
  out.push_back(iz(ch.controls[0][0], ch.controls[1][0], ch.d[0], inverse));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back(step_gate(*it, true));
  return out;
}

struct XiItem {
  int q1 = -1, q3 = -1;
  std::vector<Gate> gates;
};

struct CoreSeg {
  int q1 = -1, q3 = -1, other = -1;
  bool first = true;
  std::vector<Gate> gates;
};

struct LoweredBlock {
  std::vector<XiItem> xi_in, xi_out;
  std::vector<CoreSeg> core;
};

// Splits a lowered step into the part that commutes to the chain edge and the rest.
std::pair<std::vector<Gate>, std::vector<Gate>> split_step(const Step& st, Style style) {
  auto full = lower_gate(step_gate(st, false), style);
  std::size_t cut = 4;
  if (st.c.size() == 2) cut = style == Style::standard ? 8 : 10;
  std::vector<Gate> o2(full.begin(), full.begin() + cut), o3(full.begin() + cut, full.end());
  // The leading part of a paired step cancels across blocks and is dropped.
  if (st.c.size() == 2) o2.clear();
  return {o2, o3};
}

LoweredBlock chain_lowered(const ChainPlan& ch, bool inverse, Style style) {
  check_chain(ch);
  LoweredBlock b;
  const int n = static_cast<int>(ch.controls.size());
  if (n == 1) {
    b.core.push_back({-1, -1, -1, true, lower_gate(cz(ch.controls[0][0], ch.d[0]), style)});
    return b;
  }
  auto steps = chain_steps(ch);
  for (const auto& st : steps) {
    auto [o2, o3] = split_step(st, style);
    int key = st.c.size() == 1 ? st.c[0] : -1;
    if (!o2.empty()) b.xi_in.push_back({key, st.dt, o2});
    b.core.push_back({key, st.dt, st.dc, true, o3});
  }
  b.core.push_back({-1, -1, -1, true, lower_gate(iz(ch.controls[0][0], ch.controls[1][0], ch.d[0], inverse), style)});
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    auto [o2, o3] = split_step(*it, style);
    int key = it->c.size() == 1 ? it->c[0] : -1;
    b.core.push_back({key, it->dt, it->dc, false, rdag(o3)});
    if (!o2.empty()) b.xi_out.push_back({key, it->dt, rdag(o2)});
  }
  return b;
}

struct MacroPlan {
  int num_qubits = 0;
  ChainPlan ch1, ch2;
  std::vector<int> targets;                // targets[0] closes both chains
  std::array<std::vector<Gate>, 5> slots;  // target-side gates before, between and after the blocks
  std::vector<Gate> prefix, suffix;
};

// CX fan-out tree; layers in order 1..K (apply reversed before a block).
std::vector<std::vector<Gate>> fanout_layers(const std::vector<int>& tg) {
  std::vector<std::vector<Gate>> layers;
  const int m = static_cast<int>(tg.size());
  for (int f = 1; f < m; f *= 2) {
    std::vector<Gate> layer;
    for (int l = 0; l < std::min(f, m - f); ++l) layer.push_back(cx(tg[l + f], tg[l]));
    layers.push_back(layer);
  }
  return layers;
}

std::vector<Gate> tree_in(const std::vector<int>& tg) {
  auto layers = fanout_layers(tg);
  std::vector<Gate> out;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) push(out, *it);
  return out;
}

std::vector<Gate> tree_out(const std::vector<int>& tg) {
  std::vector<Gate> out;
  for (const auto& l : fanout_layers(tg)) push(out, l);
  return out;
}

Circuit render_midlevel(const MacroPlan& p) {
  Circuit c(p.num_qubits);
  c.append(p.prefix);
  const std::array<const ChainPlan*, 4> chains{&p.ch1, &p.ch2, &p.ch1, &p.ch2};
  for (int k = 0; k < 4; ++k) {
    c.append(p.slots[k]);
    c.append(tree_in(p.targets));
    c.append(chain_midlevel(*chains[k], k >= 2));
    c.append(tree_out(p.targets));
  }
  c.append(p.slots[4]);
  c.append(p.suffix);
  return c;
}

std::vector<Gate> flatten(const std::vector<XiItem>& xs) {
  std::vector<Gate> out;
  for (const auto& x : xs) push(out, x.gates);
  return out;
}

// O2^dag{q1=b,q3=a} followed by O2{q1=a,q3=b}.
std::vector<Gate> merge_pair(int a, int b, Style style) {
  if (style == Style::standard)
    return {cx(a, b), tdg(a), t(b), h(a), h(b), tdg(a), t(b), cx(b, a)};
  return {t(a), tdg(b), h(a), h(b), t(a), tdg(b)};
}

// Boundary between two blocks with `between` gates on the targets.
std::vector<Gate> boundary(const LoweredBlock& x, const LoweredBlock& y, const std::vector<Gate>& between, Style style,
                           bool merge) {
  std::vector<Gate> out;
  if (!merge) {
    push(out, flatten(x.xi_out));
    push(out, between);
    push(out, flatten(y.xi_in));
    return out;
  }
  std::vector<bool> used_y(y.xi_in.size(), false);
  std::vector<Gate> merged, rest_x;
  for (const auto& xi : x.xi_out) {
    bool done = false;
    for (std::size_t k = 0; k < y.xi_in.size() && !done; ++k) {
      const auto& yi = y.xi_in[k];
      if (!used_y[k] && xi.q1 >= 0 && yi.q1 == xi.q3 && yi.q3 == xi.q1) {
        push(merged, merge_pair(xi.q3, xi.q1, style));
        used_y[k] = done = true;
      }
    }
    if (!done) push(rest_x, xi.gates);
  }
  push(out, rest_x);
  push(out, between);
  push(out, merged);
  for (std::size_t k = 0; k < y.xi_in.size(); ++k)
    if (!used_y[k]) push(out, y.xi_in[k].gates);
  return out;
}

std::vector<Gate> core_gates(const LoweredBlock& b) {
  std::vector<Gate> out;
  for (const auto& s : b.core) push(out, s.gates);
  return out;
}

// Zero-controlled Rx(pi/2) conjugation merged into the first and last step on each merge pair.
void edge_cancel(LoweredBlock& first, LoweredBlock& last, const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [c1j, c2j] : pairs) {
    // first block: step with control C1[j] and target C2[j]
    for (auto& seg : first.core) {
      if (!seg.first || seg.q1 != c1j || seg.q3 != c2j) continue;
      const int q1 = c1j, q2 = c2j, q3 = seg.other;
      seg.gates = {cx(q3, q2), cx(q2, q1), tdg(q1), t(q2), cx(q2, q1), h(q2)};
      for (auto& xi : first.xi_in)
        if (xi.q1 == c1j && xi.q3 == c2j) xi.gates = {h(q2), sdg(q2)};
    }
    // last block: step with control C2[j] and target C1[j]
    for (auto& seg : last.core) {
      if (seg.first || seg.q1 != c2j || seg.q3 != c1j) continue;
      const int q1 = c1j, q2 = c2j, q4 = seg.other;
      seg.gates = {h(q1), cx(q1, q2), tdg(q1), t(q2), cx(q4, q1), cx(q4, q2)};
      for (auto& xi : last.xi_out)
        if (xi.q1 == c2j && xi.q3 == c1j) xi.gates = {t(q1), tdg(q2), h(q1), h(q2), t(q1), t(q2), cx(q2, q1), h(q2)};
    }
  }
}

Circuit render_lowered(const MacroPlan& p, Style style, bool reduce, const std::vector<std::pair<int, int>>& pairs) {
  std::array<LoweredBlock, 4> b{chain_lowered(p.ch1, false, style), chain_lowered(p.ch2, false, style),
                                chain_lowered(p.ch1, true, style), chain_lowered(p.ch2, true, style)};
  if (reduce && style == Style::tdepth) edge_cancel(b[0], b[3], pairs);
  const auto tin = tree_in(p.targets), tout = tree_out(p.targets);
  Circuit c(p.num_qubits);
  c.append(p.prefix);
  c.append(p.slots[0]);
  c.append(tin);
  c.append(flatten(b[0].xi_in));
  for (int k = 0; k < 4; ++k) {
    c.append(core_gates(b[k]));
    if (k == 3) break;
    std::vector<Gate> between = tout;
    push(between, p.slots[k + 1]);
    push(between, tin);
    c.append(boundary(b[k], b[k + 1], between, style, reduce));
  }
  c.append(flatten(b[3].xi_out));
  c.append(tout);
  c.append(p.slots[4]);
  c.append(p.suffix);
  return c;
}

std::vector<Gate> rot_steps(int q, const std::vector<RotStep>& st) {
  std::vector<Gate> out;
  for (const auto& s : st) out.push_back(s.axis == 'x' ? rx(q, s.angle) : rz(q, s.angle));
  return out;
}

void add_su2_target(MacroPlan& p, int q, const AxisAngle& aa) {
  AGates a = a_gates(aa);
  push(p.slots[0], rot_steps(q, a.a4));
  push(p.slots[1], rot_steps(q, a.a2));
  push(p.slots[2], rot_steps(q, a.a3));
  push(p.slots[3], rot_steps(q, a.a2));
  push(p.slots[4], rot_steps(q, a.a1));
}

// Controlled R_v(angle) with one control: two CX between single-qubit rotations.
Circuit controlled_su2(int c, int tq, const AxisAngle& aa, int num_qubits) {
  auto [v1, v2] = pi_pair(aa);
  // M x M^dag = Pi_v with M rotating x to v.
  auto frame = [](const Vec3<double>& v) -> Mat2<double> {
    Vec3<double> xh = Vec3<double>::UnitX();
    Vec3<double> ax = xh.cross(v);
    double s = ax.norm(), cth = xh.dot(v);
    if (s < 1e-12) return cth > 0 ? Mat2<double>(Mat2<double>::Identity()) : rz_matrix(M_PI);
    return rot_matrix<double>(ax / s, std::atan2(s, cth));
  };
  Mat2<double> m1 = frame(v1), m2 = frame(v2);
  Circuit out(num_qubits);
  out.append(exact_su2(tq, m1.adjoint()));
  out.add(cx(c, tq));
  out.append(exact_su2(tq, m2.adjoint() * m1));
  out.add(cx(c, tq));
  out.append(exact_su2(tq, m2));
  return out;
}

MacroPlan plan_from_partition(const ControlPartition& part, int num_qubits, const std::vector<int>& targets) {
  MacroPlan p;
  p.num_qubits = num_qubits;
  p.targets = targets;
  p.ch1.controls = part.chain1;
  p.ch1.d = part.d1;
  for (int q : part.chain2) p.ch2.controls.push_back({q});
  p.ch2.d = part.d2;
  return p;
}

void require_macro_size(int n, int n_chi) {
  if (n < 2) throw std::invalid_argument("macro needs at least two controls");
  if (n_chi < 0 || (n_chi > 0 && n_chi > (n - 6) / 2))
    throw std::invalid_argument("borrowed ancilla count outside 0..floor((n-6)/2)");
}

// Controls reordered so that `q` sits at C2[n1] and cancels the first chain's leading H.
std::vector<int> place_at_c2_n1(std::vector<int> ctrl, int q, int n_chi) {
  const int n = static_cast<int>(ctrl.size()) + 1;
  const int n1 = (n - 2 * n_chi) / 2;
  if (n1 < 3) {
    ctrl.push_back(q);
    return ctrl;
  }
  const int pos = 2 * n_chi + n1 + n1 - 1;
  ctrl.insert(ctrl.begin() + pos, q);
  return ctrl;
}

enum class Build { midlevel, lowered };

Circuit build_su2(const MCGateSpec& spec, const SynthOptions& opt, Build mode) {
  const Roles r = default_roles(spec);
  const int n_chi = spec.ancilla == AncillaKind::dirty ? spec.ancilla_count : 0;
  if (spec.n == 1) {
    Circuit c(r.num_qubits);
    for (int j = 0; j < spec.m; ++j) c.append(controlled_su2(r.controls[0], r.targets[j], spec.su2[j], r.num_qubits));
    return c;
  }
  require_macro_size(spec.n, n_chi);
  auto part = partition_controls(r.controls, r.targets[0], r.ancillae);
  MacroPlan p = plan_from_partition(part, r.num_qubits, r.targets);
  for (int j = 0; j < spec.m; ++j) add_su2_target(p, r.targets[j], spec.su2[j]);
  if (mode == Build::midlevel) return render_midlevel(p);
  return render_lowered(p, opt.variant, opt.apply_depth_reductions, part.merge_pairs);
}

Circuit toffoli(int a, int b, int tq, int num_qubits) {
  Circuit c(num_qubits);
  c.append({h(tq), cx(b, tq), tdg(tq), cx(a, tq), t(tq), cx(b, tq), tdg(tq), cx(a, tq), t(b), t(tq), h(tq),
            cx(a, b), t(a), tdg(b), cx(a, b)});
  return c;
}

Circuit build_x(const MCGateSpec& spec, const SynthOptions& opt, Build mode) {
  const Roles r = default_roles(spec);
  const int n = spec.n, m = spec.m;
  if (n == 1 || (n == 2 && m == 1)) {
    Circuit c(r.num_qubits);
    for (int tq : r.targets) {
      if (n == 1) c.add(cx(r.controls[0], tq));
      else c.append(toffoli(r.controls[0], r.controls[1], tq, r.num_qubits));
    }
    return c;
  }
  // Multi-target: fan out from the first target and borrow the second as ancilla.
  // Copy tree from the first target: X there becomes X on every target.
  std::vector<Gate> fan_in, fan_out;
  for (const auto& layer : fanout_layers(r.targets))
    for (const auto& g : layer) fan_out.push_back(cx(g.q[1], g.q[0]));
  fan_in = rdag(fan_out);
  int tq = r.targets[0];
  int anc;
  std::vector<int> chi;
  if (m >= 2) {
    anc = r.targets[1];
    chi = r.ancillae;
  } else {
    if (spec.ancilla != AncillaKind::dirty || spec.ancilla_count < 1)
      throw std::invalid_argument("mcx: three or more controls need a dirty ancilla");
    anc = r.ancillae[0];
    chi.assign(r.ancillae.begin() + 1, r.ancillae.end());
  }
  const int n_chi = static_cast<int>(chi.size());
  require_macro_size(n + 1, n_chi);
  auto ctrl = place_at_c2_n1(r.controls, tq, n_chi);
  auto part = partition_controls(ctrl, anc, chi);
  MacroPlan p = plan_from_partition(part, r.num_qubits, {anc});
  p.slots[1] = {h(anc)};
  p.slots[2] = {h(anc)};
  p.slots[3] = {h(anc)};
  p.slots[4] = {h(anc)};
  p.prefix = fan_in;
  p.prefix.push_back(h(tq));
  p.suffix = {h(tq)};
  push(p.suffix, fan_out);
  if (mode == Build::midlevel) return render_midlevel(p);
  return cancel_inverse_pairs(render_lowered(p, opt.variant, opt.apply_depth_reductions, part.merge_pairs));
}

Circuit build_u2(const MCGateSpec& spec, const SynthOptions& opt, Build mode) {
  validate(spec);
  const Roles r = default_roles(spec);
  const int a = r.ancillae.at(0);
  double psi = 0;
  for (const auto& u : spec.u2) psi += u.phase;
  if (spec.n == 1) {
    // Controlled SU(2) per target, then P(psi) on the control as Rz(psi) up to global phase.
    Circuit c(r.num_qubits);
    for (int j = 0; j < spec.m; ++j) c.append(controlled_su2(r.controls[0], r.targets[j], spec.u2[j].su2, r.num_qubits));
    c.add(rz(r.controls[0], psi));
    return c;
  }
  require_macro_size(spec.n, 0);
  std::vector<int> tg = r.targets;
  tg.push_back(a);
  auto part = partition_controls(r.controls, tg[0], {});
  MacroPlan p = plan_from_partition(part, r.num_qubits, tg);
  for (int j = 0; j < spec.m; ++j) add_su2_target(p, r.targets[j], spec.u2[j].su2);
  // R_z(-2 psi) on the clean ancilla, as H R_x(-2 psi) H; the last Rx only adds a global phase.
  p.slots[0].push_back(h(a));
  p.slots[1].push_back(rx(a, psi / 2));
  p.slots[2].push_back(rx(a, -psi / 2));
  p.slots[3].push_back(rx(a, psi / 2));
  p.slots[4].push_back(h(a));
  if (mode == Build::midlevel) return render_midlevel(p);
  return render_lowered(p, opt.variant, opt.apply_depth_reductions, part.merge_pairs);
}

Circuit dispatch(const MCGateSpec& spec, const SynthOptions& opt, Build mode) {
  validate(spec);
  switch (spec.kind) {
    case GateKind::SU2: return build_su2(spec, opt, mode);
    case GateKind::X: return build_x(spec, opt, mode);
    case GateKind::U2: return build_u2(spec, opt, mode);
  }
  throw std::logic_error("dispatch: bad kind");
}

}  // namespace

ControlPartition partition_controls(const std::vector<int>& controls, int target, const std::vector<int>& chi) {
  ControlPartition p;
  const int n = static_cast<int>(controls.size());
  const int nx = static_cast<int>(chi.size());
  p.n_chi = nx;
  if (n < 2) throw std::invalid_argument("partition: need at least two controls");
  if (nx > 0 && 2 * nx > n - 6) throw std::invalid_argument("partition: too many borrowed ancillae");
  const int n1p = (n - 2 * nx) / 2;
  const int n2 = n - 2 * nx - n1p;
  p.c1_chi.assign(controls.begin(), controls.begin() + 2 * nx);
  p.c1_sq.assign(controls.begin() + 2 * nx, controls.begin() + 2 * nx + n1p);
  p.c2.assign(controls.begin() + 2 * nx + n1p, controls.end());
  p.c1 = p.c1_chi;
  p.c1.insert(p.c1.end(), p.c1_sq.begin(), p.c1_sq.end());
  // C1' from the single controls of chain 1; C2' starts with the borrowed qubits.
  const auto& s = p.c1_sq;
  if (n2 == n1p) {
    for (int j = 3; j <= n2; ++j) p.c1_prime.push_back(s[j - 1]);
  } else {
    for (int j = 3; j <= n1p; ++j) p.c1_prime.push_back(s[j - 1]);
    if (n1p >= 2) p.c1_prime.push_back(s[1]);
  }
  p.c2_prime = chi;
  for (int j = 3; j <= n1p; ++j) p.c2_prime.push_back(p.c2[j - 1]);
  // chain 1 order: C1^2[1:2], pairs, C1^2[3:n1']
  for (int j = 0; j < std::min(2, n1p); ++j) p.chain1.push_back({s[j]});
  for (int r = 0; r < nx; ++r) p.chain1.push_back({p.c1_chi[2 * r], p.c1_chi[2 * r + 1]});
  for (int j = 2; j < n1p; ++j) p.chain1.push_back({s[j]});
  p.chain2 = p.c2;
  p.d1 = p.c2_prime;
  p.d1.push_back(target);
  p.d2 = p.c1_prime;
  p.d2.push_back(target);
  for (int j = 3; j <= n1p; ++j) p.merge_pairs.push_back({s[j - 1], p.c2[j - 1]});
  return p;
}

Circuit synth_vchain_z(const std::vector<int>& controls, const std::vector<int>& borrows, int num_qubits,
                       const SynthOptions&) {
  if (controls.size() < 3) throw std::invalid_argument("vchain: need at least three controls");
  if (borrows.size() + 1 != controls.size()) throw std::invalid_argument("vchain: |D| must be |C|-1");
  ChainPlan ch;
  for (int q : controls) ch.controls.push_back({q});
  ch.d = borrows;
  Circuit c(num_qubits);
  c.append(chain_midlevel(ch, false));
  return c;
}

Circuit synth_mcsu2_ata(const MCGateSpec& spec, const SynthOptions& opt) {
  if (spec.kind != GateKind::SU2) throw std::invalid_argument("synth_mcsu2_ata: spec is not SU2");
  validate(spec);
  return build_su2(spec, opt, Build::lowered);
}

Circuit synth_mcx_ata(const MCGateSpec& spec, const SynthOptions& opt) {
  if (spec.kind != GateKind::X) throw std::invalid_argument("synth_mcx_ata: spec is not X");
  validate(spec);
  return build_x(spec, opt, Build::lowered);
}

Circuit synth_mcu2_ata(const MCGateSpec& spec, const SynthOptions& opt) {
  if (spec.kind != GateKind::U2) throw std::invalid_argument("synth_mcu2_ata: spec is not U2");
  return build_u2(spec, opt, Build::lowered);
}

Circuit synth_ata(const MCGateSpec& spec, const SynthOptions& opt) { return dispatch(spec, opt, Build::lowered); }

Circuit synth_ata_midlevel(const MCGateSpec& spec, const SynthOptions& opt) {
  return dispatch(spec, opt, Build::midlevel);
}

XDeltaTemplate build_xdelta(XDeltaKind kind, Style style, bool inverse) {
  XDeltaTemplate x;
  x.gate = kind == XDeltaKind::two_control ? xdelta(0, 1, 2, inverse) : xdelta3(0, 1, 2, 3, inverse);
  x.matrix = gate_matrix(x.gate);
  x.lowering = lower_gate(x.gate, style);
  return x;
}

Circuit cancel_inverse_pairs(const Circuit& c) {
  std::vector<Gate> out;
  std::vector<std::vector<std::size_t>> last(c.num_qubits);  // stack of indices into out per qubit
  std::vector<bool> dead;
  for (const auto& g : c.gates) {
    if (g.arity() == 1 && !last[g.q[0]].empty()) {
      std::size_t k = last[g.q[0]].back();
      const Gate& p = out[k];
      if (!dead[k] && p.arity() == 1 && dagger(p) == g && g.op != Op::Rx && g.op != Op::Rz) {
        dead[k] = true;
        last[g.q[0]].pop_back();
        continue;
      }
    }
    for (int i = 0; i < g.arity(); ++i) last[g.q[i]].push_back(out.size());
    out.push_back(g);
    dead.push_back(false);
  }
  Circuit r(c.num_qubits);
  for (std::size_t k = 0; k < out.size(); ++k)
    if (!dead[k]) r.gates.push_back(out[k]);
  return r;
}

}  // namespace mcg
