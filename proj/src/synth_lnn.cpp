#include "mcg/synth_lnn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mcg/su2.hpp"
#include "mcg/synth_ata.hpp"
#include "synth_common.hpp"

namespace mcg {

Roles LnnPlacement::roles() const { return Roles{k, controls, targets, ancillae}; }

int LnnPlacement::lo() const {
  int v = k;
  for (const auto* s : {&controls, &targets, &ancillae})
    for (int q : *s) v = std::min(v, q);
  return v;
}

int LnnPlacement::hi() const {
  int v = -1;
  for (const auto* s : {&controls, &targets, &ancillae})
    for (int q : *s) v = std::max(v, q);
  return v;
}

void validate(const LnnPlacement& p, const MCGateSpec& spec) {
  if (static_cast<int>(p.controls.size()) != spec.n) throw std::invalid_argument("placement: control count");
  if (static_cast<int>(p.targets.size()) != spec.m) throw std::invalid_argument("placement: target count");
  std::vector<bool> used(std::max(p.k, 0), false);
  for (const auto* s : {&p.controls, &p.targets, &p.ancillae})
    for (int q : *s) {
      if (q < 0 || q >= p.k) throw std::invalid_argument("placement: position outside the line");
      if (used[q]) throw std::invalid_argument("placement: positions must be distinct");
      used[q] = true;
    }
}

namespace {

std::vector<Gate> rdag(std::vector<Gate> gs) {
  std::reverse(gs.begin(), gs.end());
  for (auto& g : gs) g = dagger(g);
  return gs;
}

void push(std::vector<Gate>& out, const std::vector<Gate>& gs) { out.insert(out.end(), gs.begin(), gs.end()); }

// XDelta(c1 = m, c2 = b -> t) with t, m, b consecutive on the line. The left part only touches
// t and m and commutes out to the chain edges.
struct SplitGate {
  std::vector<Gate> left, right;
};

SplitGate xdelta_lnn(int tq, int m, int b) {
  return {{h(tq), cx(tq, m), tdg(tq), t(m), cx(m, tq)}, {cx(b, m), cx(m, tq), t(tq), tdg(m), cx(tq, m), h(tq)}};
}

// iZ on c controlled by a, b, followed by SWAP(a, b); a, b, c consecutive.
std::vector<Gate> swap_head(int a, int b, int c) {
  return {cx(c, b), cx(b, a), t(b), tdg(c), cx(c, b), cx(a, b), tdg(a), t(b), cx(b, a), cx(c, b)};
}

void check_mask(const std::vector<bool>& mask) {
  for (std::size_t i = 1; i + 1 < mask.size(); ++i)
    if (mask[i] && mask[i + 1]) throw std::invalid_argument("zbar: neighboring controls past the first two");
}

// Gate sequence for the chain on line `w`.
std::vector<Gate> zbar_gates(const std::vector<bool>& mask, const std::vector<int>& w, bool inverse, int* l0p) {
  const int K = static_cast<int>(w.size());
  if (K < 2 || static_cast<int>(mask.size()) != K) throw std::invalid_argument("zbar: window and mask disagree");
  if (!mask[0]) throw std::invalid_argument("zbar: top qubit must be a control");
  if (mask[K - 1]) throw std::invalid_argument("zbar: bottom qubit must not be a control");
  check_mask(mask);
  for (int i = 0; i + 1 < K; ++i)
    if (std::abs(w[i] - w[i + 1]) != 1) throw std::invalid_argument("zbar: window is not contiguous");
  const int l0 = mask[1] ? 2 : 1;  // 0-based first non-control
  std::vector<SplitGate> xbar;
  for (int l = l0 + 1; l < K; ++l) {
    if (mask[l]) continue;
    if (!mask[l - 1]) xbar.push_back({{}, {cx(w[l], w[l - 1])}});
    else xbar.push_back(xdelta_lnn(w[l - 2], w[l - 1], w[l]));
  }
  std::vector<Gate> head;
  if (l0 == 1) head = {h(w[0]), cx(w[1], w[0]), h(w[0])};
  else head = inverse ? rdag(swap_head(w[0], w[1], w[2])) : swap_head(w[0], w[1], w[2]);
  std::vector<Gate> out;
  for (const auto& x : xbar) push(out, x.left);
  for (auto it = xbar.rbegin(); it != xbar.rend(); ++it) push(out, it->right);
  push(out, head);
  for (const auto& x : xbar) push(out, rdag(x.right));
  for (const auto& x : xbar) push(out, rdag(x.left));
  if (l0p) *l0p = l0 - 1;
  return out;
}

int first_set(const std::vector<bool>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) return static_cast<int>(i);
  return -1;
}

int count_set(const std::vector<bool>& m) { return static_cast<int>(std::count(m.begin(), m.end(), true)); }

// Partial-swap walker: occ[p] holds the original position now sitting at p.
struct Walker {
  RouteStyle style;
  std::vector<int> occ;
  std::vector<Gate> prefix;

  void step(int x, int y) {
    if (style == RouteStyle::target_swap) {
      prefix.push_back(cx(x, y));
      prefix.push_back(cx(y, x));
    } else {
      prefix.push_back(cx(x, y));
      prefix.push_back(cx(y, x));
      prefix.push_back(cx(x, y));
    }
    std::swap(occ[x], occ[y]);
  }
  void walk(int from, int to) {
    while (from != to) {
      int nx = from < to ? from + 1 : from - 1;
      step(from, nx);
      from = nx;
    }
  }
  int where(int orig) const {
    for (std::size_t p = 0; p < occ.size(); ++p)
      if (occ[p] == orig) return static_cast<int>(p);
    throw std::logic_error("walker: lost qubit");
  }
};

// Cost of bringing `movers` to one end of [lo, hi], nearest first.
int block_cost(std::vector<int> movers, int lo, int hi, bool top) {
  int cost = 0;
  if (top) {
    std::sort(movers.begin(), movers.end());
    for (std::size_t j = 0; j < movers.size(); ++j) cost += movers[j] - (lo + static_cast<int>(j));
  } else {
    std::sort(movers.rbegin(), movers.rend());
    for (std::size_t j = 0; j < movers.size(); ++j) cost += (hi - static_cast<int>(j)) - movers[j];
  }
  return cost;
}

struct Routed {
  Walker w;
  bool top = false;
};

// Brings `movers` to the cheaper end of [lo, hi]; ties go to the top.
Routed route_block(int k, int lo, int hi, const std::vector<int>& movers, RouteStyle style) {
  Routed r{Walker{style, {}, {}}, false};
  r.w.occ.resize(k);
  for (int p = 0; p < k; ++p) r.w.occ[p] = p;
  r.top = block_cost(movers, lo, hi, true) <= block_cost(movers, lo, hi, false);
  std::vector<int> order = movers;
  if (r.top) std::sort(order.begin(), order.end());
  else std::sort(order.rbegin(), order.rend());
  for (std::size_t j = 0; j < order.size(); ++j) {
    int dest = r.top ? lo + static_cast<int>(j) : hi - static_cast<int>(j);
    r.w.walk(r.w.where(order[j]), dest);
  }
  return r;
}

// Physical window oriented so the routed block sits at the end.
std::vector<int> oriented(int lo, int hi, bool top) {
  std::vector<int> line;
  for (int p = lo; p <= hi; ++p) line.push_back(p);
  if (top) std::reverse(line.begin(), line.end());
  return line;
}

LnnPartition rebalance(LnnPartition p) {
  const int n = count_set(p.c1_mask);
  if (count_set(p.c2_mask) > 0 || n < 6) return p;
  int move = n / 2;
  for (int i = static_cast<int>(p.c1_mask.size()) - 1; i >= 0 && move > 0; --i)
    if (p.c1_mask[i]) {
      p.c1_mask[i] = false;
      p.c2_mask[i] = true;
      --move;
    }
  p.l0_2 = 2;
  p.l0_prime_2 = 0;
  return p;
}

struct Blocks {
  std::array<std::vector<Gate>, 4> b;
  bool c2_empty = false;
};

// The four chains on `line` whose last `ntg` qubits are the targets; ctrl is over line.
Blocks make_blocks(const std::vector<int>& line, const std::vector<bool>& ctrl, int ntg) {
  const int L = static_cast<int>(line.size());
  const int tau0 = L - ntg;
  const int f = first_set(ctrl);
  if (f < 0 || f >= tau0) throw std::invalid_argument("lnn: no control above the targets");
  std::vector<bool> mask(ctrl.begin() + f, ctrl.begin() + tau0);
  mask.push_back(false);
  LnnPartition part = rebalance(partition_controls_lnn(mask));
  Blocks out;
  auto chain = [&](const std::vector<bool>& m, bool inv) {
    int s = first_set(m);
    std::vector<int> w(line.begin() + f + s, line.begin() + tau0 + 1);
    std::vector<bool> mm(m.begin() + s, m.end());
    return zbar_gates(mm, w, inv, nullptr);
  };
  out.b[0] = chain(part.c1_mask, false);
  out.b[2] = chain(part.c1_mask, true);
  out.c2_empty = count_set(part.c2_mask) == 0;
  if (out.c2_empty) {
    out.b[1] = out.b[3] = {z(line[tau0])};
  } else {
    out.b[1] = chain(part.c2_mask, false);
    out.b[3] = chain(part.c2_mask, true);
  }
  return out;
}

// Ladder folding the targets' parity onto the top target, and its inverse.
std::pair<std::vector<Gate>, std::vector<Gate>> ladder(const std::vector<int>& line, int ntg) {
  const int L = static_cast<int>(line.size());
  std::vector<Gate> in;
  for (int j = L - 1; j > L - ntg; --j) in.push_back(cx(line[j], line[j - 1]));
  return {in, rdag(in)};
}

std::vector<Gate> assemble(const Blocks& bl, const std::vector<int>& line, int ntg,
                           const std::array<std::vector<Gate>, 3>& mid) {
  auto [in, out] = ladder(line, ntg);
  std::vector<Gate> g;
  for (int k = 0; k < 4; ++k) {
    push(g, in);
    push(g, bl.b[k]);
    push(g, out);
    if (k < 3) push(g, mid[k]);
  }
  return g;
}

std::vector<Gate> rot_steps(int q, const std::vector<RotStep>& st) {
  std::vector<Gate> out;
  for (const auto& s : st) out.push_back(s.axis == 'x' ? rx(q, s.angle) : rz(q, s.angle));
  return out;
}

void add_su2(std::array<std::vector<Gate>, 5>& slots, int q_out, int q_in, const AxisAngle& aa) {
  AGates a = a_gates(aa);
  push(slots[0], rot_steps(q_out, a.a4));
  push(slots[1], rot_steps(q_in, a.a2));
  push(slots[2], rot_steps(q_in, a.a3));
  push(slots[3], rot_steps(q_in, a.a2));
  push(slots[4], rot_steps(q_out, a.a1));
}

// W = M Rx(l) M^dag with M = Rx(beta) Rz(phi) taking x to the axis; Z-conjugation of Rx(-l/2) does the rest.
struct Collapsed {
  std::vector<Gate> pre, mid, post;
};

Collapsed collapsed_su2(int q_out, int q_in, const AxisAngle& aa) {
  Vec3<double> v = aa.axis.normalized();
  const double phi = std::acos(std::clamp(v.x(), -1.0, 1.0));
  const double beta = std::atan2(v.z(), v.y());
  const double eps = 1e-12;
  Collapsed c;
  auto put = [&](std::vector<Gate>& out, const Gate& g) {
    if (std::abs(g.angle) > eps) out.push_back(g);
  };
  put(c.pre, rx(q_out, -beta));
  put(c.pre, rz(q_out, -phi));
  put(c.mid, rx(q_in, -aa.angle / 2));
  put(c.post, rx(q_out, aa.angle / 2));
  put(c.post, rz(q_out, phi));
  put(c.post, rx(q_out, beta));
  return c;
}

Circuit finish(int k, const std::vector<Gate>& gs) {
  Circuit c(k);
  c.append(gs);
  return cancel_inverse_pairs(lower(c));
}

// Controls of `p` after routing, as a mask over `line`.
std::vector<bool> line_mask(const std::vector<int>& line, const Walker& w, const std::vector<int>& ctrl) {
  std::vector<bool> m(line.size(), false);
  for (std::size_t i = 0; i < line.size(); ++i)
    if (std::find(ctrl.begin(), ctrl.end(), w.occ[line[i]]) != ctrl.end()) m[i] = true;
  return m;
}

// CX from c to a distant tq: tq walks next to c and back.
std::vector<Gate> long_cx(int k, int c, int tq) {
  Walker w{RouteStyle::target_swap, {}, {}};
  w.occ.resize(k);
  for (int p = 0; p < k; ++p) w.occ[p] = p;
  w.walk(tq, c < tq ? c + 1 : c - 1);
  std::vector<Gate> g = w.prefix;
  g.push_back(cx(c, w.where(tq)));
  push(g, rdag(w.prefix));
  return g;
}

void require_kind(const MCGateSpec& spec, GateKind k, const char* who) {
  if (spec.kind != k) throw std::invalid_argument(std::string(who) + ": wrong gate kind");
}

// Shared SU(2)/U(2) macro: `movers` are routed to an edge and form the target block.
Circuit su2_like(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt, bool with_ancilla) {
  const int lo = p.lo(), hi = p.hi();
  std::vector<int> movers = p.targets;
  if (with_ancilla) movers.push_back(p.ancillae.at(0));
  Routed r = route_block(p.k, lo, hi, movers, opt.route);
  const Walker& w = r.w;
  std::vector<int> line = oriented(lo, hi, r.top);
  const int ntg = static_cast<int>(movers.size());
  // line order of the routed block must match the movers for the ladder; only the top one matters.
  Blocks bl = make_blocks(line, line_mask(line, w, p.controls), ntg);
  std::array<std::vector<Gate>, 5> slots;
  const bool collapse = opt.collapse_empty_c2 && bl.c2_empty && spec.kind == GateKind::SU2 && spec.m == 1;
  std::vector<Gate> g;
  std::vector<Gate> pre = w.prefix, post = rdag(w.prefix);
  if (collapse) {
    const int tq = p.targets[0];
    Collapsed c = collapsed_su2(tq, w.where(tq), spec.su2[0]);
    push(g, c.pre);
    push(g, pre);
    push(g, bl.b[0]);
    push(g, c.mid);
    push(g, bl.b[2]);
    push(g, post);
    push(g, c.post);
    return finish(p.k, g);
  }
  for (int j = 0; j < spec.m; ++j) {
    const int tq = p.targets[j];
    const AxisAngle& aa = spec.kind == GateKind::SU2 ? spec.su2[j] : spec.u2[j].su2;
    add_su2(slots, tq, w.where(tq), aa);
  }
  if (with_ancilla) {
    const int a0 = p.ancillae[0], a = w.where(a0);
    double psi = 0;
    for (const auto& u : spec.u2) psi += u.phase;
    slots[0].push_back(h(a0));
    slots[1].push_back(rx(a, psi / 2));
    slots[2].push_back(rx(a, -psi / 2));
    slots[3].push_back(rx(a, psi / 2));
    slots[4].push_back(h(a0));
  }
  push(g, slots[0]);
  push(g, pre);
  push(g, assemble(bl, line, ntg, {slots[1], slots[2], slots[3]}));
  push(g, post);
  push(g, slots[4]);
  return finish(p.k, g);
}

Circuit mcx_impl(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  const int n = spec.n, m = spec.m;
  if (n == 1) {
    std::vector<Gate> g;
    for (int tq : p.targets) push(g, long_cx(p.k, p.controls[0], tq));
    return finish(p.k, g);
  }
  const int lo = p.lo(), hi = p.hi();
  int tq = p.targets[0];
  std::vector<int> movers = p.targets;
  if (m == 1) {
    if (p.ancillae.empty()) throw std::invalid_argument("synth_mcx_lnn: needs a dirty ancilla");
    // Any qubit of the window outside C and t can be borrowed; take the one nearest an edge.
    std::vector<bool> busy(p.k, false);
    for (int q : p.controls) busy[q] = true;
    busy[tq] = true;
    int anc = p.ancillae[0];
    for (int a = lo; a <= hi; ++a)
      if (!busy[a] && std::min(a - lo, hi - a) < std::min(anc - lo, hi - anc)) anc = a;
    movers = {anc};
  }
  Routed r = route_block(p.k, lo, hi, movers, opt.route);
  const Walker& w = r.w;
  std::vector<int> line = oriented(lo, hi, r.top);
  const int L = static_cast<int>(line.size());
  // Partial swaps need the routed part to be diagonal on every qubit the movers pass, so with one
  // target its H pair stays outside; with several, the bottom target is borrowed as the ancilla.
  std::vector<Gate> inner_in, inner_out, outer_in, outer_out;
  if (m >= 2) {
    tq = w.occ[line[L - 2]];
    inner_out.push_back(cx(line[L - 2], line[L - 1]));
    for (int j = L - 2; j > L - m; --j) inner_out.push_back(cx(line[j], line[j - 1]));
    inner_in = rdag(inner_out);
    inner_in.push_back(h(line[L - 2]));
    inner_out.insert(inner_out.begin(), h(line[L - 2]));
  } else {
    outer_in = {h(tq)};
    outer_out = {h(tq)};
  }
  std::vector<int> ctrl = p.controls;
  ctrl.push_back(tq);
  Blocks bl = make_blocks(line, line_mask(line, w, ctrl), 1);
  const int a = line[L - 1];
  std::vector<Gate> g = outer_in;
  push(g, w.prefix);
  push(g, inner_in);
  push(g, assemble(bl, line, 1, {std::vector<Gate>{h(a)}, std::vector<Gate>{h(a)}, std::vector<Gate>{h(a)}}));
  g.push_back(h(a));
  push(g, inner_out);
  push(g, rdag(w.prefix));
  push(g, outer_out);
  return finish(p.k, g);
}

}  // namespace

LnnPartition partition_controls_lnn(const std::vector<bool>& control_mask, bool multi_target_mode,
                                    const std::vector<bool>& target_mask) {
  const int K = static_cast<int>(control_mask.size());
  if (count_set(control_mask) == 0) throw std::invalid_argument("partition_controls_lnn: empty control set");
  LnnPartition p;
  p.c1_mask.assign(K, false);
  p.c2_mask.assign(K, false);
  if (!multi_target_mode) {
    if (!control_mask[0]) throw std::invalid_argument("partition_controls_lnn: top qubit must be a control");
    p.c1_mask[0] = true;
    int c2_first = -1;
    for (int l = 1; l < K; ++l) {
      if (!control_mask[l]) continue;
      if (l == 1 || (!p.c1_mask[l - 1] && l - 1 != c2_first)) {
        p.c1_mask[l] = true;
      } else {
        p.c2_mask[l] = true;
        if (c2_first < 0) c2_first = l;
      }
    }
  } else {
    std::vector<bool> tm = target_mask;
    tm.resize(K, false);
    int prev = 0;
    for (int l = 0; l < K; ++l) {
      if (control_mask[l]) {
        if (!p.c1_mask[prev] || prev == l) p.c1_mask[l] = true;
        else p.c2_mask[l] = true;
      }
      if (!tm[l]) prev = l;
    }
  }
  auto l0 = [](const std::vector<bool>& m) {
    int f = first_set(m);
    if (f < 0) return 0;
    return (f + 1 < static_cast<int>(m.size()) && m[f + 1]) ? 3 : 2;
  };
  p.l0_1 = l0(p.c1_mask);
  p.l0_2 = l0(p.c2_mask);
  p.l0_prime_1 = p.l0_1 ? p.l0_1 - 2 : 0;
  p.l0_prime_2 = p.l0_2 ? p.l0_2 - 2 : 0;
  return p;
}

ZbarChain synth_zbar_chain(const std::vector<bool>& control_mask, const std::vector<int>& window, int num_qubits,
                           bool inverse) {
  ZbarChain z;
  z.circuit = Circuit(num_qubits);
  z.circuit.append(zbar_gates(control_mask, window, inverse, &z.l0_prime));
  if (z.l0_prime == 1) {
    z.swap_a = window[0];
    z.swap_b = window[1];
  }
  return z;
}

Route route_to_edge(const LnnPlacement& p, int mover, RouteStyle style) {
  const int lo = p.lo(), hi = p.hi();
  if (mover < lo || mover > hi) throw std::invalid_argument("route_to_edge: mover outside the window");
  Routed r = route_block(p.k, lo, hi, {mover}, style);
  Route out;
  out.to_top = r.top;
  out.prefix = Circuit(p.k);
  out.prefix.append(r.w.prefix);
  out.suffix = Circuit(p.k);
  out.suffix.append(rdag(r.w.prefix));
  out.moved.resize(p.k);
  for (int q = 0; q < p.k; ++q) out.moved[q] = r.w.where(q);
  out.placement = p;
  for (auto* s : {&out.placement.controls, &out.placement.targets, &out.placement.ancillae}) {
    for (int& q : *s) q = out.moved[q];
    std::sort(s->begin(), s->end());
  }
  return out;
}

Circuit synth_mcsu2_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  require_kind(spec, GateKind::SU2, "synth_mcsu2_lnn");
  validate(spec);
  validate(p, spec);
  return su2_like(spec, p, opt, false);
}

Circuit synth_mcx_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  require_kind(spec, GateKind::X, "synth_mcx_lnn");
  validate(spec);
  validate(p, spec);
  return mcx_impl(spec, p, opt);
}

Circuit synth_mcu2_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  require_kind(spec, GateKind::U2, "synth_mcu2_lnn");
  validate(spec);
  validate(p, spec);
  if (p.ancillae.size() != 1 || p.ancilla != AncillaKind::clean)
    throw std::invalid_argument("synth_mcu2_lnn: needs exactly one clean ancilla");
  return su2_like(spec, p, opt, true);
}

Circuit synth_mcmt_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  if (spec.m < 2) throw std::invalid_argument("synth_mcmt_lnn: needs at least two targets");
  return synth_lnn(spec, p, opt);
}

Circuit synth_lnn(const MCGateSpec& spec, const LnnPlacement& p, const LnnOptions& opt) {
  switch (spec.kind) {
    case GateKind::SU2: return synth_mcsu2_lnn(spec, p, opt);
    case GateKind::X: return synth_mcx_lnn(spec, p, opt);
    case GateKind::U2: return synth_mcu2_lnn(spec, p, opt);
  }
  throw std::logic_error("synth_lnn: bad kind");
}

}  // namespace mcg
