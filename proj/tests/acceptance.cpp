// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "mcg/sim.hpp"
#include "mcg/synth_ata.hpp"
#include "mcg/synth_lnn.hpp"
#include "oracle.hpp"

using namespace mcg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
struct Tally {
  bool pass = true;
  int failures = 0;
  std::ostringstream first;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    pass = false;
  }
  Outcome done(const std::string& summary) {
    if (pass) return {true, summary};
    return {false, std::to_string(failures) + " failure(s): " + first.str()};
  }
};

std::string str(long a) { return std::to_string(a); }

AxisAngle random_rotation(std::mt19937_64& rng) { return {oracle::random_unit(rng), oracle::random_angle(rng)}; }

std::vector<oracle::M2> target_ops(const MCGateSpec& spec) {
  std::vector<oracle::M2> ops;
  for (int j = 0; j < spec.m; ++j) {
    if (spec.kind == GateKind::X) ops.push_back(oracle::pauli_x());
    else if (spec.kind == GateKind::SU2) ops.push_back(oracle::rot(spec.su2[j].axis, spec.su2[j].angle));
    else ops.push_back(std::exp(oracle::I1 * spec.u2[j].phase) * oracle::rot(spec.u2[j].su2.axis, spec.u2[j].su2.angle));
  }
  return ops;
}

oracle::Dense reference(const MCGateSpec& spec, const Roles& r) {
  return oracle::mc_unitary(r.num_qubits, r.controls, r.targets, target_ops(spec));
}

std::vector<int> iota(int k, int from = 0) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = from + i;
  return v;
}

// ---------------------------------------------------------------------------

Outcome c1_ata_counts() {
  Tally t;
  std::mt19937_64 rng(101);
  long worst_asap = 0;
  auto start = std::chrono::steady_clock::now();
  for (int n = 6; n <= 40; ++n) {
    Circuit c = synth_ata(make_mcsu2(n, {random_rotation(rng)}));
    auto g = counts(c);
    const std::string at = "n=" + str(n);
    t.check(g.cnot == 12 * n - 32, at + " cnot " + str(g.cnot));
    t.check(g.t == 16 * n - 48, at + " t " + str(g.t));
    t.check(g.h == 8 * n - 32, at + " h " + str(g.h));
    t.check(g.rot == 8, at + " rot " + str(g.rot));
    const long cd = class_depth(c, GateClass::cnot), td = class_depth(c, GateClass::t),
               hd = class_depth(c, GateClass::h);
    t.check(cd <= 8 * n - 8, at + " cnot depth " + str(cd));
    t.check(td <= (n % 2 ? 8 * n - 3 : 8 * n - 6), at + " t depth " + str(td));
    t.check(hd <= 4 * n - 11, at + " h depth " + str(hd));
    worst_asap = std::max(worst_asap, g.depth(GateClass::cnot) - (8 * n - 8));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs < 5, "runtime " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=6..40 exact; %.2f s; literal ASAP CNOT layers exceed 8n-8 by at most %ld", secs,
                std::max(0L, worst_asap));
  return t.done(buf);
}

Outcome c2_ata_correctness() {
  Tally t;
  std::mt19937_64 rng(102);
  double worst = 0;
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto spec = make_mcsu2(n, {random_rotation(rng)});
      auto rep = equivalent(simulate(synth_ata(spec)), reference(spec, default_roles(spec)), EquivMode::exact, {}, 1e-9);
      worst = std::max(worst, rep.max_error);
      t.check(rep.pass, "n=" + str(n) + " trial " + str(trial));
    }
  return t.done("140 unitaries, max error " + std::to_string(worst));
}

Outcome c3_mcx_dirty() {
  Tally t;
  double worst = 0;
  for (int n = 3; n <= 8; ++n) {
    auto spec = make_mcx(n, 1, 1);
    Roles r = default_roles(spec);
    Circuit c = synth_ata(spec);
    auto rep = equivalent(simulate(c), reference(spec, r), EquivMode::tensor_identity, r.ancillae, 1e-9);
    worst = std::max(worst, rep.max_error);
    t.check(rep.pass, "n=" + str(n) + " " + rep.note);
    if (n >= 5) {
      auto g = counts(c);
      t.check(g.cnot == 12 * n - 20 && g.t == 16 * n - 32 && g.h == 8 * n - 20,
              "n=" + str(n) + " counts " + str(g.cnot) + "/" + str(g.t) + "/" + str(g.h));
    }
  }
  return t.done("n=3..8, max error " + std::to_string(worst));
}

Outcome c4_mcu2_clean() {
  Tally t;
  std::mt19937_64 rng(104);
  for (int n = 2; n <= 7; ++n) {
    auto spec = make_mcu2(n, {U2Spec{random_rotation(rng), oracle::random_angle(rng)}});
    Roles r = default_roles(spec);
    Circuit c = synth_ata(spec);
    auto rep = equivalent(simulate(c), reference(spec, r), EquivMode::subspace, r.ancillae, 1e-9);
    t.check(rep.pass, "n=" + str(n) + " " + rep.note);
    if (n >= 6) {
      auto g = counts(c);
      t.check(g.cnot == 12 * n - 24 && g.t == 16 * n - 48 && g.h == 8 * n - 30 && g.rot == 11,
              "n=" + str(n) + " counts " + str(g.cnot) + "/" + str(g.t) + "/" + str(g.h) + "/" + str(g.rot));
    }
  }
  return t.done("n=2..7 subspace, counts n=6,7");
}

Outcome c5_multi_target() {
  Tally t;
  std::mt19937_64 rng(105);
  for (int n = 6; n <= 20; ++n)
    for (int m = 2; m <= 6; ++m) {
      std::vector<AxisAngle> rots;
      for (int j = 0; j < m; ++j) rots.push_back(random_rotation(rng));
      long su = counts(synth_ata(make_mcsu2(n, rots))).cnot;
      t.check(su == 12 * n - 32 + 8 * (m - 1), "MCMTSU2 n=" + str(n) + " m=" + str(m) + " cnot " + str(su));
      long x1 = counts(synth_ata(make_mcx(n, 1, 1))).cnot;
      long xm = counts(synth_ata(make_mcx(n, m))).cnot;
      t.check(xm == x1 + 2 * (m - 1), "MCMTX n=" + str(n) + " m=" + str(m) + " cnot " + str(xm));
    }
  for (int n = 1; n <= 5; ++n)
    for (int m = 2; m <= 3; ++m) {
      std::vector<AxisAngle> rots;
      for (int j = 0; j < m; ++j) rots.push_back(random_rotation(rng));
      auto su = make_mcsu2(n, rots);
      t.check(equivalent(simulate(synth_ata(su)), reference(su, default_roles(su)), EquivMode::exact).pass,
              "MCMTSU2 unitary n=" + str(n) + " m=" + str(m));
      auto xx = make_mcx(n, m);
      t.check(equivalent(simulate(synth_ata(xx)), reference(xx, default_roles(xx)), EquivMode::global_phase).pass,
              "MCMTX unitary n=" + str(n) + " m=" + str(m));
    }
  return t.done("counts n=6..20 m=2..6, unitaries n<=5 m<=3");
}

Outcome c6_dirty_bridge() {
  Tally t;
  std::mt19937_64 rng(106);
  int cases = 0;
  for (int n = 8; n <= 24; ++n) {
    auto rot = random_rotation(rng);
    for (int chi = 1; chi <= (n - 6) / 2; ++chi) {
      auto g = counts(synth_ata(make_mcsu2(n, {rot}, chi)));
      const std::string at = "n=" + str(n) + " chi=" + str(chi);
      t.check(g.cnot == 12 * n - 32 - 8 * chi, at + " cnot " + str(g.cnot));
      t.check(g.t == 16 * n - 48 - 16 * chi, at + " t " + str(g.t));
      ++cases;
    }
  }
  auto spec = make_mcsu2(8, {random_rotation(rng)}, 1);
  Roles r = default_roles(spec);
  auto rep = equivalent(simulate(synth_ata(spec)), reference(spec, r), EquivMode::tensor_identity, r.ancillae, 1e-9);
  t.check(rep.pass, "n=8 chi=1 unitary " + rep.note);
  return t.done(str(cases) + " (n, n_chi) pairs, n=8 chi=1 ancilla restored");
}

Outcome c7_tdepth() {
  Tally t;
  std::mt19937_64 rng(107);
  SynthOptions opt;
  opt.variant = Style::tdepth;
  long worst_asap = -1000;
  for (int n = 6; n <= 20; ++n) {
    Circuit c = synth_ata(make_mcsu2(n, {random_rotation(rng)}), opt);
    auto g = counts(c);
    const long td = class_depth(c, GateClass::t);
    t.check(td <= 4 * n, "n=" + str(n) + " T-depth " + str(td));
    worst_asap = std::max(worst_asap, g.depth(GateClass::t) - 4 * n);
    t.check(2 * g.cnot == (n % 2 ? 25 * n - 53 : 25 * n - 60), "n=" + str(n) + " cnot " + str(g.cnot));
  }
  return t.done("n=6..20; literal ASAP T layers minus 4n at most " + str(worst_asap));
}

Outcome c8_lnn_exhaustive() {
  Tally t;
  std::mt19937_64 rng(108);
  int placements = 0;
  auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 5; ++n) {
    const int k = n + 2;
    // roles per position: 0 control, 1 target, 2 ancilla/idle
    for (int tq = 0; tq < k; ++tq)
      for (int other = 0; other < k; ++other) {
        if (other == tq) continue;
        std::vector<int> ctrl;
        for (int q = 0; q < k; ++q)
          if (q != tq && q != other) ctrl.push_back(q);
        const std::string at = "n=" + str(n) + " t=" + str(tq) + " other=" + str(other);

        auto su = make_mcsu2(n, {random_rotation(rng)});
        LnnPlacement ps{k, ctrl, {tq}, {}, AncillaKind::none};
        Circuit cs = synth_lnn(su, ps);
        t.check(validate_lnn(cs).empty(), at + " MCSU2 not LNN");
        t.check(equivalent(simulate(cs), reference(su, ps.roles()), EquivMode::exact).pass, at + " MCSU2 unitary");

        auto mx = make_mcx(n, 1, 1);
        LnnPlacement px{k, ctrl, {tq}, {other}, AncillaKind::dirty};
        Circuit cx_ = synth_lnn(mx, px);
        t.check(validate_lnn(cx_).empty(), at + " MCX not LNN");
        t.check(equivalent(simulate(cx_), reference(mx, px.roles()), EquivMode::global_phase).pass,
                at + " MCX unitary");
        placements += 2;
      }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs < 600, "runtime");
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d placements, %.1f s", placements, secs);
  return t.done(buf);
}

// Borrowed qubit for single-target MCX: the declared ancilla unless another free qubit of the
// window sits strictly closer to an edge.
int borrowed(const LnnPlacement& p) {
  const int lo = p.lo(), hi = p.hi();
  auto edge = [&](int q) { return std::min(q - lo, hi - q); };
  int best = p.ancillae[0];
  for (int q = lo; q <= hi; ++q) {
    bool busy = q == p.targets[0] || std::find(p.controls.begin(), p.controls.end(), q) != p.controls.end();
    if (!busy && edge(q) < edge(best)) best = q;
  }
  return best;
}

Outcome c9_lnn_bounds() {
  Tally t;
  std::mt19937_64 rng(109);
  const AxisAngle rot{Eigen::Vector3d(1, 2, 2) / 3.0, 0.7};
  long placements = 0, below_headline = 0, depth_over = 0;
  for (int n = 6; n <= 25; ++n)
    for (int k = n + 1; k <= n + 15; ++k)
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> pos = iota(k);
        std::shuffle(pos.begin(), pos.end(), rng);
        std::vector<int> ctrl(pos.begin(), pos.begin() + n);
        std::sort(ctrl.begin(), ctrl.end());
        const int tq = pos[n];
        const std::string at = "n=" + str(n) + " k=" + str(k) + " #" + str(trial);

        LnnPlacement ps{k, ctrl, {tq}, {}, AncillaKind::none};
        Circuit cs = synth_lnn(make_mcsu2(n, {rot}), ps);
        auto gs = counts(cs);
        const int ks = ps.hi() - ps.lo() + 1;
        auto ls = oracle::lnn_lprime(k, ctrl, {tq}, {});
        t.check(gs.cnot <= 10 * ks + 12 * n - 50, at + " MCSU2 cnot " + str(gs.cnot));
        t.check(gs.t == 16 * n - 32 - 8 * (ls.l1 + ls.l2), at + " MCSU2 t " + str(gs.t));
        below_headline += gs.t < 16 * n - 32;
        depth_over += class_depth(cs, GateClass::cnot) > 9 * ks + 4 * n - 5;
        ++placements;

        if (k < n + 2) continue;
        const int an = pos[n + 1];
        LnnPlacement px{k, ctrl, {tq}, {an}, AncillaKind::dirty};
        const int kx = px.hi() - px.lo() + 1;
        Circuit cx_ = synth_lnn(make_mcx(n, 1, 1), px);
        auto gx = counts(cx_);
        std::vector<int> cxc = ctrl;
        cxc.push_back(tq);
        const int b = borrowed(px);
        auto lx = oracle::lnn_lprime(k, cxc, {b}, {an});
        t.check(gx.cnot <= 8 * kx + 14 * n - 34, at + " MCX cnot " + str(gx.cnot));
        t.check(gx.t == 16 * n - 16 - 8 * (lx.l1 + lx.l2), at + " MCX t " + str(gx.t));
        below_headline += gx.t < 16 * n - 16;
        depth_over += class_depth(cx_, GateClass::cnot) > 8 * kx + 5 * n + 1;

        LnnPlacement pu{k, ctrl, {tq}, {an}, AncillaKind::clean};
        Circuit cu = synth_lnn(make_mcu2(n, {U2Spec{rot, 0.4}}), pu);
        auto gu = counts(cu);
        auto lu = oracle::lnn_lprime(k, ctrl, {tq, an}, {});
        t.check(gu.cnot <= 12 * kx + 12 * n - 56, at + " MCU2 cnot " + str(gu.cnot));
        t.check(gu.t == 16 * n - 32 - 8 * (lu.l1 + lu.l2), at + " MCU2 t " + str(gu.t));
        below_headline += gu.t < 16 * n - 32;
        depth_over += class_depth(cu, GateClass::cnot) > 10 * kx + 4 * n;
        placements += 2;
      }
  return t.done(str(placements) + " circuits; " + str(below_headline) + " with T below the headline count (l0' = 1); " +
                str(depth_over) + " over the CNOT-depth bound (not part of this criterion)");
}

Outcome c10_midlevel() {
  Tally t;
  std::mt19937_64 rng(110);
  for (int n = 6; n <= 40; ++n) {
    Circuit mid = synth_ata_midlevel(make_mcsu2(n, {random_rotation(rng)}));
    const auto xd = count_op(mid, Op::XDelta), izc = count_op(mid, Op::IZ);
    t.check(xd == std::size_t(4 * n - 16) && izc == 4,
            "n=" + str(n) + " XDelta " + str(long(xd)) + " iZ " + str(long(izc)));
  }
  return t.done("n=6..40: 4n-16 XDelta and 4 iZ");
}

// Basis-state propagation for products of controlled monomial gates.
using Steps = std::vector<oracle::Step>;

oracle::Dense dense(int nq, const Steps& s) {
  const Eigen::Index dim = Eigen::Index(1) << nq;
  oracle::Dense u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    oracle::Vec v = oracle::Vec::Unit(dim, j);
    for (const auto& st : s) oracle::apply_mc(v, st.controls, st.target, st.m);
    u.col(j) = v;
  }
  return u;
}

// Phase -1 when every qubit in qs is 1, as a controlled-Z step.
oracle::Step mcz(std::vector<int> qs) {
  int tq = qs.back();
  qs.pop_back();
  return {qs, tq, oracle::pauli_z()};
}

Outcome c11_identities() {
  Tally t;
  std::mt19937_64 rng(111);
  const double tol = 1e-10;
  const int draws = 100;
  using oracle::dist;

  // Pi pair equals the rotation, from the library's axes and from any perpendicular start.
  for (int i = 0; i < draws; ++i) {
    AxisAngle aa = random_rotation(rng);
    auto [v1, v2] = pi_pair(aa);
    t.check(dist(oracle::pi_gate(v2) * oracle::pi_gate(v1), oracle::rot(aa.axis, aa.angle)) < tol, "pi pair");
    Eigen::Vector3d w1 = oracle::random_perp(aa.axis, rng), w2 = oracle::rot3(aa.axis, aa.angle / 2, w1);
    t.check(dist(oracle::pi_gate(w2) * oracle::pi_gate(w1), oracle::rot(aa.axis, aa.angle)) < tol, "pi pair, any v1");
  }
  // Four-Pi core.
  for (int i = 0; i < draws; ++i) {
    AxisAngle aa = random_rotation(rng);
    auto [q1, q2] = pi_quad_axes(aa);
    oracle::M2 p = oracle::pi_gate(q2) * oracle::pi_gate(q1);
    t.check(dist(p * p, oracle::rot(aa.axis, aa.angle)) < tol, "pi quad");
    Eigen::Vector3d w1 = oracle::random_perp(aa.axis, rng), w2 = oracle::rot3(aa.axis, aa.angle / 4, w1);
    oracle::M2 r = oracle::pi_gate(w2) * oracle::pi_gate(w1);
    t.check(dist(r * r, oracle::rot(aa.axis, aa.angle)) < tol, "pi quad, any v1");
  }
  // Controlled Pi conjugated by a rotation about a perpendicular axis.
  for (int i = 0; i < draws; ++i) {
    Eigen::Vector3d tau = oracle::random_unit(rng), sig = oracle::random_perp(tau, rng);
    double phi = oracle::random_angle(rng);
    Eigen::Vector3d v = oracle::rot3(sig, phi, tau);
    std::vector<int> c = {0, 1};
    oracle::Dense lhs = oracle::mc_unitary(3, c, {2}, {oracle::pi_gate(v)});
    oracle::Dense rhs = oracle::mc_unitary(3, {}, {2}, {oracle::rot(sig, phi)}) *
                        oracle::mc_unitary(3, c, {2}, {oracle::pi_gate(tau)}) *
                        oracle::mc_unitary(3, {}, {2}, {oracle::rot(sig, -phi)});
    t.check(dist(lhs, rhs) < tol, "controlled pi conjugation");
  }
  // Sandwich of perpendicular controlled Pi gates, A = {0,1}, B = {2,3}, d = 4.
  for (int i = 0; i < draws; ++i) {
    Eigen::Vector3d v1 = oracle::random_unit(rng), v2 = oracle::random_perp(v1, rng);
    oracle::Dense pa = oracle::mc_unitary(5, {0, 1}, {4}, {oracle::pi_gate(v1)});
    oracle::Dense pb = oracle::mc_unitary(5, {2, 3}, {4}, {oracle::pi_gate(v2)});
    oracle::Dense z = dense(5, {mcz({0, 1, 2, 3})});
    t.check(dist(pb * pa * pb, z * pa) < tol, "sandwich");
  }
  // Adding a control to the {Z} ladder with two Toffoli-type gates, m = 3, 4.
  for (int m = 3; m <= 4; ++m) {
    const int nq = 2 * m - 1;
    for (int i = 0; i < draws; ++i) {
      std::vector<int> perm = iota(nq);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto cq = [&](int j) { return perm[j - 1]; };      // c_j, 1-based
      auto dq = [&](int j) { return perm[m + j - 1]; };  // d_j, 1-based
      auto ladder = [&](int upto) {
        Steps s;
        for (int j = 2; j <= upto; ++j) {
          std::vector<int> qs;
          for (int l = 1; l <= j; ++l) qs.push_back(cq(l));
          qs.push_back(dq(j - 1));
          s.push_back(mcz(qs));
        }
        return s;
      };
      oracle::Dense zm = dense(nq, ladder(m)), zm1 = dense(nq, ladder(m - 1));
      oracle::Dense tof = dense(nq, {{{cq(m), dq(m - 1)}, dq(m - 2), oracle::pauli_x()}});
      t.check(dist(zm, tof * zm1 * tof) < tol, "ladder, Toffoli form m=" + str(m));
      Circuit xd(nq);
      xd.add(xdelta(cq(m), dq(m - 1), dq(m - 2)));
      oracle::Dense x = oracle::unitary(xd);
      t.check(dist(zm, x.adjoint() * zm1 * x) < tol, "ladder, relative-phase form m=" + str(m));
    }
  }
  // Fan-out of one MCZ onto m targets with a CX tree, controls {0,1}, targets 2..m+1.
  for (int m = 2; m <= 8; ++m) {
    const int nq = 2 + m;
    auto tg = [](int j) { return 1 + j; };  // t_j, 1-based
    Steps lhs, tree;
    for (int j = 1; j <= m; ++j) lhs.push_back(mcz({0, 1, tg(j)}));
    // Each doubling layer wraps the previous structure, so the widest layer acts first.
    std::vector<int> widths;
    for (int f = 1; f < m; f *= 2) widths.insert(widths.begin(), f);
    for (int f : widths)
      for (int l = 1; l <= std::min(f, m - f); ++l) tree.push_back({{tg(l + f)}, tg(l), oracle::pauli_x()});
    Steps rhs(tree.begin(), tree.end());
    rhs.push_back(mcz({0, 1, tg(1)}));
    rhs.insert(rhs.end(), tree.rbegin(), tree.rend());
    const long cx_count = 2 * long(tree.size());
    t.check(dist(dense(nq, lhs), dense(nq, rhs)) < tol, "fan-out m=" + str(m));
    t.check(cx_count == 2 * (m - 1), "fan-out CX count m=" + str(m));
  }
  // Multi-controlled phase from a Z rotation on a clean ancilla.
  for (int i = 0; i < draws; ++i) {
    const int n = 1 + i % 4, a = n;
    const double psi = oracle::random_angle(rng);
    oracle::Dense u = oracle::mc_unitary(n + 1, iota(n), {a}, {oracle::rot(Eigen::Vector3d::UnitZ(), -2 * psi)});
    oracle::Dense p = oracle::mc_unitary(n + 1, iota(n - 1), {n - 1}, {oracle::phase(psi)});
    double err = 0;
    for (Eigen::Index col = 0; col < (Eigen::Index(1) << n); ++col) err = std::max(err, (u.col(col) - p.col(col)).cwiseAbs().maxCoeff());
    t.check(err < tol, "phase via clean ancilla n=" + str(n));
  }
  return t.done("seven identities, 100 draws where parameters exist");
}

Outcome c12_determinism() {
  Tally t;
  const AxisAngle rot{Eigen::Vector3d(0.3, 0.4, 0.5).normalized(), 2.1};
  std::vector<std::function<Circuit()>> makers = {
      [&] { return synth_ata(make_mcsu2(12, {rot})); },
      [&] { return synth_ata(make_mcx(9, 1, 1)); },
      [&] { return synth_ata(make_mcu2(8, {U2Spec{rot, 0.3}})); },
      [&] { return synth_ata(make_mcsu2(10, {rot, rot}, 0)); },
      [&] {
        SynthOptions o;
        o.variant = Style::tdepth;
        return synth_ata(make_mcsu2(11, {rot}, 2), o);
      },
      [&] { return synth_lnn(make_mcsu2(7, {rot}), LnnPlacement{10, {0, 1, 3, 5, 6, 8, 9}, {4}, {}, AncillaKind::none}); },
      [&] { return synth_lnn(make_mcx(6, 1, 1), LnnPlacement{9, {0, 2, 3, 5, 7, 8}, {4}, {1}, AncillaKind::dirty}); },
  };
  for (std::size_t i = 0; i < makers.size(); ++i) {
    std::string a = export_qasm(makers[i]()), b = export_qasm(makers[i]());
    t.check(a == b && !a.empty(), "case " + str(long(i)));
  }
  return t.done(str(long(makers.size())) + " specs, byte-identical QASM");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      c1_ata_counts,  c2_ata_correctness, c3_mcx_dirty, c4_mcu2_clean, c5_multi_target, c6_dirty_bridge,
      c7_tdepth,      c8_lnn_exhaustive,  c9_lnn_bounds, c10_midlevel, c11_identities,      c12_determinism};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
