#include <catch_amalgamated.hpp>

#include "mcg/sim.hpp"
#include "mcg/synth_ata.hpp"
#include "oracle.hpp"

using namespace mcg;

namespace {

AxisAngle random_rotation(std::mt19937_64& rng) { return {oracle::random_unit(rng), oracle::random_angle(rng)}; }

// Reference for spec under default roles, from the test-side brute force.
oracle::Dense reference(const MCGateSpec& spec) {
  Roles r = default_roles(spec);
  std::vector<oracle::M2> ops;
  for (int j = 0; j < spec.m; ++j) {
    if (spec.kind == GateKind::X) ops.push_back(oracle::pauli_x());
    else if (spec.kind == GateKind::SU2) ops.push_back(oracle::rot(spec.su2[j].axis, spec.su2[j].angle));
    else ops.push_back(std::exp(oracle::I1 * spec.u2[j].phase) * oracle::rot(spec.u2[j].su2.axis, spec.u2[j].su2.angle));
  }
  return oracle::mc_unitary(r.num_qubits, r.controls, r.targets, ops);
}

}  // namespace

TEST_CASE("control partition", "[ata][partition]") {
  for (int n = 3; n <= 12; ++n) {
    std::vector<int> ctrl(n);
    for (int i = 0; i < n; ++i) ctrl[i] = i;
    auto p = partition_controls(ctrl, n);
    CAPTURE(n);
    CHECK(static_cast<int>(p.c1.size()) == n / 2);
    CHECK(static_cast<int>(p.c2.size()) == n - n / 2);
    std::vector<int> all = p.c1;
    all.insert(all.end(), p.c2.begin(), p.c2.end());
    std::sort(all.begin(), all.end());
    CHECK(all == ctrl);
  }
}

TEST_CASE("V-chain costs", "[ata][vchain]") {
  for (int n = 3; n <= 12; ++n) {
    std::vector<int> c(n), d(n - 1);
    for (int i = 0; i < n; ++i) c[i] = i;
    for (int i = 0; i < n - 1; ++i) d[i] = n + i;
    Circuit mid = synth_vchain_z(c, d, 2 * n - 1);
    CHECK(count_op(mid, Op::XDelta) == std::size_t(2 * n - 4));
    CHECK(count_op(mid, Op::IZ) == 1);
    auto g = counts(lower(mid));
    CAPTURE(n);
    CHECK(g.cnot == 6 * n - 8);
    CHECK(g.t == 8 * n - 12);
    CHECK(g.h == 4 * n - 8);
  }
}

TEST_CASE("MCSU2 matches the controlled rotation", "[ata][mcsu2]") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      auto spec = make_mcsu2(n, {random_rotation(rng)});
      Circuit c = synth_ata(spec);
      CAPTURE(n, trial);
      REQUIRE(oracle::dist(oracle::unitary(c), reference(spec)) < 1e-9);
    }
}

TEST_CASE("MCSU2 counts", "[ata][mcsu2]") {
  std::mt19937_64 rng(18);
  for (int n = 6; n <= 30; ++n) {
    auto g = counts(synth_ata(make_mcsu2(n, {random_rotation(rng)})));
    CAPTURE(n);
    CHECK(g.cnot == 12 * n - 32);
    CHECK(g.t == 16 * n - 48);
    CHECK(g.h == 8 * n - 32);
    CHECK(g.rot <= 8);
  }
}

TEST_CASE("MCX with one dirty ancilla restores the ancilla", "[ata][mcx]") {
  for (int n = 1; n <= 7; ++n) {
    auto spec = make_mcx(n, 1, n >= 3 ? 1 : 0);
    Circuit c = synth_ata(spec);
    CAPTURE(n);
    REQUIRE(oracle::dist_phase(oracle::unitary(c), reference(spec)) < 1e-9);
    if (n >= 5) {
      auto g = counts(c);
      CHECK(g.cnot == 12 * n - 20);
      CHECK(g.t == 16 * n - 32);
      CHECK(g.h == 8 * n - 20);
      CHECK(g.rot == 0);
    }
  }
  CHECK_THROWS_AS(synth_ata(make_mcx(4, 1, 0)), std::invalid_argument);
}

TEST_CASE("MCU2 with a clean ancilla", "[ata][mcu2]") {
  std::mt19937_64 rng(19);
  for (int n = 1; n <= 6; ++n) {
    auto spec = make_mcu2(n, {U2Spec{random_rotation(rng), oracle::random_angle(rng)}});
    Circuit c = synth_ata(spec);
    CAPTURE(n);
    REQUIRE(oracle::dist_subspace(oracle::unitary(c), reference(spec), default_roles(spec).ancillae) < 1e-9);
  }
  auto g = counts(synth_ata(make_mcu2(9, {U2Spec{random_rotation(rng), 0.3}})));
  CHECK(g.cnot == 12 * 9 - 24);
  CHECK(g.h == 8 * 9 - 30);
}

TEST_CASE("multi-target gates", "[ata][multi]") {
  std::mt19937_64 rng(20);
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 3; ++m) {
      std::vector<AxisAngle> rots;
      for (int j = 0; j < m; ++j) rots.push_back(random_rotation(rng));
      auto su = make_mcsu2(n, rots);
      CAPTURE(n, m);
      REQUIRE(oracle::dist(oracle::unitary(synth_ata(su)), reference(su)) < 1e-9);
      auto xx = make_mcx(n, m);
      REQUIRE(oracle::dist_phase(oracle::unitary(synth_ata(xx)), reference(xx)) < 1e-9);
    }
  for (int m = 2; m <= 5; ++m) {
    std::vector<AxisAngle> rots(m, random_rotation(rng));
    CHECK(counts(synth_ata(make_mcsu2(10, rots))).cnot == 12 * 10 - 32 + 8 * (m - 1));
    CHECK(counts(synth_ata(make_mcx(10, m))).cnot == 12 * 10 - 20 + 2 * (m - 1));
  }
}

TEST_CASE("extra dirty ancillae lower the cost", "[ata][ancilla]") {
  std::mt19937_64 rng(21);
  const int n = 16;
  auto rot = random_rotation(rng);
  for (int chi = 0; chi <= (n - 6) / 2; ++chi) {
    auto g = counts(synth_ata(make_mcsu2(n, {rot}, chi)));
    CAPTURE(chi);
    CHECK(g.cnot == 12 * n + 8 - 8 * chi - 40);
    CHECK(g.t == 16 * n - 16 * chi - 48);
    CHECK(g.h == 8 * n - 8 * chi - 32);
  }
  auto spec = make_mcsu2(7, {rot}, 0);
  spec = make_mcsu2(8, {rot}, 1);
  Circuit c = synth_ata(spec);
  REQUIRE(oracle::dist(oracle::unitary(c), reference(spec)) < 1e-9);
}

TEST_CASE("T-depth variant", "[ata][tdepth]") {
  std::mt19937_64 rng(22);
  SynthOptions opt;
  opt.variant = Style::tdepth;
  for (int n = 2; n <= 6; ++n) {
    auto spec = make_mcsu2(n, {random_rotation(rng)});
    REQUIRE(oracle::dist(oracle::unitary(synth_ata(spec, opt)), reference(spec)) < 1e-9);
  }
  for (int n = 6; n <= 15; ++n) {
    Circuit c = synth_ata(make_mcsu2(n, {random_rotation(rng)}), opt);
    auto g = counts(c);
    CAPTURE(n);
    CHECK(2 * g.cnot == (n % 2 ? 25 * n - 53 : 25 * n - 60));
    CHECK(class_depth(c, GateClass::t) <= 4 * n);
    CHECK(g.t == 16 * n - 48);
  }
}

TEST_CASE("mid-level structure", "[ata][midlevel]") {
  std::mt19937_64 rng(23);
  for (int n = 6; n <= 20; ++n) {
    Circuit mid = synth_ata_midlevel(make_mcsu2(n, {random_rotation(rng)}));
    CAPTURE(n);
    CHECK(count_op(mid, Op::XDelta) == std::size_t(4 * n - 16));
    CHECK(count_op(mid, Op::IZ) == 4);
  }
}

TEST_CASE("X_Delta templates", "[ata][xdelta]") {
  for (auto kind : {XDeltaKind::two_control, XDeltaKind::three_control})
    for (auto style : {Style::standard, Style::tdepth})
      for (bool inv : {false, true}) {
        auto tpl = build_xdelta(kind, style, inv);
        const int arity = tpl.gate.arity();
        Circuit low(arity);
        low.append(tpl.lowering);
        REQUIRE(oracle::dist(oracle::unitary(low), tpl.matrix) < 1e-12);
        // Hermitian up to the relative phase: squaring gives a diagonal.
        oracle::Dense sq = tpl.matrix * tpl.matrix;
        CHECK((sq - oracle::Dense(sq.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12);
      }
}
