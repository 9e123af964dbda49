#include <catch_amalgamated.hpp>

#include "mcg/sim.hpp"
#include "mcg/spec.hpp"
#include "oracle.hpp"

using namespace mcg;

namespace {

Circuit random_circuit(int nq, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 10), qd(0, nq - 1);
  std::uniform_real_distribution<double> ang(-3, 3);
  Circuit c(nq);
  for (int i = 0; i < len; ++i) {
    int a = qd(rng), b = qd(rng), d = qd(rng);
    while (b == a) b = qd(rng);
    while (d == a || d == b) d = qd(rng);
    switch (pick(rng)) {
      case 0: c.add(h(a)); break;
      case 1: c.add(t(a)); break;
      case 2: c.add(sdg(a)); break;
      case 3: c.add(rx(a, ang(rng))); break;
      case 4: c.add(rz(a, ang(rng))); break;
      case 5: c.add(cx(a, b)); break;
      case 6: c.add(cz(a, b)); break;
      case 7: c.add(xdelta(a, b, d, len % 2)); break;
      case 8: c.add(iz(a, b, d)); break;
      case 9: c.add(swap(a, b)); break;
      default: c.add(x(a)); break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("simulate matches the reference simulator", "[sim]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int nq = 3 + trial % 4;
    Circuit c = random_circuit(nq, 40, rng);
    DenseUnitary u = simulate(c);
    REQUIRE(oracle::dist(u, oracle::unitary(c)) < 1e-12);
    // State path agrees with the dense path.
    State psi = State::Random(u.rows()).normalized();
    REQUIRE((simulate(c, psi) - u * psi).norm() < 1e-12);
  }
}

TEST_CASE("oracle unitary matches the brute-force controlled product", "[sim]") {
  std::mt19937_64 rng(5);
  auto spec = make_mcsu2(3, {AxisAngle{oracle::random_unit(rng), 0.9}, AxisAngle{oracle::random_unit(rng), -2.0}});
  Roles r{6, {4, 0, 2}, {1, 5}, {}};
  DenseUnitary u = oracle_unitary(spec, r);
  auto ref = oracle::mc_unitary(6, {4, 0, 2}, {1, 5},
                                {oracle::rot(spec.su2[0].axis, 0.9), oracle::rot(spec.su2[1].axis, -2.0)});
  REQUIRE(oracle::dist(u, ref) < 1e-12);
}

TEST_CASE("equivalence modes", "[sim][equiv]") {
  std::mt19937_64 rng(11);
  Circuit c = random_circuit(3, 25, rng);
  DenseUnitary u = simulate(c);
  const std::complex<double> ph = std::polar(1.0, 0.7);

  SECTION("exact rejects a global phase, global-phase accepts it") {
    DenseUnitary v = ph * u;
    CHECK(equivalent(u, u, EquivMode::exact).pass);
    CHECK_FALSE(equivalent(v, u, EquivMode::exact).pass);
    CHECK(equivalent(v, u, EquivMode::global_phase).pass);
  }
  SECTION("tensor identity on an untouched qubit") {
    Circuit wide(4);
    wide.append(c);
    DenseUnitary w = simulate(wide);
    CHECK(equivalent(w, w, EquivMode::tensor_identity, {3}).pass);
    Circuit touched = wide;
    touched.add(h(3));
    CHECK_FALSE(equivalent(simulate(touched), w, EquivMode::tensor_identity, {3}).pass);
  }
  SECTION("subspace ignores what happens off the zero subspace") {
    Circuit a(2), b(2);
    a.add(cx(1, 0));  // acts only when qubit 1 is set
    CHECK(equivalent(simulate(a), simulate(b), EquivMode::subspace, {1}).pass);
    CHECK_FALSE(equivalent(simulate(a), simulate(b), EquivMode::exact).pass);
    Circuit leak(2);
    leak.add(cx(0, 1));
    CHECK_FALSE(equivalent(simulate(leak), simulate(b), EquivMode::subspace, {1}).pass);
  }
}

TEST_CASE("randomized equivalence", "[sim][equiv]") {
  std::mt19937_64 rng(3);
  Circuit c = random_circuit(5, 30, rng);
  auto same = [&](const State& s) { return simulate(c, s); };
  CHECK(randomized_equiv(c, same, 5).pass);
  Circuit d = c;
  d.add(t(2));
  auto rep = randomized_equiv(d, same, 5);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_error > 1e-3);
  RandomEquivOptions strict;
  strict.allow_global_phase = false;
  Circuit e = c;
  e.add(rz(0, 2 * M_PI));  // global phase -1
  CHECK(randomized_equiv(e, same, 5).pass);
  CHECK_FALSE(randomized_equiv(e, same, 5, strict).pass);
}
