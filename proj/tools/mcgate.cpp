#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcg/cost_model.hpp"
#include "mcg/sim.hpp"
#include "mcg/synth_ata.hpp"
#include "mcg/synth_lnn.hpp"

using namespace mcg;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GateFlags {
  std::string gate;
  int controls = 0;
  int targets = 1;
  std::string connectivity = "ata";
  std::string placement;
  std::string ancilla;
  std::vector<double> axis = {0, 0, 1};
  double angle = 0;
  double phase = 0;
  std::string variant = "standard";

  void attach(CLI::App* app) {
    app->add_option("--gate", gate, "mcx, mcsu2 or mcu2")->required()->check(CLI::IsMember({"mcx", "mcsu2", "mcu2"}));
    app->add_option("--controls", controls, "number of controls")->required()->check(CLI::Range(1, 64));
    app->add_option("--targets", targets, "number of targets")->check(CLI::Range(1, 64));
    app->add_option("--connectivity", connectivity)->check(CLI::IsMember({"ata", "lnn"}));
    app->add_option("--placement", placement, "comma list of c,t,a,z,. over line positions");
    app->add_option("--ancilla", ancilla, "none, dirty:K or clean:1");
    app->add_option("--axis", axis, "rotation axis X,Y,Z")->delimiter(',')->expected(3);
    app->add_option("--angle", angle, "rotation angle in radians");
    app->add_option("--phase", phase, "global phase of the U(2) target");
    app->add_option("--variant", variant)->check(CLI::IsMember({"standard", "tdepth"}));
  }
};

struct Parsed {
  MCGateSpec spec;
  std::optional<LnnPlacement> placement;
};

std::optional<LnnPlacement> parse_placement(const std::string& s) {
  if (s.empty()) return std::nullopt;
  LnnPlacement p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 1) throw UsageError("placement: bad entry '" + tok + "'");
    const int q = p.k++;
    switch (tok[0]) {
      case 'c': p.controls.push_back(q); break;
      case 't': p.targets.push_back(q); break;
      case 'a':
      case 'z': {
        auto kind = tok[0] == 'a' ? AncillaKind::dirty : AncillaKind::clean;
        if (p.ancilla != AncillaKind::none && p.ancilla != kind)
          throw UsageError("placement: mixed dirty and clean ancillae");
        p.ancilla = kind;
        p.ancillae.push_back(q);
        break;
      }
      case '.': break;
      default: throw UsageError("placement: unknown role '" + tok + "'");
    }
  }
  return p;
}

std::pair<AncillaKind, int> parse_ancilla(const std::string& s) {
  if (s.empty() || s == "none") return {AncillaKind::none, 0};
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--ancilla: expected none, dirty:K or clean:1");
  std::string kind = s.substr(0, colon);
  int count = 0;
  try {
    count = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--ancilla: bad count");
  }
  if (count < 0) throw UsageError("--ancilla: negative count");
  if (kind == "dirty") return {AncillaKind::dirty, count};
  if (kind == "clean") return {AncillaKind::clean, count};
  throw UsageError("--ancilla: unknown kind " + kind);
}

Parsed build_spec(const GateFlags& f) {
  Parsed out;
  out.placement = parse_placement(f.placement);
  auto [kind, count] = parse_ancilla(f.ancilla);
  if (out.placement && f.ancilla.empty()) {
    kind = out.placement->ancilla;
    count = static_cast<int>(out.placement->ancillae.size());
  }
  if (kind == AncillaKind::none) count = 0;
  if (f.gate == "mcu2" && f.ancilla.empty() && !out.placement) kind = AncillaKind::clean, count = 1;

  Eigen::Vector3d axis(f.axis[0], f.axis[1], f.axis[2]);
  if (axis.norm() < 1e-12) throw UsageError("--axis: zero vector");
  AxisAngle aa{axis.normalized(), f.angle};

  if (f.gate == "mcx") {
    if (kind == AncillaKind::clean) throw UsageError("mcx takes dirty ancillae");
    out.spec = make_mcx(f.controls, f.targets, count);
  } else if (f.gate == "mcsu2") {
    if (kind == AncillaKind::clean) throw UsageError("mcsu2 takes dirty ancillae");
    out.spec = make_mcsu2(f.controls, std::vector<AxisAngle>(f.targets, aa), count);
  } else {
    if (kind != AncillaKind::clean || count != 1) throw UsageError("mcu2 needs --ancilla clean:1");
    out.spec = make_mcu2(f.controls, std::vector<U2Spec>(f.targets, U2Spec{aa, f.phase}));
  }
  validate(out.spec);
  if (f.connectivity == "lnn" && !out.placement) {
    // Controls, then targets, then ancillae down the line.
    Roles r = default_roles(out.spec);
    LnnPlacement p;
    p.k = r.num_qubits;
    p.controls = r.controls;
    p.targets = r.targets;
    p.ancillae = r.ancillae;
    p.ancilla = out.spec.ancilla;
    out.placement = p;
  }
  if (out.placement) validate(*out.placement, out.spec);
  return out;
}

Roles roles_of(const Parsed& p) { return p.placement ? p.placement->roles() : default_roles(p.spec); }

Circuit synthesize(const GateFlags& f, const Parsed& p) {
  if (f.connectivity == "lnn") {
    if (f.variant != "standard") throw UsageError("--variant tdepth is ATA only");
    return synth_lnn(p.spec, *p.placement);
  }
  SynthOptions opt;
  opt.variant = f.variant == "tdepth" ? Style::tdepth : Style::standard;
  Circuit c = synth_ata(p.spec, opt);
  if (!p.placement) return c;
  Roles from = default_roles(p.spec), to = p.placement->roles();
  std::vector<int> map(c.num_qubits);
  for (std::size_t i = 0; i < from.controls.size(); ++i) map[from.controls[i]] = to.controls[i];
  for (std::size_t i = 0; i < from.targets.size(); ++i) map[from.targets[i]] = to.targets[i];
  for (std::size_t i = 0; i < from.ancillae.size(); ++i) map[from.ancillae[i]] = to.ancillae[i];
  return remap(c, map, to.num_qubits);
}

ordered_json counts_json(const Circuit& c) {
  auto g = counts(c);
  ordered_json j;
  j["qubits"] = c.num_qubits;
  j["gates"] = c.size();
  j["cnot"] = g.cnot;
  j["t"] = g.t;
  j["h"] = g.h;
  j["s"] = g.s;
  j["rot"] = g.rot;
  j["x"] = g.x;
  for (auto k : {GateClass::cnot, GateClass::t, GateClass::h, GateClass::s, GateClass::rot})
    j[std::string(class_name(k)) + "_depth"] = class_depth(c, k);
  ordered_json asap;
  for (auto k : {GateClass::cnot, GateClass::t, GateClass::h, GateClass::s, GateClass::rot})
    asap[class_name(k)] = g.depth(k);
  j["asap_layers"] = asap;
  return j;
}

Circuit load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Circuit c = import_qasm(ss.str());
  return is_lowered(c) ? c : lower(c);
}

EquivMode parse_mode(const std::string& s, const MCGateSpec& spec) {
  if (s == "exact") return EquivMode::exact;
  if (s == "global-phase") return EquivMode::global_phase;
  if (s == "subspace") return EquivMode::subspace;
  if (s == "tensor-id") return EquivMode::tensor_identity;
  if (spec.ancilla == AncillaKind::clean) return EquivMode::subspace;
  if (spec.ancilla == AncillaKind::dirty) return EquivMode::tensor_identity;
  return spec.kind == GateKind::X ? EquivMode::global_phase : EquivMode::exact;
}

int run_verify(const std::string& file, const GateFlags& f, const std::string& mode_flag, int trials) {
  Parsed p = build_spec(f);
  Circuit c = load(file);
  Roles roles = roles_of(p);
  if (c.num_qubits != roles.num_qubits)
    throw UsageError("circuit has " + std::to_string(c.num_qubits) + " qubits, spec needs " +
                     std::to_string(roles.num_qubits));
  EquivMode mode = parse_mode(mode_flag, p.spec);
  EquivReport rep;
  bool random = trials > 0 || c.num_qubits > kMaxFullQubits;
  if (!random) {
    rep = equivalent(simulate(c), oracle_unitary(p.spec, roles), mode, roles.ancillae);
  } else {
    McOracle o = make_oracle(p.spec, roles);
    RandomEquivOptions opt;
    if (trials > 0) opt.trials = trials;
    opt.allow_global_phase = mode != EquivMode::exact;
    if (mode == EquivMode::subspace) opt.zero_qubits = roles.ancillae;
    rep = randomized_equiv(c, [&](const State& s) { return o.apply(s); }, c.num_qubits, opt);
    rep.mode = mode;
  }
  ordered_json j;
  j["mode"] = mode_name(mode);
  j["method"] = random ? "random-states" : "full-unitary";
  j["max_error"] = rep.max_error;
  j["pass"] = rep.pass;
  std::cout << j.dump() << "\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-controlled gate synthesis"};
  app.require_subcommand(1);

  GateFlags synth_flags, verify_flags;
  std::string out_path;
  auto* synth = app.add_subcommand("synth", "synthesize a gate and write QASM");
  synth_flags.attach(synth);
  synth->add_option("--out", out_path, "output QASM file")->required();

  std::string verify_file, mode_flag;
  int trials = 0;
  auto* verify = app.add_subcommand("verify", "check a QASM file against a gate spec");
  verify->add_option("file", verify_file)->required();
  verify->add_flag("--spec", "marks the start of the gate flags");
  verify_flags.attach(verify);
  verify->add_option("--mode", mode_flag)->check(CLI::IsMember({"exact", "global-phase", "subspace", "tensor-id"}));
  verify->add_option("--random-trials", trials)->check(CLI::NonNegativeNumber);

  std::string count_file;
  auto* count = app.add_subcommand("count", "gate counts of a QASM file");
  count->add_option("file", count_file)->required();

  std::string table;
  int rn = 0, rk = 0;
  bool csv = false;
  auto* report = app.add_subcommand("report", "cost tables");
  report->add_option("--table", table)->required()->check(CLI::IsMember({"ata", "lnn", "tdepth", "ancilla-sweep"}));
  report->add_option("--n", rn)->required()->check(CLI::Range(1, 64));
  report->add_option("--k", rk)->check(CLI::PositiveNumber);
  report->add_flag("--csv", csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*synth) {
      Parsed p = build_spec(synth_flags);
      Circuit c = synthesize(synth_flags, p);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw UsageError("cannot write " + out_path);
      out << export_qasm(c);
      std::cout << counts_json(c).dump() << "\n";
      return 0;
    }
    if (*verify) return run_verify(verify_file, verify_flags, mode_flag, trials);
    if (*count) {
      std::cout << counts_json(load(count_file)).dump() << "\n";
      return 0;
    }
    TableKind kind = table == "ata"      ? TableKind::ata
                     : table == "lnn"    ? TableKind::lnn
                     : table == "tdepth" ? TableKind::tdepth
                                         : TableKind::ancilla_sweep;
    Report r = build_report(kind, rn, rk);
    std::cout << (csv ? render_csv(r) : render_text(r));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "mcgate: " << e.what() << "\n";
    return 2;
  }
}
