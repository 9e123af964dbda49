#include "mcg/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "mcg/synth_ata.hpp"
#include "mcg/synth_lnn.hpp"

namespace mcg {

namespace {

int ceil_log2(int m) {
  int r = 0;
  while ((1 << r) < m) ++r;
  return r;
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Family {
  std::string name, gate, source;
  int min_n = 1;
  KRule k_rule = KRule::none;
  int min_m = 1;
  bool chi_range = false;
};

struct Entry {
  const char* metric;
  GateClass cls;
  Metric kind;
  BoundKind bound;
  Affine even;
  std::optional<Affine> odd = std::nullopt;
};

void add_family(std::vector<CostFormula>& out, const Family& f, std::initializer_list<Entry> entries) {
  for (const auto& e : entries) {
    CostFormula c;
    c.id = f.name + "." + e.metric;
    c.gate = f.gate;
    c.cls = e.cls;
    c.metric = e.kind;
    c.bound = e.bound;
    c.even = e.even;
    c.odd = e.odd.value_or(e.even);
    c.min_n = f.min_n;
    c.k_rule = f.k_rule;
    c.min_m = f.min_m;
    c.chi_range = f.chi_range;
    c.source = f.source;
    out.push_back(std::move(c));
  }
}

constexpr auto cnot = GateClass::cnot;
constexpr auto tg = GateClass::t;
constexpr auto hg = GateClass::h;
constexpr auto sg = GateClass::s;
constexpr auto rot = GateClass::rot;
constexpr auto cnt = Metric::count;
constexpr auto dep = Metric::depth;
constexpr auto ex = BoundKind::exact;
constexpr auto up = BoundKind::upper;

// Baselines carry one leading term for all four CNOT/T columns.
void add_baseline(std::vector<CostFormula>& out, const std::string& name, const std::string& gate,
                  const std::string& source, double coeff, const std::string& symbol = {}) {
  const char* metrics[] = {"cnot", "cnot_depth", "t", "t_depth"};
  for (int i = 0; i < 4; ++i) {
    CostFormula c;
    c.id = name + "." + metrics[i];
    c.gate = gate;
    c.cls = i < 2 ? cnot : tg;
    c.metric = i % 2 ? dep : cnt;
    c.bound = BoundKind::leading_term;
    c.even = c.odd = Affine{.n = coeff};
    c.source = source;
    if (!symbol.empty()) c.symbol = i == 0 ? symbol : (i == 1 ? "O(k+n)" : "O(n)");
    out.push_back(std::move(c));
  }
}

std::vector<CostFormula> build_registry() {
  std::vector<CostFormula> r;
  // ATA, all counts exact.
  add_family(r, {"mcsu2", "MCSU2", "ATA, no ancilla", 6},
             {{"cnot", cnot, cnt, ex, {.n = 12, .c = -32}},
              {"cnot_depth", cnot, dep, up, {.n = 8, .c = -8}},
              {"t", tg, cnt, ex, {.n = 16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 8, .c = -6}, Affine{.n = 8, .c = -3}},
              {"h", hg, cnt, ex, {.n = 8, .c = -32}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -11}},
              {"rot", rot, cnt, ex, {.c = 8}}});
  // n -> n+1 and four more H; parity follows n+1.
  add_family(r, {"mcx", "MCX", "ATA, one dirty ancilla", 5},
             {{"cnot", cnot, cnt, ex, {.n = 12, .c = -20}},
              {"cnot_depth", cnot, dep, up, {.n = 8}},
              {"t", tg, cnt, ex, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 8, .c = 5}, Affine{.n = 8, .c = 2}},
              {"h", hg, cnt, ex, {.n = 8, .c = -20}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -5}}});
  add_family(r, {"mcmtsu2", "MCMTSU2", "ATA, no ancilla", 6},
             {{"cnot", cnot, cnt, ex, {.n = 12, .m = 8, .c = -40}},
              {"cnot_depth", cnot, dep, up, {.n = 8, .logm = 8, .c = -8}},
              {"t", tg, cnt, ex, {.n = 16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 8, .c = -6}, Affine{.n = 8, .c = -3}},
              {"h", hg, cnt, ex, {.n = 8, .c = -32}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -11}},
              {"rot", rot, cnt, ex, {.m = 8}}});
  add_family(r, {"mcmtx", "MCMTX", "ATA, no ancilla", 5, KRule::none, 2},
             {{"cnot", cnot, cnt, ex, {.n = 12, .m = 2, .c = -22}},
              {"cnot_depth", cnot, dep, up, {.n = 8, .logm = 2}},
              {"t", tg, cnt, ex, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 8, .c = 5}, Affine{.n = 8, .c = 2}},
              {"h", hg, cnt, ex, {.n = 8, .c = -20}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -5}}});
  // MCMTSU2 with m+1 targets; five rotations become two H.
  add_family(r, {"mcu2", "MCU2", "ATA, one clean ancilla", 6},
             {{"cnot", cnot, cnt, ex, {.n = 12, .m = 8, .c = -32}},
              {"cnot_depth", cnot, dep, up, {.n = 8, .logm1 = 8, .c = -8}},
              {"t", tg, cnt, ex, {.n = 16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 8, .c = -6}, Affine{.n = 8, .c = -3}},
              {"h", hg, cnt, ex, {.n = 8, .c = -30}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -9}},
              {"rot", rot, cnt, ex, {.m = 8, .c = 3}}});
  add_family(r, {"tdepth", "MCSU2", "ATA, no ancilla, T-depth variant", 6},
             {{"cnot", cnot, cnt, ex, {.n = 12.5, .c = -30}, Affine{.n = 12.5, .c = -26.5}},
              {"cnot_depth", cnot, dep, up, {.n = 12, .c = -27}, Affine{.n = 12, .c = -24}},
              {"t", tg, cnt, ex, {.n = 16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, ex, {.n = 9, .c = -36}, Affine{.n = 9, .c = -37}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -10}},
              {"s", sg, cnt, ex, {.n = 0.5, .c = -2}, Affine{.n = 0.5, .c = -2.5}},
              {"s_depth", sg, dep, up, {.c = 1}},
              {"rot", rot, cnt, ex, {.c = 8}}});
  add_family(r, {"ancil", "MCMTSU2", "ATA, n_chi dirty ancillae", 6, KRule::none, 1, true},
             {{"cnot", cnot, cnt, ex, {.n = 12, .m = 8, .chi = -8, .c = -40}},
              {"cnot_depth", cnot, dep, up, {.n = 8, .logm = 8, .c = -8}},
              {"t", tg, cnt, ex, {.n = 16, .chi = -16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 8, .c = -6}, Affine{.n = 8, .c = -3}},
              {"h", hg, cnt, ex, {.n = 8, .chi = -8, .c = -32}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -11}},
              {"rot", rot, cnt, ex, {.m = 8}}});
  add_family(r, {"tdepth_ancil", "MCMTSU2", "ATA, n_chi dirty ancillae, T-depth variant", 6, KRule::none, 1, true},
             {{"cnot", cnot, cnt, ex, {.n = 12.5, .m = 8, .chi = -1, .c = -38},
               Affine{.n = 12.5, .m = 8, .chi = -1, .c = -34.5}},
              {"cnot_depth", cnot, dep, up, {.n = 12, .logm = 8, .c = -27}, Affine{.n = 12, .logm = 8, .c = -24}},
              {"t", tg, cnt, ex, {.n = 16, .chi = -16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, ex, {.n = 9, .chi = -10, .c = -36}, Affine{.n = 9, .chi = -10, .c = -37}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -10}},
              {"s", sg, cnt, ex, {.n = 0.5, .chi = -1, .c = -2}, Affine{.n = 0.5, .chi = -1, .c = -2.5}},
              {"s_depth", sg, dep, up, {.c = 1}},
              {"rot", rot, cnt, ex, {.m = 8}}});
  add_family(r, {"vchain", "{Z} V-chain with CS", "ATA V-chain", 3},
             {{"cnot", cnot, cnt, ex, {.n = 6, .c = -8}},
              {"cnot_depth", cnot, dep, up, {.n = 4, .c = -2}},
              {"t", tg, cnt, ex, {.n = 8, .c = -12}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, ex, {.n = 4, .c = -8}},
              {"h_depth", hg, dep, up, {.n = 2, .c = -2}}});
  add_family(r, {"vchain_t", "{Z} V-chain with CS", "ATA V-chain, T-depth variant", 3},
             {{"cnot", cnot, cnt, ex, {.n = 8, .c = -11}},
              {"cnot_depth", cnot, dep, up, {.n = 6, .c = -5}},
              {"t", tg, cnt, ex, {.n = 8, .c = -12}},
              {"t_depth", tg, dep, up, {.n = 2}},
              {"h", hg, cnt, ex, {.n = 4, .c = -8}},
              {"h_depth", hg, dep, up, {.n = 2, .c = -2}}});
  // LNN: counts are upper bounds except the chain.
  add_family(r, {"vchain_lnn", "{Z}-bar chain", "LNN chain", 3, KRule::gt_n},
             {{"cnot", cnot, cnt, ex, {.n = 6, .k = 2, .l0p = -3, .c = -9}},
              {"cnot_depth", cnot, dep, up, {.n = 2, .k = 2, .l0p = 1, .c = -1}},
              {"t", tg, cnt, ex, {.n = 8, .l0p = -4, .c = -8}},
              {"t_depth", tg, dep, up, {.n = 2}},
              {"h", hg, cnt, ex, {.n = 4, .l0p = -6, .c = -2}},
              {"h_depth", hg, dep, up, {.n = 2, .l0p = -2}}});
  add_family(r, {"lnn_bottom", "MCSU2", "LNN, target at bottom", 6, KRule::gt_n},
             {{"cnot", cnot, cnt, up, {.n = 12, .k = 8, .c = -48}},
              {"cnot_depth", cnot, dep, up, {.n = 4, .k = 8, .c = -8}},
              {"t", tg, cnt, up, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, up, {.n = 8, .c = -10}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -3}},
              {"rot", rot, cnt, ex, {.c = 8}}});
  add_family(r, {"lnn_mcsu2", "MCSU2", "LNN, any placement, no ancilla", 6, KRule::gt_n},
             {{"cnot", cnot, cnt, up, {.n = 12, .k = 10, .c = -50}},
              {"cnot_depth", cnot, dep, up, {.n = 4, .k = 9, .c = -5}},
              {"t", tg, cnt, up, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, up, {.n = 8, .c = -10}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -3}},
              {"rot", rot, cnt, ex, {.c = 8}}});
  add_family(r, {"lnn_mcx", "MCX", "LNN, any placement, one dirty ancilla", 5, KRule::ge_n_plus_2},
             {{"cnot", cnot, cnt, up, {.n = 14, .k = 8, .c = -34}},
              {"cnot_depth", cnot, dep, up, {.n = 5, .k = 8, .c = 1}},
              {"t", tg, cnt, up, {.n = 16, .c = -16}},
              {"t_depth", tg, dep, up, {.n = 4, .c = 4}},
              {"h", hg, cnt, up, {.n = 8, .c = 4}},
              {"h_depth", hg, dep, up, {.n = 4, .c = 3}}});
  add_family(r, {"lnn_mcu2", "MCU2", "LNN, any placement, one clean ancilla", 6, KRule::gt_n_plus_1},
             {{"cnot", cnot, cnt, up, {.n = 12, .k = 12, .c = -56}},
              {"cnot_depth", cnot, dep, up, {.n = 4, .k = 10}},
              {"t", tg, cnt, up, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, up, {.n = 8, .c = -8}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -1}},
              {"rot", rot, cnt, ex, {.c = 11}}});
  add_family(r, {"lnn_mcmtsu2", "MCMTSU2", "LNN, any placement, no ancilla", 6, KRule::ge_n_plus_m},
             {{"cnot", cnot, cnt, up, {.n = 14, .k = 24, .c = -40}},
              {"cnot_depth", cnot, dep, up, {.n = 5, .k = 24, .c = -4}},
              {"t", tg, cnt, up, {.n = 16, .c = -32}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, up, {.n = 8, .c = -8}},
              {"h_depth", hg, dep, up, {.n = 4}},
              {"rot", rot, cnt, ex, {.m = 8}}});
  add_family(r, {"lnn_mcmtx", "MCMTX", "LNN, any placement, no ancilla", 5, KRule::ge_n_plus_m, 2},
             {{"cnot", cnot, cnt, up, {.n = 14, .k = 12, .m = -2, .c = -34}},
              {"cnot_depth", cnot, dep, up, {.n = 5, .k = 12, .m = -2, .c = 1}},
              {"t", tg, cnt, up, {.n = 16, .c = -16}},
              {"t_depth", tg, dep, up, {.n = 4, .c = 4}},
              {"h", hg, cnt, up, {.n = 8, .m = 2, .c = 2}},
              {"h_depth", hg, dep, up, {.n = 4, .m = 2, .c = 1}}});
  add_family(r, {"lnn_row", "MCSU2", "LNN, alternating controls, k = 2n-1", 3, KRule::eq_2n_minus_1},
             {{"cnot", cnot, cnt, ex, {.n = 12, .c = -12}},
              {"cnot_depth", cnot, dep, up, {.n = 12, .c = -12}},
              {"t", tg, cnt, ex, {.n = 8, .c = -8}},
              {"t_depth", tg, dep, up, {.n = 4, .c = -4}},
              {"h", hg, cnt, ex, {.n = 4, .c = -8}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -8}},
              {"rot", rot, cnt, ex, {.c = 5}}});
  add_family(r, {"lnn_full", "MCSU2", "LNN, k = n+1, target at an edge", 6, KRule::eq_n_plus_1},
             {{"cnot", cnot, cnt, ex, {.n = 20, .c = -48}},
              {"cnot_depth", cnot, dep, up, {.n = 12}},
              {"t", tg, cnt, ex, {.n = 16, .c = -48}},
              {"t_depth", tg, dep, up, {.n = 4}},
              {"h", hg, cnt, ex, {.n = 8, .c = -32}},
              {"h_depth", hg, dep, up, {.n = 4, .c = -11}},
              {"rot", rot, cnt, ex, {.c = 8}}});

  add_baseline(r, "base_ata.mcsu2.barenco", "MCSU2", "Barenco et al. 1995", 48);
  add_baseline(r, "base_ata.mcsu2.maslov", "MCSU2", "Maslov 2016", 32);
  add_baseline(r, "base_ata.mcsu2.iten", "MCSU2", "Iten et al. 2016", 28);
  add_baseline(r, "base_ata.mcsu2.vale", "MCSU2", "Vale et al. 2023", 20);
  add_baseline(r, "base_ata.mcx.barenco", "MCX", "Barenco et al. 1995", 24);
  add_baseline(r, "base_ata.mcx.maslov_iten", "MCX", "Maslov 2016; Iten et al. 2016", 16);
  add_baseline(r, "base_ata.mcu2.barenco", "MCU2", "Barenco et al. 1995", 48);
  add_baseline(r, "base_ata.mcu2.maslov_iten", "MCU2", "Maslov 2016; Iten et al. 2016", 32);
  add_baseline(r, "base_tdepth.mcsu2.vale", "MCSU2", "Vale et al. 2023", 20);
  add_baseline(r, "base_tdepth.mcx.iten", "MCX", "Iten et al. 2016", 16);
  add_baseline(r, "base_tdepth.mcu2.barenco_iten", "MCU2", "Barenco et al. 1995; Iten et al. 2016", 32);
  const std::string swap_routing = "SWAP-routing methods";
  add_baseline(r, "base_lnn.mcsu2.routing", "MCSU2", swap_routing, 0, "O(nk)");
  add_baseline(r, "base_lnn.mcx.routing", "MCX", swap_routing, 0, "O(nk)");
  add_baseline(r, "base_lnn.mcu2.routing", "MCU2", swap_routing, 0, "O(nk)");
  return r;
}

std::string affine_text(const Affine& a) {
  std::string out;
  auto term = [&](double c, const std::string& var) {
    if (c == 0) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    double mag = std::abs(c);
    if (var.empty() || mag != 1) out += num(mag);
    out += var;
  };
  term(a.k, "k");
  term(a.n, "n");
  term(a.m, "m");
  term(a.chi, "n_chi");
  term(a.logm, "ceil(log2 m)");
  term(a.logm1, "ceil(log2(m+1))");
  term(a.l0p, "l0'");
  term(a.c, "");
  return out.empty() ? "0" : out;
}

const char* const kColumns[] = {"cnot", "cnot_depth", "t", "t_depth"};

std::vector<long> measure(const Circuit& c) {
  auto g = counts(c);
  return {g.cnot, class_depth(c, GateClass::cnot), g.t, class_depth(c, GateClass::t)};
}

std::string cell(const std::string& id, const FormulaArgs& a) {
  const auto& f = find_formula(id);
  if (!f.symbol.empty()) return f.symbol;
  if (!f.valid(a)) return "-";
  return num(evaluate(id, a));
}

// over: some column exceeds its formula; differs: an exact column is below it.
std::string flag_for(const std::string& family, const FormulaArgs& a, const std::vector<long>& actual) {
  bool equal = true, differs = false;
  for (int i = 0; i < 4; ++i) {
    const auto& f = find_formula(family + "." + kColumns[i]);
    if (!f.valid(a)) return "-";
    double bound = evaluate(f.id, a);
    if (actual[i] > bound) return "over";
    if (actual[i] != bound) {
      equal = false;
      if (f.bound == BoundKind::exact) differs = true;
    }
  }
  return equal ? "match" : (differs ? "differs" : "within");
}

ReportRow baseline_row(const std::string& base, const std::string& ancilla, const FormulaArgs& a) {
  ReportRow row;
  const auto& f = find_formula(base + ".cnot");
  row.gate = f.gate;
  row.ancilla = ancilla;
  row.source = f.source;
  row.kind = "leading term";
  for (auto col : kColumns) row.formula.push_back(cell(base + "." + col, a));
  row.flag = "-";
  return row;
}

ReportRow ours_row(const std::string& gate, const std::string& ancilla, const std::string& family,
                   const FormulaArgs& a, const std::function<Circuit()>& synth) {
  ReportRow row;
  row.gate = gate;
  row.ancilla = ancilla;
  row.source = "ours";
  const auto& f = find_formula(family + ".cnot");
  row.kind = f.bound == BoundKind::exact ? "exact" : "upper bound";
  for (auto col : kColumns) row.formula.push_back(cell(family + "." + col, a));
  row.flag = "-";
  if (f.valid(a)) {
    try {
      row.actual = measure(synth());
      row.flag = flag_for(family, a, *row.actual);
    } catch (const std::invalid_argument&) {
      row.flag = "-";
    }
  }
  return row;
}

const AxisAngle kAxis{Eigen::Vector3d(1, 2, 2) / 3.0, 0.7};

// Target in the middle, controls from the top, the helper qubit at the bottom.
LnnPlacement report_placement(int n, int k, AncillaKind anc) {
  LnnPlacement p;
  p.k = k;
  const int tpos = (k - 1) / 2;
  p.targets = {tpos};
  p.ancilla = anc;
  if (anc != AncillaKind::none) p.ancillae = {k - 1};
  for (int q = 0; q < k && static_cast<int>(p.controls.size()) < n; ++q)
    if (q != tpos && (anc == AncillaKind::none || q != k - 1)) p.controls.push_back(q);
  return p;
}

std::string fixed(long v) { return std::to_string(v); }

}  // namespace

double Affine::operator()(const FormulaArgs& a) const {
  return n * a.n + k * a.k + m * a.m + chi * a.n_chi + logm * ceil_log2(a.m) + logm1 * ceil_log2(a.m + 1) +
         l0p * a.l0p + c;
}

bool CostFormula::valid(const FormulaArgs& a) const {
  if (a.n < min_n || a.m < min_m || a.n_chi < 0) return false;
  if (chi_range ? a.n_chi > (a.n - 6) / 2 : a.n_chi != 0) return false;
  switch (k_rule) {
    case KRule::none: return true;
    case KRule::gt_n: return a.k > a.n;
    case KRule::gt_n_plus_1: return a.k > a.n + 1;
    case KRule::ge_n_plus_2: return a.k >= a.n + 2;
    case KRule::ge_n_plus_m: return a.k >= a.n + a.m;
    case KRule::eq_2n_minus_1: return a.k == 2 * a.n - 1;
    case KRule::eq_n_plus_1: return a.k == a.n + 1;
  }
  return false;
}

std::string CostFormula::text() const {
  if (!symbol.empty()) return symbol;
  std::string s = affine_text(even);
  if (bound == BoundKind::leading_term) return s;
  std::string o = affine_text(odd);
  if (o != s) s += " (" + o + " odd n)";
  return s;
}

const std::vector<CostFormula>& formula_registry() {
  static const std::vector<CostFormula> registry = build_registry();
  return registry;
}

const CostFormula& find_formula(const std::string& id) {
  const auto& r = formula_registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const CostFormula& f) { return f.id == id; });
  if (it == r.end()) throw std::invalid_argument("unknown formula: " + id);
  return *it;
}

double evaluate(const std::string& id, const FormulaArgs& a) {
  const auto& f = find_formula(id);
  if (!f.symbol.empty()) throw std::invalid_argument(id + " is an asymptotic marker");
  if (!f.valid(a)) throw std::invalid_argument(id + ": arguments outside validity");
  return (a.n % 2 ? f.odd : f.even)(a);
}

Report build_report(TableKind kind, int n, int k) {
  Report rep;
  FormulaArgs a{.n = n};
  U2Spec u2{kAxis, 0.4};
  switch (kind) {
    case TableKind::ata:
      rep.title = "ATA multi-controlled single-target gates, n = " + std::to_string(n);
      for (auto b : {"barenco", "maslov", "iten", "vale"})
        rep.rows.push_back(baseline_row(std::string("base_ata.mcsu2.") + b, "none", a));
      rep.rows.push_back(ours_row("MCSU2", "none", "mcsu2", a, [&] { return synth_ata(make_mcsu2(n, {kAxis})); }));
      for (auto b : {"barenco", "maslov_iten"})
        rep.rows.push_back(baseline_row(std::string("base_ata.mcx.") + b, "one dirty", a));
      rep.rows.push_back(ours_row("MCX", "one dirty", "mcx", a, [&] { return synth_ata(make_mcx(n, 1, 1)); }));
      for (auto b : {"barenco", "maslov_iten"})
        rep.rows.push_back(baseline_row(std::string("base_ata.mcu2.") + b, "one clean", a));
      rep.rows.push_back(ours_row("MCU2", "one clean", "mcu2", a, [&] { return synth_ata(make_mcu2(n, {u2})); }));
      break;
    case TableKind::tdepth: {
      rep.title = "ATA T-depth variant, n = " + std::to_string(n);
      SynthOptions opt;
      opt.variant = Style::tdepth;
      rep.rows.push_back(baseline_row("base_tdepth.mcsu2.vale", "none", a));
      rep.rows.push_back(
          ours_row("MCSU2", "none", "tdepth", a, [&] { return synth_ata(make_mcsu2(n, {kAxis}), opt); }));
      // Only leading terms are known for the MCX and MCU2 variants.
      const std::vector<std::string> lead = {num(12.5 * n), num(12.0 * n), num(16.0 * n), num(4.0 * n)};
      auto lead_row = [&](const std::string& gate, const std::string& anc, const MCGateSpec& spec) {
        ReportRow row;
        row.gate = gate;
        row.ancilla = anc;
        row.source = "ours";
        row.kind = "leading term";
        row.formula = lead;
        row.flag = "-";
        try {
          row.actual = measure(synth_ata(spec, opt));
        } catch (const std::invalid_argument&) {
        }
        return row;
      };
      rep.rows.push_back(baseline_row("base_tdepth.mcx.iten", "one dirty", a));
      rep.rows.push_back(lead_row("MCX", "one dirty", make_mcx(n, 1, 1)));
      rep.rows.push_back(baseline_row("base_tdepth.mcu2.barenco_iten", "one clean", a));
      rep.rows.push_back(lead_row("MCU2", "one clean", make_mcu2(n, {u2})));
      break;
    }
    case TableKind::lnn: {
      if (k <= 0) k = n + 2;
      a.k = k;
      rep.title = "LNN, any placement, n = " + std::to_string(n) + ", k = " + std::to_string(k);
      auto lnn = [&](const MCGateSpec& spec, AncillaKind anc) {
        return [=] { return synth_lnn(spec, report_placement(n, k, anc)); };
      };
      rep.rows.push_back(baseline_row("base_lnn.mcsu2.routing", "none", a));
      rep.rows.push_back(ours_row("MCSU2", "none", "lnn_mcsu2", a, lnn(make_mcsu2(n, {kAxis}), AncillaKind::none)));
      rep.rows.push_back(baseline_row("base_lnn.mcx.routing", "one dirty", a));
      rep.rows.push_back(ours_row("MCX", "one dirty", "lnn_mcx", a, lnn(make_mcx(n, 1, 1), AncillaKind::dirty)));
      rep.rows.push_back(baseline_row("base_lnn.mcu2.routing", "one clean", a));
      rep.rows.push_back(ours_row("MCU2", "one clean", "lnn_mcu2", a, lnn(make_mcu2(n, {u2}), AncillaKind::clean)));
      break;
    }
    case TableKind::ancilla_sweep:
      rep.title = "ATA MCSU2 with n_chi dirty ancillae, n = " + std::to_string(n);
      for (int chi = 0; chi <= std::max(-1, (n - 6) / 2); ++chi) {
        FormulaArgs b{.n = n, .n_chi = chi};
        rep.rows.push_back(ours_row("MCSU2", std::to_string(chi) + " dirty", "ancil", b,
                                    [&] { return synth_ata(make_mcsu2(n, {kAxis}, chi)); }));
      }
      break;
  }
  return rep;
}

namespace {

const std::vector<std::string> kHeader = {"type",       "ancilla", "source",  "kind",     "cnot",
                                          "cnot_depth", "t",       "t_depth", "actual_cnot", "actual_cnot_depth",
                                          "actual_t",   "actual_t_depth", "flag"};

std::vector<std::string> fields(const ReportRow& r) {
  std::vector<std::string> f = {r.gate, r.ancilla, r.source, r.kind};
  for (int i = 0; i < 4; ++i) f.push_back(i < static_cast<int>(r.formula.size()) ? r.formula[i] : "-");
  for (int i = 0; i < 4; ++i) f.push_back(r.actual ? fixed((*r.actual)[i]) : "-");
  f.push_back(r.flag);
  return f;
}

}  // namespace

std::string render_text(const Report& r) {
  std::vector<std::vector<std::string>> rows = {kHeader};
  for (const auto& row : r.rows) rows.push_back(fields(row));
  std::vector<std::size_t> width(kHeader.size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  if (!r.title.empty()) os << r.title << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size()) {
        os << row[i];
        break;
      }
      os << std::left << std::setw(static_cast<int>(width[i])) << row[i] << "  ";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_csv(const Report& r) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << quote(f[i]);
    os << "\n";
  };
  line(kHeader);
  for (const auto& row : r.rows) line(fields(row));
  return os.str();
}

}  // namespace mcg
