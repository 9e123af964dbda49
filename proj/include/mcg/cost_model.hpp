#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcg/circuit.hpp"

namespace mcg {

struct FormulaArgs {
  int n = 0;
  int k = 0;
  int m = 1;
  int n_chi = 0;
  int l0p = 0;  // l0' of an LNN chain
};

// Affine in n, k, m, n_chi, ceil(log2 m), ceil(log2(m+1)) and l0'.
struct Affine {
  double n = 0, k = 0, m = 0, chi = 0, logm = 0, logm1 = 0, l0p = 0, c = 0;
  double operator()(const FormulaArgs& a) const;
};

enum class Metric { count, depth };
enum class BoundKind { exact, upper, leading_term };

// Validity: n >= min_n, k rule, m >= min_m, n_chi <= floor((n-6)/2) when chi_range.
enum class KRule { none, gt_n, gt_n_plus_1, ge_n_plus_2, ge_n_plus_m, eq_2n_minus_1, eq_n_plus_1 };

struct CostFormula {
  std::string id;  // "<family>.<metric>", e.g. mcsu2.cnot, lnn_mcx.t_depth
  std::string gate;
  GateClass cls = GateClass::cnot;
  Metric metric = Metric::count;
  BoundKind bound = BoundKind::exact;
  Affine even, odd;  // odd applies for odd n
  int min_n = 1;
  KRule k_rule = KRule::none;
  int min_m = 1;
  bool chi_range = false;
  std::string source;
  std::string symbol;  // non-empty for asymptotic markers such as O(nk); not evaluable

  bool valid(const FormulaArgs& a) const;
  std::string text() const;  // e.g. "12.5n-30 (12.5n-26.5 odd n)"
};

const std::vector<CostFormula>& formula_registry();
const CostFormula& find_formula(const std::string& id);

// Throws std::invalid_argument for unknown ids, symbolic markers, or arguments outside validity.
double evaluate(const std::string& id, const FormulaArgs& a);

enum class TableKind { ata, lnn, tdepth, ancilla_sweep };

struct ReportRow {
  std::string gate, ancilla, source, kind;
  std::vector<std::string> formula;          // CNOT cost, CNOT depth, T cost, T depth
  std::optional<std::vector<long>> actual;   // same columns, from synthesis
  std::string flag;                          // match / within / differs / over / -
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;
};

// Published rows next to synthesized ones. k defaults to n + 2 for the LNN table.
Report build_report(TableKind kind, int n, int k = 0);
std::string render_text(const Report& r);
std::string render_csv(const Report& r);

}  // namespace mcg
