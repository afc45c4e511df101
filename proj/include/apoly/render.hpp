#pragma once

#include <string>
#include <vector>

#include "apoly/asm_matrix.hpp"
#include "apoly/identity.hpp"
#include "apoly/tspp.hpp"

namespace apoly {

enum class OutputFormat { Text, Json, Csv };

/// "text" | "json" | "csv"
OutputFormat parse_format(const std::string& name);

/// Byte-stable renderings. Timings appear only in the JSON report; text and
/// csv stay identical across runs and thread counts.
std::string render_report(const VerificationReport& rep, OutputFormat f);

/// Expansion rows of a route polynomial (used by both verify and expand).
std::vector<ExpansionRow> expansion_rows(const Polynomial& route_poly, int n);
std::string render_expansion(int n, const std::vector<ExpansionRow>& rows,
                             OutputFormat f);

std::string render_asm_table(int n, const std::vector<AsmClass>& table,
                             OutputFormat f);

struct TsppRow {
  std::vector<std::vector<int>> matrix;
  Partition diag;
  Partition pi;
  FrobeniusForm frobenius;
  OmegaWeight weight;
};

/// One row per TSPP of the (box)-box; pi and omega are taken at n = box+1.
std::vector<TsppRow> tspp_rows(int box, bool extended, OmegaConvention conv);
std::string render_tspp(int box, const std::vector<TsppRow>& rows,
                        OutputFormat f);

struct DyckResult {
  Partition partition;
  int n;
  DyckPath path;
  bool roundtrip_ok;
};
std::string render_dyck(const DyckResult& d, OutputFormat f);

struct LemmaRun {
  int n;
  int trials;
  unsigned seed;
  bool specialization_ok;
  int failures;  // among the randomized trials
};
/// Randomized (f,g) pairs of X-degree <= 3 with small integer coefficients,
/// plus the fixed specialization pair the determinant route is built on.
LemmaRun run_lemma_suite(int n, int trials, unsigned seed,
                         bool extended = false);
std::string render_lemma(const LemmaRun& r, OutputFormat f);

}  // namespace apoly
