#include "apoly/render.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

namespace apoly {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

/// "1 · u^2 (1-u-v)^0 v^1"
std::string weight_text(const FactoredWeight& w) {
  return to_string(w.unit) + " · u^" + std::to_string(w.alpha) +
         " (1-u-v)^" + std::to_string(w.beta) + " v^" +
         std::to_string(w.gamma);
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int v : p.parts()) a.push_back(v);
  return a;
}

json expansion_row_json(const ExpansionRow& row) {
  json j;
  j["partition"] = partition_json(row.lambda);
  j["frobenius"] = row.frobenius.to_string();
  j["coefficient"] = row.coefficient;
  if (row.factored.has_value()) {
    j["factored"] = {{"unit", to_string(row.factored->unit)},
                     {"alpha", row.factored->alpha},
                     {"beta", row.factored->beta},
                     {"gamma", row.factored->gamma}};
  } else {
    j["factored"] = nullptr;
  }
  j["lgv"] = to_string(row.lgv);
  return j;
}

void expansion_text_lines(const std::vector<ExpansionRow>& rows,
                          std::ostringstream& out) {
  for (const auto& row : rows) {
    out << "  lambda=" << row.lambda.to_string()
        << "  frob=" << row.frobenius.to_string() << "  weight=";
    if (row.factored.has_value())
      out << weight_text(*row.factored);
    else
      out << "-";
    out << "  lgv=" << to_string(row.lgv) << "  coeff=" << row.coefficient
        << "\n";
  }
}

std::string expansion_csv(const std::vector<ExpansionRow>& rows) {
  std::ostringstream out;
  out << "lambda,frobenius,coefficient,unit,alpha,beta,gamma,lgv\n";
  for (const auto& row : rows) {
    out << csv_quote(row.lambda.to_string()) << ','
        << csv_quote(row.frobenius.to_string()) << ','
        << csv_quote(row.coefficient) << ',';
    if (row.factored.has_value()) {
      out << to_string(row.factored->unit) << ',' << row.factored->alpha << ','
          << row.factored->beta << ',' << row.factored->gamma;
    } else {
      out << ",,,";
    }
    out << ',' << to_string(row.lgv) << "\n";
  }
  return out.str();
}

const char* omega_name(OmegaConvention c) {
  return c == OmegaConvention::Section4 ? "section4" : "theorem";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw StructuralError("unknown format '" + name + "'");
}

std::string render_report(const VerificationReport& rep, OutputFormat f) {
  if (f == OutputFormat::Csv) return expansion_csv(rep.expansion);
  if (f == OutputFormat::Json) {
    json j;
    j["n"] = rep.n;
    j["omega_convention"] = omega_name(rep.omega);
    json routes = json::object();
    for (const auto& [name, info] : rep.routes)
      routes[name] = {{"hash", info.hash}, {"millis", info.millis}};
    j["routes"] = routes;
    j["equal"] = rep.equal;
    json pw = json::array();
    for (const auto& p : rep.pairwise)
      pw.push_back({{"left", p.left}, {"right", p.right}, {"equal", p.equal}});
    j["pairwise"] = pw;
    if (rep.first_diff.has_value()) {
      j["first_diff"] = {{"left", rep.first_diff->left},
                         {"right", rep.first_diff->right},
                         {"monomial", rep.first_diff->monomial},
                         {"left_coefficient", rep.first_diff->left_coefficient},
                         {"right_coefficient", rep.first_diff->right_coefficient}};
    } else {
      j["first_diff"] = nullptr;
    }
    json exp = json::array();
    for (const auto& row : rep.expansion) exp.push_back(expansion_row_json(row));
    j["expansion"] = exp;
    j["expansion_matches_cdet"] = rep.expansion_ran ? json(rep.expansion_matches_cdet) : json(nullptr);
    j["support_matches_lgv"] = rep.expansion_ran ? json(rep.support_matches_lgv) : json(nullptr);
    j["factored_matches_lgv"] = rep.expansion_ran ? json(rep.factored_matches_lgv) : json(nullptr);
    if (rep.refined.ran) {
      json r;
      r["asm_total"] = to_string(rep.refined.asm_total);
      r["uvz_match"] = rep.refined.uvz_match;
      r["t_match"] = rep.refined.t_match;
      if (rep.refined.first_mismatch.has_value()) {
        const auto& m = *rep.refined.first_mismatch;
        r["first_mismatch"] = {{"a", m[0]}, {"b", m[1]}, {"i", m[2]}};
      } else {
        r["first_mismatch"] = nullptr;
      }
      j["refined"] = r;
    } else {
      j["refined"] = nullptr;
    }
    j["pass"] = rep.pass;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "four-route verification\n";
  out << "n: " << rep.n << "\n";
  out << "omega-convention: " << omega_name(rep.omega) << "\n";
  out << "routes:\n";
  for (const auto& [name, info] : rep.routes)
    out << "  " << name << "  sha256=" << info.hash << "\n";
  out << "route-equality: " << yesno(rep.equal) << "\n";
  if (rep.first_diff.has_value()) {
    out << "first-diff: " << rep.first_diff->left << " vs "
        << rep.first_diff->right << "  monomial " << rep.first_diff->monomial
        << "  coefficients " << rep.first_diff->left_coefficient << " vs "
        << rep.first_diff->right_coefficient << "\n";
  }
  if (rep.expansion_ran) {
    out << "schur-expansion: " << rep.expansion.size() << " terms\n";
    expansion_text_lines(rep.expansion, out);
    out << "coefficient-determinant-match: "
        << yesno(rep.expansion_matches_cdet) << "\n";
    out << "support-matches-lgv: " << yesno(rep.support_matches_lgv) << "\n";
    out << "weights-match-lgv: " << yesno(rep.factored_matches_lgv) << "\n";
  }
  if (rep.refined.ran) {
    out << "refined: asm-total=" << to_string(rep.refined.asm_total)
        << " uvz-match=" << yesno(rep.refined.uvz_match)
        << " t-match=" << yesno(rep.refined.t_match);
    if (rep.refined.first_mismatch.has_value()) {
      const auto& m = *rep.refined.first_mismatch;
      out << " first-mismatch=(a=" << m[0] << ",b=" << m[1] << ",i=" << m[2]
          << ")";
    }
    out << "\n";
  }
  out << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::vector<ExpansionRow> expansion_rows(const Polynomial& route_poly, int n) {
  std::vector<ExpansionRow> rows;
  const SchurExpansion expansion = schur_expand(route_poly, n);
  for (const auto& [lam, coeff] : expansion.coefficients())
    rows.push_back(ExpansionRow{lam, to_frobenius(lam), coeff.render(),
                                factor_uwv(coeff), lgv_count(lam)});
  return rows;
}

std::string render_expansion(int n, const std::vector<ExpansionRow>& rows,
                             OutputFormat f) {
  if (f == OutputFormat::Csv) return expansion_csv(rows);
  if (f == OutputFormat::Json) {
    json j;
    j["n"] = n;
    json exp = json::array();
    for (const auto& row : rows) exp.push_back(expansion_row_json(row));
    j["expansion"] = exp;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "schur expansion of A_" << n << ": " << rows.size() << " terms\n";
  expansion_text_lines(rows, out);
  return out.str();
}

std::string render_asm_table(int n, const std::vector<AsmClass>& table,
                             OutputFormat f) {
  if (f == OutputFormat::Json) {
    json rows = json::array();
    long long total = 0;
    for (const auto& c : table) {
      rows.push_back({{"top_col", c.top_col},
                      {"minus_count", c.minus_count},
                      {"inv", c.inv},
                      {"inv_c", c.inv_c},
                      {"count", c.count}});
      total += c.count;
    }
    json j;
    j["n"] = n;
    j["classes"] = rows;
    j["total"] = total;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == OutputFormat::Csv) {
    out << "n,top_col,minus_count,inv,inv_c,count\n";
    for (const auto& c : table)
      out << n << ',' << c.top_col << ',' << c.minus_count << ',' << c.inv
          << ',' << c.inv_c << ',' << c.count << "\n";
    return out.str();
  }
  long long total = 0;
  for (const auto& c : table) total += c.count;
  out << "asm classes for n=" << n << " (" << total << " matrices)\n";
  for (const auto& c : table)
    out << "  top_col=" << c.top_col << " minus=" << c.minus_count
        << " inv=" << c.inv << " inv_c=" << c.inv_c << " count=" << c.count
        << "\n";
  return out.str();
}

std::vector<TsppRow> tspp_rows(int box, bool extended, OmegaConvention conv) {
  std::vector<TsppRow> rows;
  enumerate_tspps(box, extended, [&](const Tspp& t) {
    const Partition pi = tspp_pi(t, box + 1);
    rows.push_back(TsppRow{t.rows(), tspp_diag(t), pi, to_frobenius(pi),
                           omega(pi, box + 1, conv)});
  });
  return rows;
}

std::string render_tspp(int box, const std::vector<TsppRow>& rows,
                        OutputFormat f) {
  auto matrix_text = [](const std::vector<std::vector<int>>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (j) s += ',';
        s += std::to_string(m[i][j]);
      }
    }
    s += ']';
    return s;
  };
  if (f == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["matrix"] = r.matrix;
      j["diag"] = partition_json(r.diag);
      j["pi"] = {{"parts", partition_json(r.pi)},
                 {"padded", r.pi.to_string_padded(box + 1)},
                 {"frobenius", r.frobenius.to_string()}};
      j["omega"] = {{"alpha", r.weight.alpha},
                    {"beta", r.weight.beta},
                    {"gamma", r.weight.gamma}};
      arr.push_back(j);
    }
    json j;
    j["box"] = box;
    j["count"] = rows.size();
    j["tspps"] = arr;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == OutputFormat::Csv) {
    out << "index,matrix,diag,pi,frobenius,alpha,beta,gamma\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << i << ',' << csv_quote(matrix_text(r.matrix)) << ','
          << csv_quote(r.diag.to_string()) << ','
          << csv_quote(r.pi.to_string()) << ','
          << csv_quote(r.frobenius.to_string()) << ',' << r.weight.alpha << ','
          << r.weight.beta << ',' << r.weight.gamma << "\n";
    }
    return out.str();
  }
  out << "tspps in the (" << box << "," << box << "," << box << ")-box: "
      << rows.size() << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << "  T[" << i << "] matrix=" << matrix_text(r.matrix)
        << " diag=" << r.diag.to_string() << " pi=" << r.pi.to_string()
        << " frob=" << r.frobenius.to_string() << " omega=(u^" << r.weight.alpha
        << ",(1-u-v)^" << r.weight.beta << ",v^" << r.weight.gamma << ")\n";
  }
  return out.str();
}

std::string render_dyck(const DyckResult& d, OutputFormat f) {
  if (f == OutputFormat::Json) {
    json j;
    j["partition"] = partition_json(d.partition);
    j["n"] = d.n;
    j["steps"] = d.path.steps();
    j["run_length"] = d.path.run_length();
    j["roundtrip_ok"] = d.roundtrip_ok;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == OutputFormat::Csv) {
    out << "partition,n,steps,run_length,roundtrip_ok\n";
    out << csv_quote(d.partition.to_string()) << ',' << d.n << ','
        << csv_quote(d.path.steps()) << ',' << csv_quote(d.path.run_length())
        << ',' << (d.roundtrip_ok ? "1" : "0") << "\n";
    return out.str();
  }
  out << d.path.run_length() << "\n";
  out << "partition: " << d.partition.to_string() << "  n: " << d.n
      << "  roundtrip: " << (d.roundtrip_ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

LemmaRun run_lemma_suite(int n, int trials, unsigned seed, bool extended) {
  auto lvs = lemma_varset();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cf(-3, 3);
  auto rand_poly = [&] {
    std::vector<Term> terms;
    for (int d = 0; d <= 3; ++d) {
      ExpVec e = ExpVec::zero();
      e.lanes[2] = static_cast<std::uint16_t>(d);
      const int c = cf(rng);
      if (c != 0) terms.push_back(Term{e, Int(c)});
    }
    return Polynomial::from_terms(lvs, std::move(terms));
  };

  LemmaRun run{n, trials, seed, false, 0};
  for (int t = 0; t < trials; ++t)
    if (!lemma_check(rand_poly(), rand_poly(), n, extended).equal)
      ++run.failures;

  const Polynomial u = Polynomial::variable(lvs, "u");
  const Polynomial v = Polynomial::variable(lvs, "v");
  const Polynomial X = Polynomial::variable(lvs, "X");
  const Polynomial f3 = u * X;
  const Polynomial g3 = -(Polynomial::constant(lvs, 1) - u - v) - v * X;
  run.specialization_ok = lemma_check(f3, g3, n, extended).equal;
  return run;
}

std::string render_lemma(const LemmaRun& r, OutputFormat f) {
  const bool pass = r.specialization_ok && r.failures == 0;
  if (f == OutputFormat::Json) {
    json j;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["failures"] = r.failures;
    j["specialization_ok"] = r.specialization_ok;
    j["pass"] = pass;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (f == OutputFormat::Csv) {
    out << "n,trials,seed,failures,specialization_ok,pass\n";
    out << r.n << ',' << r.trials << ',' << r.seed << ',' << r.failures << ','
        << (r.specialization_ok ? "1" : "0") << ',' << (pass ? "1" : "0")
        << "\n";
    return out.str();
  }
  out << "lemma check at n=" << r.n << ": " << r.trials
      << " randomized pairs, seed " << r.seed << "\n";
  out << "failures: " << r.failures << "\n";
  out << "specialization pair: " << (r.specialization_ok ? "pass" : "FAIL")
      << "\n";
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace apoly
