// apoly: exact computation and machine verification of the ASM/TSPP
// symmetric-polynomial family A_n(u,v;x).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "apoly/identity.hpp"
#include "apoly/render.hpp"

using namespace apoly;

namespace {

struct Common {
  int n = 0;
  std::string format = "text";
  std::string out;
  bool extended = false;
  int threads = 1;
  std::string omega = "section4";
};

void add_io_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format: text, json or csv")
      ->default_val("text");
  cmd->add_option("--out", c.out, "write output to this path instead of stdout");
}

OmegaConvention parse_omega(const std::string& name) {
  if (name == "section4") return OmegaConvention::Section4;
  if (name == "theorem") return OmegaConvention::Theorem;
  throw StructuralError("unknown omega convention '" + name +
                        "' (expected section4 or theorem)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw StructuralError("cannot open output file '" + out_path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "apoly: four independent exact routes to the symmetric polynomials "
      "A_n(u,v;x), with ASM and TSPP enumeration data"};
  app.require_subcommand(1);

  Common c;
  std::string routes_csv, partition_text, path_text;
  int trials = 20;
  unsigned seed = 20240101;

  CLI::App* verify = app.add_subcommand(
      "verify", "run the four routes and every cross-check at one n");
  verify->add_option("--n", c.n, "problem size")->required();
  add_io_flags(verify, c);
  verify->add_flag("--extended", c.extended,
                   "lift the desk-scale enumeration guards");
  verify->add_option("--threads", c.threads, "route/enumeration parallelism")
      ->envname("APOLY_THREADS");
  verify->add_option("--omega-convention", c.omega,
                     "weight convention: section4 (consistent) or theorem (off-by-one)");
  verify->add_option("--routes", routes_csv,
                     "comma list restricting the routes: definition, "
                     "determinant, tspp_per_tspp, tspp_per_lambda");

  CLI::App* expand = app.add_subcommand(
      "expand", "Schur expansion table of the definition route");
  expand->add_option("--n", c.n, "problem size")->required();
  add_io_flags(expand, c);
  expand->add_flag("--extended", c.extended,
                   "lift the definition-route guard");

  CLI::App* asm_cmd = app.add_subcommand(
      "asm", "enumerate n x n alternating sign matrices by statistics class");
  asm_cmd->add_option("--n", c.n, "matrix size")->required();
  add_io_flags(asm_cmd, c);
  asm_cmd->add_flag("--extended", c.extended, "lift the n <= 7 guard");
  asm_cmd->add_option("--threads", c.threads, "split the search by top column")
      ->envname("APOLY_THREADS");

  CLI::App* tspp = app.add_subcommand(
      "tspp", "enumerate TSPPs in the (n,n,n)-box with diag, pi and omega");
  tspp->add_option("--n", c.n, "box size")->required();
  add_io_flags(tspp, c);
  tspp->add_flag("--extended", c.extended, "lift the box <= 6 guard");
  tspp->add_option("--omega-convention", c.omega,
                   "weight convention: section4 (consistent) or theorem (off-by-one)");

  CLI::App* dyck = app.add_subcommand(
      "dyck", "Catalan bijection between modified balanced partitions and "
              "Dyck paths");
  dyck->add_option("--partition", partition_text,
                   "comma-separated parts, e.g. 3,2,2,2,1");
  dyck->add_option("--path", path_text,
                   "steps, raw (NNEE) or run-length (N2 E2)");
  dyck->add_option("--n", c.n, "partition size (required with --partition)");
  add_io_flags(dyck, c);

  CLI::App* lemma = app.add_subcommand(
      "lemma", "antisymmetrizer-to-determinant identity on randomized pairs");
  lemma->add_option("--n", c.n, "number of X variables")->required();
  lemma->add_option("--trials", trials, "randomized (f,g) pairs")
      ->default_val(20);
  lemma->add_option("--seed", seed, "rng seed")->default_val(20240101);
  add_io_flags(lemma, c);
  lemma->add_flag("--extended", c.extended, "lift the n <= 5 guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat fmt = parse_format(c.format);

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.extended = c.extended;
      opts.omega = parse_omega(c.omega);
      opts.threads = c.threads;
      opts.routes = split_commas(routes_csv);
      const VerificationReport rep = verify_main(c.n, opts);
      emit(render_report(rep, fmt), c.out);
      return rep.pass ? 0 : 1;
    }

    if (expand->parsed()) {
      const Polynomial a = route_definition(c.n, c.extended);
      emit(render_expansion(c.n, expansion_rows(a, c.n), fmt), c.out);
      return 0;
    }

    if (asm_cmd->parsed()) {
      emit(render_asm_table(c.n, asm_class_table(c.n, c.extended, c.threads),
                            fmt),
           c.out);
      return 0;
    }

    if (tspp->parsed()) {
      emit(render_tspp(c.n, tspp_rows(c.n, c.extended, parse_omega(c.omega)),
                       fmt),
           c.out);
      return 0;
    }

    if (dyck->parsed()) {
      DyckResult result{Partition(), 0, DyckPath(""), false};
      if (!partition_text.empty()) {
        if (c.n < 1)
          throw DomainError("dyck --partition requires --n (partition size)");
        const Partition lam = Partition::parse(partition_text);
        const DyckPath p = dyck_encode(lam, c.n);
        result = DyckResult{lam, c.n, p, dyck_decode(p) == lam};
      } else if (!path_text.empty()) {
        const DyckPath p = DyckPath::parse(path_text);
        const Partition lam = dyck_decode(p);
        result = DyckResult{lam, p.semilength(), p,
                            dyck_encode(lam, p.semilength()) == p};
      } else {
        throw DomainError("dyck: pass --partition or --path");
      }
      emit(render_dyck(result, fmt), c.out);
      return result.roundtrip_ok ? 0 : 1;
    }

    if (lemma->parsed()) {
      const LemmaRun run = run_lemma_suite(c.n, trials, seed, c.extended);
      emit(render_lemma(run, fmt), c.out);
      return (run.specialization_ok && run.failures == 0) ? 0 : 1;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const DivisibilityError& e) {
    std::cerr << "broken identity: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
