// lmhs-lab: command-line front end over the lmhslab C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmhslab/lmhslab.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

const char* kLatticeGrammar =
    "Lattice spec: summand {'+' summand}, summand := atom ['^' count],\n"
    "atom := U | E8m | E8_MINUS | A1m | A1_MINUS | DEG4 | K3 | PAPER_LAMBDA | <n>.\n"
    "Example: U+E8m^2+A1m";
const char* kCycleGrammar =
    "Cycle file: '#' comments and blank lines ignored; an optional lattice spec\n"
    "line first, then one comma-separated integer vector per line.";
const char* kPolyGrammar =
    "Polynomial: [sign] term {sign term}; term := factor {'*' factor};\n"
    "factor := primary ['^' n]; primary := n ['/' n] | x | y | z | w | '(' poly ')'.\n"
    "The result must be homogeneous and nonzero. '#' lines are ignored.";
const char* kFamilyGrammar =
    "Family file: lines 'f0: POLY' (once) and 'g: POLY [; lambda=p/q]' (any number).";

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lmhs_format format_of(const std::string& s) {
  if (s == "text") return LMHS_FORMAT_TEXT;
  if (s == "dot") return LMHS_FORMAT_DOT;
  return LMHS_FORMAT_JSON;
}

int exit_for(lmhs_status s) {
  switch (s) {
    case LMHS_OK: return 0;
    case LMHS_USAGE: return kExitUsage;
    case LMHS_INPUT: return kExitInput;
    case LMHS_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

// Emits the report (or the error) and returns the process exit code.
int finish(lmhs_status s, lmhs_report* report, const std::string& output) {
  if (s != LMHS_OK) {
    std::cerr << "lmhs-lab: " << lmhs_last_error() << "\n";
    return exit_for(s);
  }
  int code = 0;
  if (output.empty()) {
    std::cout.write(lmhs_report_text(report), static_cast<std::streamsize>(lmhs_report_size(report)));
    std::cout.flush();
  } else {
    std::ofstream out(output, std::ios::binary);
    out.write(lmhs_report_text(report), static_cast<std::streamsize>(lmhs_report_size(report)));
    if (!out) {
      std::cerr << "lmhs-lab: cannot write '" << output << "'\n";
      code = kExitInput;
    }
  }
  lmhs_report_free(report);
  return code;
}

struct Common {
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool allow_dot) {
  std::vector<std::string> formats = {"json", "text"};
  if (allow_dot) formats.push_back("dot");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("--output,-o", c.output, "Write to this file instead of standard output");
}

bool apply_thread_env() {
  const char* env = std::getenv("LMHS_LAB_THREADS");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) return false;
  lmhs_set_thread_limit(static_cast<unsigned>(n));
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic laboratory for K3-type degenerations"};
  app.require_subcommand(1);
  app.footer("Environment: LMHS_LAB_THREADS caps worker threads.\n"
             "Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 internal check failure.");

  // lattice info
  auto* lattice = app.add_subcommand("lattice", "Lattice utilities")->require_subcommand(1);
  Common lattice_info_opts;
  std::string lattice_spec;
  auto* lattice_info = lattice->add_subcommand("info", "Rank, determinant, signature and parity");
  lattice_info->add_option("spec", lattice_spec, "Lattice spec")->required();
  lattice_info->footer(kLatticeGrammar);
  add_common(lattice_info, lattice_info_opts, false);

  // monodromy analyze
  auto* monodromy = app.add_subcommand("monodromy", "Picard-Lefschetz monodromy")->require_subcommand(1);
  Common mono_opts;
  std::string mono_lattice, mono_cycles, mono_mode = "standard";
  unsigned mono_bound = 12, mono_rho = 1;
  auto* analyze = monodromy->add_subcommand("analyze", "T, its analysis, N, weight filtration, Kulikov type");
  analyze->add_option("--lattice", mono_lattice, "Lattice spec (optional if the cycle file names one)");
  analyze->add_option("--cycles", mono_cycles, "Cycle configuration file")->required();
  analyze->add_option("--mode", mono_mode, "paper: N = T - I; standard: log of a unipotent base change")
      ->check(CLI::IsMember({"paper", "standard"}))
      ->capture_default_str();
  analyze->add_option("--base-change-bound", mono_bound, "Largest base-change order tried")
      ->check(CLI::Range(1u, 1000u))
      ->capture_default_str();
  analyze->add_option("--rho-initial", mono_rho, "Picard number before the degeneration")
      ->check(CLI::Range(0u, 20u))
      ->capture_default_str();
  analyze->footer(std::string(kCycleGrammar) + "\n" + kLatticeGrammar);
  add_common(analyze, mono_opts, false);

  // quartic verify | scan | family
  auto* quartic = app.add_subcommand("quartic", "Singular points of quartic surfaces")->require_subcommand(1);
  Common qv_opts, qs_opts, qf_opts;
  std::string qv_poly, qv_point, qs_poly, qf_f0, qf_family, qf_lambda, qf_t;
  std::vector<std::string> qf_g;
  std::int64_t qs_bound = 2, qf_bound = 2;
  auto* verify = quartic->add_subcommand("verify", "Certify one projective point");
  verify->add_option("--poly", qv_poly, "Polynomial file")->required();
  verify->add_option("--point", qv_point, "Point as a,b,c,d or [a:b:c:d] (rationals allowed)")->required();
  verify->footer(kPolyGrammar);
  add_common(verify, qv_opts, false);

  auto* scan = quartic->add_subcommand("scan", "Bounded search for singular points");
  scan->add_option("--poly", qs_poly, "Polynomial file")->required();
  scan->add_option("--bound", qs_bound, "Coordinate height bound")->check(CLI::Range(1, 1000))->capture_default_str();
  scan->footer(kPolyGrammar);
  add_common(scan, qs_opts, false);

  auto* family = quartic->add_subcommand("family", "Scan the fibres f0 + t * sum lambda_i g_i");
  auto* fam_file = family->add_option("--family", qf_family, "Tagged family file");
  auto* f0_opt = family->add_option("--f0", qf_f0, "Polynomial file for f0");
  family->add_option("--g", qf_g, "Polynomial file for a perturbation (repeatable)")->needs(f0_opt);
  family->add_option("--lambda", qf_lambda, "Comma-separated lambda_i, one per --g (default 1)")->needs(f0_opt);
  family->add_option("--t", qf_t, "Comma-separated rational parameter values")->required();
  family->add_option("--bound", qf_bound, "Coordinate height bound")->check(CLI::Range(1, 1000))->capture_default_str();
  fam_file->excludes(f0_opt);
  family->footer(std::string(kFamilyGrammar) + "\n" + kPolyGrammar);
  add_common(family, qf_opts, false);

  // wpr graph | plan
  auto* wpr = app.add_subcommand("wpr", "WPR graph and degeneration chains")->require_subcommand(1);
  Common wg_opts, wp_opts;
  unsigned rho_max = 20, k_max = 1, target = 20;
  std::string wp_lattice = "K3";
  bool wp_attach = false;
  std::int64_t wp_bound = 2;
  auto* graph = wpr->add_subcommand("graph", "Nodes (1,rho) and edges with recipes");
  graph->add_option("--rho-max", rho_max, "Largest Picard number")->check(CLI::Range(1u, 20u))->capture_default_str();
  graph->add_option("--k-max", k_max, "Largest jump per edge")->check(CLI::Range(1u, 20u))->capture_default_str();
  add_common(graph, wg_opts, true);

  auto* plan = wpr->add_subcommand("plan", "Unit-step chain from rho = r to rho = 20");
  plan->add_option("--target-rank", target, "Starting rank r")->required()->check(CLI::Range(1u, 20u));
  plan->add_flag("--attach", wp_attach, "Attach orthogonal (-2)-vectors to the steps");
  plan->add_option("--lattice", wp_lattice, "Lattice for --attach")->capture_default_str();
  plan->add_option("--bound", wp_bound, "Coordinate height bound for --attach")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  plan->footer(kLatticeGrammar);
  add_common(plan, wp_opts, false);

  // claims audit
  auto* claims = app.add_subcommand("claims", "Exact audit of the checkable claims")->require_subcommand(1);
  Common ca_opts;
  std::string only;
  bool isotropic = false;
  std::int64_t ca_bound = 2;
  auto* audit = claims->add_subcommand("audit", "Run the audit in its fixed order");
  audit->add_option("--only", only, "Comma-separated claim ids");
  audit->add_flag("--isotropic", isotropic, "Add the isotropic-cycle companion record");
  audit->add_option("--bound", ca_bound, "Height bound for searches and scans")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  audit->footer(
      "Claim ids: lambda-rank reflection n-squared n-squared-isotropic image-rank-one graded-dims rho-limit\n"
      "rank-n-equals-k picard-jump m-formula node-localization genericity principle conjecture");
  add_common(audit, ca_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!apply_thread_env()) {
    std::cerr << "lmhs-lab: LMHS_LAB_THREADS must be a positive integer\n";
    return kExitUsage;
  }

  try {
    lmhs_report* report = nullptr;
    if (*lattice_info) {
      lmhs_lattice* l = nullptr;
      lmhs_status s = lmhs_lattice_parse(lattice_spec.c_str(), &l);
      if (s == LMHS_OK) {
        s = lmhs_lattice_info(l, format_of(lattice_info_opts.format), &report);
        lmhs_lattice_free(l);
      }
      return finish(s, report, lattice_info_opts.output);
    }
    if (*analyze) {
      const std::string text = read_file(mono_cycles);
      lmhs_lattice* l = nullptr;
      lmhs_status s = LMHS_OK;
      if (!mono_lattice.empty()) s = lmhs_lattice_parse(mono_lattice.c_str(), &l);
      if (s == LMHS_OK)
        s = lmhs_monodromy_analyze(l, text.c_str(), mono_mode == "paper" ? LMHS_LOG_PAPER : LMHS_LOG_STANDARD,
                                   mono_bound, mono_rho, format_of(mono_opts.format), &report);
      lmhs_lattice_free(l);
      return finish(s, report, mono_opts.output);
    }
    if (*verify) {
      const std::string poly = read_file(qv_poly);
      const lmhs_status s = lmhs_quartic_verify(poly.c_str(), qv_point.c_str(), format_of(qv_opts.format), &report);
      return finish(s, report, qv_opts.output);
    }
    if (*scan) {
      const std::string poly = read_file(qs_poly);
      const lmhs_status s = lmhs_quartic_scan(poly.c_str(), qs_bound, format_of(qs_opts.format), &report);
      return finish(s, report, qs_opts.output);
    }
    if (*family) {
      std::string text;
      if (!qf_family.empty()) {
        text = read_file(qf_family);
      } else if (!qf_f0.empty()) {
        std::vector<std::string> lambdas;
        if (!qf_lambda.empty()) {
          std::stringstream ss(qf_lambda);
          for (std::string item; std::getline(ss, item, ',');) lambdas.push_back(item);
          if (lambdas.size() != qf_g.size()) {
            std::cerr << "lmhs-lab: --lambda needs one value per --g\n";
            return kExitUsage;
          }
        }
        auto one_line = [](std::string s) {
          std::string out;
          std::stringstream ss(s);
          for (std::string line; std::getline(ss, line);) {
            const auto a = line.find_first_not_of(" \t\r");
            if (a != std::string::npos && line[a] != '#') out += line + " ";
          }
          return out;
        };
        text = "f0: " + one_line(read_file(qf_f0)) + "\n";
        for (std::size_t i = 0; i < qf_g.size(); ++i) {
          text += "g: " + one_line(read_file(qf_g[i]));
          if (!lambdas.empty()) text += "; lambda=" + lambdas[i];
          text += "\n";
        }
      } else {
        std::cerr << "lmhs-lab: quartic family needs --family or --f0\n";
        return kExitUsage;
      }
      const lmhs_status s =
          lmhs_quartic_family(text.c_str(), qf_t.c_str(), qf_bound, format_of(qf_opts.format), &report);
      return finish(s, report, qf_opts.output);
    }
    if (*graph) {
      const lmhs_status s = lmhs_wpr_graph(rho_max, k_max, format_of(wg_opts.format), &report);
      return finish(s, report, wg_opts.output);
    }
    if (*plan) {
      lmhs_lattice* l = nullptr;
      lmhs_status s = LMHS_OK;
      if (wp_attach) s = lmhs_lattice_parse(wp_lattice.c_str(), &l);
      if (s == LMHS_OK) s = lmhs_wpr_plan(target, l, wp_bound, format_of(wp_opts.format), &report);
      lmhs_lattice_free(l);
      return finish(s, report, wp_opts.output);
    }
    if (*audit) {
      const lmhs_status s = lmhs_claims_audit(only.empty() ? nullptr : only.c_str(), isotropic ? 1 : 0, ca_bound,
                                              format_of(ca_opts.format), &report);
      return finish(s, report, ca_opts.output);
    }
  } catch (const InputError& e) {
    std::cerr << "lmhs-lab: " << e.message << "\n";
    return kExitInput;
  }
  std::cerr << app.help();
  return kExitUsage;
}
