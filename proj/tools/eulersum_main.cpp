#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulersum/catalog.hpp"
#include "eulersum/closed_form.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/mellin.hpp"
#include "eulersum/oracles.hpp"
#include "eulersum/specfun.hpp"
#include "eulersum/summation.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Key-value config file: one "name = value" per line, '#' comments.  Keys
// are the SumConfig field names.
void apply_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  eulersum::SumConfig& cfg = eulersum::sum_config();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key;
    std::string eq;
    long long value = 0;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    if (!(ls >> eq)) eq.clear();
    if (eq == "=") {
      if (!(ls >> value))
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": missing value");
    } else {
      std::istringstream vs(eq);
      if (!(vs >> value))
        throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                    ": missing value");
    }
    if (key == "direct_cutoff")
      cfg.direct_cutoff = value;
    else if (key == "pair_cutoff")
      cfg.pair_cutoff = value;
    else if (key == "term_budget")
      cfg.term_budget = value;
    else if (key == "outer_cutoff")
      cfg.outer_cutoff = value;
    else if (key == "inner_cutoff")
      cfg.inner_cutoff = value;
    else
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }
}

std::string format_reports(const std::vector<eulersum::VerificationReport>& rows,
                           const std::string& format) {
  if (format == "json") return eulersum::reports_json(rows);
  if (format == "csv") return eulersum::reports_csv(rows);
  return eulersum::reports_text(rows);
}

int cmd_list(const std::string& format) {
  if (format == "json") {
    std::cout << eulersum::catalog_json() << "\n";
    return 0;
  }
  std::printf("%-8s %-3s %-9s %s\n", "id", "dim", "tol", "rhs");
  for (const auto& ident : eulersum::catalog())
    std::printf("%-8s %-3d %-9.1e %s\n", ident.id.c_str(),
                ident.dimensionality, ident.tolerance,
                cf_render(ident.rhs).c_str());
  return 0;
}

int cmd_show(const std::string& id) {
  const eulersum::Identity& ident = eulersum::find_identity(id);
  std::printf("id:          %s\n", ident.id.c_str());
  std::printf("series:      %s\n", ident.description.c_str());
  std::printf("family:      %s\n", ident.anchor.c_str());
  std::printf("dimensions:  %d\n", ident.dimensionality);
  std::printf("rhs:         %s\n", cf_render(ident.rhs).c_str());
  std::printf("rhs value:   %.15g\n", cf_eval(ident.rhs));
  std::printf("tolerance:   %.1e\n", ident.tolerance);
  return 0;
}

int cmd_verify(const std::string& id, bool all, double tol, bool has_tol,
               const std::string& format, int jobs) {
  std::vector<eulersum::VerificationReport> rows;
  if (all) {
    rows = eulersum::verify_all(jobs);
    if (has_tol) {
      // Re-judge the finished reports against the requested tolerance; the
      // summation targets stay at each entry's own accuracy.
      for (auto& r : rows) {
        r.tolerance = tol;
        r.pass = r.abs_diff <= tol;
      }
    }
  } else {
    rows.push_back(eulersum::verify(
        id, has_tol ? std::optional<double>(tol) : std::nullopt));
  }
  std::cout << format_reports(rows, format);
  for (const auto& r : rows)
    if (!r.pass) return 1;
  return 0;
}

int cmd_theorem1(int k, bool alternating) {
  const eulersum::ClosedForm cf = eulersum::theorem1_closed_form(k, alternating);
  std::printf("%s\n", cf_render(cf).c_str());
  std::printf("%.15g\n", cf_eval(cf));
  return 0;
}

int cmd_constants() {
  struct Row {
    const char* name;
    double value;
    const char* reference;  // printed 6 decimal places
  };
  const Row rows[] = {
      {"gamma", eulersum::euler_gamma(), "0.577216"},
      {"zeta(2)", eulersum::zeta_int(2), "1.644934"},
      {"zeta(3)", eulersum::zeta_int(3), "1.202057"},
      {"catalan", eulersum::catalan(), "0.915966"},
      {"Cl2(pi/3)", eulersum::clausen2(kPi / 3.0), "1.014942"},
  };
  int rc = 0;
  std::printf("%-10s %-20s %-10s %s\n", "name", "computed", "reference", "match");
  for (const auto& r : rows) {
    char rounded[32];
    std::snprintf(rounded, sizeof rounded, "%.6f", r.value);
    const bool ok = std::string(rounded) == r.reference;
    std::printf("%-10s %-20.15f %-10s %s\n", r.name, r.value, r.reference,
                ok ? "yes" : "NO");
    if (!ok) rc = 1;
  }
  return rc;
}

struct OracleOutcome {
  double max_err = 0.0;
  double threshold = 0.0;
};

OracleOutcome oracle_psi() {
  OracleOutcome o{0.0, 1e-10};
  for (int i = 0; i < 50; ++i) {
    const double z = 0.1 + i * (9.9 / 49.0);
    const double ref = eulersum::euler_gamma() + eulersum::digamma(z);
    o.max_err =
        std::max(o.max_err, std::fabs(eulersum::psi_integral(z).value - ref));
  }
  return o;
}

OracleOutcome oracle_polylog() {
  OracleOutcome o{0.0, 1e-9};
  const double zs[] = {-1.0, -0.5, 0.5, 1.0};
  for (int n = 2; n <= 4; ++n)
    for (double z : zs)
      o.max_err = std::max(o.max_err,
                           std::fabs(eulersum::polylog_integral(n, z).value -
                                     eulersum::polylog(n, z)));
  return o;
}

OracleOutcome oracle_polylog_recursive() {
  OracleOutcome o{0.0, 1e-9};
  const double zs[] = {0.25, 0.5, 0.75, 1.0};
  for (int n = 2; n <= 3; ++n)
    for (double z : zs)
      o.max_err = std::max(
          o.max_err, std::fabs(eulersum::polylog_recursive_integral(n, z).value -
                               eulersum::polylog(n, z)));
  return o;
}

OracleOutcome oracle_dilog_sum() {
  OracleOutcome o{0.0, 1e-9};
  const double whole = eulersum::dilog_sum_integral().value;
  o.max_err = std::fabs(whole - eulersum::zeta_int(2));
  const double split = eulersum::dilog_sum_integral(0.0, 0.3).value +
                       eulersum::dilog_sum_integral(0.3, 1.0).value;
  o.max_err = std::max(o.max_err, std::fabs(split - whole));
  return o;
}

OracleOutcome oracle_clausen() {
  OracleOutcome o{0.0, 1e-10};
  for (int i = 0; i < 50; ++i) {
    const double theta = 2.0 * kPi * (i + 0.5) / 50.0;
    o.max_err = std::max(o.max_err,
                         std::fabs(eulersum::clausen_from_dilog(theta).value -
                                   eulersum::clausen2(theta)));
  }
  return o;
}

OracleOutcome oracle_g1_triangle() {
  OracleOutcome o{0.0, 3e-9};
  const double v1 = eulersum::logsine_integral().value;
  const double v2 = eulersum::arcsin_sq_integral().value;
  const eulersum::Identity& g1 = eulersum::find_identity("G1");
  const double v3 =
      eulersum::sum_1d(std::get<eulersum::Summand1D>(g1.lhs), 1e-12).value;
  o.max_err = std::max({std::fabs(v1 - v2), std::fabs(v1 - v3),
                        std::fabs(v2 - v3)});
  return o;
}

OracleOutcome oracle_mellin_forward() {
  OracleOutcome o{0.0, 1e-10};
  const double zs[] = {0.5, 1.0, 2.0};
  for (int k = 0; k <= 4; ++k)
    for (double z : zs) {
      double expect = 1.0;
      for (int i = 2; i <= k; ++i) expect *= i;
      expect /= std::pow(z, k + 1);
      o.max_err = std::max(
          o.max_err,
          std::fabs(eulersum::mellin_forward_example(k, z) - expect) / expect);
    }
  return o;
}

OracleOutcome oracle_mellin_inverse() {
  OracleOutcome o{0.0, 1e-4};
  eulersum::ContourSpec spec;
  spec.height = 200.0;
  const double xs[] = {2.0, std::exp(1.0), 10.0};
  for (int k = 0; k <= 2; ++k)
    for (double x : xs) {
      const double expect = std::pow(std::log(x), k);
      o.max_err = std::max(
          o.max_err,
          std::fabs(eulersum::inverse_mellin_example(k, x, spec) - expect));
    }
  return o;
}

OracleOutcome oracle_factorization() {
  OracleOutcome o{0.0, 1e-3};
  const eulersum::ContourSpec spec;
  const std::complex<double> i1(0.0, 1.0);
  const auto r1 = eulersum::factorization_check(i1, i1, i1, 3.0, 0.5, 0.5, spec);
  const auto r2 = eulersum::factorization_check({1.0, 1.0}, {2.0, 1.0},
                                                {0.5, 2.0}, 2.5, 0.7, 0.7, spec);
  o.max_err = std::max(r1.abs_diff, r2.abs_diff);
  return o;
}

int cmd_oracle(const std::string& name) {
  struct Entry {
    const char* name;
    OracleOutcome (*run)();
  };
  const Entry entries[] = {
      {"psi", oracle_psi},
      {"polylog", oracle_polylog},
      {"polylog-recursive", oracle_polylog_recursive},
      {"dilog-sum", oracle_dilog_sum},
      {"clausen", oracle_clausen},
      {"g1-triangle", oracle_g1_triangle},
      {"mellin-forward", oracle_mellin_forward},
      {"mellin-inverse", oracle_mellin_inverse},
      {"factorization", oracle_factorization},
  };
  int rc = 0;
  bool found = false;
  for (const auto& e : entries) {
    if (name != "all" && name != e.name) continue;
    found = true;
    const OracleOutcome o = e.run();
    const bool ok = o.max_err <= o.threshold;
    std::printf("%-18s max deviation %.3e (threshold %.0e) %s\n", e.name,
                o.max_err, o.threshold, ok ? "PASS" : "FAIL");
    if (!ok) rc = 1;
  }
  if (!found) {
    std::fprintf(stderr, "unknown oracle '%s'; names:", name.c_str());
    for (const auto& e : entries) std::fprintf(stderr, " %s", e.name);
    std::fprintf(stderr, " all\n");
    return 2;
  }
  return rc;
}

int cmd_mellin_forward(int k, double z) {
  std::printf("%.15g\n", eulersum::mellin_forward_example(k, z));
  return 0;
}

int cmd_mellin_inverse(int k, double x, const eulersum::ContourSpec& spec,
                       double tol) {
  std::printf("%.15g\n", eulersum::inverse_mellin_example(k, x, spec, tol));
  return 0;
}

int cmd_mellin_factor(const std::vector<double>& a1,
                      const std::vector<double>& a2,
                      const std::vector<double>& a3, double p, double c1,
                      double c2, const eulersum::ContourSpec& spec) {
  const auto r = eulersum::factorization_check({a1[0], a1[1]}, {a2[0], a2[1]},
                                               {a3[0], a3[1]}, p, c1, c2, spec);
  std::printf("lhs       %.12g %+.12gi\n", r.lhs.real(), r.lhs.imag());
  std::printf("rhs       %.12g %+.12gi\n", r.rhs.real(), r.rhs.imag());
  std::printf("abs_diff  %.3e\n", r.abs_diff);
  std::printf("tail      %.3e\n", r.tail_bound);
  std::printf("refine    %.3e\n", r.refinement_delta);
  return r.abs_diff <= 1e-3 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"series identity verifier"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "key = value file overriding summation cutoffs");

  std::string list_format = "text";
  CLI::App* list = app.add_subcommand("list", "print the identity registry");
  list->add_option("--format", list_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string show_id;
  CLI::App* show = app.add_subcommand("show", "describe one identity");
  show->add_option("id", show_id, "identity id")->required();

  std::string verify_id;
  bool verify_all_flag = false;
  double verify_tol = 0.0;
  std::string verify_format = "text";
  int verify_jobs = 1;
  CLI::App* ver = app.add_subcommand("verify", "evaluate and check identities");
  ver->add_option("id", verify_id, "identity id");
  ver->add_flag("--all", verify_all_flag, "run the whole registry");
  CLI::Option* tol_opt = ver->add_option("--tol", verify_tol, "tolerance override");
  ver->add_option("--format", verify_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  ver->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  int thm_k = 1;
  bool thm_alt = false;
  CLI::App* thm = app.add_subcommand("theorem1", "closed form for one family member");
  thm->add_option("--k", thm_k, "inner multiple, >= 1")->required();
  thm->add_flag("--alternating", thm_alt, "alternating sign pattern");

  app.add_subcommand("constants", "computed constants next to reference digits");

  std::string oracle_name;
  CLI::App* orc = app.add_subcommand("oracle", "run an independent cross-check");
  orc->add_option("name", oracle_name, "check name, or 'all'")->required();

  CLI::App* mel = app.add_subcommand("mellin", "transform-pair and factorization checks");
  mel->require_subcommand(1);
  int mf_k = 0;
  double mf_z = 1.0;
  CLI::App* melf = mel->add_subcommand("forward", "cut power-log transform");
  melf->add_option("--k", mf_k)->required();
  melf->add_option("--z", mf_z)->required();
  int mi_k = 0;
  double mi_x = 2.0, mi_tol = 1e-4;
  eulersum::ContourSpec mi_spec;
  mi_spec.height = 200.0;
  CLI::App* meli = mel->add_subcommand("inverse", "contour inversion");
  meli->add_option("--k", mi_k)->required();
  meli->add_option("--x", mi_x)->required();
  meli->add_option("--abscissa", mi_spec.abscissa);
  meli->add_option("--height", mi_spec.height);
  meli->add_option("--nodes", mi_spec.nodes);
  meli->add_option("--tol", mi_tol);
  std::vector<double> fa1{0.0, 1.0}, fa2{0.0, 1.0}, fa3{0.0, 1.0};
  double fp = 3.0, fc1 = 0.5, fc2 = 0.5;
  eulersum::ContourSpec fspec;
  CLI::App* melx = mel->add_subcommand("factor", "three-term splitting");
  melx->add_option("--a1", fa1, "re im")->expected(2);
  melx->add_option("--a2", fa2, "re im")->expected(2);
  melx->add_option("--a3", fa3, "re im")->expected(2);
  melx->add_option("--p", fp);
  melx->add_option("--c1", fc1);
  melx->add_option("--c2", fc2);
  melx->add_option("--height", fspec.height);
  melx->add_option("--nodes", fspec.nodes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config(config_path);
    if (list->parsed()) return cmd_list(list_format);
    if (show->parsed()) return cmd_show(show_id);
    if (ver->parsed()) {
      if (!verify_all_flag && verify_id.empty()) {
        std::fprintf(stderr, "verify needs an id or --all\n");
        return 2;
      }
      if (verify_all_flag && !verify_id.empty()) {
        std::fprintf(stderr, "verify takes an id or --all, not both\n");
        return 2;
      }
      return cmd_verify(verify_id, verify_all_flag, verify_tol,
                        tol_opt->count() > 0, verify_format, verify_jobs);
    }
    if (thm->parsed()) return cmd_theorem1(thm_k, thm_alt);
    if (app.get_subcommand("constants")->parsed()) return cmd_constants();
    if (orc->parsed()) return cmd_oracle(oracle_name);
    if (mel->parsed()) {
      if (melf->parsed()) return cmd_mellin_forward(mf_k, mf_z);
      if (meli->parsed()) return cmd_mellin_inverse(mi_k, mi_x, mi_spec, mi_tol);
      if (melx->parsed())
        return cmd_mellin_factor(fa1, fa2, fa3, fp, fc1, fc2, fspec);
    }
  } catch (const eulersum::UnknownIdentity& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 2;
}
