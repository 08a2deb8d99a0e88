#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matbeta/errors.hpp"
#include "matbeta/manova.hpp"
#include "matbeta/matrix_io.hpp"
#include "matbeta/matvbeta.hpp"
#include "matbeta/mc_oracle.hpp"
#include "matbeta/report.hpp"

using namespace matbeta;

namespace {

struct CommonOpts {
  double beta = 1.0;
  double alpha = 0.05;
  int max_degree = 0;  // 0 means not set on the command line
  double tol = 1e-12;
  bool table = false;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--beta", o.beta, "algebra dimension")
      ->check(CLI::IsMember({1.0, 2.0, 4.0, 8.0}));
  cmd->add_option("--alpha", o.alpha, "significance level for the exit code")
      ->check(CLI::Range(1e-12, 1.0));
  cmd->add_option("--max-degree", o.max_degree,
                  "series truncation degree (overrides MATBETA_MAX_DEGREE)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "series relative tolerance")
      ->check(CLI::PositiveNumber);
  auto* t = cmd->add_flag("--table", o.table, "human readable output");
  cmd->add_flag("--json", o.json, "JSON report output (default)")
      ->excludes(t);
}

SeriesControl make_control(const CommonOpts& o) {
  SeriesControl ctl;
  if (o.max_degree > 0) {
    ctl.max_degree = o.max_degree;
  } else if (const char* env = std::getenv("MATBETA_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw InvalidInput("MATBETA_MAX_DEGREE must be a positive integer");
    ctl.max_degree = static_cast<int>(v);
  }
  ctl.rel_tol = o.tol;
  return ctl;
}

void print_table(const ReportMeta& meta, const ManovaResult& res) {
  const CriteriaReport& c = res.criteria;
  const PValueResult& p = res.pvalue;
  std::printf("test: m=%d nu_h=%d nu_e=%d beta=%g\n", meta.m, meta.nu_h,
              meta.nu_e, meta.beta);
  if (p.dims.swapped)
    std::printf("parameters swapped to m=%d nu_h=%d nu_e=%d\n", p.dims.m,
                p.dims.nu_h, p.dims.nu_e);
  std::printf("eigenvalues of F_c:");
  for (double l : c.lambda) std::printf(" %.10g", l);
  std::printf("\n\ncriteria:\n");
  std::printf("  %-22s %.10g\n", "wilks_lambda", c.wilks_lambda);
  std::printf("  %-22s %.10g\n", "wilks_u", c.wilks_u);
  if (c.wilks_v) std::printf("  %-22s %.10g\n", "wilks_v", *c.wilks_v);
  std::printf("  %-22s %.10g\n", "lawley_hotelling", c.lawley_hotelling);
  std::printf("  %-22s %.10g\n", "pillai_v", c.pillai_v);
  std::printf("  %-22s %.10g\n", "pillai_w", c.pillai_w);
  std::printf("  %-22s %.10g\n", "pillai_h", c.pillai_h);
  std::printf("  %-22s %.10g\n", "pillai_r", c.pillai_r);
  std::printf("  %-22s %.10g\n", "pillai_t", c.pillai_t);
  std::printf("  %-22s %.10g\n", "roy_lambda_max", c.roy_lambda_max);
  std::printf("  %-22s %.10g\n", "roy_theta_max", c.roy_theta_max);
  if (c.anderson_lambda_min)
    std::printf("  %-22s %.10g\n", "anderson_lambda_min",
                *c.anderson_lambda_min);
  if (c.roy_theta_min)
    std::printf("  %-22s %.10g\n", "roy_theta_min", *c.roy_theta_min);
  std::printf("  %-22s %.10g\n", "dempster_t", c.dempster_t);
  std::printf("\nexpressions:\n");
  std::printf("  %-5s %-11s %6s %13s %10s\n", "id", "status", "degree",
              "value", "radius");
  for (const ExprResult& e : p.probs.exprs)
    std::printf("  %-5s %-11s %6d %13.6e %10.6g\n", e.id.c_str(),
                to_string(e.series.status), e.series.degree, e.prob,
                e.series.radius);
  std::printf("\nconsensus p-value %.10g (spread %.3g, %zu expression%s)\n",
              p.p_value, p.probs.spread, p.probs.used.size(),
              p.probs.used.size() == 1 ? "" : "s");
  std::printf("decision at alpha=%g: %s\n", meta.alpha,
              p.p_value < meta.alpha ? "Reject" : "Retain");
}

int finish(const ReportMeta& meta, const ManovaResult& res, bool table) {
  if (table) {
    print_table(meta, res);
  } else {
    std::fputs(dump_json_17(build_report(meta, res)).c_str(), stdout);
  }
  return res.pvalue.p_value < meta.alpha ? 3 : 0;
}

int run_ss_test(const SSMatrices& ss, const CommonOpts& o,
                const std::string& command) {
  ss.validate();
  AlgebraParam alg{o.beta, false};
  ManovaResult res = run_test(ss, alg, make_control(o));
  ReportMeta meta;
  meta.command = command;
  meta.m = ss.s_h.dim();
  meta.nu_h = ss.nu_h;
  meta.nu_e = ss.nu_e;
  meta.beta = o.beta;
  meta.alpha = o.alpha;
  meta.control = make_control(o);
  return finish(meta, res, o.table);
}

// Data for the built-in reproduction targets, quoted from the upstream
// reference.  The 4x4 matrices are symmetrized copies of the printed
// values, whose mirror entries disagree in the eighth decimal.
struct Reproduction {
  const char* name;
  int dim;
  std::vector<double> fc;  // row major
  int nu_h, nu_e;
  double target;
  const char* radius_note;  // expected divergence radius text, or nullptr
  const char* note;         // extra context printed after the comparison
};

const Reproduction& find_reproduction(const std::string& name) {
  static const std::vector<Reproduction> table = {
      {"1",
       4,
       {0.05322776, -0.01487401, 0.19824861, 0.07238464,
        -0.01487401, 0.38103449, -0.33172370, 0.09765930,
        0.19824861, -0.33172370, 1.61219050, 0.42164487,
        0.07238464, 0.09765930, 0.42164487, 0.87498679},
       5,
       42,
       8.679157e-18,
       "expression II1 diverges; upstream reference quotes radius 38.5102",
       "five expressions terminate at degree zero and give the exact "
       "closed form; expression I2 is truncated near the boundary of its "
       "convergence domain, so the consensus is exact while I2 carries "
       "visible truncation error"},
      {"2A",
       2,
       {0.273464, 0.478255, 0.478255, 0.836411},
       1,
       24,
       2.765e-05,
       nullptr,
       "documented non-reproduction: the upstream reference prints "
       "2.765e-05 for this case, but the rank one closed form "
       "(1+lambda_1)^{-nu_e'/2} after the parameter swap gives 1.8665e-04, "
       "which matches the upstream Roy tail 0.0001867 for the same data; "
       "the computed consensus follows the closed form"},
      {"2B",
       2,
       {0.336837, -0.160550, -0.160550, 0.100913},
       3,
       24,
       0.0119703,
       "expression II1 diverges; upstream reference quotes radius 50.894747",
       "the leading upper parameter vanishes for four expressions, so "
       "their series terminate at degree zero and sum to the prefactor "
       "exactly"},
      {"2AB",
       2,
       {0.028637, 0.027744, 0.027744, 0.043918},
       3,
       24,
       0.4291338,
       "expression II1 diverges; upstream reference quotes radius 133.31874",
       "the leading upper parameter vanishes for four expressions, so "
       "their series terminate at degree zero and sum to the prefactor "
       "exactly"},
      {"3",
       4,
       {0.5164511, -0.1089194, 0.2211275, 0.1108078,
        -0.1089194, 0.7934331, -0.1813041, 0.0948122,
        0.2211275, -0.1813041, 0.9451825, 0.1474816,
        0.1108078, 0.0948122, 0.1474816, 0.4676369},
       31,
       31,
       0.0585654,
       "expressions I1, II1 and II3 diverge, matching the upstream account",
       "covariance equality test; both sample sizes give 31 degrees of "
       "freedom"},
  };
  for (const Reproduction& r : table)
    if (name == r.name) return r;
  throw InvalidInput("unknown example: " + name);
}

int run_reproduce(const std::string& name, const CommonOpts& o) {
  const Reproduction& r = find_reproduction(name);
  SSMatrices ss;
  Mat fc(r.dim, r.dim);
  fc.a = r.fc;
  ss.s_h = SymMatrix(fc);
  ss.s_e = SymMatrix::identity(r.dim);
  ss.nu_h = r.nu_h;
  ss.nu_e = r.nu_e;
  AlgebraParam alg{1.0, false};
  ManovaResult res = run_test(ss, alg, make_control(o));

  const PValueResult& p = res.pvalue;
  std::printf("example %s: m=%d nu_h=%d nu_e=%d\n", r.name, r.dim, r.nu_h,
              r.nu_e);
  std::printf("upstream reference value  %.7e\n", r.target);
  std::printf("computed consensus        %.7e\n", p.p_value);
  std::printf("absolute deviation        %.3e\n",
              std::abs(p.p_value - r.target));
  std::printf("relative deviation        %.3e\n",
              std::abs(p.p_value - r.target) / r.target);
  std::printf("\nexpressions:\n");
  for (const ExprResult& e : p.probs.exprs)
    std::printf("  %-5s %-11s degree %3d  value %13.6e  radius %.6g\n",
                e.id.c_str(), to_string(e.series.status), e.series.degree,
                e.prob, e.series.radius);
  if (r.radius_note) std::printf("\nnote: %s\n", r.radius_note);
  if (r.note) std::printf("note: %s\n", r.note);

  if (o.json) {
    ReportMeta meta;
    meta.command = "reproduce";
    meta.m = r.dim;
    meta.nu_h = r.nu_h;
    meta.nu_e = r.nu_e;
    meta.beta = 1.0;
    meta.alpha = o.alpha;
    meta.control = make_control(o);
    nlohmann::json rep = build_report(meta, res);
    nlohmann::json cmp;
    cmp["example"] = r.name;
    cmp["target"] = r.target;
    cmp["computed"] = p.p_value;
    cmp["abs_deviation"] = std::abs(p.p_value - r.target);
    rep["reproduce"] = cmp;
    std::fputs(dump_json_17(rep).c_str(), stdout);
  }
  return 0;
}

int run_mc(int m, int nu_h, int nu_e, const std::string& nabla_path,
           long long n, unsigned long long seed) {
  McConfig cfg;
  cfg.samples = n;
  cfg.seed = seed;
  cfg.m = m;
  cfg.nu_h = nu_h;
  cfg.nu_e = nu_e;
  SymMatrix nabla = read_sym_matrix_file(nabla_path);
  McEstimate est = estimate_upper_prob(cfg, nabla);
  nlohmann::json out;
  out["estimate"] = est.estimate;
  out["std_error"] = est.std_error;
  out["hits"] = est.hits;
  out["samples"] = est.samples;
  out["seed"] = seed;
  out["m"] = m;
  out["nu_h"] = nu_h;
  out["nu_e"] = nu_e;
  std::fputs(dump_json_17(out).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-variate beta distribution tests"};
  // long-only help; the model subcommand uses --h for the hypothesis target
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  int rc = 0;

  auto* pvalue = app.add_subcommand(
      "pvalue", "matrix p-value from hypothesis and error SSP files");
  std::string sh_path, se_path;
  int nu_h = 0, nu_e = 0;
  CommonOpts pv_opts;
  pvalue->add_option("--sh", sh_path, "hypothesis SSP matrix file")
      ->required();
  pvalue->add_option("--se", se_path, "error SSP matrix file")->required();
  pvalue->add_option("--nu-h", nu_h, "hypothesis degrees of freedom")
      ->required();
  pvalue->add_option("--nu-e", nu_e, "error degrees of freedom")->required();
  add_common(pvalue, pv_opts);
  pvalue->callback([&] {
    SSMatrices ss;
    ss.s_h = read_sym_matrix_file(sh_path);
    ss.s_e = read_sym_matrix_file(se_path);
    ss.nu_h = nu_h;
    ss.nu_e = nu_e;
    rc = run_ss_test(ss, pv_opts, "pvalue");
  });

  auto* fc = app.add_subcommand(
      "fc", "matrix p-value from a precomputed F_c matrix");
  std::string fc_path;
  int fc_nu_h = 0, fc_nu_e = 0;
  bool cov_equality = false;
  CommonOpts fc_opts;
  fc->add_option("--fc", fc_path, "symmetric F_c matrix file")->required();
  fc->add_option("--nu-h", fc_nu_h, "hypothesis degrees of freedom")
      ->required();
  fc->add_option("--nu-e", fc_nu_e, "error degrees of freedom")->required();
  fc->add_flag("--cov-equality", cov_equality,
               "label the run as a covariance equality test");
  add_common(fc, fc_opts);
  fc->callback([&] {
    SSMatrices ss;
    ss.s_h = read_sym_matrix_file(fc_path);
    ss.s_e = SymMatrix::identity(ss.s_h.dim());
    ss.nu_h = fc_nu_h;
    ss.nu_e = fc_nu_e;
    rc = run_ss_test(ss, fc_opts, cov_equality ? "cov-equality" : "fc");
  });

  auto* model = app.add_subcommand(
      "model", "fit a linear model and test a general linear hypothesis");
  model->set_help_flag("--help", "print help and exit");
  std::string y_path, x_path, c_path, m_path, h_path;
  CommonOpts mo_opts;
  model->add_option("--y", y_path, "response matrix file")->required();
  model->add_option("--x", x_path, "design matrix file")->required();
  model->add_option("--c", c_path, "hypothesis row matrix file")->required();
  model->add_option("--m", m_path, "response transform file (default I)");
  model->add_option("--h", h_path, "hypothesis target file (default 0)");
  add_common(model, mo_opts);
  model->callback([&] {
    LinearModel lm;
    lm.y = read_matrix_file(y_path);
    lm.x = read_matrix_file(x_path);
    HypothesisSpec hyp;
    hyp.c = read_matrix_file(c_path);
    if (!m_path.empty()) hyp.m = read_matrix_file(m_path);
    if (!h_path.empty()) hyp.h = read_matrix_file(h_path);
    SSMatrices ss = sums_of_squares(lm, hyp);
    rc = run_ss_test(ss, mo_opts, "model");
  });

  auto* repro = app.add_subcommand(
      "reproduce", "rerun a built-in example and compare with its target");
  std::string example;
  CommonOpts re_opts;
  repro
      ->add_option("--example", example,
                   "which example to rerun: 1, 2A, 2B, 2AB or 3")
      ->required()
      ->check(CLI::IsMember({"1", "2A", "2B", "2AB", "3"}));
  add_common(repro, re_opts);
  repro->callback([&] { rc = run_reproduce(example, re_opts); });

  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo estimate of the upper probability");
  int mc_m = 0, mc_nu_h = 0, mc_nu_e = 0;
  std::string nabla_path;
  long long mc_n = 200000;
  unsigned long long mc_seed = 0;
  mc->add_option("--m", mc_m, "dimension")->required();
  mc->add_option("--nu-h", mc_nu_h, "hypothesis degrees of freedom")
      ->required();
  mc->add_option("--nu-e", mc_nu_e, "error degrees of freedom")->required();
  mc->add_option("--nabla", nabla_path, "threshold matrix file")->required();
  mc->add_option("--n", mc_n, "number of samples");
  mc->add_option("--seed", mc_seed, "generator seed");
  mc->callback(
      [&] { rc = run_mc(mc_m, mc_nu_h, mc_nu_e, nabla_path, mc_n, mc_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const AllDiverged& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NotEstimable& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return rc;
}
