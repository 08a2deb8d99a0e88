#include "matbeta/matvbeta.hpp"

#include <algorithm>
#include <cmath>

#include "matbeta/errors.hpp"

namespace matbeta {

void BetaParams::validate() const {
  alg.validate();
  if (m < 1) throw InvalidInput("BetaParams: m must be positive");
  const double edge = (m - 1) * alg.beta / 2.0;
  if (!(a > edge))
    throw InvalidInput("BetaParams: shape a must exceed (m-1)*beta/2");
  if (!(b > edge))
    throw InvalidInput("BetaParams: shape b must exceed (m-1)*beta/2");
}

namespace {

void check_spectrum_I(const std::vector<double>& w, int m) {
  if (static_cast<int>(w.size()) != m)
    throw ShapeError("type I spectrum length differs from m");
  for (double v : w)
    if (!(v > 0.0 && v < 1.0))
      throw OutsideSupport("type I spectrum must lie strictly inside (0,1)");
}

void check_spectrum_II(const std::vector<double>& l, int m) {
  if (static_cast<int>(l.size()) != m)
    throw ShapeError("type II spectrum length differs from m");
  for (double v : l)
    if (!(v > 0.0))
      throw OutsideSupport("type II spectrum must be strictly positive");
}

double sum_log(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += std::log(x);
  return s;
}

double ln_beta_ratio(const BetaParams& p, double x) {
  return ln_mv_beta(p.m, p.alg.beta, x, p.c0()) -
         ln_mv_beta(p.m, p.alg.beta, p.a, p.b);
}

ExprResult assemble(std::string id, double ln_pref, std::vector<double> upper,
                    std::vector<double> lower, const std::vector<double>& arg,
                    const BetaParams& p, const SeriesControl& ctl) {
  ExprResult r;
  r.id = std::move(id);
  r.series = hyp_pfq(upper, lower, arg, p.alg, ctl);
  r.log_prob.sign = r.series.value.sign;
  r.log_prob.ln = ln_pref + r.series.value.ln;
  r.prob = r.log_prob.value();
  return r;
}

std::vector<double> map_each(const std::vector<double>& v,
                             double (*f)(double)) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = f(v[i]);
  return out;
}

}  // namespace

double log_density_bI(const std::vector<double>& omega, const BetaParams& p) {
  p.validate();
  check_spectrum_I(omega, p.m);
  double s = -ln_mv_beta(p.m, p.alg.beta, p.a, p.b);
  for (double w : omega)
    s += (p.a - p.c0()) * std::log(w) + (p.b - p.c0()) * std::log1p(-w);
  return s;
}

double log_density_bII(const std::vector<double>& lambda, const BetaParams& p) {
  p.validate();
  check_spectrum_II(lambda, p.m);
  double s = -ln_mv_beta(p.m, p.alg.beta, p.a, p.b);
  for (double l : lambda)
    s += (p.a - p.c0()) * std::log(l) - (p.a + p.b) * std::log1p(l);
  return s;
}

ExprResult upper_bI(int variant, const std::vector<double>& omega,
                    const BetaParams& p, const SeriesControl& ctl) {
  p.validate();
  check_spectrum_I(omega, p.m);
  const double c0 = p.c0(), a = p.a, b = p.b;
  const double lnBr = ln_beta_ratio(p, b);
  double slw = sum_log(omega);
  double slc = 0;  // sum log(1 - w)
  for (double w : omega) slc += std::log1p(-w);
  std::string id = "I" + std::to_string(variant);
  switch (variant) {
    case 1:
      return assemble(id, lnBr + b * slc, {b, c0 - a}, {b + c0},
                      map_each(omega, +[](double w) { return 1.0 - w; }), p,
                      ctl);
    case 2:
      return assemble(id, lnBr + b * slc + a * slw, {c0, a + b}, {b + c0},
                      map_each(omega, +[](double w) { return 1.0 - w; }), p,
                      ctl);
    case 3:
      return assemble(id, lnBr + b * slc + (a - c0) * slw, {c0, c0 - a},
                      {b + c0},
                      map_each(omega, +[](double w) { return -(1.0 - w) / w; }),
                      p, ctl);
    default:
      throw InvalidInput("upper_bI: variant must be 1, 2 or 3");
  }
}

ExprResult upper_bII(int variant, const std::vector<double>& lambda,
                     const BetaParams& p, const SeriesControl& ctl) {
  p.validate();
  check_spectrum_II(lambda, p.m);
  const double c0 = p.c0(), a = p.a, b = p.b;
  const double lnBr = ln_beta_ratio(p, b);
  double sll = sum_log(lambda);
  double sl1pl = 0;  // sum log(1 + l)
  double sl1pinv = 0;  // sum log(1 + 1/l)
  for (double l : lambda) {
    sl1pl += std::log1p(l);
    sl1pinv += std::log1p(1.0 / l);
  }
  std::string id = "II" + std::to_string(variant);
  switch (variant) {
    case 1:
      return assemble(id, lnBr - b * sll, {a + b, b}, {b + c0},
                      map_each(lambda, +[](double l) { return -1.0 / l; }), p,
                      ctl);
    case 2:
      return assemble(id, lnBr - b * sll - (a + b - c0) * sl1pinv,
                      {c0 - a, c0}, {b + c0},
                      map_each(lambda, +[](double l) { return -1.0 / l; }), p,
                      ctl);
    case 3:
      return assemble(id, lnBr - b * sl1pl, {c0 - a, b}, {b + c0},
                      map_each(lambda, +[](double l) { return 1.0 / (1.0 + l); }),
                      p, ctl);
    default:
      throw InvalidInput("upper_bII: variant must be 1, 2 or 3");
  }
}

ExprResult lower_bI(int variant, const std::vector<double>& omega,
                    const BetaParams& p, const SeriesControl& ctl) {
  p.validate();
  check_spectrum_I(omega, p.m);
  const double c0 = p.c0(), a = p.a, b = p.b;
  const double lnBr = ln_beta_ratio(p, a);
  double slw = sum_log(omega);
  double slc = 0;
  for (double w : omega) slc += std::log1p(-w);
  std::string id = "LI" + std::to_string(variant);
  switch (variant) {
    case 1:
      return assemble(id, lnBr + a * slw, {a, c0 - b}, {a + c0}, omega, p, ctl);
    case 2:
      return assemble(id, lnBr + a * slw + b * slc, {c0, a + b}, {a + c0},
                      omega, p, ctl);
    case 3:
      return assemble(id, lnBr + a * slw + (b - c0) * slc, {c0, c0 - b},
                      {a + c0},
                      map_each(omega, +[](double w) { return -w / (1.0 - w); }),
                      p, ctl);
    default:
      throw InvalidInput("lower_bI: variant must be 1, 2 or 3");
  }
}

ExprResult lower_bII(int variant, const std::vector<double>& lambda,
                     const BetaParams& p, const SeriesControl& ctl) {
  p.validate();
  check_spectrum_II(lambda, p.m);
  const double c0 = p.c0(), a = p.a, b = p.b;
  const double lnBr = ln_beta_ratio(p, a);
  double sll = sum_log(lambda);
  double sl1pl = 0, sl1pinv = 0;
  for (double l : lambda) {
    sl1pl += std::log1p(l);
    sl1pinv += std::log1p(1.0 / l);
  }
  std::string id = "LII" + std::to_string(variant);
  switch (variant) {
    case 1:
      return assemble(id, lnBr + a * sll, {a + b, a}, {a + c0},
                      map_each(lambda, +[](double l) { return -l; }), p, ctl);
    case 2:
      return assemble(id, lnBr + a * sll - (a + b - c0) * sl1pl, {c0 - b, c0},
                      {a + c0},
                      map_each(lambda, +[](double l) { return -l; }), p, ctl);
    case 3:
      return assemble(id, lnBr - a * sl1pinv, {c0 - b, a}, {a + c0},
                      map_each(lambda, +[](double l) { return l / (1.0 + l); }),
                      p, ctl);
    default:
      throw InvalidInput("lower_bII: variant must be 1, 2 or 3");
  }
}

ConsensusResult merge_expressions(std::vector<ExprResult> exprs) {
  ConsensusResult out;
  std::vector<double> vals;
  for (const auto& e : exprs) {
    bool ok = e.series.status != SeriesStatus::Diverged &&
              e.prob >= -1e-6 && e.prob <= 1.0 + 1e-6;
    if (ok) {
      out.used.push_back(e.id);
      vals.push_back(std::clamp(e.prob, 0.0, 1.0));
    }
  }
  out.exprs = std::move(exprs);
  if (vals.empty())
    throw AllDiverged("upper probability: every display diverged");
  std::sort(vals.begin(), vals.end());
  size_t n = vals.size();
  out.consensus = n % 2 ? vals[n / 2] : 0.5 * (vals[n / 2 - 1] + vals[n / 2]);
  out.spread = vals.back() - vals.front();
  return out;
}

ConsensusResult upper_prob_auto(const std::vector<double>& lambda,
                                const BetaParams& p, const SeriesControl& ctl) {
  p.validate();
  check_spectrum_II(lambda, p.m);
  std::vector<double> omega(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    omega[i] = lambda[i] / (1.0 + lambda[i]);
  std::vector<ExprResult> exprs;
  exprs.reserve(6);
  for (int v : {1, 2, 3}) exprs.push_back(upper_bI(v, omega, p, ctl));
  for (int v : {1, 2, 3}) exprs.push_back(upper_bII(v, lambda, p, ctl));
  return merge_expressions(std::move(exprs));
}

BetaParams df_to_params(int m, int nu_h, int nu_e, const AlgebraParam& alg) {
  if (nu_h < 1 || nu_e < 1)
    throw InvalidInput("df_to_params: degrees of freedom must be positive");
  BetaParams p;
  p.m = m;
  p.a = alg.beta * nu_h / 2.0;
  p.b = alg.beta * nu_e / 2.0;
  p.alg = alg;
  p.validate();
  return p;
}

namespace {

// Eigenvalues of a type I argument, enforcing 0 < Omega < I (both Loewner
// inequalities strict, which is exactly eigenvalues inside (0,1)).
std::vector<double> spectrum_beta1(const SymMatrix& omega, int m) {
  if (omega.dim() != m)
    throw ShapeError("type I argument dimension differs from m");
  std::vector<double> w = eigenvalues_desc(omega);
  if (!(w.back() > 0.0 && w.front() < 1.0))
    throw OutsideSupport(
        "type I argument must satisfy 0 < Omega < I in the Loewner order");
  return w;
}

std::vector<double> spectrum_beta2(const SymMatrix& nabla, int m) {
  if (nabla.dim() != m)
    throw ShapeError("type II argument dimension differs from m");
  std::vector<double> l = eigenvalues_desc(nabla);
  if (!(l.back() > 0.0))
    throw NotPD("type II argument must be positive definite");
  return l;
}

}  // namespace

double log_density_beta1(const SymMatrix& omega, const BetaParams& p) {
  return log_density_bI(spectrum_beta1(omega, p.m), p);
}

double log_density_beta2(const SymMatrix& nabla, const BetaParams& p) {
  return log_density_bII(spectrum_beta2(nabla, p.m), p);
}

ExprResult upper_prob_beta1(const SymMatrix& omega, const BetaParams& p,
                            int variant, const SeriesControl& ctl) {
  return upper_bI(variant, spectrum_beta1(omega, p.m), p, ctl);
}

ExprResult lower_prob_beta1(const SymMatrix& omega, const BetaParams& p,
                            int variant, const SeriesControl& ctl) {
  return lower_bI(variant, spectrum_beta1(omega, p.m), p, ctl);
}

ExprResult upper_prob_beta2(const SymMatrix& nabla, const BetaParams& p,
                            int variant, const SeriesControl& ctl) {
  return upper_bII(variant, spectrum_beta2(nabla, p.m), p, ctl);
}

ExprResult lower_prob_beta2(const SymMatrix& nabla, const BetaParams& p,
                            int variant, const SeriesControl& ctl) {
  return lower_bII(variant, spectrum_beta2(nabla, p.m), p, ctl);
}

ConsensusResult upper_prob_auto(const SymMatrix& arg, MatKind kind,
                                const BetaParams& p, const SeriesControl& ctl) {
  std::vector<double> lambda;
  if (kind == MatKind::TypeI) {
    lambda = spectrum_beta1(arg, p.m);
    for (double& w : lambda) w = w / (1.0 - w);
  } else {
    lambda = spectrum_beta2(arg, p.m);
  }
  return upper_prob_auto(lambda, p, ctl);
}

}  // namespace matbeta
