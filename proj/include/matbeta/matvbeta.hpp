#pragma once

#include <string>
#include <vector>

#include "matbeta/hyper.hpp"
#include "matbeta/specfun.hpp"
#include "matbeta/symmat.hpp"

namespace matbeta {

// Shape parameters of the matrix-variate beta family on m x m symmetric
// matrices over the algebra with dimension beta.  Both shapes must exceed
// (m-1) beta/2 for the normalizing constant to exist.
struct BetaParams {
  int m = 1;
  double a = 1.0;
  double b = 1.0;
  AlgebraParam alg;

  double c0() const { return (m - 1) * alg.beta / 2.0 + 1.0; }
  void validate() const;
};

// Degrees of freedom to shape parameters: a = beta*nu_h/2, b = beta*nu_e/2.
// The single place that mapping lives; swap dfs before calling when needed.
BetaParams df_to_params(int m, int nu_h, int nu_e, const AlgebraParam& alg);

// One evaluated probability display: a positive log prefactor times a
// hypergeometric series.
struct ExprResult {
  std::string id;
  SeriesResult series;
  LogSigned log_prob;
  double prob = 0.0;
};

// log density at a spectrum: type I on (0,1)^m, type II on (0,inf)^m.
double log_density_bI(const std::vector<double>& omega, const BetaParams& p);
double log_density_bII(const std::vector<double>& lambda, const BetaParams& p);

// P(B > Omega) for a type I matrix B, three equivalent displays (variant
// 1..3); omega holds the eigenvalues of Omega.
ExprResult upper_bI(int variant, const std::vector<double>& omega,
                    const BetaParams& p, const SeriesControl& ctl = {});

// P(F > Nabla) for a type II matrix F; lambda holds the eigenvalues.
ExprResult upper_bII(int variant, const std::vector<double>& lambda,
                     const BetaParams& p, const SeriesControl& ctl = {});

// Distribution functions P(B <= Omega), P(F <= Nabla).
ExprResult lower_bI(int variant, const std::vector<double>& omega,
                    const BetaParams& p, const SeriesControl& ctl = {});
ExprResult lower_bII(int variant, const std::vector<double>& lambda,
                     const BetaParams& p, const SeriesControl& ctl = {});

struct ConsensusResult {
  std::vector<ExprResult> exprs;  // every display that was attempted
  std::vector<std::string> used;  // ids of the survivors
  double consensus = 0.0;         // median of the surviving values
  double spread = 0.0;            // max - min over the survivors
};

// Survivor filter and median merge.  A display survives when its series
// did not diverge and its value lands within [-1e-6, 1 + 1e-6]; survivor
// values are clamped to [0,1] before the merge (raw values stay in exprs).
// Throws AllDiverged when nothing survives.
ConsensusResult merge_expressions(std::vector<ExprResult> exprs);

// Runs all six upper probability displays for a type II argument with
// eigenvalues lambda (the type I displays act on lambda/(1+lambda)) and
// merges the survivors.
ConsensusResult upper_prob_auto(const std::vector<double>& lambda,
                                const BetaParams& p,
                                const SeriesControl& ctl = {});

enum class MatKind { TypeI, TypeII };

// Matrix-level entry points.  Every display depends on the argument only
// through its spectrum, so the matrix is reduced to eigenvalues after a
// support check: type I requires 0 < Omega < I in the Loewner order
// (OutsideSupport), type II requires Nabla positive definite (NotPD).
double log_density_beta1(const SymMatrix& omega, const BetaParams& p);
double log_density_beta2(const SymMatrix& nabla, const BetaParams& p);

ExprResult upper_prob_beta1(const SymMatrix& omega, const BetaParams& p,
                            int variant, const SeriesControl& ctl = {});
ExprResult lower_prob_beta1(const SymMatrix& omega, const BetaParams& p,
                            int variant, const SeriesControl& ctl = {});
ExprResult upper_prob_beta2(const SymMatrix& nabla, const BetaParams& p,
                            int variant, const SeriesControl& ctl = {});
ExprResult lower_prob_beta2(const SymMatrix& nabla, const BetaParams& p,
                            int variant, const SeriesControl& ctl = {});

// Six-display merge for a matrix argument of either kind.  A type I argument
// is mapped to type II eigenvalues through lambda = omega/(1-omega), which
// makes both kinds share the same display set.
ConsensusResult upper_prob_auto(const SymMatrix& arg, MatKind kind,
                                const BetaParams& p,
                                const SeriesControl& ctl = {});

}  // namespace matbeta
