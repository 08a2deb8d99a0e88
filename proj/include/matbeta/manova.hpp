#pragma once

#include <optional>
#include <vector>

#include "matbeta/matvbeta.hpp"
#include "matbeta/symmat.hpp"

namespace matbeta {

// Multivariate linear model Y = X B + E with n observations, m responses
// and p design columns.  X may be rank deficient (cell means, dummy coding
// with all levels); estimability of a given contrast is checked later.
struct LinearModel {
  Mat y;  // n x m
  Mat x;  // n x p
  void validate() const;  // shapes agree and n >= m + rank(X)
};

// General linear hypothesis C B M = H.  C is q x p with full row rank and
// M is m x g with full column rank.  M empty means the identity, H empty
// means the zero matrix.
struct HypothesisSpec {
  Mat c;
  Mat m;
  Mat h;
};

// Hypothesis and error sums of squares and products with their degrees of
// freedom.  Both matrices are g x g.
struct SSMatrices {
  SymMatrix s_h{0};
  SymMatrix s_e{0};
  int nu_h = 0;
  int nu_e = 0;
  void validate() const;
};

// Least squares coefficients, minimum norm solution when X is singular.
Mat fit(const LinearModel& model);

// S_H = (C B M - H)' [C (X'X)^+ C']^{-1} (C B M - H) with nu_h = q and
// S_E = M' Y' (I - X X^+) Y M with nu_e = n - rank(X).
// Throws NotEstimable when C (X'X)^+ C' is singular.
SSMatrices sums_of_squares(const LinearModel& model, const HypothesisSpec& hyp);

// F_c = S_E^{-1/2} S_H S_E^{-1/2}; requires S_E positive definite.
SymMatrix f_statistic(const SSMatrices& ss);

// U_c = S_H^{1/2} (S_H + S_E)^{-1} S_H^{1/2}; requires S_H + S_E positive
// definite.  Satisfies U_c = I - (I + F_c)^{-1}.
SymMatrix u_statistic(const SSMatrices& ss);

// Critical value tables and the beta parameter mapping assume m <= nu_h.
// When m > nu_h the triple (m, nu_h, nu_e) is replaced by
// (nu_h, m, nu_e + nu_h - m); DegenerateDesign when the new error df is
// not positive.
struct SwappedParams {
  int m = 0;
  int nu_h = 0;
  int nu_e = 0;
  bool swapped = false;
};

SwappedParams swap_parameters(int m, int nu_h, int nu_e);

// Every classical test statistic, written in terms of the eigenvalues
// lambda_i of F_c and theta_i = lambda_i/(1+lambda_i) of U_c.  Determinant
// forms run over all m eigenvalues; trace forms run over the top
// s = min(m, nu_h).  Statistics that need a nonsingular S_H (V and the
// minimum eigenvalue pair) are absent when rank(S_H) < m.
struct CriteriaReport {
  int m = 0;
  int nu_h = 0;
  int nu_e = 0;
  int s = 0;
  int rank_sh = 0;
  std::vector<double> lambda;  // descending, clamped below at zero
  std::vector<double> theta;
  double wilks_lambda = 1.0;                  // |S_E| / |S_E + S_H|
  double wilks_u = 0.0;                       // |S_H| / |S_E + S_H|
  std::optional<double> wilks_v;              // |S_H| / |S_E|
  double lawley_hotelling = 0.0;              // sum of top-s lambda
  double pillai_v = 0.0;                      // sum of top-s theta
  double pillai_w = 0.0;                      // s - pillai_v
  double pillai_h = 1.0;                      // (1 + lawley/s)^{-1}
  double pillai_r = 0.0;                      // harmonic mean of top-s theta
  double pillai_t = 0.0;                      // pillai_r / (1 - pillai_r)
  double roy_lambda_max = 0.0;
  double roy_theta_max = 0.0;
  std::optional<double> anderson_lambda_min;
  std::optional<double> roy_theta_min;
  double dempster_t = 0.0;                    // tr S_H / tr S_E
};

CriteriaReport classical_criteria(const SSMatrices& ss);

// The matrix p-value: consensus of the upper probability displays
// P(F > F_c) under the null distribution of F_c.
struct PValueResult {
  int m = 0;                     // original response dimension
  int s = 0;                     // min(m, nu_h)
  SwappedParams dims;            // parameter triple actually used
  BetaParams params;
  std::vector<double> spectrum;  // eigenvalues fed to the series, size s
  ConsensusResult probs;
  double p_value = 1.0;
  bool trivial_zero_sh = false;  // S_H = 0 short circuit, p-value 1
  bool reject_05 = false;
  bool reject_01 = false;
};

PValueResult matrix_p_value(const SSMatrices& ss, const AlgebraParam& alg,
                            const SeriesControl& ctl = {});

struct ManovaResult {
  CriteriaReport criteria;
  PValueResult pvalue;
};

ManovaResult run_test(const SSMatrices& ss, const AlgebraParam& alg,
                      const SeriesControl& ctl = {});

// Equality of covariance test: S_1, S_2 are independent Wishart SSP
// matrices with nu_1 and nu_2 degrees of freedom; under equality
// S_2^{-1/2} S_1 S_2^{-1/2} is beta type II with (nu_1, nu_2).
ManovaResult cov_equality_test(const SymMatrix& s1, const SymMatrix& s2,
                               int nu1, int nu2, const AlgebraParam& alg,
                               const SeriesControl& ctl = {});

}  // namespace matbeta
