#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "matbeta/partitions.hpp"
#include "matbeta/scaled.hpp"
#include "matbeta/specfun.hpp"

namespace matbeta {

// Hard cap on series degree; requests beyond it raise TruncationCapExceeded.
inline constexpr int kJackDegreeCap = 300;

// j_lambda: product over diagram cells of upper and lower alpha-hooks.
// Normalization constant between the J and C bases.
Scaled hook_product(const Partition& lam, double alpha);

// Incremental evaluator for Jack polynomials in the J basis at a fixed
// real point x = (x_1..x_m).  Works variable-by-variable: the value on j
// variables is a combination of values on j-1 variables over horizontal
// strips.  Levels 1..m-1 are tabulated; level m is evaluated on demand.
//
// Storage is a flat positional index per level when the partition count
// fits in memory (contiguous along the innermost strip loop), and an
// ordered map per level otherwise.
class JackEngine {
 public:
  JackEngine(std::vector<double> x, double alpha, int max_degree,
             bool force_ranked = false);

  int m() const { return m_; }
  double alpha() const { return alpha_; }
  int built() const { return built_; }
  int max_degree() const { return K_; }
  bool dense() const { return dense_; }

  // Tabulates support levels through total weight k.
  void extend_to(int k);

  // J_lambda(x_1..x_m) for |lambda| <= built().  Not cached.
  Scaled eval_top(const Partition& lam);

 private:
  Scaled eval_level(int j, const int* lam, int ell);
  Scaled eval_level_dense(int j, const int* lam, int ell);
  Scaled eval_level_ranked(int j, const int* lam, int ell);
  void walk_row(int j, const int* lam, int ell, int r, int rmax, bool forced,
                int lamj, std::int64_t idx_prev, Scaled beta, int removed);
  void inner_run(int j, const int* lam, int ell, int rmax, bool forced,
                 int lamj, std::int64_t idx_prev, const Scaled& beta,
                 int removed, int lo, int hi);
  void walk_row_ranked(int j, const int* lam, int ell, int r, int rmax,
                       bool forced, int lamj, Scaled beta, int removed);

  double box_factor_static(const int* lam, int ell, int r, int c0) const;
  double box_factor(const int* lam, int ell, int r, int c0) const;
  Scaled row_last_pre(const int* lam, int j) const;

  std::int64_t index_of(const int* lam, int ell, int j) const;
  Scaled prev_level_value(int j, const int* lam, int ell) const;
  Scaled pow_xj(double xj, int n) const;

  int m_ = 0;
  double alpha_ = 1.0;
  int K_ = 0;
  bool dense_ = true;
  int built_ = -1;
  std::vector<double> x_;

  // dense storage, index 0 of the outer vectors unused
  std::vector<std::vector<Scaled>> vals_;
  std::vector<std::vector<std::int64_t>> base_;
  std::vector<std::vector<std::int32_t>> last_;
  std::vector<std::vector<std::int32_t>> budget_;

  // ranked storage
  std::vector<std::map<Partition, Scaled>> mvals_;

  // scratch
  std::vector<int> mu_;
  std::vector<Scaled> pcum_;
  Scaled acc_;
};

// Table of C-normalized Jack polynomial values C_kappa(x) for all
// partitions kappa with |kappa| <= max_degree and length <= m.
// C values sum to (x_1+..+x_m)^k over each weight k.
struct JackTable {
  int m = 0;
  double beta = 1.0;
  double alpha = 2.0;
  int max_degree = 0;
  std::vector<std::vector<Partition>> parts;  // [weight][i], reverse-lex
  std::vector<std::vector<Scaled>> cvals;     // [weight][i]

  const Scaled& c_value(const Partition& kappa) const;
  double c_value_double(const Partition& kappa) const;
};

JackTable jack_table(const std::vector<double>& x, const AlgebraParam& alg,
                     int max_degree, int hard_cap = kJackDegreeCap);

double jack_single(const Partition& kappa, const std::vector<double>& x,
                   const AlgebraParam& alg);

}  // namespace matbeta
