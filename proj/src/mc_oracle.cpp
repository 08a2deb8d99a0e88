#include "matbeta/mc_oracle.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "matbeta/errors.hpp"

namespace matbeta {

namespace {

// All sampling primitives are pinned here rather than taken from
// <random>'s distributions, whose algorithms vary across standard
// library implementations.  With mt19937_64 fixed by the standard this
// keeps a (seed, build) pair fully reproducible.

// splitmix64 finalizer, used to derive independent block seeds.
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform on [0, 1): top 53 bits of the engine output.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal by the polar (Marsaglia) variant of Box-Muller; the
// spare deviate is cached in *spare between calls.
double standard_normal(std::mt19937_64& rng, double* spare, bool* has_spare) {
  if (*has_spare) {
    *has_spare = false;
    return *spare;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01(rng) - 1.0;
    v = 2.0 * uniform01(rng) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  *spare = v * f;
  *has_spare = true;
  return u * f;
}

struct NormalSource {
  std::mt19937_64 rng;
  double spare = 0.0;
  bool has_spare = false;
  explicit NormalSource(std::uint64_t seed) : rng(seed) {}
  double normal() { return standard_normal(rng, &spare, &has_spare); }
  double uniform() { return uniform01(rng); }
};

// Gamma(alpha, 1) by Marsaglia-Tsang squeeze; alpha < 1 goes through the
// boost gamma(alpha + 1) * U^{1/alpha}.
double gamma_mt(NormalSource& src, double alpha) {
  if (alpha < 1.0) {
    double u;
    do {
      u = src.uniform();
    } while (u == 0.0);
    return gamma_mt(src, alpha + 1.0) * std::pow(u, 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = src.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = src.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

// chi(df) = sqrt(chi-square with df degrees of freedom)
double chi_deviate(NormalSource& src, double df) {
  return std::sqrt(2.0 * gamma_mt(src, 0.5 * df));
}

SymMatrix wishart_draw(int m, int nu, NormalSource& src) {
  SymMatrix w(m);
  if (nu >= m) {
    // Bartlett: W = T T' with T lower triangular, chi diagonal.
    std::vector<double> t(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < i; ++j)
        t[static_cast<std::size_t>(i) * m + j] = src.normal();
      t[static_cast<std::size_t>(i) * m + i] = chi_deviate(src, nu - i);
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0.0;
        for (int k = 0; k <= j; ++k)
          s += t[static_cast<std::size_t>(i) * m + k] *
               t[static_cast<std::size_t>(j) * m + k];
        w.at(i, j) = s;
        w.at(j, i) = s;
      }
  } else {
    // Rank-nu outer product of Gaussian columns.
    std::vector<double> g(static_cast<std::size_t>(m) * nu);
    for (double& x : g) x = src.normal();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0.0;
        for (int k = 0; k < nu; ++k)
          s += g[static_cast<std::size_t>(i) * nu + k] *
               g[static_cast<std::size_t>(j) * nu + k];
        w.at(i, j) = s;
        w.at(j, i) = s;
      }
  }
  return w;
}

}  // namespace

void McConfig::validate() const {
  if (m < 1) throw InvalidInput("mc: dimension m must be positive");
  if (nu_h < 1 || nu_e < 1)
    throw InvalidInput("mc: degrees of freedom must be positive");
  if (nu_e < m)
    throw InvalidInput("mc: need nu_e >= m for an invertible error matrix");
  if (samples < 1000) throw InvalidInput("mc: need at least 1000 samples");
}

SymMatrix sample_wishart(int m, int nu, std::mt19937_64& rng) {
  if (m < 1) throw InvalidInput("sample_wishart: dimension must be positive");
  if (nu < 1)
    throw InvalidInput("sample_wishart: degrees of freedom must be positive");
  NormalSource src(0);
  src.rng = rng;
  SymMatrix w = wishart_draw(m, nu, src);
  rng = src.rng;  // hand the advanced state back to the caller
  return w;
}

McEstimate estimate_upper_prob(const McConfig& cfg, const SymMatrix& nabla) {
  cfg.validate();
  if (nabla.dim() != cfg.m)
    throw ShapeError("mc: threshold matrix dimension does not match m");
  {
    std::vector<double> ev = eigenvalues_desc(nabla);
    if (!(ev.back() > 0.0))
      throw NotPD("mc: threshold matrix must be positive definite");
  }

  constexpr long long kBlock = 10000;
  const long long n_blocks = (cfg.samples + kBlock - 1) / kBlock;
  long long hits = 0;
  for (long long b = 0; b < n_blocks; ++b) {
    NormalSource src(splitmix64(cfg.seed + static_cast<std::uint64_t>(b)));
    const long long in_block = std::min(kBlock, cfg.samples - b * kBlock);
    for (long long s = 0; s < in_block; ++s) {
      SymMatrix sh = wishart_draw(cfg.m, cfg.nu_h, src);
      SymMatrix se = wishart_draw(cfg.m, cfg.nu_e, src);
      // Symmetric root, not Cholesky: keeps the quotient well defined
      // even when roundoff nudges a tiny eigenvalue.
      EigenDecomposition ed = eigvalsh(se);
      SymMatrix inv_root(cfg.m);
      for (int i = 0; i < cfg.m; ++i)
        for (int j = 0; j <= i; ++j) {
          double sum = 0.0;
          for (int k = 0; k < cfg.m; ++k)
            sum += ed.vectors.at(i, k) * ed.vectors.at(j, k) /
                   std::sqrt(ed.values[static_cast<std::size_t>(k)]);
          inv_root.at(i, j) = sum;
          inv_root.at(j, i) = sum;
        }
      Mat f3 = inv_root.to_mat() * sh.to_mat() * inv_root.to_mat();
      SymMatrix f(f3);
      if (loewner_gt(f, nabla, 0.0)) ++hits;
    }
  }

  McEstimate out;
  out.hits = hits;
  out.samples = cfg.samples;
  out.estimate = static_cast<double>(hits) / static_cast<double>(cfg.samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                            static_cast<double>(cfg.samples));
  return out;
}

}  // namespace matbeta
