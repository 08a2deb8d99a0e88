#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "matbeta/errors.hpp"
#include "matbeta/jack.hpp"

using namespace matbeta;

namespace {

// ---- slow reference implementation: horizontal-strip recursion with the
// cell-product branching coefficient (upper hook on columns of equal height,
// lower hook elsewhere).  Independent of the production engine's telescoped
// per-box factors.

int colv(const Partition& c, int col) {
  return col - 1 < static_cast<int>(c.size()) ? c[col - 1] : 0;
}

double hooks_slow(const Partition& lam, double alpha) {
  Partition lc = conjugate(lam);
  double j = 1.0;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
    for (int c = 1; c <= lam[i - 1]; ++c) {
      double hstar = colv(lc, c) - i + alpha * (lam[i - 1] - c + 1);
      double hlow = colv(lc, c) - i + 1 + alpha * (lam[i - 1] - c);
      j *= hstar * hlow;
    }
  return j;
}

double beta_slow(const Partition& lam, const Partition& mu, double alpha) {
  Partition lc = conjugate(lam), mc = conjugate(mu);
  double num = 1.0, den = 1.0;
  for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
    for (int c = 1; c <= lam[i - 1]; ++c) {
      bool eq = colv(lc, c) == colv(mc, c);
      num *= eq ? colv(lc, c) - i + alpha * (lam[i - 1] - c + 1)
                : colv(lc, c) - i + 1 + alpha * (lam[i - 1] - c);
    }
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i)
    for (int c = 1; c <= mu[i - 1]; ++c) {
      bool eq = colv(lc, c) == colv(mc, c);
      den *= eq ? colv(mc, c) - i + alpha * (mu[i - 1] - c + 1)
                : colv(mc, c) - i + 1 + alpha * (mu[i - 1] - c);
    }
  return num / den;
}

void strips(const Partition& lam, int maxlen_mu, std::vector<Partition>& out) {
  out.clear();
  int n = static_cast<int>(lam.size());
  if (n > maxlen_mu + 1) return;
  int rows = std::min(n, maxlen_mu);
  std::vector<int> mu(rows);
  std::function<void(int)> rec = [&](int r) {
    if (r == rows) {
      int len = rows;
      while (len > 0 && mu[len - 1] == 0) --len;
      out.emplace_back(mu.begin(), mu.begin() + len);
      return;
    }
    int hi = lam[r];
    int lo = r + 1 < n ? lam[r + 1] : 0;
    for (int v = hi; v >= lo; --v) {
      mu[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
}

double J_slow(const Partition& lam, const std::vector<double>& xs, double alpha,
              std::map<std::pair<Partition, int>, double>& memo) {
  int n = static_cast<int>(xs.size());
  if (static_cast<int>(lam.size()) > n) return 0.0;
  if (lam.empty()) return 1.0;
  auto key = std::make_pair(lam, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  double v;
  if (n == 1) {
    v = std::pow(xs[0], lam[0]);
    for (int t = 1; t < lam[0]; ++t) v *= 1.0 + t * alpha;
  } else {
    std::vector<double> head(xs.begin(), xs.end() - 1);
    std::vector<Partition> mus;
    strips(lam, n - 1, mus);
    v = 0.0;
    int k = weight(lam);
    for (const Partition& mu : mus)
      v += J_slow(mu, head, alpha, memo) * std::pow(xs.back(), k - weight(mu)) *
           beta_slow(lam, mu, alpha);
  }
  memo[key] = v;
  return v;
}

double C_slow(const Partition& lam, const std::vector<double>& xs, double alpha) {
  int k = weight(lam);
  double f = 1.0;
  for (int t = 1; t <= k; ++t) f *= t * alpha;
  std::map<std::pair<Partition, int>, double> memo;
  return f * J_slow(lam, xs, alpha, memo) / hooks_slow(lam, alpha);
}

std::vector<double> random_x(int m, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(m);
  for (auto& v : x) v = u(rng);
  return x;
}

double p1(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v;
  return s;
}
double p2(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("jack");

TEST_CASE("weight <= 2 closed forms in power sums") {
  std::mt19937_64 rng(41);
  for (double beta : {1.0, 2.0, 4.0, 8.0, 3.0}) {
    AlgebraParam alg{beta, beta == 3.0};
    double alpha = 2.0 / beta;
    for (int m : {1, 2, 3, 4}) {
      auto x = random_x(m, rng, -2.0, 2.0);
      auto t = jack_table(x, alg, 2);
      CHECK(t.c_value_double({1}) == doctest::Approx(p1(x)).epsilon(1e-12));
      double c2 = (p1(x) * p1(x) + alpha * p2(x)) / (1.0 + alpha);
      CHECK(t.c_value_double({2}) == doctest::Approx(c2).epsilon(1e-11));
      if (m >= 2) {
        double c11 = alpha * (p1(x) * p1(x) - p2(x)) / (1.0 + alpha);
        CHECK(t.c_value_double({1, 1}) == doctest::Approx(c11).epsilon(1e-11));
      }
      CHECK(t.c_value_double({}) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("engine values match the slow strip recursion") {
  std::mt19937_64 rng(43);
  for (double beta : {1.0, 2.0, 4.0, 3.0}) {
    AlgebraParam alg{beta, beta == 3.0};
    double alpha = 2.0 / beta;
    for (int m : {2, 3, 4}) {
      auto x = random_x(m, rng, -1.5, 1.5);
      int K = m == 4 ? 6 : 7;
      auto t = jack_table(x, alg, K);
      for (int k = 0; k <= K; ++k) {
        for (const Partition& lam : enumerate_partitions(k, m)) {
          double slow = C_slow(lam, x, alpha);
          double fast = t.c_value_double(lam);
          CHECK(fast == doctest::Approx(slow).epsilon(1e-10).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("sum identity: C values of a degree sum to the power of the trace") {
  std::mt19937_64 rng(47);
  struct Draw {
    int K;
    double lo, hi;
  };
  // signed entries at shallow degree, positive entries at deep degree
  for (Draw d : {Draw{10, -2.0, 2.0}, Draw{25, 0.1, 2.0}}) {
    for (double beta : {1.0, 2.0, 4.0, 8.0}) {
      AlgebraParam alg{beta, false};
      for (int m : {2, 3, 4}) {
        auto x = random_x(m, rng, d.lo, d.hi);
        auto t = jack_table(x, alg, d.K);
        for (int k = 1; k <= d.K; ++k) {
          double sum = 0.0, gross = 0.0;
          for (const auto& c : t.cvals[k]) {
            double v = c.to_double();
            sum += v;
            gross += std::fabs(v);
          }
          double target = std::pow(p1(x), k);
          // error floor set by the gross term size, not the cancelled sum
          CHECK(std::fabs(sum - target) <=
                1e-9 * std::max({gross, std::fabs(target), 1.0}));
        }
      }
    }
  }
}

TEST_CASE("sum identity deep in the scaled regime") {
  AlgebraParam alg{1.0, false};
  std::vector<double> x{1.3, 0.7, 0.4};
  auto t = jack_table(x, alg, 60);
  Scaled s = Scaled::zero();
  for (const auto& c : t.cvals[60]) s += c;
  CHECK(s.sign() == 1);
  CHECK(s.log_abs() == doctest::Approx(60.0 * std::log(2.4)).epsilon(1e-10));
}

TEST_CASE("homogeneity of degree k") {
  std::mt19937_64 rng(53);
  AlgebraParam alg{4.0, false};
  auto x = random_x(3, rng, 0.2, 1.5);
  std::vector<double> xs = x;
  const double c = 1.7;
  for (auto& v : xs) v *= c;
  auto t1 = jack_table(x, alg, 6);
  auto t2 = jack_table(xs, alg, 6);
  for (int k = 0; k <= 6; ++k)
    for (size_t i = 0; i < t1.parts[k].size(); ++i) {
      double scale = std::pow(c, k);
      CHECK(t2.cvals[k][i].to_double() ==
            doctest::Approx(t1.cvals[k][i].to_double() * scale).epsilon(1e-11));
    }
}

TEST_CASE("symmetry under permutation of the variables") {
  std::mt19937_64 rng(59);
  AlgebraParam alg{2.0, false};
  auto x = random_x(4, rng, -1.0, 2.0);
  std::vector<double> xp{x[2], x[0], x[3], x[1]};
  auto t1 = jack_table(x, alg, 5);
  auto t2 = jack_table(xp, alg, 5);
  for (int k = 0; k <= 5; ++k)
    for (size_t i = 0; i < t1.parts[k].size(); ++i)
      CHECK(t2.cvals[k][i].to_double() ==
            doctest::Approx(t1.cvals[k][i].to_double()).epsilon(1e-11));
}

TEST_CASE("points containing zeros") {
  AlgebraParam alg{1.0, false};
  std::vector<double> x{0.9, 0.0, 0.4};
  auto t = jack_table(x, alg, 5);
  for (int k = 0; k <= 5; ++k)
    for (const Partition& lam : enumerate_partitions(k, 3)) {
      double slow = C_slow(lam, x, 2.0);
      CHECK(t.c_value_double(lam) == doctest::Approx(slow).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("dense and map-backed storage agree") {
  std::mt19937_64 rng(61);
  auto x = random_x(3, rng, -1.2, 1.8);
  const double alpha = 2.0 / 3.0;
  JackEngine dense(x, alpha, 12);
  JackEngine ranked(x, alpha, 12, /*force_ranked=*/true);
  CHECK(dense.dense());
  CHECK_FALSE(ranked.dense());
  dense.extend_to(12);
  ranked.extend_to(12);
  for (int k = 0; k <= 12; ++k)
    for (const Partition& lam : enumerate_partitions(k, 3)) {
      Scaled a = dense.eval_top(lam);
      Scaled b = ranked.eval_top(lam);
      if (a.is_zero()) {
        CHECK(b.is_zero());
      } else {
        CHECK(b.to_double() == doctest::Approx(a.to_double()).epsilon(1e-12));
      }
    }
}

TEST_CASE("jack_single agrees with the table and validates input") {
  std::mt19937_64 rng(67);
  AlgebraParam alg{1.0, false};
  auto x = random_x(3, rng, 0.1, 1.4);
  auto t = jack_table(x, alg, 6);
  for (const Partition& lam : enumerate_partitions(6, 3))
    CHECK(jack_single(lam, x, alg) ==
          doctest::Approx(t.c_value_double(lam)).epsilon(1e-12));
  CHECK(jack_single({2, 2, 2, 2}, x, alg) == 0.0);  // longer than m
  CHECK_THROWS_AS(jack_single({1, 2}, x, alg), InvalidInput);
  CHECK_THROWS_AS(jack_single({2, 0}, x, alg), InvalidInput);
}

TEST_CASE("binomial style series assembled from the table") {
  // sum_k sum_kappa [a]_kappa C_kappa(x) / k! = prod_i (1 - x_i)^(-a)
  AlgebraParam alg{1.0, false};
  std::vector<double> x{0.3, 0.15};
  double a = 1.7;
  auto t = jack_table(x, alg, 40);
  double total = 0.0, kfact = 1.0;
  for (int k = 0; k <= 40; ++k) {
    if (k) kfact *= k;
    for (size_t i = 0; i < t.parts[k].size(); ++i) {
      auto poch = gen_pochhammer(a, t.parts[k][i], alg.beta);
      total += poch.value * t.cvals[k][i].to_double() / kfact;
    }
  }
  double target = std::pow((1 - x[0]) * (1 - x[1]), -a);
  CHECK(total == doctest::Approx(target).epsilon(1e-10));
}

TEST_CASE("degree caps") {
  std::vector<double> x{0.5, 0.25};
  AlgebraParam alg{1.0, false};
  CHECK_THROWS_AS(jack_table(x, alg, kJackDegreeCap + 1), TruncationCapExceeded);
  CHECK_THROWS_AS(jack_table(x, alg, 50, 40), TruncationCapExceeded);
  JackEngine eng(x, 2.0, 10);
  eng.extend_to(5);
  CHECK_THROWS_AS(eng.eval_top({6}), TruncationCapExceeded);
  CHECK_THROWS_AS(eng.extend_to(11), TruncationCapExceeded);
}

TEST_SUITE_END();
