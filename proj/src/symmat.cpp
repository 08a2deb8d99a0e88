#include "matbeta/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matbeta/errors.hpp"

namespace matbeta {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat operator*(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw ShapeError("Mat multiply: inner dimensions differ");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      double v = A.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

Mat operator-(const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw ShapeError("Mat subtract: shapes differ");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

Mat operator+(const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw ShapeError("Mat add: shapes differ");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

SymMatrix::SymMatrix(const Mat& m) : n_(m.rows), a_(m.a) {
  if (m.rows != m.cols) throw ShapeError("SymMatrix: matrix not square");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      double v = 0.5 * (at(i, j) + at(j, i));
      at(i, j) = v;
      at(j, i) = v;
    }
}

Mat SymMatrix::to_mat() const {
  Mat m(n_, n_);
  m.a = a_;
  return m;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix s(n);
  for (int i = 0; i < n; ++i) s.at(i, i) = 1.0;
  return s;
}

SymMatrix SymMatrix::diag(const std::vector<double>& d) {
  SymMatrix s(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) s.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return s;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::fabs(v));
  return m;
}

SymMatrix operator-(const SymMatrix& A, const SymMatrix& B) {
  if (A.dim() != B.dim()) throw ShapeError("SymMatrix subtract: dimensions differ");
  SymMatrix C = A;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) C.at(i, j) -= B.at(i, j);
  return C;
}

SymMatrix operator+(const SymMatrix& A, const SymMatrix& B) {
  if (A.dim() != B.dim()) throw ShapeError("SymMatrix add: dimensions differ");
  SymMatrix C = A;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) C.at(i, j) += B.at(i, j);
  return C;
}

EigenDecomposition eigvalsh(const SymMatrix& A) {
  const int n = A.dim();
  Mat a = A.to_mat();
  Mat V = Mat::identity(n);

  if (n > 1) {
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      double off = 0.0, dia = 0.0;
      for (int p = 0; p < n; ++p) {
        dia += a.at(p, p) * a.at(p, p);
        for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
      }
      if (off <= 1e-30 * (dia + off) || off == 0.0) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          double apq = a.at(p, q);
          double app = a.at(p, p), aqq = a.at(q, q);
          if (std::fabs(apq) <= 1e-300) continue;
          double theta = (aqq - app) / (2.0 * apq);
          double t;
          if (std::fabs(theta) > 1e154) {
            t = 0.5 / theta;
          } else {
            t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
          }
          double c = 1.0 / std::sqrt(t * t + 1.0);
          double s = t * c;
          double tau = s / (1.0 + c);
          a.at(p, p) = app - t * apq;
          a.at(q, q) = aqq + t * apq;
          a.at(p, q) = 0.0;
          a.at(q, p) = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k != p && k != q) {
              double akp = a.at(k, p), akq = a.at(k, q);
              a.at(k, p) = akp - s * (akq + tau * akp);
              a.at(p, k) = a.at(k, p);
              a.at(k, q) = akq + s * (akp - tau * akq);
              a.at(q, k) = a.at(k, q);
            }
            double vkp = V.at(k, p), vkq = V.at(k, q);
            V.at(k, p) = vkp - s * (vkq + tau * vkp);
            V.at(k, q) = vkq + s * (vkp - tau * vkq);
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  EigenDecomposition d;
  d.values.resize(n);
  d.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    d.values[k] = a.at(order[k], order[k]);
    for (int r = 0; r < n; ++r) d.vectors.at(r, k) = V.at(r, order[k]);
  }
  return d;
}

std::vector<double> eigenvalues_desc(const SymMatrix& A) {
  return eigvalsh(A).values;
}

namespace {

SymMatrix assemble(const EigenDecomposition& d, const std::vector<double>& f) {
  const int n = static_cast<int>(d.values.size());
  SymMatrix R(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += d.vectors.at(i, k) * f[k] * d.vectors.at(j, k);
      R.at(i, j) = v;
      R.at(j, i) = v;
    }
  return R;
}

double max_abs_eig(const std::vector<double>& vals) {
  double m = 0.0;
  for (double v : vals) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace

SymMatrix sqrt_psd(const SymMatrix& A) {
  auto d = eigvalsh(A);
  double top = max_abs_eig(d.values);
  std::vector<double> f(d.values.size());
  for (size_t i = 0; i < d.values.size(); ++i) {
    double v = d.values[i];
    if (v < -1e-10 * top) throw NotPSD("sqrt_psd: matrix has a negative eigenvalue");
    f[i] = std::sqrt(std::max(v, 0.0));
  }
  return assemble(d, f);
}

SymMatrix sym_inv(const SymMatrix& A) {
  auto d = eigvalsh(A);
  double top = max_abs_eig(d.values);
  double lo = d.values.empty() ? 0.0 : d.values.back();
  if (lo <= 0.0) throw NotPD("sym_inv: matrix not positive definite");
  if (lo <= 1e-12 * top) throw SingularMatrix("sym_inv: matrix numerically singular");
  std::vector<double> f(d.values.size());
  for (size_t i = 0; i < d.values.size(); ++i) f[i] = 1.0 / d.values[i];
  return assemble(d, f);
}

double sym_det(const SymMatrix& A) {
  auto vals = eigenvalues_desc(A);
  double p = 1.0;
  for (double v : vals) p *= v;
  return p;
}

double sym_logdet(const SymMatrix& A) {
  auto vals = eigenvalues_desc(A);
  double top = max_abs_eig(vals);
  double lo = vals.empty() ? 0.0 : vals.back();
  if (lo <= 0.0) throw NotPD("sym_logdet: matrix not positive definite");
  if (lo <= 1e-12 * top) throw SingularMatrix("sym_logdet: matrix numerically singular");
  double s = 0.0;
  for (double v : vals) s += std::log(v);
  return s;
}

Mat pinv(const Mat& A) {
  if (A.rows < A.cols) {
    Mat t = pinv(A.transpose());
    return t.transpose();
  }
  // A = U S V'; A+ = V S^-2 V' A' computed from the small Gram matrix.
  Mat At = A.transpose();
  SymMatrix B{At * A};
  auto d = eigvalsh(B);
  double wmax = d.values.empty() ? 0.0 : std::max(d.values[0], 0.0);
  double cut = 1e-14 * wmax;  // Gram route noise floor, see numeric_rank
  std::vector<double> f(d.values.size());
  for (size_t i = 0; i < d.values.size(); ++i) {
    double w = d.values[i];
    f[i] = (w > cut && w > 0.0) ? 1.0 / w : 0.0;
  }
  SymMatrix Binv = [&] {
    const int n = B.dim();
    SymMatrix R(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = 0.0;
        for (int k = 0; k < n; ++k) v += d.vectors.at(i, k) * f[k] * d.vectors.at(j, k);
        R.at(i, j) = v;
        R.at(j, i) = v;
      }
    return R;
  }();
  return Binv.to_mat() * At;
}

int numeric_rank(const Mat& A, double rel_tol) {
  const Mat& S = A.rows >= A.cols ? A : A.transpose();
  SymMatrix B{S.transpose() * S};
  auto vals = eigenvalues_desc(B);
  double wmax = vals.empty() ? 0.0 : std::max(vals[0], 0.0);
  if (wmax == 0.0) return 0;
  // The Gram spectrum carries O(eps) relative noise, so squared singular
  // value cutoffs below ~1e-14 would count pure roundoff as rank.
  double cut = std::max(rel_tol * rel_tol, 1e-14) * wmax;
  int r = 0;
  for (double w : vals)
    if (w > cut) ++r;
  return r;
}

bool loewner_gt(const SymMatrix& A, const SymMatrix& B, double tol) {
  if (A.dim() != B.dim()) throw ShapeError("loewner_gt: dimensions differ");
  auto vals = eigenvalues_desc(A - B);
  return !vals.empty() && vals.back() > tol;
}

}  // namespace matbeta
