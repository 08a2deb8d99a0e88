#pragma once

#include <vector>

namespace matbeta {

// Dense rectangular matrix, row major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  Mat transpose() const;
};

Mat operator*(const Mat& A, const Mat& B);
Mat operator-(const Mat& A, const Mat& B);
Mat operator+(const Mat& A, const Mat& B);

// Symmetric matrix stored as full dense array.  Construction symmetrizes
// (A + A') / 2; callers that need a symmetry *check* do it at the boundary.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}
  explicit SymMatrix(const Mat& m);

  int dim() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Mat to_mat() const;
  static SymMatrix identity(int n);
  static SymMatrix diag(const std::vector<double>& d);

  double trace() const;
  double max_abs() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

SymMatrix operator-(const SymMatrix& A, const SymMatrix& B);
SymMatrix operator+(const SymMatrix& A, const SymMatrix& B);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Mat vectors;                 // column k is the eigenvector of values[k]
};

// Cyclic Jacobi.  Deterministic sweep order, eigenvalues sorted descending.
EigenDecomposition eigvalsh(const SymMatrix& A);

std::vector<double> eigenvalues_desc(const SymMatrix& A);

// Symmetric PSD square root via eigendecomposition.  Eigenvalues slightly
// negative from roundoff (>= -1e-10 * max|eig|) are clamped to zero; more
// negative raises NotPSD.
SymMatrix sqrt_psd(const SymMatrix& A);

// Inverse, determinant, log determinant of a positive definite matrix.
// Positive definiteness means min eig > 1e-12 * max|eig|; otherwise
// SingularMatrix (or NotPD for logdet of an indefinite matrix).
SymMatrix sym_inv(const SymMatrix& A);
double sym_det(const SymMatrix& A);
double sym_logdet(const SymMatrix& A);

// Moore-Penrose pseudoinverse.  Singular values below 1e-10 * sigma_max are
// treated as zero.
Mat pinv(const Mat& A);

int numeric_rank(const Mat& A, double rel_tol = 1e-10);

// Loewner comparison: A - B positive definite beyond tol, i.e.
// min eig(A - B) > tol.  ShapeError on dimension mismatch.
bool loewner_gt(const SymMatrix& A, const SymMatrix& B, double tol = 0.0);

}  // namespace matbeta
