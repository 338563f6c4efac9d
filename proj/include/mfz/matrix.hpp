#ifndef MFZ_MATRIX_HPP
#define MFZ_MATRIX_HPP

#include <vector>

namespace mfz {

// Small dense row-major square matrix; transfer matrices are (2a+1)x(2a+1)
// with a in {1,2,3} at desk scale.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return a_; }

  static Matrix identity(int n);

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& A, const Matrix& B);

// out = A * B without allocating; out must not alias A or B.
void mul_into(const Matrix& A, const Matrix& B, Matrix& out);

double op1_norm(const Matrix& A);    // max column sum (entries >= 0 here)
double opinf_norm(const Matrix& A);  // max row sum
double max_entry(const Matrix& A);

// Product kept as normalized matrix plus log of the factored-out scale, so
// long words never underflow.
struct ScaledMatrix {
  Matrix mat;
  double log_scale = 0.0;
};

// rho(A) by scaled repeated squaring (60 squarings of A/||A||_1, Gelfand
// value from the accumulated scales). Absolute accuracy far below 1e-9 for
// rho >= 1e-12; returns 0 for nilpotent-to-tolerance matrices.
// Throws NotSquare / NegativeEntry.
double spectral_radius(const Matrix& A);

// log rho for a scaled product; avoids the exp/log roundtrip for tiny products.
double log_spectral_radius(const ScaledMatrix& P);

}  // namespace mfz

#endif
