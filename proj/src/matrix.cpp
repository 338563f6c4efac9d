#include "mfz/matrix.hpp"

#include <cmath>

#include "mfz/error.hpp"
#include "mfz/logsum.hpp"

namespace mfz {

Matrix Matrix::identity(int n) {
  Matrix I(n);
  for (int i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

void mul_into(const Matrix& A, const Matrix& B, Matrix& out) {
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int l = 0; l < n; ++l) s += A(i, l) * B(l, j);
      out(i, j) = s;
    }
}

Matrix operator*(const Matrix& A, const Matrix& B) {
  Matrix out(A.n());
  mul_into(A, B, out);
  return out;
}

double op1_norm(const Matrix& A) {
  const int n = A.n();
  double best = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += A(i, j);
    best = std::max(best, s);
  }
  return best;
}

double opinf_norm(const Matrix& A) {
  const int n = A.n();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += A(i, j);
    best = std::max(best, s);
  }
  return best;
}

double max_entry(const Matrix& A) {
  double best = 0.0;
  for (double v : A.data()) best = std::max(best, v);
  return best;
}

namespace {

// log rho(A) for nonnegative A via the scale series: with A_0 = A and
// A_{j+1} = (A_j/||A_j||_1)^2, log rho = sum_j log||A_j||_1 / 2^j, a Gelfand
// limit that converges far below 1e-9 after 60 squarings. A zero norm means
// the matrix is nilpotent (exact zero pattern collapse).
double log_rho_nonneg(Matrix A) {
  constexpr int kSquarings = 60;
  double log_rho = 0.0;
  double weight = 1.0;
  Matrix tmp(A.n());
  for (int it = 0; it < kSquarings; ++it) {
    const double norm = op1_norm(A);
    if (norm == 0.0) return kNegInf;
    log_rho += weight * std::log(norm);
    weight *= 0.5;
    const double inv = 1.0 / norm;
    for (int i = 0; i < A.n(); ++i)
      for (int j = 0; j < A.n(); ++j) tmp(i, j) = A(i, j) * inv;
    mul_into(tmp, tmp, A);
  }
  const double norm = op1_norm(A);
  if (norm == 0.0) return kNegInf;
  return log_rho + weight * std::log(norm);
}

}  // namespace

double spectral_radius(const Matrix& A) {
  if (A.n() <= 0 || A.n() > 64) fail(Errc::not_square, "matrix size outside 1..64");
  for (double v : A.data())
    if (v < 0.0) fail(Errc::negative_entry, "spectral radius needs a nonnegative matrix");
  const double lr = log_rho_nonneg(A);
  if (lr == kNegInf) return 0.0;
  const double rho = std::exp(lr);
  return rho < 1e-12 ? 0.0 : rho;
}

double log_spectral_radius(const ScaledMatrix& P) {
  const double lr = log_rho_nonneg(P.mat);
  return lr == kNegInf ? kNegInf : lr + P.log_scale;
}

}  // namespace mfz
