#pragma once

// Small dense matrix/vector kernels (dimension <= 8): exponentials,
// decompositions and coordinate utilities everything downstream is built on.
// Inner product on matrix space throughout: <X,Y> = tr(X^T Y).

#include <array>
#include <initializer_list>
#include <span>
#include <vector>

#include "horbit/errors.hpp"

namespace horbit {

inline constexpr int kMaxDim = 8;

struct Vec {
  int n = 0;
  std::array<double, kMaxDim> x{};

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  static Vec of(std::initializer_list<double> vals);
  double operator[](int i) const { return x[i]; }
  double& operator[](int i) { return x[i]; }
};

struct Mat {
  int n = 0;
  std::array<double, kMaxDim * kMaxDim> a{};

  Mat() = default;
  explicit Mat(int dim) : n(dim) {}
  static Mat identity(int dim);
  static Mat zero(int dim) { return Mat(dim); }
  static Mat of(int dim, std::initializer_list<double> vals);
  double operator()(int i, int j) const { return a[i * n + j]; }
  double& operator()(int i, int j) { return a[i * n + j]; }
};

Mat operator+(const Mat&, const Mat&);
Mat operator-(const Mat&, const Mat&);
Mat operator*(const Mat&, const Mat&);
Mat operator*(double, const Mat&);
Vec operator+(const Vec&, const Vec&);
Vec operator-(const Vec&, const Vec&);
Vec operator*(double, const Vec&);
Vec mul(const Mat&, const Vec&);
Mat transpose(const Mat&);
double trace(const Mat&);
double inner(const Mat&, const Mat&);  // tr(A^T B)
double dot(const Vec&, const Vec&);
double frob(const Mat&);
double norm(const Vec&);
Mat commutator(const Mat&, const Mat&);
bool finite(const Mat&);
bool finite(const Vec&);
double max_abs_diff(const Mat&, const Mat&);

// LU with partial pivoting behind both of these.
double det(const Mat&);
Mat inverse(const Mat&);

// Cyclic Jacobi; A symmetric, A = q diag(lambda) q^T.
void sym_eigen(const Mat& A, Mat& q, Vec& lambda);

// Modified Gram-Schmidt; r has strictly positive diagonal.  Throws
// NumericOverflow when a pivot falls under 1e-300.
void qr_positive(const Mat& A, Mat& q, Mat& r);

// A = u diag(sigma) v^T with u, v special orthogonal and sigma sorted
// decreasing; requires det A > 0.
void svd_special(const Mat& A, Mat& u, Vec& sigma, Mat& v);

double max_singular_value(const Mat&);

// Scaling-and-squaring exponential, relative error ~1e-13 for |X| <= 50.
Mat mat_exp(const Mat&);
// exp(scale * X) for symmetric X via eigendecomposition.
Mat sym_exp(const Mat& X, double scale = 1.0);
// log of a symmetric positive definite matrix.
Mat spd_log(const Mat&);

Mat rot2(double theta);
Mat rot3_x(double theta);
Mat rot3_z(double theta);
// R_z(alpha) R_y(beta) R_z(gamma) with beta given through cos(beta); uniform
// (alpha, cos beta, gamma) is Haar on SO(3).
Mat euler_zyz(double alpha, double cos_beta, double gamma);

// Coordinates in an orthonormal (trace-form) basis and back.
Vec coords_in(std::span<const Mat> basis, const Mat& X);
Mat from_coords(std::span<const Mat> basis, const Vec& c, int dim);

}  // namespace horbit
