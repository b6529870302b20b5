#include "horbit/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace horbit {

Vec Vec::of(std::initializer_list<double> vals) {
  Vec v(static_cast<int>(vals.size()));
  int i = 0;
  for (double d : vals) v.x[i++] = d;
  return v;
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::of(int dim, std::initializer_list<double> vals) {
  Mat m(dim);
  int i = 0;
  for (double d : vals) m.a[i++] = d;
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c(a.n);
  for (int i = 0; i < a.n * a.n; ++i) c.a[i] = a.a[i] + b.a[i];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat c(a.n);
  for (int i = 0; i < a.n * a.n; ++i) c.a[i] = a.a[i] - b.a[i];
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat c(a.n);
  const int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a.a[i * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c.a[i * n + j] += aik * b.a[k * n + j];
    }
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c(a.n);
  for (int i = 0; i < a.n * a.n; ++i) c.a[i] = s * a.a[i];
  return c;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec c(a.n);
  for (int i = 0; i < a.n; ++i) c.x[i] = a.x[i] + b.x[i];
  return c;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec c(a.n);
  for (int i = 0; i < a.n; ++i) c.x[i] = a.x[i] - b.x[i];
  return c;
}

Vec operator*(double s, const Vec& a) {
  Vec c(a.n);
  for (int i = 0; i < a.n; ++i) c.x[i] = s * a.x[i];
  return c;
}

Vec mul(const Mat& m, const Vec& v) {
  Vec c(m.n);
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m(i, j) * v.x[j];
    c.x[i] = s;
  }
  return c;
}

Mat transpose(const Mat& a) {
  Mat c(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) c(i, j) = a(j, i);
  return c;
}

double trace(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i) s += a(i, i);
  return s;
}

double inner(const Mat& a, const Mat& b) {
  double s = 0.0;
  for (int i = 0; i < a.n * a.n; ++i) s += a.a[i] * b.a[i];
  return s;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.n; ++i) s += a.x[i] * b.x[i];
  return s;
}

double frob(const Mat& a) { return std::sqrt(inner(a, a)); }

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

bool finite(const Mat& a) {
  for (int i = 0; i < a.n * a.n; ++i)
    if (!std::isfinite(a.a[i])) return false;
  return true;
}

bool finite(const Vec& a) {
  for (int i = 0; i < a.n; ++i)
    if (!std::isfinite(a.x[i])) return false;
  return true;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  double m = 0.0;
  for (int i = 0; i < a.n * a.n; ++i) m = std::max(m, std::abs(a.a[i] - b.a[i]));
  return m;
}

namespace {

// LU with partial pivoting; returns false on an exactly singular pivot.
bool lu_factor(Mat& m, std::array<int, kMaxDim>& perm, int& sign) {
  const int n = m.n;
  sign = 1;
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(m(r, col));
      if (v > best) { best = v; piv = r; }
    }
    if (best == 0.0) return false;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(perm[piv], perm[col]);
      sign = -sign;
    }
    const double d = m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = m(r, col) / d;
      m(r, col) = f;
      for (int j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return true;
}

}  // namespace

double det(const Mat& a) {
  Mat m = a;
  std::array<int, kMaxDim> perm;
  int sign = 0;
  if (!lu_factor(m, perm, sign)) return 0.0;
  double d = sign;
  for (int i = 0; i < a.n; ++i) d *= m(i, i);
  return d;
}

Mat inverse(const Mat& a) {
  if (!finite(a)) throw InvalidInput("inverse: non-finite matrix");
  Mat m = a;
  std::array<int, kMaxDim> perm;
  int sign = 0;
  if (!lu_factor(m, perm, sign)) throw NumericOverflow("inverse: singular matrix");
  const int n = a.n;
  Mat inv(n);
  for (int col = 0; col < n; ++col) {
    // solve L U x = P e_col
    std::array<double, kMaxDim> y{};
    for (int i = 0; i < n; ++i) {
      double s = (perm[i] == col) ? 1.0 : 0.0;
      for (int j = 0; j < i; ++j) s -= m(i, j) * y[j];
      y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = y[i];
      for (int j = i + 1; j < n; ++j) s -= m(i, j) * inv(j, col);
      inv(i, col) = s / m(i, i);
    }
  }
  return inv;
}

void sym_eigen(const Mat& A, Mat& q, Vec& lambda) {
  const int n = A.n;
  Mat s = A;
  q = Mat::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += s(i, j) * s(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n - 1; ++p)
      for (int r = p + 1; r < n; ++r) {
        const double apq = s(p, r);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (s(r, r) - s(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = s(k, p), skr = s(k, r);
          s(k, p) = c * skp - sn * skr;
          s(k, r) = sn * skp + c * skr;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s(p, k), srk = s(r, k);
          s(p, k) = c * spk - sn * srk;
          s(r, k) = sn * spk + c * srk;
        }
        for (int k = 0; k < n; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - sn * qkr;
          q(k, r) = sn * qkp + c * qkr;
        }
      }
  }
  lambda = Vec(n);
  for (int i = 0; i < n; ++i) lambda[i] = s(i, i);
}

void qr_positive(const Mat& A, Mat& q, Mat& r) {
  const int n = A.n;
  q = A;
  r = Mat::zero(n);
  for (int col = 0; col < n; ++col) {
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += q(i, col) * q(i, col);
    nn = std::sqrt(nn);
    if (nn < 1e-300) throw NumericOverflow("qr_positive: vanishing column norm");
    r(col, col) = nn;
    for (int i = 0; i < n; ++i) q(i, col) /= nn;
    for (int j = col + 1; j < n; ++j) {
      double proj = 0.0;
      for (int i = 0; i < n; ++i) proj += q(i, col) * q(i, j);
      r(col, j) = proj;
      for (int i = 0; i < n; ++i) q(i, j) -= proj * q(i, col);
    }
  }
}

void svd_special(const Mat& A, Mat& u, Vec& sigma, Mat& v) {
  if (!finite(A)) throw InvalidInput("svd_special: non-finite matrix");
  const int n = A.n;
  Mat s = transpose(A) * A;
  Mat q;
  Vec lam;
  sym_eigen(s, q, lam);
  // sort eigenpairs by decreasing eigenvalue
  std::array<int, kMaxDim> idx;
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.begin() + n,
            [&](int a, int b) { return lam[a] > lam[b]; });
  v = Mat(n);
  sigma = Vec(n);
  for (int c = 0; c < n; ++c) {
    sigma[c] = std::sqrt(std::max(0.0, lam[idx[c]]));
    for (int i = 0; i < n; ++i) v(i, c) = q(i, idx[c]);
  }
  u = Mat(n);
  for (int c = 0; c < n; ++c) {
    if (sigma[c] < 1e-300) throw NumericOverflow("svd_special: singular input");
    for (int i = 0; i < n; ++i) {
      double t = 0.0;
      for (int j = 0; j < n; ++j) t += A(i, j) * v(j, c);
      u(i, c) = t / sigma[c];
    }
  }
  // re-orthonormalize u against roundoff
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < c; ++p) {
      double proj = 0.0;
      for (int i = 0; i < n; ++i) proj += u(i, p) * u(i, c);
      for (int i = 0; i < n; ++i) u(i, c) -= proj * u(i, p);
    }
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += u(i, c) * u(i, c);
    nn = std::sqrt(nn);
    for (int i = 0; i < n; ++i) u(i, c) /= nn;
  }
  // land both factors in SO(n); flipping a paired column keeps A = u S v^T
  if (det(v) < 0.0) {
    for (int i = 0; i < n; ++i) { v(i, n - 1) = -v(i, n - 1); u(i, n - 1) = -u(i, n - 1); }
  }
}

double max_singular_value(const Mat& A) {
  Mat s = transpose(A) * A;
  Mat q;
  Vec lam;
  sym_eigen(s, q, lam);
  double m = 0.0;
  for (int i = 0; i < A.n; ++i) m = std::max(m, lam[i]);
  return std::sqrt(std::max(0.0, m));
}

Mat mat_exp(const Mat& X) {
  if (!finite(X)) throw InvalidInput("mat_exp: non-finite input");
  const double nrm = frob(X);
  int s = 0;
  if (nrm > 0.25) s = static_cast<int>(std::ceil(std::log2(nrm / 0.25)));
  const double scale = std::ldexp(1.0, -s);
  Mat t = scale * X;
  Mat sum = Mat::identity(X.n);
  Mat term = Mat::identity(X.n);
  for (int k = 1; k <= 60; ++k) {
    term = (1.0 / k) * (term * t);
    sum = sum + term;
    if (frob(term) < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

Mat sym_exp(const Mat& X, double scale) {
  Mat q;
  Vec lam;
  sym_eigen(X, q, lam);
  const int n = X.n;
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += q(i, k) * std::exp(scale * lam[k]) * q(j, k);
      r(i, j) = s;
    }
  return r;
}

Mat spd_log(const Mat& A) {
  Mat q;
  Vec lam;
  sym_eigen(A, q, lam);
  const int n = A.n;
  for (int i = 0; i < n; ++i) {
    if (lam[i] <= 0.0) throw NumericOverflow("spd_log: non-positive eigenvalue");
  }
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += q(i, k) * std::log(lam[k]) * q(j, k);
      r(i, j) = s;
    }
  return r;
}

Mat rot2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat::of(2, {c, -s, s, c});
}

Mat rot3_x(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat::of(3, {1, 0, 0, 0, c, -s, 0, s, c});
}

Mat rot3_z(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat::of(3, {c, -s, 0, s, c, 0, 0, 0, 1});
}

Mat euler_zyz(double alpha, double cos_beta, double gamma) {
  const double cb = std::clamp(cos_beta, -1.0, 1.0);
  const double sb = std::sqrt(std::max(0.0, 1.0 - cb * cb));
  const Mat ry = Mat::of(3, {cb, 0, sb, 0, 1, 0, -sb, 0, cb});
  return rot3_z(alpha) * ry * rot3_z(gamma);
}

Vec coords_in(std::span<const Mat> basis, const Mat& X) {
  Vec c(static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) c[static_cast<int>(i)] = inner(basis[i], X);
  return c;
}

Mat from_coords(std::span<const Mat> basis, const Vec& c, int dim) {
  Mat m = Mat::zero(dim);
  for (size_t i = 0; i < basis.size(); ++i) {
    const double ci = c[static_cast<int>(i)];
    if (ci == 0.0) continue;
    for (int k = 0; k < dim * dim; ++k) m.a[k] += ci * basis[i].a[k];
  }
  return m;
}

}  // namespace horbit
