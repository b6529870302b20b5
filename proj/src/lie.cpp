#include "horbit/lie.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace horbit {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat e_ij(int n, int i, int j) {
  Mat m(n);
  m(i, j) = 1.0;
  return m;
}

Mat sym_unit(int n, int i, int j) {  // (E_ij + E_ji)/sqrt(2)
  Mat m(n);
  m(i, j) = kInvSqrt2;
  m(j, i) = kInvSqrt2;
  return m;
}

Mat skew_unit(int n, int i, int j) {  // (E_ij - E_ji)/sqrt(2)
  Mat m(n);
  m(i, j) = kInvSqrt2;
  m(j, i) = -kInvSqrt2;
  return m;
}

GroupPreset build_sl2r() {
  GroupPreset p;
  p.name = "SL2R";
  p.n = 2;
  p.dim_g = 3;
  p.dim_k = 1;
  p.dim_p = 2;
  p.dim_a = 1;
  p.dim_n = 1;
  p.basis_k = {skew_unit(2, 0, 1)};
  Mat h1(2);
  h1(0, 0) = kInvSqrt2;
  h1(1, 1) = -kInvSqrt2;
  p.basis_p = {h1, sym_unit(2, 0, 1)};
  p.basis_a = {h1};
  p.basis_n = {e_ij(2, 0, 1)};
  // alpha(diag(s,-s)) = 2s; in coordinates u on h1, s = u/sqrt(2).
  p.roots = {{Vec::of({std::sqrt(2.0)}), 1}};
  p.m_elements = {Mat::identity(2), -1.0 * Mat::identity(2)};
  return p;
}

GroupPreset build_sl3r() {
  GroupPreset p;
  p.name = "SL3R";
  p.n = 3;
  p.dim_g = 8;
  p.dim_k = 3;
  p.dim_p = 5;
  p.dim_a = 2;
  p.dim_n = 3;
  p.basis_k = {skew_unit(3, 0, 1), skew_unit(3, 0, 2), skew_unit(3, 1, 2)};
  Mat h1(3);
  h1(0, 0) = kInvSqrt2;
  h1(1, 1) = -kInvSqrt2;
  Mat h2(3);
  const double s6 = 1.0 / std::sqrt(6.0);
  h2(0, 0) = s6;
  h2(1, 1) = s6;
  h2(2, 2) = -2.0 * s6;
  p.basis_p = {h1, h2, sym_unit(3, 0, 1), sym_unit(3, 0, 2), sym_unit(3, 1, 2)};
  p.basis_a = {h1, h2};
  p.basis_n = {e_ij(3, 0, 1), e_ij(3, 0, 2), e_ij(3, 1, 2)};
  // H = u1 h1 + u2 h2 has diagonal (u1/s2 + u2/s6, -u1/s2 + u2/s6, -2 u2/s6).
  // alpha_ij(H) = h_i - h_j:
  const double r2 = std::sqrt(2.0), r32 = std::sqrt(1.5);
  p.roots = {{Vec::of({r2, 0.0}), 1},
             {Vec::of({kInvSqrt2, r32}), 1},
             {Vec::of({-kInvSqrt2, r32}), 1}};
  auto diag_m = [](double a, double b, double c) {
    Mat m(3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  };
  p.m_elements = {diag_m(1, 1, 1), diag_m(1, -1, -1), diag_m(-1, 1, -1),
                  diag_m(-1, -1, 1)};
  return p;
}

}  // namespace

const GroupPreset& sl2r() {
  static const GroupPreset p = build_sl2r();
  return p;
}

const GroupPreset& sl3r() {
  static const GroupPreset p = build_sl3r();
  return p;
}

const GroupPreset* find_group_preset(const std::string& name) {
  if (name == "SL2R") return &sl2r();
  if (name == "SL3R") return &sl3r();
  return nullptr;
}

Mat cartan_involution(const Mat& X) { return -1.0 * transpose(X); }

Mat phi_map(const Mat& X) { return 0.5 * (X + transpose(X)); }

bool in_p(const GroupPreset& g, const Mat& X, double tol) {
  if (X.n != g.n || !finite(X)) return false;
  const double scale = std::max(1.0, frob(X));
  return frob(X - transpose(X)) <= tol * scale && std::abs(trace(X)) <= tol * scale;
}

bool in_k_group(const Mat& g, double tol) {
  if (!finite(g)) return false;
  const Mat gram = transpose(g) * g;
  return max_abs_diff(gram, Mat::identity(g.n)) <= tol &&
         std::abs(det(g) - 1.0) <= tol;
}

double phi_jacobian_gram(const GroupPreset& p) {
  std::vector<Mat> basis;
  basis.insert(basis.end(), p.basis_a.begin(), p.basis_a.end());
  basis.insert(basis.end(), p.basis_n.begin(), p.basis_n.end());
  const int m = static_cast<int>(basis.size());
  Mat gram(m);
  std::vector<Mat> imgs;
  imgs.reserve(m);
  for (const Mat& b : basis) imgs.push_back(phi_map(b));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram(i, j) = inner(imgs[i], imgs[j]);
  return std::sqrt(std::abs(det(gram)));
}

double phi_jacobian(const GroupPreset& p) {
  const double expected = std::pow(2.0, -0.5 * p.dim_n);
  const double gram = phi_jacobian_gram(p);
  if (std::abs(gram - expected) > 1e-12)
    throw InternalConsistency("phi_jacobian: Gram determinant disagrees with 2^{-dim n/2}");
  return expected;
}

void cartan_decompose(const Mat& g, Mat& k, Mat& X) {
  if (!finite(g)) throw InvalidInput("cartan_decompose: non-finite input");
  const Mat s = transpose(g) * g;  // = exp(2X)
  Mat q;
  Vec lam;
  sym_eigen(s, q, lam);
  const int n = g.n;
  for (int i = 0; i < n; ++i)
    if (!(lam[i] > 0.0)) throw InvalidInput("cartan_decompose: singular input");
  X = Mat(n);
  Mat inv_sqrt(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double xs = 0.0, is = 0.0;
      for (int t = 0; t < n; ++t) {
        xs += q(i, t) * (0.5 * std::log(lam[t])) * q(j, t);
        is += q(i, t) * (1.0 / std::sqrt(lam[t])) * q(j, t);
      }
      X(i, j) = xs;
      inv_sqrt(i, j) = is;
    }
  k = g * inv_sqrt;  // g exp(-X)
}

IwasawaFactors iwasawa_decompose(const Mat& g) {
  if (!finite(g)) throw InvalidInput("iwasawa_decompose: non-finite input");
  IwasawaFactors f;
  Mat r;
  qr_positive(g, f.kappa, r);
  const int n = g.n;
  f.mu = Mat::identity(n);
  f.h = Mat(n);
  f.nu = Mat::identity(n);
  for (int i = 0; i < n; ++i) f.h(i, i) = std::log(r(i, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.nu(i, j) = r(i, j) / r(i, i);
  return f;
}

Vec iwasawa_a_coords(const GroupPreset& p, const Mat& g) {
  const IwasawaFactors f = iwasawa_decompose(g);
  Vec c(p.dim_a);
  for (int i = 0; i < p.dim_a; ++i) c[i] = inner(p.basis_a[i], f.h);
  return c;
}

void kak_decompose(const Mat& g, Mat& k1, Mat& h, Mat& k2) {
  Mat u, v;
  Vec sigma;
  svd_special(g, u, sigma, v);
  k1 = u;
  k2 = transpose(v);
  h = Mat(g.n);
  for (int i = 0; i < g.n; ++i) h(i, i) = std::log(sigma[i]);
}

double rho_of(const GroupPreset& p, const Vec& a_coords) {
  double s = 0.0;
  for (const auto& r : p.roots) s += r.multiplicity * dot(r.coeff, a_coords);
  return 0.5 * s;
}

double iwasawa_weight(const GroupPreset& p, const Vec& a_coords) {
  return std::exp(2.0 * rho_of(p, a_coords));
}

double kak_weight(const GroupPreset& p, const Vec& a_coords) {
  double w = 1.0;
  for (const auto& r : p.roots) {
    const double a = dot(r.coeff, a_coords);
    double f = std::sinh(a);
    for (int m = 1; m < r.multiplicity; ++m) f *= std::sinh(a);
    w *= f;
  }
  return w;
}

bool in_positive_chamber(const GroupPreset& p, const Vec& a_coords, double tol) {
  for (const auto& r : p.roots)
    if (dot(r.coeff, a_coords) < tol) return false;
  return true;
}

Mat ad_matrix(const GroupPreset& p, const Mat& X) {
  if (X.n != p.n) throw InvalidInput("ad_matrix: dimension mismatch");
  Mat m(p.dim_g);
  std::vector<const Mat*> basis;
  for (const Mat& b : p.basis_k) basis.push_back(&b);
  for (const Mat& b : p.basis_p) basis.push_back(&b);
  for (int j = 0; j < p.dim_g; ++j) {
    const Mat br = commutator(X, *basis[j]);
    for (int i = 0; i < p.dim_g; ++i) m(i, j) = inner(*basis[i], br);
  }
  return m;
}

Mat ad_p_squared(const GroupPreset& p, const Mat& X) {
  if (!in_p(p, X)) throw InvalidInput("ad_p_squared: X not in p");
  Mat m(p.dim_p);
  for (int j = 0; j < p.dim_p; ++j) {
    const Mat br = commutator(X, commutator(X, p.basis_p[j]));
    for (int i = 0; i < p.dim_p; ++i) m(i, j) = inner(p.basis_p[i], br);
  }
  return m;
}

namespace {
double sinhc(double u) {  // sinh(u)/u
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sinh(u) / u;
}
}  // namespace

double cartan_density(const Mat& X) {
  // For symmetric X the eigenvalues of ad_X^2 on p are (l_i - l_j)^2.
  Mat q;
  Vec lam;
  sym_eigen(X, q, lam);
  double j = 1.0;
  for (int a = 0; a < X.n; ++a)
    for (int b = a + 1; b < X.n; ++b) j *= sinhc(lam[a] - lam[b]);
  return std::abs(j);
}

double cartan_density_series(const GroupPreset& p, const Mat& X) {
  if (!in_p(p, X)) throw InvalidInput("cartan_density_series: X not in p");
  const Mat b = ad_p_squared(p, X);
  Mat sum = Mat::identity(p.dim_p);
  Mat term = Mat::identity(p.dim_p);
  for (int m = 1; m <= 200; ++m) {
    // term_m = b^m / (2m+1)!
    term = (1.0 / (2.0 * m * (2.0 * m + 1.0))) * (term * b);
    sum = sum + term;
    if (frob(term) < 1e-16) break;
  }
  return std::abs(det(sum));
}

double det_ad_minus_id(std::span<const Mat> basis, const Mat& x) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) return 1.0;  // empty determinant
  const Mat xi = inverse(x);
  Mat rep(m);
  for (int j = 0; j < m; ++j) {
    const Mat img = x * basis[j] * xi - basis[j];
    for (int i = 0; i < m; ++i) rep(i, j) = inner(basis[i], img);
  }
  return det(rep);
}

double vol_k_intrinsic(const GroupPreset& p) {
  const double pi = std::acos(-1.0);
  // Trace-form metric: one-parameter rotation subgroups have speed sqrt(2).
  if (p.n == 2) return 2.0 * std::sqrt(2.0) * pi;          // length of SO(2)
  if (p.n == 3) return 16.0 * std::sqrt(2.0) * pi * pi;    // (sqrt 2)^3 * 8 pi^2
  throw InvalidInput("vol_k_intrinsic: unsupported preset");
}

namespace {
void print_mat(std::ostringstream& os, const Mat& m) {
  os << "[";
  for (int i = 0; i < m.n * m.n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", m.a[i]);
    os << (i ? "," : "") << buf;
  }
  os << "]";
}
void print_basis(std::ostringstream& os, const char* key, const std::vector<Mat>& bs) {
  os << "\"" << key << "\":[";
  for (size_t i = 0; i < bs.size(); ++i) {
    if (i) os << ",";
    print_mat(os, bs[i]);
  }
  os << "]";
}
}  // namespace

std::string preset_to_json(const GroupPreset& p) {
  std::ostringstream os;
  os << "{\"name\":\"" << p.name << "\",\"n\":" << p.n << ",\"dim_g\":" << p.dim_g
     << ",\"dim_k\":" << p.dim_k << ",\"dim_p\":" << p.dim_p << ",\"dim_a\":" << p.dim_a
     << ",\"dim_n\":" << p.dim_n << ",";
  print_basis(os, "basis_k", p.basis_k);
  os << ",";
  print_basis(os, "basis_p", p.basis_p);
  os << ",";
  print_basis(os, "basis_n", p.basis_n);
  os << ",\"roots\":[";
  for (size_t i = 0; i < p.roots.size(); ++i) {
    if (i) os << ",";
    os << "{\"coeff\":[";
    for (int j = 0; j < p.roots[i].coeff.n; ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", p.roots[i].coeff[j]);
      os << (j ? "," : "") << buf;
    }
    os << "],\"mult\":" << p.roots[i].multiplicity << "}";
  }
  os << "],";
  print_basis(os, "m_elements", p.m_elements);
  os << "}";
  return os.str();
}

}  // namespace horbit
