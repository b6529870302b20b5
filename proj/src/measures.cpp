#include "horbit/measures.hpp"

#include <cmath>

namespace horbit {

Axis k_axis(const GroupPreset& g) {
  return g.n == 2 ? Axis::circle() : Axis::so3();
}

Mat k_value(const GroupPreset& g, const AxisValue& v) {
  return g.n == 2 ? rot2(v.angle) : v.rot;
}

Vec n_coord_bounds(const GroupPreset& g, double xi, double t) {
  // sigma_max(U) <= S and sigma_min(U) >= S^{-(n-1)} for U = exp(tY),
  // S = e^{t xi}; unitriangular entries obey |U_ij| <= |U^T U - I|_2.
  const double s = std::exp(t * xi);
  Vec b(g.dim_n);
  if (g.n == 2) {
    // |u| = sigma_max - sigma_min exactly
    b[0] = (s - 1.0 / s) / t;
    return b;
  }
  const double big = std::max(s * s - 1.0, 1.0 - std::pow(s, -4.0));
  const double u12 = big, u13 = big, u23 = big + big * big;
  // log of a 3x3 unitriangular U = N - N^2/2
  b[0] = u12 / t;
  b[2] = u23 / t;
  b[1] = (u13 + 0.5 * u12 * u23) / t;
  return b;
}

double conjugation_box_radius(const GroupPreset& g, const Mat& x, double log_radius,
                              double t) {
  // directions: p-basis, +-, and sums of pairs
  std::vector<Mat> dirs;
  for (const Mat& b : g.basis_p) {
    dirs.push_back(b);
    dirs.push_back(-1.0 * b);
  }
  for (size_t i = 0; i < g.basis_p.size(); ++i)
    for (size_t j = i + 1; j < g.basis_p.size(); ++j) {
      const double is2 = 1.0 / std::sqrt(2.0);
      dirs.push_back(is2 * (g.basis_p[i] + g.basis_p[j]));
      dirs.push_back(is2 * (g.basis_p[i] - g.basis_p[j]));
    }
  double last_alive = 0.0;
  int dead_streak = 0;
  for (double r = 0.25; r <= 40.0; r += 0.25) {
    bool alive = false;
    for (const Mat& d : dirs) {
      const Mat e = sym_exp(d, t * r);
      const Mat ei = sym_exp(d, -t * r);
      const double smax = max_singular_value(e * x * ei);
      if (std::log(smax) <= t * log_radius + 1e-12) {
        alive = true;
        break;
      }
    }
    if (alive) {
      last_alive = r;
      dead_streak = 0;
    } else if (++dead_streak >= 6) {
      break;
    }
  }
  return 1.25 * last_alive + 0.3;
}

IntegralEstimate integrate_group_cartan(const GroupPreset& g, const TestFunction& f,
                                        const IntegrationScheme& scheme) {
  Domain dom;
  dom.axes.push_back(k_axis(g));
  const double l = f.support_log_radius();
  dom.axes.push_back(Axis::ball(Vec(g.dim_p), l, 1.1));
  auto fn = [&](std::span<const AxisValue> av) {
    const Mat k = k_value(g, av[0]);
    const Vec& xc = av[1].point;
    const Mat x = from_coords(g.basis_p, xc, g.n);
    const double fv = eval_group(f, k * sym_exp(x)).value;
    if (fv == 0.0) return 0.0;
    return fv * cartan_density(x);
  };
  return integrate(dom, fn, scheme);
}

IntegralEstimate integrate_group_iwasawa(const GroupPreset& g, const TestFunction& f,
                                         const IntegrationScheme& scheme) {
  const double l = f.support_log_radius();
  Domain dom;
  dom.axes.push_back(k_axis(g));
  dom.axes.push_back(Axis::atoms(std::vector<double>(g.m_elements.size(),
                                                     1.0 / g.m_elements.size())));
  // |a-coords| <= sqrt(n) * L on the support (diagonal entries bounded by L)
  const double abound = std::sqrt(static_cast<double>(g.n)) * l * 1.1;
  dom.axes.push_back(Axis::ball(Vec(g.dim_a), abound, 1.0));
  const Vec nb = n_coord_bounds(g, 2.0 * l, 1.0);
  Vec nlo(g.dim_n), nhi(g.dim_n);
  for (int i = 0; i < g.dim_n; ++i) {
    nlo[i] = -1.15 * nb[i];
    nhi[i] = 1.15 * nb[i];
  }
  dom.axes.push_back(Axis::box(nlo, nhi));
  const double jphi = phi_jacobian(g);
  auto fn = [&](std::span<const AxisValue> av) {
    const Mat k = k_value(g, av[0]);
    const Mat& m = g.m_elements[av[1].atom];
    const Vec& ac = av[2].point;
    const Vec& nc = av[3].point;
    Mat a(g.n);
    const Mat amat = from_coords(g.basis_a, ac, g.n);
    for (int i = 0; i < g.n; ++i) a(i, i) = std::exp(amat(i, i));
    Mat nu = Mat::identity(g.n);
    {
      const Mat y = from_coords(g.basis_n, nc, g.n);
      // exp of strictly upper triangular: nilpotent series (exact, n <= 3)
      Mat term = y;
      nu = nu + term;
      for (int k2 = 2; k2 < g.n; ++k2) {
        term = (1.0 / k2) * (term * y);
        nu = nu + term;
      }
    }
    const double fv = eval_group(f, k * m * a * nu).value;
    if (fv == 0.0) return 0.0;
    return fv * iwasawa_weight(g, ac) * jphi;
  };
  return integrate(dom, fn, scheme);
}

IntegralEstimate integrate_group_kak(const GroupPreset& g, const TestFunction& f,
                                     const IntegrationScheme& scheme) {
  const double l = f.support_log_radius();
  Domain dom;
  dom.axes.push_back(k_axis(g));
  const double abound = std::sqrt(static_cast<double>(g.n)) * l * 1.1;
  dom.axes.push_back(Axis::ball(Vec(g.dim_a), abound, 1.0));
  dom.axes.push_back(k_axis(g));
  const double c = vol_k_intrinsic(g) / static_cast<double>(g.m_elements.size());
  auto fn = [&](std::span<const AxisValue> av) {
    const Vec& ac = av[1].point;
    if (!in_positive_chamber(g, ac)) return 0.0;
    const Mat k1 = k_value(g, av[0]);
    const Mat k2 = k_value(g, av[2]);
    const Mat h = from_coords(g.basis_a, ac, g.n);
    Mat eh(g.n);
    for (int i = 0; i < g.n; ++i) eh(i, i) = std::exp(h(i, i));
    const double fv = eval_group(f, k1 * eh * k2).value;
    if (fv == 0.0) return 0.0;
    return c * fv * kak_weight(g, ac);
  };
  return integrate(dom, fn, scheme);
}

IntegralEstimate integrate_motion(const MotionPreset& p, const TestFunction& f,
                                  const IntegrationScheme& scheme) {
  Domain dom;
  dom.axes.push_back(compact_axis(p));
  dom.axes.push_back(Axis::ball(f.vector_factor.center, f.vector_factor.radius,
                                f.is_convolution() ? 0.0 : 1.1));
  if (f.is_convolution()) {
    dom.axes[1] = Axis::ball(Vec(p.v_dim), f.support_log_radius(), 1.1);
  }
  auto fn = [&](std::span<const AxisValue> av) {
    const Mat k = compact_value(p, av[0]);
    return eval_motion(f, k, av[1].point).value;
  };
  return integrate(dom, fn, scheme);
}

}  // namespace horbit
