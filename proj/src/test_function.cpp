#include "horbit/test_function.hpp"

#include <cmath>

namespace horbit {

MatrixPoly MatrixPoly::one() {
  MatrixPoly p;
  p.terms.push_back({1.0, {}});
  return p;
}

MatrixPoly MatrixPoly::affine(double c0, double c1, int i, int j) {
  MatrixPoly p;
  p.terms.push_back({c0, {}});
  p.terms.push_back({c1, {{{i, j, 1}}}});
  return p;
}

double MatrixPoly::operator()(const Mat& k) const {
  double s = 0.0;
  for (const Term& t : terms) {
    double v = t.coeff;
    for (const auto& pw : t.powers) {
      const double e = k(pw[0], pw[1]);
      for (int q = 0; q < pw[2]; ++q) v *= e;
    }
    s += v;
  }
  return s;
}

double Bump::operator()(const Vec& v) const {
  double d2 = 0.0;
  for (int i = 0; i < v.n; ++i) {
    const double d = v[i] - center[i];
    d2 += d * d;
  }
  const double u2 = d2 / (radius * radius);
  if (u2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - u2));
}

double TestFunction::support_log_radius() const {
  if (is_convolution())
    return conv_lhs->support_log_radius() + conv_rhs->support_log_radius();
  double l = norm(vector_factor.center) + vector_factor.radius;
  if (conjugate_by) {
    Mat k, x;
    cartan_decompose(*conjugate_by, k, x);
    l += 2.0 * frob(x);
  }
  return l;
}

TestFunction motion_bump(const MotionPreset& p, MatrixPoly poly, const Vec& center,
                         double radius) {
  if (center.n != p.v_dim || !(radius > 0.0))
    throw InvalidInput("motion_bump: bad center or radius");
  TestFunction f;
  f.tag = DomainTag::MotionGroup;
  f.motion = &p;
  f.compact_factor = std::move(poly);
  f.vector_factor = {center, radius};
  return f;
}

TestFunction group_bump(const GroupPreset& g, MatrixPoly poly, const Vec& center,
                        double radius) {
  if (center.n != g.dim_p || !(radius > 0.0))
    throw InvalidInput("group_bump: bad center or radius");
  TestFunction f;
  f.tag = DomainTag::ReductiveGroup;
  f.group = &g;
  f.compact_factor = std::move(poly);
  f.vector_factor = {center, radius};
  return f;
}

TestFunction deformation_bump(const GroupPreset& g, MatrixPoly poly, const Vec& center,
                              double radius) {
  TestFunction f = group_bump(g, std::move(poly), center, radius);
  f.tag = DomainTag::DeformationSpace;
  return f;
}

namespace {

ValueErr eval_conv_motion(const TestFunction& f, const Mat& k, const Vec& v);
ValueErr eval_conv_group(const TestFunction& f, const Mat& g);

}  // namespace

ValueErr eval_motion(const TestFunction& f, const Mat& k, const Vec& v) {
  if (f.tag != DomainTag::MotionGroup)
    throw InvalidInput("eval_motion: domain mismatch");
  if (f.is_convolution()) return eval_conv_motion(f, k, v);
  const double b = f.vector_factor(v);
  if (b == 0.0) return {0.0, 0.0};
  return {f.compact_factor(k) * b, 0.0};
}

ValueErr eval_chart(const TestFunction& f, const Mat& k, const Vec& p_coords) {
  if (f.tag == DomainTag::MotionGroup)
    throw InvalidInput("eval_chart: domain mismatch");
  const double b = f.vector_factor(p_coords);
  if (b == 0.0) return {0.0, 0.0};
  return {f.compact_factor(k) * b, 0.0};
}

ValueErr eval_group(const TestFunction& f, const Mat& g) {
  if (f.tag == DomainTag::MotionGroup)
    throw InvalidInput("eval_group: domain mismatch");
  const Mat* target = &g;
  Mat conj;
  if (f.conjugate_by) {
    const Mat& c = *f.conjugate_by;
    conj = c * g * inverse(c);
    target = &conj;
  }
  if (f.is_convolution()) return eval_conv_group(f, *target);
  Mat k, x;
  cartan_decompose(*target, k, x);
  return eval_chart(f, k, coords_in(f.group->basis_p, x));
}

ValueErr eval_fiber(const TestFunction& f, const Mat& g, double t) {
  if (f.tag != DomainTag::DeformationSpace)
    throw InvalidInput("eval_fiber: domain mismatch");
  if (t == 0.0) throw InvalidInput("eval_fiber: t must be nonzero");
  Mat k, x;
  cartan_decompose(g, k, x);
  return eval_chart(f, k, (1.0 / t) * coords_in(f.group->basis_p, x));
}

namespace {

// (f*g)(z) = int f(y) g(y^{-1} z) dy over the support of f.
ValueErr eval_conv_motion(const TestFunction& f, const Mat& k, const Vec& v) {
  const MotionPreset& mp = *f.motion;
  const TestFunction& lhs = *f.conv_lhs;
  const TestFunction& rhs = *f.conv_rhs;
  // support containment: |v| <= L_f + L_g (isometric action)
  if (norm(v) > lhs.support_log_radius() + rhs.support_log_radius() + 1e-12)
    return {0.0, 0.0};
  Domain dom;
  dom.axes.push_back(compact_axis(mp));
  dom.axes.push_back(Axis::ball(lhs.vector_factor.center, lhs.vector_factor.radius, 1.02));
  auto fn = [&](std::span<const AxisValue> av) {
    const Mat kp = compact_value(mp, av[0]);
    const Vec& vp = av[1].point;
    const double fv = eval_motion(lhs, kp, vp).value;
    if (fv == 0.0) return 0.0;
    // y^{-1} z = (kp^{-1} k, v - k^{-1} kp vp)
    const Mat krel = transpose(kp) * k;
    const Vec varg = v - mul(transpose(action_matrix(mp, k)) * action_matrix(mp, kp), vp);
    const double gv = eval_motion(rhs, krel, varg).value;
    return fv * gv;
  };
  const IntegralEstimate est = integrate(dom, fn, f.conv_scheme);
  return {est.value, f.conv_err + est.std_error};
}

ValueErr eval_conv_group(const TestFunction& f, const Mat& g) {
  const GroupPreset& gp = *f.group;
  const TestFunction& lhs = *f.conv_lhs;
  const TestFunction& rhs = *f.conv_rhs;
  // support: |X-part| of g bounded by L_lhs + L_rhs
  {
    const double smax = max_singular_value(g);
    if (std::log(smax) > f.support_log_radius() + 1e-9) return {0.0, 0.0};
  }
  Domain dom;
  dom.axes.push_back(gp.n == 2 ? Axis::circle() : Axis::so3());
  dom.axes.push_back(Axis::ball(lhs.vector_factor.center, lhs.vector_factor.radius, 1.02));
  auto fn = [&](std::span<const AxisValue> av) {
    const Mat k = gp.n == 2 ? rot2(av[0].angle) : av[0].rot;
    const Vec& xc = av[1].point;
    const double bump = lhs.vector_factor(xc);
    if (bump == 0.0) return 0.0;
    const Mat x = from_coords(gp.basis_p, xc, gp.n);
    const double fv = lhs.compact_factor(k) * bump;
    const Mat y = k * sym_exp(x);
    const Mat yinv = sym_exp(x, -1.0) * transpose(k);
    const double gv = eval_group(rhs, yinv * g).value;
    if (gv == 0.0) return 0.0;
    return fv * gv * cartan_density(x);
  };
  const IntegralEstimate est = integrate(dom, fn, f.conv_scheme);
  return {est.value, f.conv_err + est.std_error};
}

}  // namespace

TestFunction convolve(const TestFunction& f, const TestFunction& g,
                      const IntegrationScheme& inner) {
  if (f.tag != g.tag || f.motion != g.motion || f.group != g.group)
    throw InvalidInput("convolve: domain mismatch");
  if (f.tag == DomainTag::DeformationSpace)
    throw InvalidInput("convolve: convolve fibers, not deformation functions");
  TestFunction c;
  c.tag = f.tag;
  c.motion = f.motion;
  c.group = f.group;
  c.conv_lhs = std::make_shared<TestFunction>(f);
  c.conv_rhs = std::make_shared<TestFunction>(g);
  c.conv_scheme = inner;
  // calibrate the inner rule at a few probe points against a refined rule
  IntegrationScheme fine = inner;
  if (inner.kind == SchemeKind::TensorGauss) fine.nodes_per_axis = inner.nodes_per_axis + 6;
  else fine.budget = inner.budget * 4;
  TestFunction probe = c;
  TestFunction probe_fine = c;
  probe_fine.conv_scheme = fine;
  double max_err = 0.0, scale_seen = 0.0;
  for (int i = 0; i < 3; ++i) {
    ValueErr coarse, refined;
    if (f.tag == DomainTag::MotionGroup) {
      Vec v = f.vector_factor.center;
      v[0] += 0.3 * i * f.vector_factor.radius;
      const Mat k = Mat::identity(f.motion->k_dim);
      coarse = eval_motion(probe, k, v);
      refined = eval_motion(probe_fine, k, v);
    } else {
      Vec xc = f.vector_factor.center;
      xc[0] += 0.3 * i * f.vector_factor.radius;
      const Mat z = sym_exp(from_coords(f.group->basis_p, xc, f.group->n));
      coarse = eval_group(probe, z);
      refined = eval_group(probe_fine, z);
    }
    max_err = std::max(max_err, std::abs(coarse.value - refined.value));
    scale_seen = std::max(scale_seen, std::abs(refined.value));
  }
  c.conv_err = max_err;
  c.conv_flagged = scale_seen > 0.0 && max_err > 1e-3 * scale_seen;
  return c;
}

}  // namespace horbit
