#pragma once

// Smooth compactly supported test functions: a polynomial in the entries of
// the compact factor times the standard bump exp(-1/(1 - |v-c|^2/r^2)) in the
// vector factor, extended by zero.  On a reductive group the vector factor
// reads the p-part of the Cartan decomposition; on the deformation space the
// same chart function F(k, X) defines every fiber via f_t(k exp(tX)) = F(k,X).
//
// Convolutions are lazy: (f*g)(z) = int f(y) g(y^{-1} z) dy evaluated on
// demand by an inner quadrature over the support of f.

#include <memory>
#include <string>
#include <vector>

#include "horbit/lie.hpp"
#include "horbit/motion.hpp"
#include "horbit/quadrature.hpp"

namespace horbit {

struct MatrixPoly {
  struct Term {
    double coeff = 1.0;
    std::vector<std::array<int, 3>> powers;  // (row, col, exponent)
  };
  std::vector<Term> terms;

  static MatrixPoly one();
  static MatrixPoly affine(double c0, double c1, int i, int j);  // c0 + c1*k(i,j)
  double operator()(const Mat& k) const;
};

struct Bump {
  Vec center;
  double radius = 1.0;
  double operator()(const Vec& v) const;
};

enum class DomainTag { MotionGroup, ReductiveGroup, DeformationSpace };

struct ValueErr {
  double value = 0.0;
  double err = 0.0;
};

struct TestFunction {
  DomainTag tag = DomainTag::MotionGroup;
  const MotionPreset* motion = nullptr;
  const GroupPreset* group = nullptr;
  MatrixPoly compact_factor;
  Bump vector_factor;

  // set when this function is a lazy convolution lhs * rhs
  std::shared_ptr<const TestFunction> conv_lhs, conv_rhs;
  IntegrationScheme conv_scheme;
  double conv_err = 0.0;        // calibrated absolute error bound per evaluation
  bool conv_flagged = false;    // inner budget could not reach the target accuracy

  // optional precomposition with conjugation: evaluates f(g0 g g0^{-1})
  std::shared_ptr<const Mat> conjugate_by;

  bool is_convolution() const { return conv_lhs != nullptr; }
  // L with |X-part| <= L on the support (additive under convolution)
  double support_log_radius() const;
};

TestFunction motion_bump(const MotionPreset&, MatrixPoly, const Vec& center, double radius);
TestFunction group_bump(const GroupPreset&, MatrixPoly, const Vec& center_p_coords, double radius);
TestFunction deformation_bump(const GroupPreset&, MatrixPoly, const Vec& center_p_coords, double radius);

// Motion group: f(k, v).
ValueErr eval_motion(const TestFunction&, const Mat& k, const Vec& v);
// Reductive group: f(g) through the Cartan decomposition of g.
ValueErr eval_group(const TestFunction&, const Mat& g);
// Chart evaluation F(k, X) (deformation fiber at t = 0, and the slot-direct
// form f_t(k exp(tX)) which is t-independent by construction).
ValueErr eval_chart(const TestFunction&, const Mat& k, const Vec& p_coords);
// Fiber evaluation f_t(g) = F(cartan_k(g), cartan_X(g)/t), t != 0.
ValueErr eval_fiber(const TestFunction&, const Mat& g, double t);

// Lazy convolution on the common domain of f and g (motion or reductive).
// The inner rule is calibrated at a few probe points; if the budget cannot
// reach ~1e-3 relative accuracy the result carries conv_flagged = true.
TestFunction convolve(const TestFunction& f, const TestFunction& g,
                      const IntegrationScheme& inner);

}  // namespace horbit
