#pragma once

// The higher orbital integrals and their algebraic test operators.
//
// Motion group (degree n = dim A, x in M_K):
//   tau_{A,x,sigma}(f_0..f_n) = int_{M_K/Z(x)} int_K int_{A perp} int_{G_0^n}
//     f_0(u h x h^{-1} u^{-1} k_n^{-1}...k_1^{-1},
//         k_1...k_n u w - sum_j (k_1...k_j) v_j)
//     prod_j f_j(k_j, v_j) prod_j H_{sigma(j)}(u^{-1} (k_{j+1}...k_n)^{-1} v_j)
// summed over sigma with signs.
//
// Reductive group (finite M, x in M), realized in Cartan coordinates for each
// G factor and exp-coordinates for N; the deformed version at parameter t
// uses weights J(t X_j) and the rescaled Iwasawa components H_{j,t} = H_j/t.
// The plain cocycle on G is the t = 1 case.
//
// Degree-0: the orbital integral Lambda_x(f) = int f(g x g^{-1}) dg over the
// conjugacy orbit of a regular x in K.

#include <functional>
#include <span>
#include <vector>

#include "horbit/lie.hpp"
#include "horbit/measures.hpp"
#include "horbit/motion.hpp"
#include "horbit/quadrature.hpp"
#include "horbit/test_function.hpp"

namespace horbit {

struct RegularElement {
  Mat x;
  double certificate = 1.0;  // |det_{p_M}(Ad_x - Id)|, empty p_M gives 1
};

inline constexpr double kRegularityTol = 1e-8;

RegularElement make_regular_motion(const MotionPreset&, const Mat& x);
RegularElement make_regular_reductive(const GroupPreset&, const Mat& x);

struct CochainEvaluation {
  int degree = 0;
  IntegralEstimate result;
  std::vector<std::vector<int>> perms;  // sigma as images of (1..n)
  std::vector<int> signs;
  std::vector<IntegralEstimate> sigma_terms;
};

// All permutations of 1..n with signs (n <= 4).
void permutations(int n, std::vector<std::vector<int>>& perms, std::vector<int>& signs);

CochainEvaluation higher_orbital_motion(const MotionPreset&, const RegularElement&,
                                        std::span<const TestFunction>,
                                        const IntegrationScheme&);

// t != 0; test functions carry DeformationSpace or ReductiveGroup tags.
CochainEvaluation higher_orbital_deformed(const GroupPreset&, double t,
                                          const RegularElement&,
                                          std::span<const TestFunction>,
                                          const IntegrationScheme&);

CochainEvaluation higher_orbital_reductive(const GroupPreset&, const RegularElement&,
                                           std::span<const TestFunction>,
                                           const IntegrationScheme&);

// Lambda_x, x in K with det_p(Ad_x - Id) bounded away from zero.
IntegralEstimate orbital_integral(const GroupPreset&, const Mat& x_in_k,
                                  const TestFunction&, const IntegrationScheme&);

// Type-erased cochain for the defect operators.
struct CochainEvaluator {
  int degree = 0;
  std::function<CochainEvaluation(const std::vector<TestFunction>&,
                                  const IntegrationScheme&)>
      evaluate;
  std::function<TestFunction(const TestFunction&, const TestFunction&)> convolve_pair;
  // fused defect over shared nodes (tighter error); may be empty
  std::function<IntegralEstimate(const std::vector<TestFunction>&,
                                 const IntegrationScheme&)>
      fused_cyclic_defect;
};

CochainEvaluator make_motion_evaluator(const MotionPreset&, const RegularElement&,
                                       const IntegrationScheme& conv_inner);
CochainEvaluator make_reductive_evaluator(const GroupPreset&, const RegularElement&,
                                          const IntegrationScheme& conv_inner);
CochainEvaluator make_orbital_evaluator(const GroupPreset&, const Mat& x_in_k,
                                        const IntegrationScheme& conv_inner);

// b tau (f_0,...,f_{n+1}): tau(f_0*f_1, f_2,...) + sum_i (-1)^i tau(..., f_i*f_{i+1}, ...)
// + (-1)^{n+1} tau(f_{n+1}*f_0, f_1,...,f_n); zero for a cocycle.
IntegralEstimate hochschild_defect(const CochainEvaluator&,
                                   const std::vector<TestFunction>&,
                                   const IntegrationScheme&);

// tau(f_n, f_0,...,f_{n-1}) - (-1)^n tau(f_0,...,f_n); zero for a cyclic cochain.
IntegralEstimate cyclicity_defect(const CochainEvaluator&,
                                  const std::vector<TestFunction>&,
                                  const IntegrationScheme&);

}  // namespace horbit
