#pragma once

// Integration of test functions over G and over motion groups.  The Haar
// measure dg is pinned by the Cartan-coordinates formula
//     int_G f dg = int_K int_p f(k exp X) J(X) dk dX
// with probability Haar dk and Lebesgue dX in trace-orthonormal coordinates.
// The Iwasawa (KMAN, weight e^{2 rho(log a)}) and KAK (sinh-product) routes
// are normalized to the same dg by the constants below: the Iwasawa chart
// measures a+n against p, costing the phi Jacobian; the KAK chart carries two
// probability dk factors and an |M|-fold cover, costing Vol(K)/|M|.

#include "horbit/lie.hpp"
#include "horbit/quadrature.hpp"
#include "horbit/test_function.hpp"

namespace horbit {

Axis k_axis(const GroupPreset&);  // circle (n=2) or SO(3) (n=3)
Mat k_value(const GroupPreset&, const AxisValue&);

// Per-coordinate bounds for the n-part box: if f-slot support forces
// sigma_max(exp(t Y)) <= e^{t Xi}, the Y coordinates satisfy these bounds.
Vec n_coord_bounds(const GroupPreset&, double xi, double t);

// Box radius (in p-coordinates) outside which exp(X) x exp(-X) leaves every
// element of log-scale <= L; found by a deterministic directional scan.
double conjugation_box_radius(const GroupPreset&, const Mat& x, double log_radius,
                              double t = 1.0);

// The three coordinate routes for the same measure dg.
IntegralEstimate integrate_group_cartan(const GroupPreset&, const TestFunction&,
                                        const IntegrationScheme&);
IntegralEstimate integrate_group_iwasawa(const GroupPreset&, const TestFunction&,
                                         const IntegrationScheme&);
IntegralEstimate integrate_group_kak(const GroupPreset&, const TestFunction&,
                                     const IntegrationScheme&);

// int over K x| V of f dk dv (box from the bump support).
IntegralEstimate integrate_motion(const MotionPreset&, const TestFunction&,
                                  const IntegrationScheme&);

}  // namespace horbit
