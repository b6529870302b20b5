#pragma once

// Motion groups K x| V with product (k0,v0)(k1,v1) = (k0 k1, k1^{-1} v0 + v1),
// and the Cartan motion groups K x| p where the action is Ad.  Vectors are
// stored as coordinates in a fixed orthonormal basis of V; the distinguished
// subspace A is spanned by the first a_dim coordinates, so H_j(v) = v[j-1].

#include <string>
#include <vector>

#include "horbit/lie.hpp"
#include "horbit/matrix.hpp"
#include "horbit/quadrature.hpp"

namespace horbit {

struct MotionPreset {
  std::string name;
  enum class Compact { SO2, SO3, FiniteCyclic } compact = Compact::SO3;
  int cyclic_order = 0;     // FiniteCyclic only
  int k_dim = 3;            // matrix size of the compact part
  int v_dim = 3;
  int a_dim = 1;
  bool adjoint_action = false;          // Cartan motion: act by Ad on p-coords
  const GroupPreset* reductive = nullptr;  // set for Cartan presets
  bool mk_is_circle = false;            // SE3: stabilizer of A is a circle
  std::vector<Mat> mk_elements;         // finite stabilizer, empty if circle
};

// SO(3) x| R^3 with A = span{e1}; the stabilizer is the circle about e1.
const MotionPreset& se3();
// Z/m acting on R^3 = R (trivial) + R^2 (rotation by 2 pi/m), A = span{e1}.
const MotionPreset& finite_cyclic(int m);
// K x| p for a reductive preset, action Ad, A = a.
const MotionPreset& cartan_motion(const GroupPreset&);
const MotionPreset* find_motion_preset(const std::string& name);

// k-th element of a finite cyclic compact part.
Mat cyclic_element(const MotionPreset&, int k);

// Matrix of the K-action on V-coordinates (orthogonal).
Mat action_matrix(const MotionPreset&, const Mat& k);

struct MotionElement {
  Mat k;
  Vec v;
};

MotionElement mot_mul(const MotionPreset&, const MotionElement&, const MotionElement&);
MotionElement mot_inv(const MotionPreset&, const MotionElement&);
MotionElement mot_identity(const MotionPreset&);

double h_component(const MotionPreset&, int j, const Vec& v);  // j in 1..a_dim
void split_a_aperp(const MotionPreset&, const Vec& v, Vec& a_part, Vec& perp_part);

bool in_compact_group(const MotionPreset&, const Mat& k, double tol = 1e-10);
bool in_stabilizer(const MotionPreset&, const Mat& k, double tol = 1e-10);

struct WeightedNodes {
  std::vector<Mat> nodes;
  std::vector<double> weights;  // sum to 1
};

// Probability nodes over the stabilizer M_K of A in K.
WeightedNodes stabilizer_nodes(const MotionPreset&, int count);
// Pushforward probability nodes over M_K / Z_{M_K}(x); throws if x is not in
// M_K.  All presets here have abelian M_K, so this is a single coset, but the
// construction partitions a finite M_K by cosets in general.
WeightedNodes stabilizer_quotient_nodes(const MotionPreset&, const Mat& x, int count);

// Integration axis for the compact part of the preset.
Axis compact_axis(const MotionPreset&);
// Realize an axis value as a compact-group element.
Mat compact_value(const MotionPreset&, const AxisValue&);

}  // namespace horbit
