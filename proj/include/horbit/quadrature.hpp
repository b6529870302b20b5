#pragma once

// Measures and integration: probability Haar on the compact groups, Lebesgue
// boxes for the noncompact directions, tensor Gauss-Legendre for low
// dimension and scrambled-Halton / plain Monte Carlo with batch-means error
// estimation above that.
//
// A Domain is an ordered product of axes.  Finite axes (group atoms) are
// always summed exactly; continuous axes consume coordinates of the sample
// stream.  Compact-group axes carry probability Haar by construction.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "horbit/matrix.hpp"

namespace horbit {

enum class SchemeKind { TensorGauss, QMC, MC };

struct IntegrationScheme {
  SchemeKind kind = SchemeKind::QMC;
  long budget = 100000;    // continuous samples (QMC/MC)
  int nodes_per_axis = 16; // per continuous coordinate (TensorGauss)
  std::uint64_t seed = 1;
  int batch_count = 16;    // >= 16 for randomized schemes

  IntegrationScheme with_budget(long b) const { auto s = *this; s.budget = b; return s; }
  IntegrationScheme with_seed(std::uint64_t sd) const { auto s = *this; s.seed = sd; return s; }
};

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 only for deterministic schemes
  long samples = 0;
};

IntegralEstimate operator+(const IntegralEstimate&, const IntegralEstimate&);
IntegralEstimate operator-(const IntegralEstimate&, const IntegralEstimate&);
IntegralEstimate scale(double, const IntegralEstimate&);
double combined_error(const IntegralEstimate&, const IntegralEstimate&);

struct Axis {
  enum class Kind { Box, Circle, SO3, Atoms } kind = Kind::Box;
  // Box
  Vec lo, hi;
  // Atoms
  std::vector<double> weights;

  static Axis box(const Vec& lo, const Vec& hi);
  static Axis ball(const Vec& center, double radius, double margin = 1.1);
  static Axis circle() { Axis a; a.kind = Kind::Circle; return a; }
  static Axis so3() { Axis a; a.kind = Kind::SO3; return a; }
  static Axis atoms(std::vector<double> weights);
  int continuous_dim() const;
};

struct Domain {
  std::vector<Axis> axes;
  int continuous_dim() const;
  double box_volume_product() const;  // product of box volumes (Lebesgue axes)
};

// One realized integration variable.
struct AxisValue {
  int atom = -1;    // Atoms
  double angle = 0; // Circle, in [0, 2 pi)
  Mat rot;          // SO3
  Vec point;        // Box
};

// Writes m outputs per node; all components share nodes and batching.
using MultiIntegrand = std::function<void(std::span<const AxisValue>, std::span<double>)>;
using Integrand = std::function<double(std::span<const AxisValue>)>;

std::vector<IntegralEstimate> integrate_multi(const Domain&, int n_out,
                                              const MultiIntegrand&,
                                              const IntegrationScheme&);
IntegralEstimate integrate(const Domain&, const Integrand&, const IntegrationScheme&);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Deterministic seed mixing.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace horbit
