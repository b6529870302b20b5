#include "horbit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace horbit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

IntegralEstimate operator+(const IntegralEstimate& a, const IntegralEstimate& b) {
  return {a.value + b.value, std::hypot(a.std_error, b.std_error),
          std::max(a.samples, b.samples)};
}

IntegralEstimate operator-(const IntegralEstimate& a, const IntegralEstimate& b) {
  return {a.value - b.value, std::hypot(a.std_error, b.std_error),
          std::max(a.samples, b.samples)};
}

IntegralEstimate scale(double s, const IntegralEstimate& a) {
  return {s * a.value, std::abs(s) * a.std_error, a.samples};
}

double combined_error(const IntegralEstimate& a, const IntegralEstimate& b) {
  return std::hypot(a.std_error, b.std_error);
}

Axis Axis::box(const Vec& lo, const Vec& hi) {
  Axis a;
  a.kind = Kind::Box;
  a.lo = lo;
  a.hi = hi;
  for (int i = 0; i < lo.n; ++i)
    if (!(hi[i] > lo[i])) throw InvalidInput("Axis::box: degenerate box");
  return a;
}

Axis Axis::ball(const Vec& center, double radius, double margin) {
  Vec lo(center.n), hi(center.n);
  for (int i = 0; i < center.n; ++i) {
    lo[i] = center[i] - margin * radius;
    hi[i] = center[i] + margin * radius;
  }
  return box(lo, hi);
}

Axis Axis::atoms(std::vector<double> weights) {
  Axis a;
  a.kind = Kind::Atoms;
  if (weights.empty()) throw InvalidInput("Axis::atoms: empty weight list");
  for (double w : weights)
    if (!(w > 0.0)) throw InvalidInput("Axis::atoms: weights must be positive");
  a.weights = std::move(weights);
  return a;
}

int Axis::continuous_dim() const {
  switch (kind) {
    case Kind::Box: return lo.n;
    case Kind::Circle: return 1;
    case Kind::SO3: return 3;
    case Kind::Atoms: return 0;
  }
  return 0;
}

int Domain::continuous_dim() const {
  int d = 0;
  for (const auto& a : axes) d += a.continuous_dim();
  return d;
}

double Domain::box_volume_product() const {
  double v = 1.0;
  for (const auto& a : axes)
    if (a.kind == Axis::Kind::Box)
      for (int i = 0; i < a.lo.n; ++i) v *= (a.hi[i] - a.lo[i]);
  return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

namespace {

const std::vector<double>& cached_gauss_nodes(int n, bool want_weights,
                                              const std::vector<double>** w_out) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> nd, wt;
    gauss_legendre(n, nd, wt);
    it = cache.emplace(n, std::make_pair(std::move(nd), std::move(wt))).first;
  }
  if (want_weights && w_out) *w_out = &it->second.second;
  return it->second.first;
}

// First 32 primes for the Halton bases.
constexpr int kPrimes[32] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                             37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                             83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

// Scrambled Halton: one random digit permutation per dimension, redrawn per
// batch so that batch means are independent randomizations.
struct ScrambledHalton {
  std::vector<std::vector<int>> perms;  // per dim
  int dims;

  ScrambledHalton(int d, std::uint64_t seed) : dims(d) {
    if (d > 32) throw InvalidInput("QMC: more than 32 continuous dimensions");
    perms.resize(d);
    for (int k = 0; k < d; ++k) {
      const int p = kPrimes[k];
      perms[k].resize(p);
      for (int i = 0; i < p; ++i) perms[k][i] = i;
      std::mt19937_64 rng(mix_seed(seed, 1000003ULL * k + 17));
      for (int i = p - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % (i + 1));
        std::swap(perms[k][i], perms[k][j]);
      }
    }
  }

  void point(long index, std::span<double> out) const {
    for (int k = 0; k < dims; ++k) {
      const int p = kPrimes[k];
      const auto& sig = perms[k];
      double inv = 1.0 / p, f = inv, u = 0.0;
      long i = index;
      int digits = 0;
      // enough digits to exhaust double precision
      while ((i > 0 || digits < 2) && f > 1e-18) {
        u += f * sig[i % p];
        i /= p;
        f *= inv;
        ++digits;
      }
      out[k] = std::min(u, 1.0 - 1e-16);
    }
  }
};

struct AtomAxisRef {
  int axis_index;
  int count;
};

// Expanded deterministic node list for one continuous axis.
struct TensorAxisNodes {
  std::vector<AxisValue> values;
  std::vector<double> weights;
};

TensorAxisNodes tensor_nodes_for_axis(const Axis& ax, int p) {
  TensorAxisNodes out;
  switch (ax.kind) {
    case Axis::Kind::Circle: {
      for (int i = 0; i < p; ++i) {
        AxisValue v;
        v.angle = kTwoPi * i / p;
        out.values.push_back(v);
        out.weights.push_back(1.0 / p);
      }
      break;
    }
    case Axis::Kind::SO3: {
      const std::vector<double>* gw = nullptr;
      const auto& gn = cached_gauss_nodes(p, true, &gw);
      for (int ia = 0; ia < p; ++ia)
        for (int iz = 0; iz < p; ++iz)
          for (int ig = 0; ig < p; ++ig) {
            AxisValue v;
            v.rot = euler_zyz(kTwoPi * ia / p, gn[iz], kTwoPi * ig / p);
            out.values.push_back(v);
            out.weights.push_back((1.0 / p) * (0.5 * (*gw)[iz]) * (1.0 / p));
          }
      break;
    }
    case Axis::Kind::Box: {
      const std::vector<double>* gw = nullptr;
      const auto& gn = cached_gauss_nodes(p, true, &gw);
      const int d = ax.lo.n;
      std::vector<int> idx(d, 0);
      while (true) {
        AxisValue v;
        v.point = Vec(d);
        double w = 1.0;
        for (int k = 0; k < d; ++k) {
          const double half = 0.5 * (ax.hi[k] - ax.lo[k]);
          v.point[k] = ax.lo[k] + half * (gn[idx[k]] + 1.0);
          w *= half * (*gw)[idx[k]];
        }
        out.values.push_back(v);
        out.weights.push_back(w);
        int k = 0;
        while (k < d && ++idx[k] == p) idx[k++] = 0;
        if (k == d) break;
      }
      break;
    }
    case Axis::Kind::Atoms:
      break;
  }
  return out;
}

void map_continuous(const Axis& ax, const double* u, AxisValue& v) {
  switch (ax.kind) {
    case Axis::Kind::Circle:
      v.angle = kTwoPi * u[0];
      break;
    case Axis::Kind::SO3:
      v.rot = euler_zyz(kTwoPi * u[0], 1.0 - 2.0 * u[1], kTwoPi * u[2]);
      break;
    case Axis::Kind::Box: {
      const int d = ax.lo.n;
      v.point = Vec(d);
      for (int k = 0; k < d; ++k) v.point[k] = ax.lo[k] + (ax.hi[k] - ax.lo[k]) * u[k];
      break;
    }
    case Axis::Kind::Atoms:
      break;
  }
}

[[noreturn]] void poisoned(const std::vector<AxisValue>& vals, size_t comp) {
  std::string msg = "integrand produced NaN (component " + std::to_string(comp) + ") at node:";
  for (size_t i = 0; i < vals.size(); ++i) {
    msg += " axis" + std::to_string(i);
    if (vals[i].atom >= 0) msg += "=atom" + std::to_string(vals[i].atom);
    else if (vals[i].point.n > 0) {
      msg += "=(";
      for (int k = 0; k < vals[i].point.n; ++k)
        msg += (k ? "," : "") + std::to_string(vals[i].point[k]);
      msg += ")";
    } else {
      msg += "=angle" + std::to_string(vals[i].angle);
    }
  }
  throw PoisonedEstimate(msg);
}

}  // namespace

std::vector<IntegralEstimate> integrate_multi(const Domain& dom, int n_out,
                                              const MultiIntegrand& f,
                                              const IntegrationScheme& scheme) {
  const size_t n_axes = dom.axes.size();
  std::vector<AxisValue> vals(n_axes);
  std::vector<double> out(n_out);

  // atom axes are summed exactly in every mode
  std::vector<AtomAxisRef> atom_axes;
  double atom_total = 1.0;
  for (size_t i = 0; i < n_axes; ++i)
    if (dom.axes[i].kind == Axis::Kind::Atoms) {
      atom_axes.push_back({static_cast<int>(i), static_cast<int>(dom.axes[i].weights.size())});
      atom_total *= dom.axes[i].weights.size();
    }

  auto eval_with_atoms = [&](std::vector<double>& acc) {
    // odometer over atom combinations
    std::vector<int> idx(atom_axes.size(), 0);
    while (true) {
      double w = 1.0;
      for (size_t k = 0; k < atom_axes.size(); ++k) {
        vals[atom_axes[k].axis_index].atom = idx[k];
        w *= dom.axes[atom_axes[k].axis_index].weights[idx[k]];
      }
      f(vals, out);
      for (int c = 0; c < n_out; ++c) {
        if (std::isnan(out[c])) poisoned(vals, c);
        acc[c] += w * out[c];
      }
      size_t k = 0;
      while (k < atom_axes.size() && ++idx[k] == atom_axes[k].count) idx[k++] = 0;
      if (atom_axes.empty() || k == atom_axes.size()) break;
    }
  };

  std::vector<IntegralEstimate> result(n_out);

  if (scheme.kind == SchemeKind::TensorGauss) {
    std::vector<TensorAxisNodes> lists;
    std::vector<int> cont_axes;
    for (size_t i = 0; i < n_axes; ++i)
      if (dom.axes[i].kind != Axis::Kind::Atoms) {
        lists.push_back(tensor_nodes_for_axis(dom.axes[i], scheme.nodes_per_axis));
        cont_axes.push_back(static_cast<int>(i));
      }
    std::vector<double> acc(n_out, 0.0);
    std::vector<size_t> idx(lists.size(), 0);
    long tuples = 0;
    while (true) {
      double w = 1.0;
      for (size_t k = 0; k < lists.size(); ++k) {
        vals[cont_axes[k]] = lists[k].values[idx[k]];
        w *= lists[k].weights[idx[k]];
      }
      std::vector<double> local(n_out, 0.0);
      eval_with_atoms(local);
      for (int c = 0; c < n_out; ++c) acc[c] += w * local[c];
      ++tuples;
      size_t k = 0;
      while (k < lists.size() && ++idx[k] == lists[k].values.size()) idx[k++] = 0;
      if (lists.empty() || k == lists.size()) break;
    }
    for (int c = 0; c < n_out; ++c)
      result[c] = {acc[c], 0.0, static_cast<long>(tuples * atom_total)};
    return result;
  }

  // randomized schemes with batch-means error estimation
  const int dims = dom.continuous_dim();
  const int batches = std::max(1, scheme.batch_count);
  const long per_batch = std::max<long>(1, scheme.budget / batches);
  std::vector<std::vector<double>> batch_means(n_out, std::vector<double>(batches, 0.0));
  std::vector<double> u(std::max(1, dims));

  for (int b = 0; b < batches; ++b) {
    const std::uint64_t bseed = mix_seed(scheme.seed, 7919ULL * b + 1);
    ScrambledHalton halton(scheme.kind == SchemeKind::QMC ? dims : 0, bseed);
    std::mt19937_64 rng(bseed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> acc(n_out, 0.0);
    for (long i = 0; i < per_batch; ++i) {
      if (scheme.kind == SchemeKind::QMC) {
        halton.point(i + 1, std::span<double>(u.data(), dims));
      } else {
        for (int k = 0; k < dims; ++k) u[k] = unif(rng);
      }
      int pos = 0;
      for (size_t ax = 0; ax < n_axes; ++ax) {
        if (dom.axes[ax].kind == Axis::Kind::Atoms) continue;
        map_continuous(dom.axes[ax], u.data() + pos, vals[ax]);
        pos += dom.axes[ax].continuous_dim();
      }
      eval_with_atoms(acc);
    }
    const double vol = dom.box_volume_product();
    for (int c = 0; c < n_out; ++c) batch_means[c][b] = vol * acc[c] / per_batch;
  }

  const long samples = static_cast<long>(per_batch * batches * atom_total);
  for (int c = 0; c < n_out; ++c) {
    double mean = 0.0;
    for (double m : batch_means[c]) mean += m;
    mean /= batches;
    double var = 0.0;
    for (double m : batch_means[c]) var += (m - mean) * (m - mean);
    const double se = batches > 1 ? std::sqrt(var / (batches - 1.0) / batches) : 0.0;
    result[c] = {mean, se, samples};
  }
  return result;
}

IntegralEstimate integrate(const Domain& dom, const Integrand& f,
                           const IntegrationScheme& scheme) {
  auto wrap = [&f](std::span<const AxisValue> v, std::span<double> out) {
    out[0] = f(v);
  };
  return integrate_multi(dom, 1, wrap, scheme)[0];
}

}  // namespace horbit
