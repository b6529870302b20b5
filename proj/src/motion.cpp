#include "horbit/motion.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace horbit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

MotionPreset build_se3() {
  MotionPreset p;
  p.name = "SE3";
  p.compact = MotionPreset::Compact::SO3;
  p.k_dim = 3;
  p.v_dim = 3;
  p.a_dim = 1;
  p.mk_is_circle = true;
  return p;
}

MotionPreset build_finite_cyclic(int m) {
  MotionPreset p;
  p.name = "FiniteCyclic" + std::to_string(m);
  p.compact = MotionPreset::Compact::FiniteCyclic;
  p.cyclic_order = m;
  p.k_dim = 3;
  p.v_dim = 3;
  p.a_dim = 1;
  for (int j = 0; j < m; ++j) {
    const double t = kTwoPi * j / m;
    Mat k = Mat::identity(3);
    k(1, 1) = std::cos(t);
    k(1, 2) = -std::sin(t);
    k(2, 1) = std::sin(t);
    k(2, 2) = std::cos(t);
    p.mk_elements.push_back(k);  // the whole of K stabilizes e1
  }
  return p;
}

MotionPreset build_cartan(const GroupPreset& g) {
  MotionPreset p;
  p.name = "CartanMotion" + g.name;
  p.compact = g.n == 2 ? MotionPreset::Compact::SO2 : MotionPreset::Compact::SO3;
  p.k_dim = g.n;
  p.v_dim = g.dim_p;
  p.a_dim = g.dim_a;
  p.adjoint_action = true;
  p.reductive = &g;
  p.mk_elements = g.m_elements;  // M_K = Z_K(a) = M
  return p;
}

}  // namespace

const MotionPreset& se3() {
  static const MotionPreset p = build_se3();
  return p;
}

const MotionPreset& finite_cyclic(int m) {
  static std::map<int, MotionPreset> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    if (m < 1) throw InvalidInput("finite_cyclic: order must be >= 1");
    it = cache.emplace(m, build_finite_cyclic(m)).first;
  }
  return it->second;
}

const MotionPreset& cartan_motion(const GroupPreset& g) {
  static std::map<const GroupPreset*, MotionPreset> cache;
  auto it = cache.find(&g);
  if (it == cache.end()) it = cache.emplace(&g, build_cartan(g)).first;
  return it->second;
}

const MotionPreset* find_motion_preset(const std::string& name) {
  if (name == "SE3") return &se3();
  if (name.rfind("FiniteCyclic", 0) == 0) {
    const int m = std::atoi(name.c_str() + 12);
    if (m >= 1) return &finite_cyclic(m);
    return nullptr;
  }
  if (name == "CartanMotionSL2R") return &cartan_motion(sl2r());
  if (name == "CartanMotionSL3R") return &cartan_motion(sl3r());
  return nullptr;
}

Mat cyclic_element(const MotionPreset& p, int k) {
  if (p.compact != MotionPreset::Compact::FiniteCyclic)
    throw InvalidInput("cyclic_element: not a finite cyclic preset");
  return p.mk_elements[((k % p.cyclic_order) + p.cyclic_order) % p.cyclic_order];
}

Mat action_matrix(const MotionPreset& p, const Mat& k) {
  if (!p.adjoint_action) return k;
  // Ad_k on p-coordinates: A_ij = <P_i, k P_j k^T>
  const GroupPreset& g = *p.reductive;
  Mat a(p.v_dim);
  const Mat kt = transpose(k);
  for (int j = 0; j < p.v_dim; ++j) {
    const Mat img = k * g.basis_p[j] * kt;
    for (int i = 0; i < p.v_dim; ++i) a(i, j) = inner(g.basis_p[i], img);
  }
  return a;
}

MotionElement mot_mul(const MotionPreset& p, const MotionElement& a,
                      const MotionElement& b) {
  if (a.k.n != p.k_dim || b.k.n != p.k_dim || a.v.n != p.v_dim || b.v.n != p.v_dim)
    throw InvalidInput("mot_mul: preset mismatch");
  MotionElement c;
  c.k = a.k * b.k;
  c.v = mul(transpose(action_matrix(p, b.k)), a.v) + b.v;
  return c;
}

MotionElement mot_inv(const MotionPreset& p, const MotionElement& a) {
  MotionElement c;
  c.k = transpose(a.k);
  c.v = -1.0 * mul(action_matrix(p, a.k), a.v);
  return c;
}

MotionElement mot_identity(const MotionPreset& p) {
  return {Mat::identity(p.k_dim), Vec(p.v_dim)};
}

double h_component(const MotionPreset& p, int j, const Vec& v) {
  if (j < 1 || j > p.a_dim) throw InvalidInput("h_component: index out of range");
  return v[j - 1];
}

void split_a_aperp(const MotionPreset& p, const Vec& v, Vec& a_part, Vec& perp_part) {
  a_part = Vec(p.v_dim);
  perp_part = Vec(p.v_dim);
  for (int i = 0; i < p.v_dim; ++i)
    (i < p.a_dim ? a_part[i] : perp_part[i]) = v[i];
}

bool in_compact_group(const MotionPreset& p, const Mat& k, double tol) {
  if (k.n != p.k_dim || !in_k_group(k, tol)) return false;
  if (p.compact == MotionPreset::Compact::FiniteCyclic) {
    for (const Mat& m : p.mk_elements)
      if (max_abs_diff(m, k) <= tol) return true;
    return false;
  }
  return true;
}

bool in_stabilizer(const MotionPreset& p, const Mat& k, double tol) {
  if (!in_compact_group(p, k, tol)) return false;
  const Mat act = action_matrix(p, k);
  for (int j = 0; j < p.a_dim; ++j) {
    Vec ej(p.v_dim);
    ej[j] = 1.0;
    const Vec img = mul(act, ej);
    if (norm(img - ej) > tol) return false;
  }
  return true;
}

WeightedNodes stabilizer_nodes(const MotionPreset& p, int count) {
  WeightedNodes out;
  if (p.mk_is_circle) {
    for (int i = 0; i < count; ++i) {
      out.nodes.push_back(rot3_x(kTwoPi * i / count));
      out.weights.push_back(1.0 / count);
    }
    return out;
  }
  const size_t m = p.mk_elements.size();
  out.nodes = p.mk_elements;
  out.weights.assign(m, 1.0 / static_cast<double>(m));
  return out;
}

WeightedNodes stabilizer_quotient_nodes(const MotionPreset& p, const Mat& x, int count) {
  if (!in_stabilizer(p, x)) throw InvalidInput("stabilizer_quotient_nodes: x not in M_K");
  WeightedNodes out;
  if (p.mk_is_circle) {
    // the circle is abelian: Z_{M_K}(x) = M_K, the quotient is a point
    out.nodes.push_back(Mat::identity(p.k_dim));
    out.weights.push_back(1.0);
    return out;
  }
  // partition the finite M_K into cosets h Z(x)
  const auto& elems = p.mk_elements;
  std::vector<const Mat*> centralizer;
  for (const Mat& m : elems)
    if (max_abs_diff(m * x, x * m) <= 1e-10) centralizer.push_back(&m);
  std::vector<bool> used(elems.size(), false);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (used[i]) continue;
    int size = 0;
    for (const Mat* z : centralizer) {
      const Mat rep = elems[i] * (*z);
      for (size_t j = 0; j < elems.size(); ++j)
        if (!used[j] && max_abs_diff(rep, elems[j]) <= 1e-10) {
          used[j] = true;
          ++size;
          break;
        }
    }
    out.nodes.push_back(elems[i]);
    out.weights.push_back(static_cast<double>(size) / elems.size());
  }
  return out;
}

Axis compact_axis(const MotionPreset& p) {
  switch (p.compact) {
    case MotionPreset::Compact::SO2: return Axis::circle();
    case MotionPreset::Compact::SO3: return Axis::so3();
    case MotionPreset::Compact::FiniteCyclic:
      return Axis::atoms(std::vector<double>(p.cyclic_order, 1.0 / p.cyclic_order));
  }
  throw InvalidInput("compact_axis: unsupported compact part");
}

Mat compact_value(const MotionPreset& p, const AxisValue& v) {
  switch (p.compact) {
    case MotionPreset::Compact::SO2: return rot2(v.angle);
    case MotionPreset::Compact::SO3: return v.rot;
    case MotionPreset::Compact::FiniteCyclic: return p.mk_elements[v.atom];
  }
  throw InvalidInput("compact_value: unsupported compact part");
}

}  // namespace horbit
