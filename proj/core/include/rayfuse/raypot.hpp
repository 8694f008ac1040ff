// Per-ray visibility variables y_i^l, the visibility-consistency constraint
// and its branchwise-linear majorizer.
//
// For a ray with positions i = 0..N the feasible set is
//   0 <= y_i^l <= y_{i-1}^f,  y_i^l <= x_{s_i}^l            (box)
//   sum_{l != f} y_i^l <= max(0, y_{i-1}^f - x_{s_i}^f)     (consistency)
// with the anchor y_{-1}^f = 1. The consistency right-hand side is the
// non-convex part; during optimization it is replaced position-wise by
//   0                        (ZERO branch,   y_{i-1}^f <= x_{s_i}^f at the
//                             linearization point; ties default here)
//   y_{i-1}^f - x_{s_i}^f    (LINEAR branch, y_{i-1}^f >  x_{s_i}^f)
// which under-estimates the max everywhere and is tight at the
// linearization point.
#pragma once

#include <cstdint>
#include <vector>

#include "rayfuse/grid.hpp"
#include "rayfuse/ray.hpp"

namespace rayfuse {

enum class TieBranch : uint8_t { kZero = 0, kLinear = 1 };

enum class Branch : uint8_t { kZero = 0, kLinear = 1 };

// Per-ray branch flags, one per position.
struct MajorizerState {
  std::vector<std::vector<Branch>> flags;  // [ray][position]
  TieBranch tie = TieBranch::kZero;
};

// Visibility variables for one ray: y[i * label_count + l].
using RayVisibility = std::vector<double>;

// Lemma-1 construction: y_i^f = min_{j<=i} x_{s_j}^f, then occupied labels
// are raised greedily in increasing cost order (ties: smaller position, then
// smaller label) subject to the box and consistency constraints. Labels with
// positive cost are left at zero. Minimizes the ray energy for the given x
// when the table is normalized (all costs <= 0). Throws on negative x.
RayVisibility build_visibility(const LabelField& x, const Ray& ray);

// Exact inner product sum_{i,l} c_i^l y_i^l (free-space column included).
double ray_energy(const RayVisibility& y, const Ray& ray);

struct ConsistencyReport {
  double consistency = 0.0;  // worst positive part of sum_l y - max(0, y^f - x^f)
  double box = 0.0;          // worst violation of the box constraints
  double worst() const { return consistency > box ? consistency : box; }
};

ConsistencyReport check_consistency(const LabelField& x, const RayVisibility& y, const Ray& ray);

// Branch flags per position of one ray, evaluated at (x, y).
// LINEAR iff y_{i-1}^f > x_{s_i}^f; exact ties resolve according to tie.
std::vector<Branch> majorize_ray(const LabelField& x, const RayVisibility& y, const Ray& ray,
                                 TieBranch tie = TieBranch::kZero);

// Same over a ray bundle.
MajorizerState majorize(const LabelField& x, const std::vector<RayVisibility>& y,
                        const std::vector<Ray>& rays, TieBranch tie = TieBranch::kZero);

// Scalar majorizer g evaluated with an explicit branch flag; used by the
// dominance/tightness property checks.
inline double majorizer_value(Branch b, double x_f, double y_prev_f) {
  return b == Branch::kZero ? 0.0 : y_prev_f - x_f;
}
inline Branch majorizer_branch(double x_f_lin, double y_prev_f_lin, TieBranch tie) {
  if (y_prev_f_lin > x_f_lin) return Branch::kLinear;
  if (y_prev_f_lin == x_f_lin && tie == TieBranch::kLinear) return Branch::kLinear;
  return Branch::kZero;
}

}  // namespace rayfuse
