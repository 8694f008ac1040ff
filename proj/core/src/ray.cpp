#include "rayfuse/ray.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rayfuse {

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Mat3 mat_transpose(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

double mat_det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat_inverse(const Mat3& m) {
  const double det = mat_det(m);
  double scale = 0.0;
  for (const auto& row : m)
    for (double v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0 || std::abs(det) <= 1e-12 * scale * scale * scale)
    throw std::invalid_argument("mat_inverse: singular matrix");
  const double inv = 1.0 / det;
  Mat3 r;
  r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * inv;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv;
  r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * inv;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv;
  r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * inv;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv;
  return r;
}

void Camera::check_rotation(double tol) const {
  const Mat3 rt = mat_transpose(rotation);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += rotation[i][k] * rt[k][j];
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - expect) > tol)
        throw std::invalid_argument("Camera rotation is not orthonormal");
    }
  }
  if (std::abs(mat_det(rotation) - 1.0) > tol)
    throw std::invalid_argument("Camera rotation determinant is not +1");
}

Vec3 Camera::center() const {
  const Vec3 rt_t = mat_vec(mat_transpose(rotation), translation);
  return {-rt_t[0], -rt_t[1], -rt_t[2]};
}

Vec3 Camera::pixel_direction(int u, int v) const {
  const Mat3 kinv = mat_inverse(intrinsics);
  Vec3 d_cam = mat_vec(kinv, {u + 0.5, v + 0.5, 1.0});
  Vec3 d = mat_vec(mat_transpose(rotation), d_cam);
  const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
  return {d[0] / n, d[1] / n, d[2] / n};
}

Vec3 Camera::backproject(int u, int v, double depth) const {
  const Mat3 kinv = mat_inverse(intrinsics);
  Vec3 d_cam = mat_vec(kinv, {u + 0.5, v + 0.5, 1.0});
  const double s = depth / d_cam[2];
  const Vec3 p_cam{d_cam[0] * s, d_cam[1] * s, d_cam[2] * s};
  const Vec3 shifted{p_cam[0] - translation[0], p_cam[1] - translation[1], p_cam[2] - translation[2]};
  return mat_vec(mat_transpose(rotation), shifted);
}

std::vector<uint32_t> traverse_segment(const Vec3& origin, const Vec3& dir, const VoxelGrid& grid,
                                       std::vector<double>* entry_t) {
  std::vector<uint32_t> out;
  if (entry_t) entry_t->clear();

  const Vec3 lo = grid.min_corner();
  const Vec3 hi = grid.max_corner();
  const double inf = std::numeric_limits<double>::infinity();

  // Clip the forward half-line against the grid box.
  double t0 = 0.0, t1 = inf;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(dir[k]) < 1e-300) {
      if (origin[k] < lo[k] || origin[k] > hi[k]) return out;
    } else {
      double ta = (lo[k] - origin[k]) / dir[k];
      double tb = (hi[k] - origin[k]) / dir[k];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
    }
  }
  if (!(t1 > t0)) return out;

  const double h = grid.voxel_size;
  // Nudge inside so the starting voxel is unambiguous.
  const double eps = std::max(1e-12, 1e-9 * (t1 - t0));
  const double t_start = t0 + eps;

  std::array<int, 3> v;
  for (int k = 0; k < 3; ++k) {
    const double p = origin[k] + t_start * dir[k];
    v[k] = std::clamp(int(std::floor((p - lo[k]) / h)), 0, grid.dims[k] - 1);
  }

  std::array<int, 3> step;
  std::array<double, 3> t_max, t_delta;
  for (int k = 0; k < 3; ++k) {
    if (dir[k] > 0) {
      step[k] = 1;
      t_max[k] = (lo[k] + (v[k] + 1) * h - origin[k]) / dir[k];
      t_delta[k] = h / dir[k];
    } else if (dir[k] < 0) {
      step[k] = -1;
      t_max[k] = (lo[k] + v[k] * h - origin[k]) / dir[k];
      t_delta[k] = -h / dir[k];
    } else {
      step[k] = 0;
      t_max[k] = inf;
      t_delta[k] = inf;
    }
  }

  double t_entry = t0;
  const std::size_t guard = 4 * std::size_t(grid.dims[0] + grid.dims[1] + grid.dims[2]) + 16;
  for (std::size_t it = 0; it < guard; ++it) {
    out.push_back(uint32_t(grid.linear(v[0], v[1], v[2])));
    if (entry_t) entry_t->push_back(t_entry);

    int a = 0;
    if (t_max[1] < t_max[a]) a = 1;
    if (t_max[2] < t_max[a]) a = 2;
    if (t_max[a] >= t1) break;  // current voxel is the last inside
    v[a] += step[a];
    if (v[a] < 0 || v[a] >= grid.dims[a]) break;
    t_entry = t_max[a];
    t_max[a] += t_delta[a];
  }
  return out;
}

std::vector<uint32_t> traverse_ray(const Camera& camera, int u, int v, const VoxelGrid& grid) {
  if (u < 0 || v < 0 || u >= camera.width || v >= camera.height)
    throw std::invalid_argument("traverse_ray: pixel out of image bounds");
  const Vec3 dir = camera.pixel_direction(u, v);  // throws on singular K
  return traverse_segment(camera.center(), dir, grid);
}

std::vector<double> build_depth_costs(std::size_t ray_length, std::size_t depth_index,
                                      double lambda, double K) {
  if (depth_index >= ray_length)
    throw std::invalid_argument("build_depth_costs: depth index beyond ray length");
  if (lambda < 0.0) throw std::invalid_argument("build_depth_costs: lambda must be >= 0");
  std::vector<double> c(ray_length);
  for (std::size_t i = 0; i < ray_length; ++i) {
    const double d = double(i > depth_index ? i - depth_index : depth_index - i);
    c[i] = std::min(0.0, lambda * d - K);
  }
  return c;
}

void add_semantic_costs(Ray& ray, const std::vector<double>& scores) {
  if (int(scores.size()) != ray.label_count - 1)
    throw std::invalid_argument("add_semantic_costs: one score per occupied label required");
  for (std::size_t i = 0; i < ray.length(); ++i)
    for (int l = 1; l < ray.label_count; ++l) ray.cost(i, l) += scores[l - 1];
}

double shift_free_cost(Ray& ray) {
  const double c = ray.free_cost;
  if (c != 0.0) {
    for (std::size_t i = 0; i < ray.length(); ++i)
      for (int l = 1; l < ray.label_count; ++l) ray.cost(i, l) -= c;
    ray.free_cost = 0.0;
  }
  return c;
}

double transform_nonpositive(Ray& ray) {
  if (ray.free_cost != 0.0)
    throw std::invalid_argument("transform_nonpositive: free_cost must be 0 (shift first)");
  double carried = 0.0;
  for (std::size_t ii = ray.length(); ii-- > 0;) {
    double m = ray.cost(ii, 0);
    for (int l = 1; l < ray.label_count; ++l) m = std::max(m, ray.cost(ii, l));
    for (int l = 0; l < ray.label_count; ++l) ray.cost(ii, l) -= m;
    if (ii == 0)
      carried = m;  // would land on the virtual position -1
    else
      ray.cost(ii - 1, 0) += m;
  }
  return carried;
}

void normalize_ray(Ray& ray) {
  ray.omitted_constant += shift_free_cost(ray);
  ray.omitted_constant += transform_nonpositive(ray);
}

double ray_config_cost(const Ray& ray, std::size_t first_occupied, int occupied_label) {
  double c = 0.0;
  const std::size_t n = ray.length();
  for (std::size_t i = 0; i < std::min(first_occupied, n); ++i) c += ray.cost(i, 0);
  if (first_occupied < n)
    c += ray.cost(first_occupied, occupied_label);
  else
    c += ray.free_cost;
  return c;
}

}  // namespace rayfuse
