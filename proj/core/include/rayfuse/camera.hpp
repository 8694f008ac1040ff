// Pinhole cameras, depth maps and per-pixel semantic score maps.
// Convention: X_cam = R * X_world + t, pixel = K * X_cam / z.
#pragma once

#include <array>
#include <vector>

namespace rayfuse {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;  // row-major

Vec3 mat_vec(const Mat3& m, const Vec3& v);
Mat3 mat_transpose(const Mat3& m);
double mat_det(const Mat3& m);
Mat3 mat_inverse(const Mat3& m);  // throws on singular input

struct Camera {
  Mat3 intrinsics{};
  Mat3 rotation{};
  Vec3 translation{};
  int width = 0, height = 0;

  // Verifies R R^T = I and det R = +1 within tol. Throws otherwise.
  void check_rotation(double tol = 1e-6) const;

  Vec3 center() const;  // -R^T t
  // Unit world-space direction through the center of pixel (u,v).
  Vec3 pixel_direction(int u, int v) const;
  // World point at z-depth d along the optical axis through pixel (u,v).
  Vec3 backproject(int u, int v, double depth) const;
};

// Depth per pixel in meters along the optical axis; values <= 0 are invalid.
struct DepthMap {
  int width = 0, height = 0;
  std::vector<float> depth;

  DepthMap() = default;
  DepthMap(int w, int h) : width(w), height(h), depth(std::size_t(w) * h, 0.0f) {}
  float at(int u, int v) const { return depth[std::size_t(v) * width + u]; }
  float& at(int u, int v) { return depth[std::size_t(v) * width + u]; }
  bool valid(int u, int v) const { return at(u, v) > 0.0f; }
};

// Classifier responses sigma^l per pixel, one plane per label (L+1 planes).
struct SemanticScores {
  int width = 0, height = 0;
  int label_count = 0;
  std::vector<float> scores;  // plane-major: [label][v][u]

  SemanticScores() = default;
  SemanticScores(int w, int h, int labels)
      : width(w), height(h), label_count(labels), scores(std::size_t(w) * h * labels, 0.0f) {}
  float at(int u, int v, int label) const {
    return scores[(std::size_t(label) * height + v) * width + u];
  }
  float& at(int u, int v, int label) {
    return scores[(std::size_t(label) * height + v) * width + u];
  }
};

}  // namespace rayfuse
