// Viewing rays through the voxel grid and their per-position cost tables.
//
// A ray stores the ordered voxels it traverses (camera-outward) and a cost
// c_i^l for placing the first occupied label l at position i, plus the cost
// free_cost of the all-free configuration. The table carries an explicit
// free-space column c_i^f (initially zero) so that the non-positivity
// transformation can shuffle mass between positions without changing any
// configuration's total cost by more than the returned constant.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rayfuse/camera.hpp"
#include "rayfuse/grid.hpp"

namespace rayfuse {

struct Ray {
  std::vector<uint32_t> voxels;  // linear voxel ids, camera-outward order
  std::vector<double> costs;     // (N+1) x label_count, label fastest
  double free_cost = 0.0;        // c_r^f, cost of the all-free configuration
  double omitted_constant = 0.0; // accumulated shift + transform constants
  int label_count = 0;

  Ray() = default;
  Ray(std::vector<uint32_t> v, int labels)
      : voxels(std::move(v)), costs(voxels.size() * labels, 0.0), label_count(labels) {}

  std::size_t length() const { return voxels.size(); }  // N_r + 1 positions
  double& cost(std::size_t i, int l) { return costs[i * label_count + l]; }
  double cost(std::size_t i, int l) const { return costs[i * label_count + l]; }
};

// Voxels intersected by the ray from the camera center through pixel (u,v),
// ordered by distance, clipped to the grid. Empty if the ray misses.
// Throws on singular intrinsics.
std::vector<uint32_t> traverse_ray(const Camera& camera, int u, int v, const VoxelGrid& grid);

// Same, for an arbitrary origin/direction pair; also reports the entry
// parameter t of each voxel (used to locate depth points robustly).
std::vector<uint32_t> traverse_segment(const Vec3& origin, const Vec3& dir, const VoxelGrid& grid,
                                       std::vector<double>* entry_t = nullptr);

// Two-label depth cost profile c_i = min(0, lambda*|i - depth_index| - K).
std::vector<double> build_depth_costs(std::size_t ray_length, std::size_t depth_index,
                                      double lambda, double K);

// Adds sigma^l to every position's cost for each occupied label l.
// scores has exactly label_count-1 entries (occupied labels only);
// the free-space column is untouched. Throws on a count mismatch.
void add_semantic_costs(Ray& ray, const std::vector<double>& scores);

// c_i^l <- c_i^l - c_r^f for occupied l, free_cost <- 0. Returns the shift
// constant (the old c_r^f): original potential = shifted potential + constant.
double shift_free_cost(Ray& ray);

// Iterates i = N..0: M = max_l c_i^l; c_{i-1}^f += M; c_i^l -= M for all l.
// The M that would land on the virtual position -1 is returned; afterwards
// all table entries are <= 0. Requires free_cost == 0.
// original potential = transformed potential + returned constant.
double transform_nonpositive(Ray& ray);

// shift_free_cost + transform_nonpositive; accumulates into omitted_constant.
void normalize_ray(Ray& ray);

// Cost of one binary ray configuration under Eq.-style first-occupied
// semantics: free-space costs accumulate along the visible prefix, then the
// first occupied position pays its cost; an all-free ray pays all c_i^f plus
// free_cost. first_occupied == length() means all free; occupied_label is
// ignored in that case.
double ray_config_cost(const Ray& ray, std::size_t first_occupied, int occupied_label);

}  // namespace rayfuse
