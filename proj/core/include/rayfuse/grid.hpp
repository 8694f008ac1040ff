// Label space and voxel grid geometry, plus the relaxed per-voxel label
// field x_s^l that all other modules operate on. Label 0 is always free
// space; labels 1..L are occupied-space classes.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rayfuse {

struct LabelSpace {
  int count = 2;  // L+1 labels including free space
  std::vector<std::string> names;

  static constexpr int kFreeSpace = 0;

  explicit LabelSpace(int label_count = 2, std::vector<std::string> label_names = {});

  int occupied_count() const { return count - 1; }
};

struct VoxelGrid {
  std::array<int, 3> dims{1, 1, 1};
  std::array<double, 3> origin{0.0, 0.0, 0.0};
  double voxel_size = 1.0;  // isotropic, meters

  VoxelGrid() = default;
  VoxelGrid(std::array<int, 3> d, std::array<double, 3> o, double vs);

  std::size_t voxel_count() const {
    return std::size_t(dims[0]) * std::size_t(dims[1]) * std::size_t(dims[2]);
  }
  bool in_bounds(int ix, int iy, int iz) const {
    return ix >= 0 && iy >= 0 && iz >= 0 && ix < dims[0] && iy < dims[1] && iz < dims[2];
  }
  std::size_t linear(int ix, int iy, int iz) const {
    return std::size_t(ix) + std::size_t(dims[0]) * (std::size_t(iy) + std::size_t(dims[1]) * std::size_t(iz));
  }
  std::array<int, 3> delinear(std::size_t s) const {
    const std::size_t nx = dims[0], ny = dims[1];
    return {int(s % nx), int((s / nx) % ny), int(s / (nx * ny))};
  }
  // Center of voxel (ix,iy,iz) in world coordinates.
  std::array<double, 3> voxel_center(int ix, int iy, int iz) const {
    return {origin[0] + (ix + 0.5) * voxel_size,
            origin[1] + (iy + 0.5) * voxel_size,
            origin[2] + (iz + 0.5) * voxel_size};
  }
  std::array<double, 3> min_corner() const { return origin; }
  std::array<double, 3> max_corner() const {
    return {origin[0] + dims[0] * voxel_size,
            origin[1] + dims[1] * voxel_size,
            origin[2] + dims[2] * voxel_size};
  }
  // Voxel index containing a world point, or false if outside.
  bool locate(const std::array<double, 3>& p, std::array<int, 3>* idx) const;
};

// Relaxed indicator variables x_s^l, one real per (voxel, label).
// Layout is voxel-major with the label running fastest.
struct LabelField {
  VoxelGrid grid;
  int label_count = 0;
  std::vector<double> values;

  LabelField() = default;
  LabelField(const VoxelGrid& g, int labels)
      : grid(g), label_count(labels), values(g.voxel_count() * labels, 0.0) {}

  double& at(std::size_t voxel, int label) { return values[voxel * label_count + label]; }
  double at(std::size_t voxel, int label) const { return values[voxel * label_count + label]; }
  double* voxel_data(std::size_t voxel) { return values.data() + voxel * label_count; }
  const double* voxel_data(std::size_t voxel) const { return values.data() + voxel * label_count; }
};

struct BinaryLabeling {
  VoxelGrid grid;
  int label_count = 0;
  std::vector<uint8_t> labels;  // one label index per voxel

  BinaryLabeling() = default;
  BinaryLabeling(const VoxelGrid& g, int labels_n)
      : grid(g), label_count(labels_n), labels(g.voxel_count(), 0) {}
};

// Every entry 1/(L+1); per-voxel sums are exactly 1 in exact arithmetic.
LabelField uniform_init(const VoxelGrid& grid, const LabelSpace& labels);

// Per voxel, the label with maximal x_s^l; ties break to the smallest index.
BinaryLabeling argmax_round(const LabelField& x);

}  // namespace rayfuse
