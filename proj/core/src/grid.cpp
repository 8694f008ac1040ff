#include "rayfuse/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rayfuse {

LabelSpace::LabelSpace(int label_count, std::vector<std::string> label_names)
    : count(label_count), names(std::move(label_names)) {
  if (count < 2) throw std::invalid_argument("LabelSpace needs at least 2 labels (free + 1 occupied)");
  if (!names.empty() && int(names.size()) != count)
    throw std::invalid_argument("LabelSpace: name count does not match label count");
}

VoxelGrid::VoxelGrid(std::array<int, 3> d, std::array<double, 3> o, double vs)
    : dims(d), origin(o), voxel_size(vs) {
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
    throw std::invalid_argument("VoxelGrid dims must be positive");
  if (!(voxel_size > 0.0)) throw std::invalid_argument("VoxelGrid voxel_size must be positive");
}

bool VoxelGrid::locate(const std::array<double, 3>& p, std::array<int, 3>* idx) const {
  std::array<int, 3> v;
  for (int k = 0; k < 3; ++k) {
    const double t = (p[k] - origin[k]) / voxel_size;
    v[k] = int(std::floor(t));
    if (v[k] < 0 || v[k] >= dims[k]) return false;
  }
  if (idx) *idx = v;
  return true;
}

LabelField uniform_init(const VoxelGrid& grid, const LabelSpace& labels) {
  LabelField x(grid, labels.count);
  const double u = 1.0 / labels.count;
  for (double& v : x.values) v = u;
  return x;
}

BinaryLabeling argmax_round(const LabelField& x) {
  BinaryLabeling out(x.grid, x.label_count);
  const std::size_t n = x.grid.voxel_count();
  for (std::size_t s = 0; s < n; ++s) {
    const double* v = x.voxel_data(s);
    int best = 0;
    for (int l = 1; l < x.label_count; ++l)
      if (v[l] > v[best]) best = l;  // strict: ties keep the smaller index
    out.labels[s] = uint8_t(best);
  }
  return out;
}

}  // namespace rayfuse
