#pragma once

#include <map>
#include <vector>

#include "apir/shape.hpp"

namespace apir {

/// Dense rank-n array of 64-bit floats in row-major order. A rank-0
/// tensor is a scalar holding one element.
struct Tensor {
  Dims shape;
  std::vector<double> data;

  static Tensor zeros(Dims shape);
  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }

  bool operator==(const Tensor&) const = default;
};

using TensorEnv = std::map<std::string, Tensor>;

Dims row_major_strides(const Dims& shape);
std::int64_t flat_index(const Dims& strides, const Dims& index);

/// Advances a row-major multi-index; returns false after the last one.
bool next_index(const Dims& shape, Dims& index);

}  // namespace apir
