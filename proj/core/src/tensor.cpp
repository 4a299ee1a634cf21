#include "apir/tensor.hpp"

namespace apir {

Tensor Tensor::zeros(Dims shape) {
  Tensor t;
  std::int64_t n = product(shape);
  t.shape = std::move(shape);
  t.data.assign(static_cast<std::size_t>(n), 0.0);
  return t;
}

Dims row_major_strides(const Dims& shape) {
  Dims strides(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;)
    strides[i - 1] = strides[i] * shape[i];
  return strides;
}

std::int64_t flat_index(const Dims& strides, const Dims& index) {
  std::int64_t off = 0;
  for (std::size_t i = 0; i < strides.size(); ++i) off += strides[i] * index[i];
  return off;
}

bool next_index(const Dims& shape, Dims& index) {
  for (std::size_t i = shape.size(); i-- > 0;) {
    if (++index[i] < shape[i]) return true;
    index[i] = 0;
  }
  return false;
}

}  // namespace apir
