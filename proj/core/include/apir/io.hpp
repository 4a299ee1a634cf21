#pragma once

#include <iosfwd>
#include <string>

#include "apir/tensor.hpp"

namespace apir {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor text format: line 1 the rank r, line 2 the r space-separated
/// dimension extents, then the elements as whitespace-separated decimals
/// in row-major order.
Tensor read_tensor(std::istream& in);
void write_tensor(std::ostream& out, const Tensor& t);

Tensor read_tensor_file(const std::string& path);
void write_tensor_file(const std::string& path, const Tensor& t);

std::string read_file(const std::string& path);

/// Tensor environment file: one `name = path` per line; relative paths
/// resolve against the environment file's directory.
TensorEnv read_tensor_env(const std::string& path);

}  // namespace apir
