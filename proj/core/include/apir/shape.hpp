#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace apir {

using Dim = std::int64_t;
using Dims = std::vector<Dim>;

// Product of extents; the empty product is 1.
std::int64_t product(const Dims& dims);

/// Shape of an access pattern: the underlying tensor's dimensions split
/// into a tuple that is iterated over (access) and a tuple that is
/// computed on (compute). The tensor shape is the concatenation of the
/// two tuples; either tuple may be empty.
struct AccessPatternShape {
  Dims access;
  Dims compute;

  Dims combined() const;
  int rank() const { return static_cast<int>(access.size() + compute.size()); }
  int split() const { return static_cast<int>(access.size()); }

  bool operator==(const AccessPatternShape&) const = default;
};

// Re-split a combined dimension list at position `split`.
AccessPatternShape split_at(const Dims& combined, int split);

std::string to_string(const Dims& dims);
std::string to_string(const AccessPatternShape& shape);

/// Maps tensor names to their (combined) shapes.
using ShapeEnv = std::map<std::string, Dims>;

/// Raised on any shape-inference failure. `path` names the construct
/// chain from the program root down to the offending node.
struct ShapeError : std::runtime_error {
  std::string path;
  explicit ShapeError(const std::string& msg, std::string path = {})
      : std::runtime_error(msg), path(std::move(path)) {}
};

}  // namespace apir
