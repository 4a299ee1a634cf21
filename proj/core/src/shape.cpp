#include "apir/shape.hpp"

#include <sstream>

namespace apir {

std::int64_t product(const Dims& dims) {
  std::int64_t p = 1;
  for (Dim d : dims) p *= d;
  return p;
}

Dims AccessPatternShape::combined() const {
  Dims out = access;
  out.insert(out.end(), compute.begin(), compute.end());
  return out;
}

AccessPatternShape split_at(const Dims& combined, int split) {
  AccessPatternShape out;
  out.access.assign(combined.begin(), combined.begin() + split);
  out.compute.assign(combined.begin() + split, combined.end());
  return out;
}

std::string to_string(const Dims& dims) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ", ";
    os << dims[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const AccessPatternShape& shape) {
  return "(" + to_string(shape.access) + ", " + to_string(shape.compute) + ")";
}

}  // namespace apir
