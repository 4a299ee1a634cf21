#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "apir/shape.hpp"

namespace apir {

enum class Tag {
  TensorRef,
  Access,
  Transpose,
  CartProd,
  Windows,
  Slice,
  Squeeze,
  Flatten,
  Reshape,
  Pair,
  Concat,
  Compute,
  SystolicArray,
};

/// Arithmetic operators applied by `compute` over the compute dimensions.
enum class Operator { ReduceSum, ReduceMax, DotProd };

struct SliceSpec {
  Dim dim = 0;
  Dim lo = 0;
  Dim hi = 0;
  bool operator==(const SliceSpec&) const = default;
};

struct WindowsSpec {
  Dims window;
  Dims strides;
  bool operator==(const WindowsSpec&) const = default;
};

struct ArraySpec {
  Dim rows = 0;
  Dim cols = 0;
  bool operator==(const ArraySpec&) const = default;
};

/// Per-construct literal data. Which alternative is active is fixed by the
/// construct tag: TensorRef holds its name, Access/Squeeze/Concat an index,
/// Transpose a permutation, Slice/Windows/Reshape/Compute/SystolicArray
/// their specs; the rest hold nothing.
using Payload = std::variant<std::monostate, std::string, std::int64_t, Dims,
                             SliceSpec, WindowsSpec, AccessPatternShape,
                             Operator, ArraySpec>;

const char* tag_name(Tag tag);
const char* operator_name(Operator op);
std::size_t tag_arity(Tag tag);

bool payload_equal(const Payload& a, const Payload& b);
std::size_t payload_hash(const Payload& p);
// Compact literal rendering used in node signatures and graph dumps.
std::string payload_brief(const Payload& p);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree. Shared subtrees are allowed; semantics are
/// those of the fully expanded tree.
struct Expr {
  Tag tag;
  Payload payload;
  std::vector<ExprPtr> children;
};

bool structurally_equal(const Expr& a, const Expr& b);

ExprPtr tensor_ref(std::string name);
ExprPtr access(ExprPtr e, std::int64_t n);
ExprPtr transpose(ExprPtr e, Dims perm);
ExprPtr cart_prod(ExprPtr a, ExprPtr b);
ExprPtr windows(ExprPtr e, Dims window, Dims strides);
ExprPtr slice(ExprPtr e, Dim dim, Dim lo, Dim hi);
ExprPtr squeeze(ExprPtr e, Dim dim);
ExprPtr flatten(ExprPtr e);
ExprPtr reshape(ExprPtr e, AccessPatternShape target);
ExprPtr pair(ExprPtr a, ExprPtr b);
ExprPtr concat(ExprPtr a, ExprPtr b, Dim dim);
ExprPtr compute(Operator op, ExprPtr e);
ExprPtr systolic_array(Dim rows, Dim cols, ExprPtr activations, ExprPtr weights);

/// Number of nodes in the expanded tree with the given tag.
std::size_t count_tag(const Expr& e, Tag tag);
/// Number of `compute` nodes applying `op` in the expanded tree.
std::size_t count_compute(const Expr& e, Operator op);

}  // namespace apir
