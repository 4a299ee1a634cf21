#pragma once

#include "apir/ir.hpp"
#include "apir/tensor.hpp"

namespace apir {

/// Big-step reference evaluator. The result's shape equals the combined
/// dimensions of the inferred access pattern shape. Summations run
/// sequentially in row-major order, so results are bit-reproducible.
/// Throws ShapeError when the program is ill-shaped under the shapes
/// induced by `env`.
Tensor evaluate(const Expr& e, const TensorEnv& env);

/// Shape environment induced by concrete tensor bindings.
ShapeEnv induced_shape_env(const TensorEnv& env);

}  // namespace apir
