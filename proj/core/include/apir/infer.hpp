#pragma once

#include <span>

#include "apir/ir.hpp"
#include "apir/shape.hpp"

namespace apir {

/// Single inference step: the shape of a construct given its literal
/// payload and the shapes of its children. Shared by tree inference, the
/// interpreter, and the e-graph's per-class analysis, so the three can
/// never disagree. Throws ShapeError (without a path) on violation.
AccessPatternShape infer_node(Tag tag, const Payload& payload,
                              std::span<const AccessPatternShape> children,
                              const ShapeEnv& env);

/// Infers the shape of a whole expression. Errors carry the construct
/// path from the root to the failing node.
AccessPatternShape infer_shape(const Expr& e, const ShapeEnv& env);

}  // namespace apir
