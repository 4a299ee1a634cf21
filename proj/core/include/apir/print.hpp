#pragma once

#include <string>

#include "apir/ir.hpp"

namespace apir {

/// Canonical single-line rendering; `parse(pretty_print(e))` is
/// structurally equal to `e`.
std::string pretty_print(const Expr& e);

}  // namespace apir
