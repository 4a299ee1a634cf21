#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "apir/ir.hpp"

namespace apir {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
};

/// Parses one program in the s-expression surface syntax. Whitespace is
/// insignificant; `;` starts a comment running to end of line.
ExprPtr parse(std::string_view text);

/// Shape environment file: one `name: d0 d1 ... dk` entry per line.
ShapeEnv parse_shape_env(std::string_view text);

}  // namespace apir
