#include "apir/print.hpp"

#include <sstream>

namespace apir {

namespace {

void print_dims(std::ostream& os, const char* head, const Dims& dims) {
  os << '(' << head;
  for (Dim d : dims) os << ' ' << d;
  os << ')';
}

void print_expr(std::ostream& os, const Expr& e) {
  switch (e.tag) {
    case Tag::TensorRef:
      os << std::get<std::string>(e.payload);
      return;
    case Tag::Access:
      os << "(access ";
      print_expr(os, *e.children[0]);
      os << ' ' << std::get<std::int64_t>(e.payload) << ')';
      return;
    case Tag::Transpose:
      os << "(transpose ";
      print_expr(os, *e.children[0]);
      os << ' ';
      print_dims(os, "list", std::get<Dims>(e.payload));
      os << ')';
      return;
    case Tag::CartProd:
      os << "(cartProd ";
      print_expr(os, *e.children[0]);
      os << ' ';
      print_expr(os, *e.children[1]);
      os << ')';
      return;
    case Tag::Windows: {
      const auto& w = std::get<WindowsSpec>(e.payload);
      os << "(windows ";
      print_expr(os, *e.children[0]);
      os << ' ';
      print_dims(os, "shape", w.window);
      os << ' ';
      print_dims(os, "shape", w.strides);
      os << ')';
      return;
    }
    case Tag::Slice: {
      const auto& s = std::get<SliceSpec>(e.payload);
      os << "(slice ";
      print_expr(os, *e.children[0]);
      os << ' ' << s.dim << ' ' << s.lo << ' ' << s.hi << ')';
      return;
    }
    case Tag::Squeeze:
      os << "(squeeze ";
      print_expr(os, *e.children[0]);
      os << ' ' << std::get<std::int64_t>(e.payload) << ')';
      return;
    case Tag::Flatten:
      os << "(flatten ";
      print_expr(os, *e.children[0]);
      os << ')';
      return;
    case Tag::Reshape: {
      const auto& t = std::get<AccessPatternShape>(e.payload);
      os << "(reshape ";
      print_expr(os, *e.children[0]);
      os << " (accessShape ";
      print_dims(os, "shape", t.access);
      os << ' ';
      print_dims(os, "shape", t.compute);
      os << "))";
      return;
    }
    case Tag::Pair:
      os << "(pair ";
      print_expr(os, *e.children[0]);
      os << ' ';
      print_expr(os, *e.children[1]);
      os << ')';
      return;
    case Tag::Concat:
      os << "(concat ";
      print_expr(os, *e.children[0]);
      os << ' ';
      print_expr(os, *e.children[1]);
      os << ' ' << std::get<std::int64_t>(e.payload) << ')';
      return;
    case Tag::Compute:
      os << "(compute " << operator_name(std::get<Operator>(e.payload)) << ' ';
      print_expr(os, *e.children[0]);
      os << ')';
      return;
    case Tag::SystolicArray: {
      const auto& a = std::get<ArraySpec>(e.payload);
      os << "(systolicArray " << a.rows << ' ' << a.cols << ' ';
      print_expr(os, *e.children[0]);
      os << ' ';
      print_expr(os, *e.children[1]);
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

}  // namespace apir
