#include "apir/ir.hpp"

#include <functional>
#include <sstream>

namespace apir {

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::TensorRef: return "tensor";
    case Tag::Access: return "access";
    case Tag::Transpose: return "transpose";
    case Tag::CartProd: return "cartProd";
    case Tag::Windows: return "windows";
    case Tag::Slice: return "slice";
    case Tag::Squeeze: return "squeeze";
    case Tag::Flatten: return "flatten";
    case Tag::Reshape: return "reshape";
    case Tag::Pair: return "pair";
    case Tag::Concat: return "concat";
    case Tag::Compute: return "compute";
    case Tag::SystolicArray: return "systolicArray";
  }
  return "?";
}

const char* operator_name(Operator op) {
  switch (op) {
    case Operator::ReduceSum: return "reduceSum";
    case Operator::ReduceMax: return "reduceMax";
    case Operator::DotProd: return "dotProd";
  }
  return "?";
}

std::size_t tag_arity(Tag tag) {
  switch (tag) {
    case Tag::TensorRef: return 0;
    case Tag::CartProd:
    case Tag::Pair:
    case Tag::Concat:
    case Tag::SystolicArray: return 2;
    default: return 1;
  }
}

bool payload_equal(const Payload& a, const Payload& b) { return a == b; }

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_dims(const Dims& dims) {
  std::size_t h = dims.size();
  for (Dim d : dims) h = hash_combine(h, std::hash<Dim>{}(d));
  return h;
}

}  // namespace

std::size_t payload_hash(const Payload& p) {
  std::size_t h = p.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
        } else if constexpr (std::is_same_v<T, std::string>) {
          h = hash_combine(h, std::hash<std::string>{}(v));
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          h = hash_combine(h, std::hash<std::int64_t>{}(v));
        } else if constexpr (std::is_same_v<T, Dims>) {
          h = hash_combine(h, hash_dims(v));
        } else if constexpr (std::is_same_v<T, SliceSpec>) {
          h = hash_combine(h, hash_dims({v.dim, v.lo, v.hi}));
        } else if constexpr (std::is_same_v<T, WindowsSpec>) {
          h = hash_combine(hash_combine(h, hash_dims(v.window)), hash_dims(v.strides));
        } else if constexpr (std::is_same_v<T, AccessPatternShape>) {
          h = hash_combine(hash_combine(h, hash_dims(v.access)), hash_dims(v.compute));
        } else if constexpr (std::is_same_v<T, Operator>) {
          h = hash_combine(h, static_cast<std::size_t>(v));
        } else if constexpr (std::is_same_v<T, ArraySpec>) {
          h = hash_combine(h, hash_dims({v.rows, v.cols}));
        }
      },
      p);
  return h;
}

namespace {

std::string dims_brief(const Dims& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) os << ' ';
    os << dims[i];
  }
  return os.str();
}

}  // namespace

std::string payload_brief(const Payload& p) {
  std::string out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
        } else if constexpr (std::is_same_v<T, std::string>) {
          out = v;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out = std::to_string(v);
        } else if constexpr (std::is_same_v<T, Dims>) {
          out = "[" + dims_brief(v) + "]";
        } else if constexpr (std::is_same_v<T, SliceSpec>) {
          out = std::to_string(v.dim) + " " + std::to_string(v.lo) + " " +
                std::to_string(v.hi);
        } else if constexpr (std::is_same_v<T, WindowsSpec>) {
          out = "[" + dims_brief(v.window) + "] [" + dims_brief(v.strides) + "]";
        } else if constexpr (std::is_same_v<T, AccessPatternShape>) {
          out = "[" + dims_brief(v.access) + "|" + dims_brief(v.compute) + "]";
        } else if constexpr (std::is_same_v<T, Operator>) {
          out = operator_name(v);
        } else if constexpr (std::is_same_v<T, ArraySpec>) {
          out = std::to_string(v.rows) + "x" + std::to_string(v.cols);
        }
      },
      p);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.tag != b.tag || !(a.payload == b.payload)) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

namespace {

ExprPtr make(Tag tag, Payload payload, std::vector<ExprPtr> children) {
  return std::make_shared<Expr>(Expr{tag, std::move(payload), std::move(children)});
}

}  // namespace

ExprPtr tensor_ref(std::string name) {
  return make(Tag::TensorRef, std::move(name), {});
}
ExprPtr access(ExprPtr e, std::int64_t n) {
  return make(Tag::Access, n, {std::move(e)});
}
ExprPtr transpose(ExprPtr e, Dims perm) {
  return make(Tag::Transpose, std::move(perm), {std::move(e)});
}
ExprPtr cart_prod(ExprPtr a, ExprPtr b) {
  return make(Tag::CartProd, std::monostate{}, {std::move(a), std::move(b)});
}
ExprPtr windows(ExprPtr e, Dims window, Dims strides) {
  return make(Tag::Windows, WindowsSpec{std::move(window), std::move(strides)},
              {std::move(e)});
}
ExprPtr slice(ExprPtr e, Dim dim, Dim lo, Dim hi) {
  return make(Tag::Slice, SliceSpec{dim, lo, hi}, {std::move(e)});
}
ExprPtr squeeze(ExprPtr e, Dim dim) {
  return make(Tag::Squeeze, dim, {std::move(e)});
}
ExprPtr flatten(ExprPtr e) { return make(Tag::Flatten, std::monostate{}, {std::move(e)}); }
ExprPtr reshape(ExprPtr e, AccessPatternShape target) {
  return make(Tag::Reshape, std::move(target), {std::move(e)});
}
ExprPtr pair(ExprPtr a, ExprPtr b) {
  return make(Tag::Pair, std::monostate{}, {std::move(a), std::move(b)});
}
ExprPtr concat(ExprPtr a, ExprPtr b, Dim dim) {
  return make(Tag::Concat, dim, {std::move(a), std::move(b)});
}
ExprPtr compute(Operator op, ExprPtr e) {
  return make(Tag::Compute, op, {std::move(e)});
}
ExprPtr systolic_array(Dim rows, Dim cols, ExprPtr activations, ExprPtr weights) {
  return make(Tag::SystolicArray, ArraySpec{rows, cols},
              {std::move(activations), std::move(weights)});
}

std::size_t count_tag(const Expr& e, Tag tag) {
  std::size_t n = e.tag == tag ? 1 : 0;
  for (const auto& c : e.children) n += count_tag(*c, tag);
  return n;
}

std::size_t count_compute(const Expr& e, Operator op) {
  std::size_t n = 0;
  if (e.tag == Tag::Compute && std::get<Operator>(e.payload) == op) n = 1;
  for (const auto& c : e.children) n += count_compute(*c, op);
  return n;
}

}  // namespace apir
