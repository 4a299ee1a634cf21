#include "apir/infer.hpp"

#include <algorithm>
#include <sstream>

namespace apir {

namespace {

[[noreturn]] void bad(Tag tag, const std::string& detail) {
  throw ShapeError(std::string(tag_name(tag)) + ": " + detail);
}

void check_combined_index(Tag tag, Dim d, const Dims& combined) {
  if (d < 0 || d >= static_cast<Dim>(combined.size()))
    bad(tag, "dimension index " + std::to_string(d) + " out of range for shape " +
                 to_string(combined));
}

}  // namespace

AccessPatternShape infer_node(Tag tag, const Payload& payload,
                              std::span<const AccessPatternShape> ch,
                              const ShapeEnv& env) {
  switch (tag) {
    case Tag::TensorRef: {
      const auto& name = std::get<std::string>(payload);
      auto it = env.find(name);
      if (it == env.end()) throw ShapeError("unbound tensor '" + name + "'");
      // A bare tensor is all-compute until accessed.
      return AccessPatternShape{{}, it->second};
    }

    case Tag::Access: {
      std::int64_t n = std::get<std::int64_t>(payload);
      Dims combined = ch[0].combined();
      if (n < 0 || n > static_cast<std::int64_t>(combined.size()))
        bad(tag, "split point " + std::to_string(n) + " beyond rank " +
                     std::to_string(combined.size()));
      return split_at(combined, static_cast<int>(n));
    }

    case Tag::Transpose: {
      const auto& perm = std::get<Dims>(payload);
      Dims combined = ch[0].combined();
      if (perm.size() != combined.size())
        bad(tag, "invalid permutation: length " + std::to_string(perm.size()) +
                     " for rank " + std::to_string(combined.size()));
      std::vector<bool> seen(perm.size(), false);
      for (Dim p : perm) {
        if (p < 0 || p >= static_cast<Dim>(perm.size()) || seen[p])
          bad(tag, "invalid permutation " + to_string(perm));
        seen[p] = true;
      }
      Dims out(combined.size());
      for (std::size_t k = 0; k < perm.size(); ++k) out[k] = combined[perm[k]];
      return split_at(out, ch[0].split());
    }

    case Tag::CartProd: {
      if (ch[0].compute != ch[1].compute)
        bad(tag, "compute dims must match, got " + to_string(ch[0].compute) + " vs " +
                     to_string(ch[1].compute));
      AccessPatternShape out;
      out.access = ch[0].access;
      out.access.insert(out.access.end(), ch[1].access.begin(), ch[1].access.end());
      out.compute.push_back(2);
      out.compute.insert(out.compute.end(), ch[0].compute.begin(), ch[0].compute.end());
      return out;
    }

    case Tag::Windows: {
      const auto& spec = std::get<WindowsSpec>(payload);
      const Dims& b = ch[0].compute;
      if (spec.window.size() != b.size() || spec.strides.size() != b.size())
        bad(tag, "window/stride rank must equal compute rank " + std::to_string(b.size()) +
                     ", got " + to_string(spec.window) + " / " + to_string(spec.strides));
      AccessPatternShape out;
      out.access = ch[0].access;
      for (std::size_t i = 0; i < b.size(); ++i) {
        Dim w = spec.window[i], s = spec.strides[i];
        if (w < 1 || s < 1) bad(tag, "window and stride extents must be >= 1");
        Dim span = b[i] - (w - 1);
        Dim windows_along = span >= 1 ? (span + s - 1) / s : 0;
        if (windows_along < 1)
          bad(tag, "window " + std::to_string(w) + " does not fit dimension extent " +
                       std::to_string(b[i]));
        out.access.push_back(windows_along);
      }
      out.compute = spec.window;
      return out;
    }

    case Tag::Slice: {
      const auto& s = std::get<SliceSpec>(payload);
      Dims combined = ch[0].combined();
      check_combined_index(tag, s.dim, combined);
      if (!(0 <= s.lo && s.lo < s.hi && s.hi <= combined[s.dim]))
        bad(tag, "invalid bounds [" + std::to_string(s.lo) + ", " + std::to_string(s.hi) +
                     ") for extent " + std::to_string(combined[s.dim]));
      combined[s.dim] = s.hi - s.lo;
      return split_at(combined, ch[0].split());
    }

    case Tag::Squeeze: {
      Dim d = std::get<std::int64_t>(payload);
      Dims combined = ch[0].combined();
      check_combined_index(tag, d, combined);
      if (combined[d] != 1)
        bad(tag, "dimension " + std::to_string(d) + " has extent " +
                     std::to_string(combined[d]) + ", expected 1");
      combined.erase(combined.begin() + d);
      int split = ch[0].split() - (d < ch[0].split() ? 1 : 0);
      return split_at(combined, split);
    }

    case Tag::Flatten: {
      AccessPatternShape out;
      if (!ch[0].access.empty()) out.access.push_back(product(ch[0].access));
      if (!ch[0].compute.empty()) out.compute.push_back(product(ch[0].compute));
      return out;
    }

    case Tag::Reshape: {
      const auto& target = std::get<AccessPatternShape>(payload);
      for (Dim d : target.combined())
        if (d < 1) bad(tag, "target extents must be >= 1");
      if (product(ch[0].access) != product(target.access) ||
          product(ch[0].compute) != product(target.compute))
        bad(tag, "element counts must match per tuple, " + to_string(ch[0]) + " vs " +
                     to_string(target));
      return target;
    }

    case Tag::Pair: {
      if (!(ch[0] == ch[1]))
        bad(tag, "operand shapes must match, got " + to_string(ch[0]) + " vs " +
                     to_string(ch[1]));
      AccessPatternShape out;
      out.access = ch[0].access;
      out.compute.push_back(2);
      out.compute.insert(out.compute.end(), ch[0].compute.begin(), ch[0].compute.end());
      return out;
    }

    case Tag::Concat: {
      Dim d = std::get<std::int64_t>(payload);
      if (ch[0].split() != ch[1].split())
        bad(tag, "operand split points differ: " + std::to_string(ch[0].split()) + " vs " +
                     std::to_string(ch[1].split()));
      Dims c0 = ch[0].combined();
      Dims c1 = ch[1].combined();
      if (c0.size() != c1.size())
        bad(tag, "operand ranks differ: " + to_string(c0) + " vs " + to_string(c1));
      check_combined_index(tag, d, c0);
      for (std::size_t i = 0; i < c0.size(); ++i)
        if (static_cast<Dim>(i) != d && c0[i] != c1[i])
          bad(tag, "shapes must agree except at dimension " + std::to_string(d) + ", got " +
                       to_string(c0) + " vs " + to_string(c1));
      c0[d] += c1[d];
      return split_at(c0, ch[0].split());
    }

    case Tag::Compute: {
      Operator op = std::get<Operator>(payload);
      if (op == Operator::DotProd) {
        const Dims& c = ch[0].compute;
        if (c.empty()) bad(tag, "dotProd needs at least a tuple compute dimension");
        if (c[0] < 2)
          bad(tag, "dotProd tuple arity must be >= 2, got " + std::to_string(c[0]));
      }
      return AccessPatternShape{ch[0].access, {}};
    }

    case Tag::SystolicArray: {
      const auto& spec = std::get<ArraySpec>(payload);
      const auto& a0 = ch[0];
      const auto& a1 = ch[1];
      if (a0.access.size() != 1 || a0.compute.size() != 1 || a0.compute[0] != spec.rows)
        bad(tag, "activations must have shape ((batch), (" + std::to_string(spec.rows) +
                     ")), got " + to_string(a0));
      if (!a1.access.empty() || a1.compute != Dims{spec.rows, spec.cols})
        bad(tag, "weights must have shape ((), (" + std::to_string(spec.rows) + ", " +
                     std::to_string(spec.cols) + ")), got " + to_string(a1));
      return AccessPatternShape{{a0.access[0], spec.cols}, {}};
    }
  }
  bad(tag, "unreachable");
}

namespace {

AccessPatternShape infer_rec(const Expr& e, const ShapeEnv& env, std::string& path) {
  std::size_t mark = path.size();
  if (!path.empty()) path += '/';
  path += tag_name(e.tag);
  std::vector<AccessPatternShape> childShapes;
  childShapes.reserve(e.children.size());
  for (const auto& c : e.children) childShapes.push_back(infer_rec(*c, env, path));
  try {
    AccessPatternShape out = infer_node(e.tag, e.payload, childShapes, env);
    path.resize(mark);
    return out;
  } catch (ShapeError& err) {
    if (err.path.empty()) throw ShapeError(err.what(), path);
    throw;
  }
}

}  // namespace

AccessPatternShape infer_shape(const Expr& e, const ShapeEnv& env) {
  std::string path;
  return infer_rec(e, env, path);
}

}  // namespace apir
