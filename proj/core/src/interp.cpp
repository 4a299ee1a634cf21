#include "apir/interp.hpp"

#include <algorithm>

#include "apir/infer.hpp"

namespace apir {

ShapeEnv induced_shape_env(const TensorEnv& env) {
  ShapeEnv out;
  for (const auto& [name, t] : env) out[name] = t.shape;
  return out;
}

namespace {

struct Val {
  AccessPatternShape shape;
  Tensor value;
};

Val eval_rec(const Expr& e, const TensorEnv& env, const ShapeEnv& senv) {
  std::vector<Val> ch;
  ch.reserve(e.children.size());
  for (const auto& c : e.children) ch.push_back(eval_rec(*c, env, senv));

  std::vector<AccessPatternShape> childShapes;
  childShapes.reserve(ch.size());
  for (const auto& v : ch) childShapes.push_back(v.shape);
  AccessPatternShape shape = infer_node(e.tag, e.payload, childShapes, senv);

  Tensor out;
  out.shape = shape.combined();

  switch (e.tag) {
    case Tag::TensorRef:
      out.data = env.at(std::get<std::string>(e.payload)).data;
      break;

    // Pure reinterpretations: the row-major data is unchanged.
    case Tag::Access:
    case Tag::Flatten:
    case Tag::Reshape:
    case Tag::Squeeze:
      out.data = std::move(ch[0].value.data);
      break;

    case Tag::Transpose: {
      const auto& perm = std::get<Dims>(e.payload);
      const Tensor& in = ch[0].value;
      Dims inStrides = row_major_strides(in.shape);
      out.data.resize(in.data.size());
      Dims idx(out.shape.size(), 0);
      Dims inIdx(in.shape.size(), 0);
      std::size_t flat = 0;
      do {
        for (std::size_t k = 0; k < perm.size(); ++k) inIdx[perm[k]] = idx[k];
        out.data[flat++] = in.data[flat_index(inStrides, inIdx)];
      } while (next_index(out.shape, idx));
      break;
    }

    case Tag::CartProd: {
      std::int64_t na = product(ch[0].shape.access);
      std::int64_t nb = product(ch[1].shape.access);
      std::int64_t nc = product(ch[0].shape.compute);
      const auto& d0 = ch[0].value.data;
      const auto& d1 = ch[1].value.data;
      out.data.reserve(static_cast<std::size_t>(na * nb * 2 * nc));
      for (std::int64_t i = 0; i < na; ++i)
        for (std::int64_t j = 0; j < nb; ++j) {
          out.data.insert(out.data.end(), d0.begin() + i * nc, d0.begin() + (i + 1) * nc);
          out.data.insert(out.data.end(), d1.begin() + j * nc, d1.begin() + (j + 1) * nc);
        }
      break;
    }

    case Tag::Windows: {
      const auto& spec = std::get<WindowsSpec>(e.payload);
      const Tensor& in = ch[0].value;
      std::size_t nAccess = ch[0].shape.access.size();
      std::size_t nWin = spec.window.size();
      Dims inStrides = row_major_strides(in.shape);
      out.data.resize(static_cast<std::size_t>(product(out.shape)));
      Dims idx(out.shape.size(), 0);
      Dims inIdx(in.shape.size(), 0);
      std::size_t flat = 0;
      do {
        for (std::size_t k = 0; k < nAccess; ++k) inIdx[k] = idx[k];
        for (std::size_t i = 0; i < nWin; ++i)
          inIdx[nAccess + i] = spec.strides[i] * idx[nAccess + i] + idx[nAccess + nWin + i];
        out.data[flat++] = in.data[flat_index(inStrides, inIdx)];
      } while (next_index(out.shape, idx));
      break;
    }

    case Tag::Slice: {
      const auto& s = std::get<SliceSpec>(e.payload);
      const Tensor& in = ch[0].value;
      Dims inStrides = row_major_strides(in.shape);
      out.data.resize(static_cast<std::size_t>(product(out.shape)));
      Dims idx(out.shape.size(), 0);
      std::size_t flat = 0;
      do {
        Dims inIdx = idx;
        inIdx[s.dim] += s.lo;
        out.data[flat++] = in.data[flat_index(inStrides, inIdx)];
      } while (next_index(out.shape, idx));
      break;
    }

    case Tag::Pair: {
      std::int64_t na = product(ch[0].shape.access);
      std::int64_t nc = product(ch[0].shape.compute);
      const auto& d0 = ch[0].value.data;
      const auto& d1 = ch[1].value.data;
      out.data.reserve(static_cast<std::size_t>(na * 2 * nc));
      for (std::int64_t i = 0; i < na; ++i) {
        out.data.insert(out.data.end(), d0.begin() + i * nc, d0.begin() + (i + 1) * nc);
        out.data.insert(out.data.end(), d1.begin() + i * nc, d1.begin() + (i + 1) * nc);
      }
      break;
    }

    case Tag::Concat: {
      Dim d = std::get<std::int64_t>(e.payload);
      Dims c0 = ch[0].shape.combined();
      Dims c1 = ch[1].shape.combined();
      std::int64_t outer = 1;
      for (Dim i = 0; i < d; ++i) outer *= c0[i];
      std::int64_t inner = 1;
      for (std::size_t i = d + 1; i < c0.size(); ++i) inner *= c0[i];
      std::int64_t chunk0 = c0[d] * inner;
      std::int64_t chunk1 = c1[d] * inner;
      const auto& d0 = ch[0].value.data;
      const auto& d1 = ch[1].value.data;
      out.data.reserve(static_cast<std::size_t>(outer * (chunk0 + chunk1)));
      for (std::int64_t o = 0; o < outer; ++o) {
        out.data.insert(out.data.end(), d0.begin() + o * chunk0, d0.begin() + (o + 1) * chunk0);
        out.data.insert(out.data.end(), d1.begin() + o * chunk1, d1.begin() + (o + 1) * chunk1);
      }
      break;
    }

    case Tag::Compute: {
      Operator op = std::get<Operator>(e.payload);
      std::int64_t na = product(ch[0].shape.access);
      const auto& in = ch[0].value.data;
      out.data.resize(static_cast<std::size_t>(na));
      if (op == Operator::DotProd) {
        const Dims& c = ch[0].shape.compute;
        std::int64_t t = c[0];
        std::int64_t ns = 1;
        for (std::size_t i = 1; i < c.size(); ++i) ns *= c[i];
        std::int64_t block = t * ns;
        for (std::int64_t i = 0; i < na; ++i) {
          const double* b = in.data() + i * block;
          double acc = 0.0;
          for (std::int64_t sp = 0; sp < ns; ++sp) {
            double prod = 1.0;
            for (std::int64_t j = 0; j < t; ++j) prod *= b[j * ns + sp];
            acc += prod;
          }
          out.data[static_cast<std::size_t>(i)] = acc;
        }
      } else {
        std::int64_t nc = product(ch[0].shape.compute);
        for (std::int64_t i = 0; i < na; ++i) {
          const double* b = in.data() + i * nc;
          double acc = b[0];
          if (op == Operator::ReduceSum) {
            for (std::int64_t k = 1; k < nc; ++k) acc += b[k];
          } else {
            for (std::int64_t k = 1; k < nc; ++k) acc = std::max(acc, b[k]);
          }
          out.data[static_cast<std::size_t>(i)] = acc;
        }
      }
      break;
    }

    case Tag::SystolicArray: {
      const auto& spec = std::get<ArraySpec>(e.payload);
      std::int64_t batch = ch[0].shape.access[0];
      std::int64_t r = spec.rows;
      std::int64_t c = spec.cols;
      const auto& a0 = ch[0].value.data;
      const auto& a1 = ch[1].value.data;
      out.data.resize(static_cast<std::size_t>(batch * c));
      for (std::int64_t i = 0; i < batch; ++i)
        for (std::int64_t j = 0; j < c; ++j) {
          double acc = 0.0;
          for (std::int64_t k = 0; k < r; ++k) acc += a0[i * r + k] * a1[k * c + j];
          out.data[static_cast<std::size_t>(i * c + j)] = acc;
        }
      break;
    }
  }

  return Val{std::move(shape), std::move(out)};
}

}  // namespace

Tensor evaluate(const Expr& e, const TensorEnv& env) {
  ShapeEnv senv = induced_shape_env(env);
  return eval_rec(e, env, senv).value;
}

}  // namespace apir
