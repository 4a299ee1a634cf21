#include "apir/oracles.hpp"

#include <algorithm>

namespace apir {

Tensor oracle_matmul(const Tensor& p, const Tensor& q) {
  if (p.shape.size() != 2 || q.shape.size() != 2 || p.shape[1] != q.shape[0])
    throw ShapeError("oracle_matmul: inner dimensions must agree, got " +
                     to_string(p.shape) + " x " + to_string(q.shape));
  Dim m = p.shape[0], n = p.shape[1], o = q.shape[1];
  Tensor r = Tensor::zeros({m, o});
  for (Dim i = 0; i < m; ++i)
    for (Dim j = 0; j < o; ++j) {
      double acc = 0.0;
      for (Dim k = 0; k < n; ++k) acc += p.data[i * n + k] * q.data[k * o + j];
      r.data[i * o + j] = acc;
    }
  return r;
}

Tensor oracle_conv2d(const Tensor& a, const Tensor& w, Dim strideH, Dim strideW) {
  if (a.shape.size() != 4 || w.shape.size() != 4 || a.shape[1] != w.shape[1])
    throw ShapeError("oracle_conv2d: expected (N,C,H,W) and (O,C,Kh,Kw) with equal C");
  Dim n = a.shape[0], c = a.shape[1], h = a.shape[2], wd = a.shape[3];
  Dim o = w.shape[0], kh = w.shape[2], kw = w.shape[3];
  if (kh > h || kw > wd) throw ShapeError("oracle_conv2d: kernel larger than input");
  Dim oh = (h - kh) / strideH + 1;
  Dim ow = (wd - kw) / strideW + 1;
  Tensor out = Tensor::zeros({n, o, oh, ow});
  for (Dim ni = 0; ni < n; ++ni)
    for (Dim oi = 0; oi < o; ++oi)
      for (Dim x = 0; x < oh; ++x)
        for (Dim y = 0; y < ow; ++y) {
          double acc = 0.0;
          for (Dim ci = 0; ci < c; ++ci)
            for (Dim dx = 0; dx < kh; ++dx)
              for (Dim dy = 0; dy < kw; ++dy) {
                double av = a.data[((ni * c + ci) * h + strideH * x + dx) * wd +
                                   strideW * y + dy];
                double wv = w.data[((oi * c + ci) * kh + dx) * kw + dy];
                acc += av * wv;
              }
          out.data[((ni * o + oi) * oh + x) * ow + y] = acc;
        }
  return out;
}

Tensor oracle_maxpool(const Tensor& a, Dim kh, Dim kw, Dim strideH, Dim strideW) {
  if (a.shape.size() != 4) throw ShapeError("oracle_maxpool: expected (N,C,H,W)");
  Dim n = a.shape[0], c = a.shape[1], h = a.shape[2], w = a.shape[3];
  if (kh > h || kw > w) throw ShapeError("oracle_maxpool: window larger than input");
  Dim oh = (h - kh) / strideH + 1;
  Dim ow = (w - kw) / strideW + 1;
  Tensor out = Tensor::zeros({n, c, oh, ow});
  for (Dim ni = 0; ni < n; ++ni)
    for (Dim ci = 0; ci < c; ++ci)
      for (Dim x = 0; x < oh; ++x)
        for (Dim y = 0; y < ow; ++y) {
          double best = a.data[((ni * c + ci) * h + strideH * x) * w + strideW * y];
          for (Dim dx = 0; dx < kh; ++dx)
            for (Dim dy = 0; dy < kw; ++dy) {
              double v = a.data[((ni * c + ci) * h + strideH * x + dx) * w +
                                strideW * y + dy];
              best = std::max(best, v);
            }
          out.data[((ni * c + ci) * oh + x) * ow + y] = best;
        }
  return out;
}

}  // namespace apir
