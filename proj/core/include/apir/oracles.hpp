#pragma once

#include "apir/tensor.hpp"

namespace apir {

/// R[i,j] = sum_k P[i,k] * Q[k,j]; P is (M,N), Q is (N,O).
Tensor oracle_matmul(const Tensor& p, const Tensor& q);

/// A is (N,C,H,W), W is (O,C,Kh,Kw); output layout (N,O,H',W') with
/// out[n,o,x,y] = sum_{c,dx,dy} A[n,c,sh*x+dx,sw*y+dy] * W[o,c,dx,dy].
Tensor oracle_conv2d(const Tensor& a, const Tensor& w, Dim strideH, Dim strideW);

/// A is (N,C,H,W); out[n,c,x,y] = max_{dx,dy} A[n,c,sh*x+dx,sw*y+dy].
Tensor oracle_maxpool(const Tensor& a, Dim kh, Dim kw, Dim strideH, Dim strideW);

}  // namespace apir
