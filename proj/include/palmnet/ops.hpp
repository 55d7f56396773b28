#pragma once

#include <cstdint>
#include <vector>

#include "palmnet/tensor.hpp"

namespace palmnet {

// Primitive numeric kernels every layer is built from. All functions are pure:
// inputs are untouched, results are freshly allocated. Instantiated for float
// (engine path) and double (gradient-check mirror).

// Output spatial size of a convolution/pool window sweep.
size_t conv_out_dim(size_t in, size_t kernel, size_t stride, size_t padding);

template <typename T>
TensorT<T> matmul(const TensorT<T>& a, const TensorT<T>& b);

template <typename T>
TensorT<T> transpose2d(const TensorT<T>& a);

// input [N,H,W,C], kernels [K,kh,kw,C], bias [K] (may be empty for none).
// Cross-correlation with zero padding, stride >= 1.
template <typename T>
TensorT<T> conv2d(const TensorT<T>& input, const TensorT<T>& kernels,
                  const TensorT<T>& bias, size_t stride, size_t padding);

template <typename T>
struct Conv2dGrads {
  TensorT<T> input;
  TensorT<T> kernels;
  TensorT<T> bias;
};

template <typename T>
Conv2dGrads<T> conv2d_backward(const TensorT<T>& input,
                               const TensorT<T>& kernels,
                               const TensorT<T>& out_grad, size_t stride,
                               size_t padding, bool want_input_grad);

template <typename T>
struct MaxPoolResult {
  TensorT<T> output;
  // Flat index into the input tensor of each window winner, row-major ties
  // broken by first occurrence.
  std::vector<int64_t> argmax;
};

template <typename T>
MaxPoolResult<T> maxpool2d(const TensorT<T>& input, size_t pool, size_t stride,
                           size_t padding = 0);

template <typename T>
TensorT<T> maxpool2d_backward(const std::vector<size_t>& input_shape,
                              const std::vector<int64_t>& argmax,
                              const TensorT<T>& out_grad);

// Row-wise softmax over the last axis of [N,K], K >= 2. Max-subtracted and
// accumulated in double regardless of T; outputs clamped into (0,1).
template <typename T>
TensorT<T> softmax(const TensorT<T>& logits);

// dL/dlogits given dL/dprobs (full Jacobian).
template <typename T>
TensorT<T> softmax_backward(const TensorT<T>& probs, const TensorT<T>& out_grad);

template <typename T>
TensorT<T> concat_channels(const std::vector<const TensorT<T>*>& inputs);

template <typename T>
std::vector<TensorT<T>> split_channels(const TensorT<T>& grad,
                                       const std::vector<size_t>& channel_sizes);

// Elementwise helpers used by layers; float versions run through the
// dispatched kernel table.
template <typename T>
TensorT<T> add(const TensorT<T>& a, const TensorT<T>& b);
template <typename T>
TensorT<T> mul(const TensorT<T>& a, const TensorT<T>& b);
template <typename T>
TensorT<T> scale(const TensorT<T>& a, T s);
template <typename T>
TensorT<T> relu(const TensorT<T>& x);
template <typename T>
TensorT<T> relu_backward(const TensorT<T>& x, const TensorT<T>& g);

}  // namespace palmnet
