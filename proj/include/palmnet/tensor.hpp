#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "palmnet/error.hpp"

namespace palmnet {

// Dense row-major tensor. The float instantiation is the engine's value
// currency; the double one exists for the gradient-checking mirror path.
template <typename T>
struct TensorT {
  std::vector<size_t> shape;
  std::vector<T> data;
  std::string name;

  TensorT() = default;

  explicit TensorT(std::vector<size_t> shp) : shape(std::move(shp)) {
    data.assign(checked_size(shape), T(0));
  }

  TensorT(std::vector<size_t> shp, std::vector<T> values)
      : shape(std::move(shp)), data(std::move(values)) {
    if (checked_size(shape) != data.size())
      throw ShapeError("tensor: " + shape_str(shape) + " does not hold " +
                       std::to_string(data.size()) + " values");
  }

  static TensorT full(std::vector<size_t> shp, T value) {
    TensorT t(std::move(shp));
    for (auto& v : t.data) v = value;
    return t;
  }

  size_t size() const { return data.size(); }
  size_t rank() const { return shape.size(); }
  size_t dim(size_t i) const { return shape.at(i); }

  bool same_shape(const TensorT& o) const { return shape == o.shape; }

  T& at(size_t i) { return data[i]; }
  const T& at(size_t i) const { return data[i]; }
  T& at(size_t i, size_t j) { return data[i * shape[1] + j]; }
  const T& at(size_t i, size_t j) const { return data[i * shape[1] + j]; }
  T& at(size_t i, size_t j, size_t k) {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  const T& at(size_t i, size_t j, size_t k) const {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  T& at(size_t i, size_t j, size_t k, size_t l) {
    return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }
  const T& at(size_t i, size_t j, size_t k, size_t l) const {
    return data[((i * shape[1] + j) * shape[2] + k) * shape[3] + l];
  }

  std::string shape_str() const { return shape_str(shape); }

  static std::string shape_str(const std::vector<size_t>& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out += "x";
      out += std::to_string(s[i]);
    }
    return out + "]";
  }

  static size_t checked_size(const std::vector<size_t>& s) {
    if (s.empty()) throw ShapeError("tensor: empty shape");
    size_t n = 1;
    for (size_t d : s) {
      if (d == 0) throw ShapeError("tensor: zero dimension in " + shape_str(s));
      n *= d;
    }
    return n;
  }
};

using Tensor = TensorT<float>;
using Tensor64 = TensorT<double>;

bool all_finite(const Tensor& t);
bool all_finite(const Tensor64& t);
void require_finite(const Tensor& t, const std::string& context);
void require_finite(const Tensor64& t, const std::string& context);

Tensor64 widen(const Tensor& t);
Tensor narrow(const Tensor64& t);

}  // namespace palmnet
