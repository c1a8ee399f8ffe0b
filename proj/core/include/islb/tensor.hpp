#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace islb {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or dimensionality mismatch.
struct ShapeError : Error {
  using Error::Error;
};

/// A NaN or Inf was produced where finite values are required.
struct NumericError : Error {
  using Error::Error;
};

using Shape = std::vector<int64_t>;

int64_t shape_numel(const Shape& shape);
std::string shape_to_string(const Shape& shape);

/// Dense rank-N array with contiguous storage. Image tensors are
/// batch-major (N, C, H, W).
template <typename T>
class TensorT {
 public:
  TensorT() = default;
  explicit TensorT(Shape shape) : shape_(std::move(shape)), data_(check_numel(shape_)) {}
  TensorT(Shape shape, T fill) : shape_(std::move(shape)), data_(check_numel(shape_), fill) {}
  TensorT(Shape shape, std::vector<T> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<int64_t>(data_.size()) != shape_numel(shape_))
      throw ShapeError("tensor data length " + std::to_string(data_.size()) +
                       " does not match shape " + shape_to_string(shape_));
  }

  const Shape& shape() const { return shape_; }
  int64_t dim(size_t i) const { return shape_.at(i); }
  size_t rank() const { return shape_.size(); }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::vector<T>& vec() { return data_; }
  const std::vector<T>& vec() const { return data_; }

  T& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  const T& operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // NCHW accessor for rank-4 tensors.
  T& at4(int64_t n, int64_t c, int64_t h, int64_t w) {
    return data_[static_cast<size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }
  const T& at4(int64_t n, int64_t c, int64_t h, int64_t w) const {
    return data_[static_cast<size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }
  T& at2(int64_t n, int64_t c) { return data_[static_cast<size_t>(n * shape_[1] + c)]; }
  const T& at2(int64_t n, int64_t c) const { return data_[static_cast<size_t>(n * shape_[1] + c)]; }

  void fill(T v) { data_.assign(data_.size(), v); }

  /// Reinterpret the extents without touching storage; element count must match.
  void reshape(Shape shape) {
    if (shape_numel(shape) != numel())
      throw ShapeError("reshape from " + shape_to_string(shape_) + " to " +
                       shape_to_string(shape) + " changes element count");
    shape_ = std::move(shape);
  }

  static TensorT zeros_like(const TensorT& other) { return TensorT(other.shape_); }

  bool same_shape(const TensorT& other) const { return shape_ == other.shape_; }

  /// Throws NumericError naming `what` if any element is NaN or Inf.
  void validate_finite(const char* what) const;

 private:
  static size_t check_numel(const Shape& shape) {
    return static_cast<size_t>(shape_numel(shape));
  }

  Shape shape_;
  std::vector<T> data_;
};

using Tensor = TensorT<float>;
using TensorD = TensorT<double>;

extern template class TensorT<float>;
extern template class TensorT<double>;

}  // namespace islb
