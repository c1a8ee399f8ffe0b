#include "islb/tensor.hpp"

#include <cmath>
#include <sstream>

namespace islb {

int64_t shape_numel(const Shape& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d <= 0) throw ShapeError("non-positive extent in shape " + shape_to_string(shape));
    n *= d;
  }
  return n;
}

std::string shape_to_string(const Shape& shape) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
  os << ")";
  return os.str();
}

template <typename T>
void TensorT<T>::validate_finite(const char* what) const {
  const T* p = data_.data();
  const size_t n = data_.size();
  // Summing is branch-free and vectorizes; a single NaN/Inf poisons the total.
  T acc = T(0);
  for (size_t i = 0; i < n; ++i) acc += p[i] * T(0);
  if (!std::isfinite(acc)) {
    for (size_t i = 0; i < n; ++i) {
      if (!std::isfinite(p[i]))
        throw NumericError(std::string(what) + ": non-finite value at flat index " +
                           std::to_string(i));
    }
  }
}

template class TensorT<float>;
template class TensorT<double>;

}  // namespace islb
