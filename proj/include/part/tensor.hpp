#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace part {

/// Dense row-major double tensor. Shapes follow channels-first
/// conventions throughout the library: images are (C,H,W), batches
/// (N,C,H,W), spatial maps (H,W).
class Tensor {
public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0)
      : shape_(std::move(shape)), data_(count(shape_), fill) {}

  Tensor(std::initializer_list<std::size_t> shape, double fill = 0.0)
      : Tensor(std::vector<std::size_t>(shape), fill) {}

  static Tensor from_data(std::vector<std::size_t> shape, std::vector<double> data) {
    if (count(shape) != data.size())
      throw std::invalid_argument("Tensor::from_data: shape/data size mismatch");
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = std::move(data);
    return t;
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::size_t dim(std::size_t i) const { return shape_.at(i); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& storage() { return data_; }
  const std::vector<double>& storage() const { return data_; }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  // (h,w) indexing for rank-2, (c,h,w) for rank-3, (n,c,h,w) for rank-4.
  double& at2(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
  double at2(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

  double& at3(std::size_t c, std::size_t h, std::size_t w) {
    return data_[(c * shape_[1] + h) * shape_[2] + w];
  }
  double at3(std::size_t c, std::size_t h, std::size_t w) const {
    return data_[(c * shape_[1] + h) * shape_[2] + w];
  }

  double& at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
    return data_[((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w];
  }
  double at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
    return data_[((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w];
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  /// Slice of a batch tensor: element n of the leading axis, copied out.
  Tensor slice0(std::size_t n) const {
    if (rank() < 2) throw std::invalid_argument("Tensor::slice0: rank < 2");
    std::vector<std::size_t> sub(shape_.begin() + 1, shape_.end());
    std::size_t stride = count(sub);
    Tensor t(sub);
    std::copy(data_.begin() + n * stride, data_.begin() + (n + 1) * stride, t.data_.begin());
    return t;
  }

  /// Write `src` into element n of the leading axis.
  void set_slice0(std::size_t n, const Tensor& src) {
    std::size_t stride = src.size();
    std::copy(src.data_.begin(), src.data_.end(), data_.begin() + n * stride);
  }

  double min() const;
  double max() const;
  double sum() const;
  bool all_finite() const;

  std::string shape_str() const;

private:
  static std::size_t count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    return s.empty() ? 0 : n;
  }

  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

}  // namespace part
