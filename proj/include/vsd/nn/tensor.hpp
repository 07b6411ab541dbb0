#pragma once

#include "vsd/core/rng.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vsd::nn {

// Dense float32 tensor, contiguous row-major. The shape is dynamic; all
// heavy math is done through Eigen maps over the flat buffer (see ops.hpp).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape);
    Tensor(std::initializer_list<int64_t> shape) : Tensor(std::vector<int64_t>(shape)) {}

    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int64_t> shape, float value);

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t dim(size_t i) const { return shape_.at(i); }
    size_t rank() const { return shape_.size(); }
    int64_t numel() const { return numel_; }
    bool empty() const { return numel_ == 0; }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    float& operator[](int64_t i) { return data_[size_t(i)]; }
    float operator[](int64_t i) const { return data_[size_t(i)]; }

    // Element access by multi-index (bounds unchecked in release).
    template <typename... Ix>
    float& at(Ix... ix) {
        return data_[flat_index({int64_t(ix)...})];
    }
    template <typename... Ix>
    float at(Ix... ix) const {
        return data_[flat_index({int64_t(ix)...})];
    }

    void fill(float v);
    void zero() { fill(0.0f); }

    // Reinterprets the buffer with a new shape of equal element count.
    Tensor reshaped(std::vector<int64_t> shape) const;

    void fill_normal(Rng& rng, float mean, float stddev);
    void fill_uniform(Rng& rng, float lo, float hi);

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    std::string shape_str() const;

    bool all_finite() const;
    double checksum() const; // order-dependent content hash for tests

private:
    size_t flat_index(std::initializer_list<int64_t> ix) const;

    std::vector<int64_t> shape_;
    int64_t numel_ = 0;
    std::vector<float> data_;
};

} // namespace vsd::nn
