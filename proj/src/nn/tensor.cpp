#include "vsd/nn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace vsd::nn {

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    numel_ = 1;
    for (int64_t d : shape_) {
        if (d < 0) throw std::invalid_argument("Tensor: negative dimension");
        numel_ *= d;
    }
    data_.assign(size_t(numel_), 0.0f);
}

Tensor Tensor::full(std::vector<int64_t> shape, float value) {
    Tensor t(std::move(shape));
    t.fill(value);
    return t;
}

void Tensor::fill(float v) {
    std::fill(data_.begin(), data_.end(), v);
}

size_t Tensor::flat_index(std::initializer_list<int64_t> ix) const {
    int64_t flat = 0;
    size_t k = 0;
    for (int64_t i : ix) {
        flat = flat * shape_[k] + i;
        ++k;
    }
    return size_t(flat);
}

Tensor Tensor::reshaped(std::vector<int64_t> shape) const {
    Tensor t;
    t.shape_ = std::move(shape);
    t.numel_ = 1;
    for (int64_t d : t.shape_) t.numel_ *= d;
    if (t.numel_ != numel_) throw std::invalid_argument("reshape: element count mismatch");
    t.data_ = data_;
    return t;
}

void Tensor::fill_normal(Rng& rng, float mean, float stddev) {
    for (float& v : data_) v = float(rng.normal(mean, stddev));
}

void Tensor::fill_uniform(Rng& rng, float lo, float hi) {
    for (float& v : data_) v = float(rng.uniform(lo, hi));
}

std::string Tensor::shape_str() const {
    std::ostringstream ss;
    ss << "(";
    for (size_t i = 0; i < shape_.size(); ++i) ss << (i ? ", " : "") << shape_[i];
    ss << ")";
    return ss.str();
}

bool Tensor::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](float v) { return std::isfinite(v); });
}

double Tensor::checksum() const {
    uint64_t h = 0x243F6A8885A308D3ull;
    for (float v : data_) {
        uint32_t bits;
        static_assert(sizeof(bits) == sizeof(v));
        std::memcpy(&bits, &v, sizeof(bits));
        h = hash_combine(h, bits);
    }
    return double(h >> 11) * 0x1.0p-53;
}

} // namespace vsd::nn
