#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "scgan/common.hpp"

namespace scgan {

// Dense row-major tensor. Feature maps use CHW order (channel plane is
// contiguous), which is what the im2col kernels expect.
template <typename T>
struct Tensor {
    std::vector<int> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(numel_of(shape)) {}
    Tensor(std::vector<int> s, T value) : shape(std::move(s)), data(numel_of(shape), value) {}

    static std::size_t numel_of(const std::vector<int>& s) {
        std::size_t n = 1;
        for (int d : s) n *= static_cast<std::size_t>(d);
        return n;
    }

    std::size_t numel() const { return data.size(); }
    bool empty() const { return data.empty(); }

    int dim(int i) const { return shape[static_cast<std::size_t>(i)]; }
    int channels() const { return shape.size() == 3 ? shape[0] : 1; }
    int height() const { return shape.size() == 3 ? shape[1] : (shape.size() == 2 ? shape[0] : 1); }
    int width() const { return shape.size() == 3 ? shape[2] : (shape.size() == 2 ? shape[1] : dim(0)); }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }
    T* plane(int c) { return data.data() + static_cast<std::size_t>(c) * height() * width(); }
    const T* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * height() * width(); }

    T& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * height() + y) * width() + x];
    }
    const T& at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * height() + y) * width() + x];
    }

    void zero() { std::fill(data.begin(), data.end(), T(0)); }
    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (const T& v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    std::string shape_str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
        os << ')';
        return os.str();
    }

    template <typename U>
    Tensor<U> cast() const {
        Tensor<U> out(shape);
        for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
        return out;
    }
};

template <typename T>
void require_shape(const Tensor<T>& t, const std::vector<int>& want, const std::string& name) {
    if (t.shape != want) {
        Tensor<T> w(want);
        throw ShapeError(name + " has shape " + t.shape_str() + ", expected " + w.shape_str());
    }
}

// Concatenate 3-d tensors along the channel axis; spatial dims must agree.
template <typename T>
Tensor<T> concat_channels(const std::vector<const Tensor<T>*>& parts, const std::string& name) {
    int h = parts.at(0)->height(), w = parts.at(0)->width(), c = 0;
    for (const auto* p : parts) {
        if (p->height() != h || p->width() != w)
            throw ShapeError(name + ": channel concat with mismatched spatial dims " + p->shape_str());
        c += p->channels();
    }
    Tensor<T> out({c, h, w});
    std::size_t off = 0;
    for (const auto* p : parts) {
        std::copy(p->data.begin(), p->data.end(), out.data.begin() + off);
        off += p->data.size();
    }
    return out;
}

// Slice [c0, c1) channels out of a 3-d tensor.
template <typename T>
Tensor<T> slice_channels(const Tensor<T>& t, int c0, int c1) {
    Tensor<T> out({c1 - c0, t.height(), t.width()});
    const std::size_t plane = static_cast<std::size_t>(t.height()) * t.width();
    std::copy(t.data.begin() + c0 * plane, t.data.begin() + c1 * plane, out.data.begin());
    return out;
}

}  // namespace scgan
