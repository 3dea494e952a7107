#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ydlab/scalar.hpp"

namespace ydlab {

using Shape = std::vector<int>;

inline std::size_t shape_total(const Shape& s) {
    std::size_t t = 1;
    for (int e : s) {
        if (e <= 0) throw std::invalid_argument("ydlab: tensor extents must be positive");
        t *= static_cast<std::size_t>(e);
    }
    return t;
}

inline std::vector<std::size_t> shape_strides(const Shape& s) {
    std::vector<std::size_t> st(s.size(), 1);
    for (int k = static_cast<int>(s.size()) - 2; k >= 0; --k)
        st[k] = st[k + 1] * static_cast<std::size_t>(s[k + 1]);
    return st;
}

/**
 * Dense exact tensor: a shape and a row-major array of Scalar entries.
 * A rank-0 tensor holds a single scalar. Two tensors are equal iff their
 * shapes and all entries coincide.
 */
class Tensor {
public:
    Tensor() : shape_{}, data_(1, Scalar::zero()) {}
    explicit Tensor(Shape shape)
        : shape_(std::move(shape)), data_(shape_total(shape_), Scalar::zero()) {}
    Tensor(Shape shape, std::vector<Scalar> data) : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != shape_total(shape_))
            throw std::invalid_argument("ydlab: entry count does not match shape");
    }

    static Tensor basis(Shape shape, std::size_t flat) {
        Tensor t(std::move(shape));
        t.data_.at(flat) = Scalar::one();
        return t;
    }
    static Tensor scalar(Scalar v) {
        Tensor t;
        t.data_[0] = std::move(v);
        return t;
    }

    const Shape& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    std::size_t total() const { return data_.size(); }

    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
    Scalar& operator[](std::size_t flat) { return data_[flat]; }
    const std::vector<Scalar>& data() const { return data_; }

    std::size_t flat_index(const std::vector<int>& idx) const {
        auto st = shape_strides(shape_);
        std::size_t f = 0;
        for (std::size_t k = 0; k < shape_.size(); ++k) {
            if (idx[k] < 0 || idx[k] >= shape_[k])
                throw std::out_of_range("ydlab: tensor index out of range");
            f += st[k] * static_cast<std::size_t>(idx[k]);
        }
        return f;
    }
    const Scalar& at(const std::vector<int>& idx) const { return data_[flat_index(idx)]; }
    Scalar& at(const std::vector<int>& idx) { return data_[flat_index(idx)]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    Tensor reshaped(Shape s) const {
        if (shape_total(s) != total())
            throw std::invalid_argument("ydlab: reshape changes entry count");
        return Tensor(std::move(s), data_);
    }

    Tensor conj() const {
        Tensor r(shape_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].conj();
        return r;
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        require_same_shape(a, b);
        Tensor r(a.shape_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        require_same_shape(a, b);
        Tensor r(a.shape_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend Tensor operator*(const Scalar& c, const Tensor& a) {
        Tensor r(a.shape_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = c * a.data_[k];
        return r;
    }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    void for_each_nonzero(const std::function<void(std::size_t, const Scalar&)>& f) const {
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!data_[k].is_zero()) f(k, data_[k]);
    }

    /// Serializes as a shape header plus the canonical scalar list.
    std::string str() const;

private:
    static void require_same_shape(const Tensor& a, const Tensor& b) {
        if (a.shape_ != b.shape_) throw std::invalid_argument("ydlab: shape mismatch");
    }

    Shape shape_;
    std::vector<Scalar> data_;
};

/// Kronecker/outer product; the result shape is the concatenation of shapes.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Reorders legs: result leg k is source leg perm[k].
Tensor permute_legs(const Tensor& t, const std::vector<int>& perm);

/// Transposes legs i and j (involutive).
Tensor flip(const Tensor& t, int i, int j);

/**
 * Places t on the (strictly increasing, 0-based) legs of a larger space and
 * the caller-supplied filler tensors on the remaining legs, in order. With
 * unit-element fillers this realizes the usual leg embeddings such as
 * E -> E_13.
 */
Tensor leg_embed(const Tensor& t, const std::vector<int>& legs, const std::vector<Tensor>& fillers);

} // namespace ydlab
