#include "ydlab/tensor.hpp"

#include <sstream>

namespace ydlab {

std::string Tensor::str() const {
    std::ostringstream os;
    os << "shape";
    for (int e : shape_) os << ' ' << e;
    os << '\n';
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (k) os << ' ';
        os << data_[k].str();
    }
    os << '\n';
    return os.str();
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    Shape s = a.shape();
    s.insert(s.end(), b.shape().begin(), b.shape().end());
    Tensor r(std::move(s));
    const std::size_t nb = b.total();
    a.for_each_nonzero([&](std::size_t ia, const Scalar& va) {
        b.for_each_nonzero([&](std::size_t ib, const Scalar& vb) { r[ia * nb + ib] = va * vb; });
    });
    return r;
}

Tensor permute_legs(const Tensor& t, const std::vector<int>& perm) {
    const int r = t.rank();
    if (static_cast<int>(perm.size()) != r)
        throw std::invalid_argument("ydlab: permutation size mismatch");
    Shape ns(r);
    for (int k = 0; k < r; ++k) ns[k] = t.shape()[perm[k]];
    auto src_st = shape_strides(t.shape());
    auto dst_st = shape_strides(ns);
    Tensor out(std::move(ns));
    std::vector<int> idx(r, 0);
    // walk source indices in order, writing into permuted positions
    for (std::size_t f = 0; f < t.total(); ++f) {
        if (!t[f].is_zero()) {
            std::size_t rem = f, dst = 0;
            for (int k = 0; k < r; ++k) {
                idx[k] = static_cast<int>(rem / src_st[k]);
                rem %= src_st[k];
            }
            for (int k = 0; k < r; ++k) dst += dst_st[k] * static_cast<std::size_t>(idx[perm[k]]);
            out[dst] = t[f];
        }
    }
    return out;
}

Tensor flip(const Tensor& t, int i, int j) {
    if (i < 0 || j < 0 || i >= t.rank() || j >= t.rank())
        throw std::out_of_range("ydlab: flip leg index out of range");
    std::vector<int> perm(t.rank());
    for (int k = 0; k < t.rank(); ++k) perm[k] = k;
    std::swap(perm[i], perm[j]);
    return permute_legs(t, perm);
}

Tensor leg_embed(const Tensor& t, const std::vector<int>& legs, const std::vector<Tensor>& fillers) {
    const int ambient_rank = t.rank() + [&] {
        int n = 0;
        for (const auto& f : fillers) n += f.rank();
        return n;
    }();
    for (std::size_t k = 0; k + 1 < legs.size(); ++k)
        if (legs[k] >= legs[k + 1]) throw std::invalid_argument("ydlab: legs must be strictly increasing");
    if (static_cast<int>(legs.size()) != t.rank())
        throw std::invalid_argument("ydlab: legs list must match tensor rank");
    if (!legs.empty() && (legs.front() < 0 || legs.back() >= ambient_rank))
        throw std::out_of_range("ydlab: leg index out of range");

    Tensor prod = t;
    for (const auto& f : fillers) prod = tensor_product(prod, f);

    // prod legs: [t legs..., filler legs...]; route them to ambient positions
    std::vector<bool> used(ambient_rank, false);
    std::vector<int> dest(prod.rank());
    for (int k = 0; k < t.rank(); ++k) {
        dest[k] = legs[k];
        used[legs[k]] = true;
    }
    int cursor = 0;
    for (int k = t.rank(); k < prod.rank(); ++k) {
        while (used[cursor]) ++cursor;
        dest[k] = cursor;
        used[cursor] = true;
    }
    // permute_legs wants: result leg k = source leg perm[k]
    std::vector<int> perm(prod.rank());
    for (int k = 0; k < prod.rank(); ++k) perm[dest[k]] = k;
    return permute_legs(prod, perm);
}

} // namespace ydlab
