#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ydlab/tensor.hpp"

namespace ydlab {

/**
 * Exact linear map between tensor spaces, stored as a dense matrix of shape
 * [codomain_total, domain_total] in row-major order. Composition is matrix
 * multiplication; maps are value types and freely shareable.
 */
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(Shape dom, Shape cod)
        : dom_(std::move(dom)), cod_(std::move(cod)),
          mat_(Shape{static_cast<int>(shape_total(cod_)), static_cast<int>(shape_total(dom_))}) {}
    LinearMap(Shape dom, Shape cod, Tensor mat) : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
        if (mat_.rank() != 2 || static_cast<std::size_t>(mat_.shape()[0]) != shape_total(cod_) ||
            static_cast<std::size_t>(mat_.shape()[1]) != shape_total(dom_))
            throw std::invalid_argument("ydlab: linear map matrix shape mismatch");
    }

    static LinearMap identity(Shape s);
    /// Builds a map column by column from images of domain basis vectors.
    static LinearMap from_columns(Shape dom, Shape cod,
                                  const std::function<Tensor(std::size_t)>& column);
    /// The permutation map sending basis leg order to `perm` (see permute_legs).
    static LinearMap leg_permutation(const Shape& dom, const std::vector<int>& perm);

    const Shape& dom() const { return dom_; }
    const Shape& cod() const { return cod_; }
    std::size_t dom_total() const { return shape_total(dom_); }
    std::size_t cod_total() const { return shape_total(cod_); }
    const Tensor& matrix() const { return mat_; }
    Tensor& matrix() {
        cols_.reset();
        return mat_;
    }

    const Scalar& entry(std::size_t row, std::size_t col) const {
        return mat_[row * dom_total() + col];
    }
    Scalar& entry(std::size_t row, std::size_t col) {
        cols_.reset();
        return mat_[row * dom_total() + col];
    }

    Tensor apply(const Tensor& v) const;
    Tensor column(std::size_t j) const;

    /// Nonzero entries of every column, built lazily and cached; the backbone
    /// of sparse application.
    const std::vector<std::vector<std::pair<int, Scalar>>>& sparse_columns() const;

    /// Applies this map to legs [first, first + dom rank) of t, identity elsewhere.
    Tensor apply_on_legs(const Tensor& t, int first) const;

    /// Composition (*this) o g.
    LinearMap compose(const LinearMap& g) const;
    friend LinearMap operator*(const LinearMap& f, const LinearMap& g) { return f.compose(g); }

    LinearMap tensor_with(const LinearMap& g) const;
    LinearMap transpose() const;
    LinearMap conj() const;
    /// Same matrix viewed between different (equal-size) tensor shapes.
    LinearMap with_shapes(Shape dom, Shape cod) const {
        LinearMap r = *this;
        if (shape_total(dom) != dom_total() || shape_total(cod) != cod_total())
            throw std::invalid_argument("ydlab: with_shapes size mismatch");
        r.dom_ = std::move(dom);
        r.cod_ = std::move(cod);
        return r;
    }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mat_ == b.mat_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    Shape dom_, cod_;
    Tensor mat_;
    mutable std::shared_ptr<std::vector<std::vector<std::pair<int, Scalar>>>> cols_;
};

enum class SolveKind { Unique, NoSolution, NonUnique };

/**
 * Result of an exact solve. For NonUnique, `solution` is one particular
 * solution and `kernel` spans the solution space's direction; for NoSolution
 * only `kind` is meaningful.
 */
struct SolveResult {
    SolveKind kind = SolveKind::NoSolution;
    Tensor solution;                // [n, k] for rhs [m, k]
    std::vector<Tensor> kernel;     // basis of null space, each [n]
    int rank = 0;
};

/**
 * Solves A x = b exactly by fraction-free (Bareiss) elimination after
 * clearing denominators row by row, so intermediate values stay Gaussian
 * integers of bounded size. A is [m, n]; b is [m] or [m, k].
 */
SolveResult solve_exact(const Tensor& A, const Tensor& b);

int rank_exact(const Tensor& A);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<Tensor> invert_exact(const Tensor& A);

std::optional<LinearMap> invert_map(const LinearMap& f);

} // namespace ydlab
