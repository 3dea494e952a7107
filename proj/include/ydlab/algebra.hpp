#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ydlab/linalg.hpp"
#include "ydlab/report.hpp"

namespace ydlab {

/**
 * Conjugate-linear involution x -> x^*: conjugate the coefficients, then
 * apply `matrix`. Stored as a matrix rather than a basis permutation so
 * non-monomial involutions are representable.
 */
struct StarStructure {
    LinearMap matrix;

    Tensor apply(const Tensor& x) const { return matrix.apply(x.conj()); }
};

/**
 * Finite-dimensional unital algebra given by structure constants:
 * mult[k][i][j] is the coefficient of e_k in e_i * e_j.
 */
class FDAlgebra {
public:
    FDAlgebra() = default;
    FDAlgebra(int dim, std::vector<std::string> labels, Tensor mult, Tensor unit,
              std::string name = "", std::optional<StarStructure> star = std::nullopt);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Tensor& mult_tensor() const { return mult_; }
    const Tensor& unit() const { return unit_; }
    const std::string& name() const { return name_; }
    const std::optional<StarStructure>& star() const { return star_; }
    void set_star(StarStructure s) { star_ = std::move(s); }
    void set_name(std::string n) { name_ = std::move(n); }

    Tensor basis(std::size_t i) const { return Tensor::basis(Shape{dim_}, i); }
    Tensor multiply(const Tensor& x, const Tensor& y) const;
    Tensor star_of(const Tensor& x) const;

    /// Multiplication as a linear map A (x) A -> A.
    LinearMap mult_map() const;
    /// Left multiplication operator x -> w*x as a dim x dim matrix.
    LinearMap left_mult_operator(const Tensor& w) const;
    LinearMap right_mult_operator(const Tensor& w) const;

    bool is_commutative() const;

    /// Algebra inverse of w, if it exists (two-sided, exact).
    std::optional<Tensor> element_inverse(const Tensor& w) const;

    /// Structure constants of the opposite algebra (reversed product).
    FDAlgebra opposite(std::optional<LinearMap> star_twist = std::nullopt) const;

    // Nonzero products of one basis pair: list of (k, coefficient).
    const std::vector<std::pair<int, Scalar>>& pair_products(std::size_t i, std::size_t j) const {
        return pair_products_[i * static_cast<std::size_t>(dim_) + j];
    }

private:
    int dim_ = 0;
    std::vector<std::string> labels_;
    Tensor mult_;  // [dim, dim, dim]
    Tensor unit_;  // [dim]
    std::string name_;
    std::optional<StarStructure> star_;
    std::vector<std::vector<std::pair<int, Scalar>>> pair_products_;
};

/// Associativity, two-sided unit, non-degeneracy, and star laws when present.
Report check_algebra(const FDAlgebra& a);

/**
 * Tensor product of algebras, used as the ambient space for leg-embedded
 * identities. Products iterate only over nonzero entries, so elements of
 * large products (e.g. three-fold tensor spaces) stay cheap to multiply
 * without ever materializing the product's own structure tensor.
 */
class ProductAlgebra {
public:
    explicit ProductAlgebra(std::vector<const FDAlgebra*> factors);

    const Shape& shape() const { return shape_; }
    std::size_t total() const { return total_; }
    int arity() const { return static_cast<int>(factors_.size()); }
    const FDAlgebra& factor(int k) const { return *factors_[k]; }

    Tensor unit() const;
    Tensor multiply(const Tensor& x, const Tensor& y) const;
    /// Places t (over the named factors, strictly increasing) into the full
    /// space with algebra units on the remaining legs.
    Tensor embed(const Tensor& t, const std::vector<int>& factor_slots) const;
    Tensor conjugate_by(const Tensor& w, const Tensor& winv, const Tensor& x) const {
        return multiply(multiply(w, x), winv);
    }
    Tensor star_of(const Tensor& x) const;
    std::optional<Tensor> element_inverse(const Tensor& w) const;

    /// Dense structure-constant record; only sensible for small dimensions.
    FDAlgebra materialize(std::string name) const;

private:
    std::vector<const FDAlgebra*> factors_;
    Shape shape_;
    std::size_t total_ = 1;
};

/**
 * Finite-dimensional Hopf algebra as structure constants. `delta` maps
 * A -> A (x) A (matrix of shape [dim*dim, dim]), `counit` maps A -> k,
 * `antipode` is the matrix of S. A missing antipode is only tolerated for
 * intermediate objects; check_hopf_axioms requires one.
 */
class FDHopf {
public:
    FDHopf() = default;
    FDHopf(FDAlgebra alg, LinearMap delta, LinearMap counit,
           std::optional<LinearMap> antipode, std::string name = "");

    const FDAlgebra& alg() const { return alg_; }
    FDAlgebra& alg() { return alg_; }
    int dim() const { return alg_.dim(); }
    const LinearMap& delta() const { return delta_; }
    const LinearMap& counit() const { return counit_; }
    bool has_antipode() const { return antipode_.has_value(); }
    const LinearMap& antipode() const;
    const LinearMap& antipode_inverse() const;
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    Tensor basis(std::size_t i) const { return alg_.basis(i); }
    const std::string& label(std::size_t i) const { return alg_.label(i); }

    /// Sweedler expansion of Delta(e_i): nonzero ((p,q), coefficient) terms.
    std::vector<std::pair<std::pair<int, int>, Scalar>> delta_terms(std::size_t i) const;

    Scalar counit_of(const Tensor& x) const { return counit_.apply(x)[0]; }
    Tensor apply_antipode(const Tensor& x) const { return antipode().apply(x); }

    /// (Delta (x) id) Delta as a map A -> A (x) A (x) A.
    LinearMap delta2() const { return delta_.tensor_with(LinearMap::identity(Shape{dim()})).compose(delta_); }

    /// Structure-constant text block in canonical order.
    std::string str() const;

private:
    FDAlgebra alg_;
    LinearMap delta_, counit_;
    std::optional<LinearMap> antipode_;
    mutable std::optional<LinearMap> antipode_inv_;
    std::string name_;
};

Report check_hopf_axioms(const FDHopf& h);

struct GaloisMaps {
    Report report;
    LinearMap T1, T2;
    std::optional<LinearMap> R1, R2;
};

/// T1: a (x) b -> Delta(a)(1 (x) b), T2: a (x) b -> (a (x) 1)Delta(b);
/// bijectivity established by exact rank, inverses returned.
GaloisMaps check_galois_maps(const FDHopf& h);

/// Bijectivity of the Galois maps through the closed two-sided inverses
/// R1 = (id (x) m)(id (x) S (x) id)(Delta (x) id) and its mirror; stays
/// cheap at dimensions where the dense rank computation is not.
Report check_galois_by_formula(const FDHopf& h);

/// Reversed multiplication, legwise comultiplication, antipode S^{-1},
/// involution x -> S^{-2}(x^*) when a star is present.
FDHopf opposite_hopf(const FDHopf& h);

/// Flipped comultiplication, same multiplication, antipode S^{-1}.
FDHopf coopposite_hopf(const FDHopf& h);

/// Linear dual: multiplication = Delta^T, comultiplication = mult^T,
/// counit = evaluation at 1, antipode = S^T, star via w^*(a) = conj(w(S(a)^*)).
FDHopf dual_hopf(const FDHopf& h);

/// Solves m(S (x) id)Delta = unit.counit for S; empty when no solution or
/// the solution space is not a single point.
std::optional<LinearMap> solve_antipode(const FDAlgebra& alg, const LinearMap& delta,
                                        const LinearMap& counit);

/// Verifies f is an isomorphism of Hopf (*-)algebras from h to k.
Report check_hopf_isomorphism(const LinearMap& f, const FDHopf& h, const FDHopf& k);

/// Verifies f reverses products and intertwines units (and stars if both
/// carriers have them): f(xy) = f(y)f(x).
Report check_anti_isomorphism(const LinearMap& f, const FDAlgebra& a, const FDAlgebra& b,
                              bool check_star);

} // namespace ydlab
