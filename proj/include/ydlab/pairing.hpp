#pragma once

#include "ydlab/algebra.hpp"

namespace ydlab {

/**
 * Non-degenerate bilinear pairing between two finite-dimensional Hopf
 * (*-)algebras, stored as the matrix form[i][j] = p(e_i, f_j). Finite
 * dimensionality forces dim A = dim B for a non-degenerate pairing; the
 * constructor rejects rectangular forms up front.
 *
 * The four regular actions and the canonical multiplier U (the invertible
 * element of A (x) B with p2(U, b (x) a) = p(a, b)) are computed on demand
 * and cached; U is unique for a valid pairing, so first computation wins.
 */
class Pairing {
public:
    Pairing() = default;
    Pairing(FDHopf A, FDHopf B, Tensor form, std::string name = "");

    const FDHopf& A() const { return A_; }
    const FDHopf& B() const { return B_; }
    const Tensor& form() const { return form_; }
    const std::string& name() const { return name_; }

    Scalar pair(std::size_t i, std::size_t j) const {
        return form_[i * static_cast<std::size_t>(B_.dim()) + j];
    }
    Scalar pair(const Tensor& a, const Tensor& b) const;

    /// a (x) b -> b_(1) p(a, b_(2)), a left action of A on B.
    const LinearMap& act_A_on_B() const;
    /// b (x) a -> a_(1) p(a_(2), b), a left action of B on A.
    const LinearMap& act_B_on_A() const;
    /// b (x) a -> p(a, b_(1)) b_(2), a right action of A on B.
    const LinearMap& ract_B_by_A() const;
    /// a (x) b -> p(a_(1), b) a_(2), a right action of B on A.
    const LinearMap& ract_A_by_B() const;

    bool has_multiplier() const { return u_.has_value(); }
    /// Canonical multiplier; solved from the defining system on first use.
    const Tensor& multiplier() const;
    const Tensor& multiplier_inverse() const;
    /// Installs an externally derived multiplier after it has been verified.
    void cache_multiplier(Tensor u, Tensor uinv) const;

    std::string str() const;

private:
    FDHopf A_, B_;
    Tensor form_;
    std::string name_;
    mutable std::optional<LinearMap> a_on_b_, b_on_a_, b_by_a_, a_by_b_;
    mutable std::optional<Tensor> u_, uinv_;
};

/// Multiplicativity in both slots, antipode exchange, star conditions,
/// non-degeneracy by exact rank, and unitality of all four regular actions.
Report check_pairing_axioms(const Pairing& p);

struct MultiplierResult {
    Report report;
    Tensor U, Uinv;
};

/// Solves the defining linear system for U over A (x) B, asserts the
/// solution is unique, verifies the defining identity on every basis pair
/// and inverts U in the tensor-product algebra.
MultiplierResult compute_canonical_multiplier(const Pairing& p);

/// Checks the defining identity and two-sided invertibility of a candidate
/// multiplier. On success the pair (U, (id (x) S_B)(U)) is cached in p.
Report verify_multiplier(const Pairing& p, const Tensor& U);

/// Coproduct legs, antipode symmetries, inverse formulas and (in the *-case)
/// unitarity of the canonical multiplier.
Report check_multiplier_identities(const Pairing& p);

/// The four conjugation identities relating Ad(U) and T_U to the regular
/// actions, swept over every monomial triple; both Sweedler forms of each
/// right-hand side are compared.
Report adjoint_identities(const Pairing& p);

/// Flip pairing p~(b,a) = p(a,b) between (B, Delta_B) and (A, Delta_A);
/// multiplier Sigma(U), verified against its own defining equation.
Pairing flip_pairing(const Pairing& p);

/// Pairing between (B, Delta_B^co) and (A^op, Delta_A^op); multiplier
/// Sigma(U) transported legwise, verified.
Pairing hat_pairing(const Pairing& p);

/// Pairing between (B^op, Delta_B^co,op) and (A^op, Delta_A^co,op).
Pairing tilde_pairing(const Pairing& p);

struct DerivedPairings {
    Pairing flip, flip_coop, flip_coop_op;
    Report report;
};

DerivedPairings derived_pairings(const Pairing& p);

} // namespace ydlab
