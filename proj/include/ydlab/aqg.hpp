#pragma once

#include "ydlab/yd.hpp"

namespace ydlab {

/// Invariant functional on a Hopf algebra, normalized so the first nonzero
/// basis value is 1.
struct Integral {
    LinearMap functional;  // [dim] -> scalar
    Side side = Side::Left;

    Scalar operator()(const Tensor& x) const { return functional.apply(x)[0]; }
};

struct IntegralResult {
    Report report;
    std::optional<Integral> integral;
};

/**
 * Solves the invariance condition (id (x) phi)Delta(a) = phi(a) 1 (left) or
 * its mirror (right) as an exact linear system. The solution space of a
 * finite-dimensional Hopf algebra is one-dimensional; this is asserted, and
 * the representative is normalized.
 */
IntegralResult find_integral(const FDHopf& h, Side side);

/**
 * Positivity (exact Hermitian positive-semidefiniteness of the Gram matrix
 * of phi through the star), faithfulness (nondegenerate Gram), invariance,
 * and invariance under the squared antipode.
 */
Report check_aqg(const FDHopf& h, const Integral& phi);

/// Exact test: is the Hermitian matrix [g(i,j)] positive semidefinite?
/// Uses pivoted conjugate-symmetric elimination; no tolerances.
bool hermitian_psd(const Tensor& gram);

struct QuantumGroupData {
    FDHopf A;        // function algebra of the quantum group
    Integral phi;    // its left integral
    FDHopf dual;     // dual Hopf *-algebra, plain coproduct
    FDHopf dual_co;  // the dual quantum group carries the co-opposite coproduct
    Pairing p;       // evaluation pairing of A with the dual
    FDAlgebra H;     // Heisenberg *-algebra (dual # A)
};

/// Assembles the finite quantum-group package over a Hopf *-algebra with
/// integral; the evaluation pairing's multiplier is the multiplicative
/// unitary.
QuantumGroupData quantum_group_data(const FDHopf& A, const Integral& phi);

/**
 * The three defining conditions of the multiplicative unitary: coproduct
 * legs on both sides, the unitary-antipode symmetry (here R = S, valid
 * because the models are involutive, which is asserted), and implementation
 * of both coproducts by conjugation inside the Heisenberg algebra.
 */
Report multiplicative_unitary_checks(const QuantumGroupData& qg);

/**
 * Right quantum-group compatibility of a pair of coactions: theta of A and
 * theta-hat of the dual quantum group on the same *-algebra. Evaluates the
 * Ad(U)-twisted exchange identity directly, the commutator form of braided
 * commutativity, and the same data through the coaction-pair checkers over
 * the derived pairing; the two routes must agree.
 */
Report yd_quantum_check(const QuantumGroupData& qg, const FDAlgebra& X, const Coaction& theta,
                        const Coaction& theta_hat);

} // namespace ydlab
