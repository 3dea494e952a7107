#pragma once

#include "ydlab/pairing.hpp"

namespace ydlab {

enum class Side { Left, Right };

/**
 * Module-algebra action of a Hopf algebra H on an algebra X.
 * Left: map is H (x) X -> X. Right: map is X (x) H -> X.
 */
struct Action {
    FDHopf H;
    FDAlgebra X;
    Side side = Side::Left;
    LinearMap map;
    std::string name;

    Tensor act(const Tensor& h, const Tensor& x) const {
        return side == Side::Left ? map.apply(tensor_product(h, x))
                                  : map.apply(tensor_product(x, h));
    }
};

/**
 * Comodule-algebra coaction of H on X.
 * Left: map is X -> H (x) X. Right: map is X -> X (x) H.
 */
struct Coaction {
    FDHopf H;
    FDAlgebra X;
    Side side = Side::Left;
    LinearMap map;
    std::string name;

    Tensor coact(const Tensor& x) const { return map.apply(x); }
};

/// Unitality, the module law, the module-algebra law, the unit image and
/// (when both carriers are involutive) the star compatibility.
Report check_action(const Action& a);

/// Unital algebra (*-)homomorphism, coassociativity and counit recovery;
/// injectivity follows from the counit law and is reported as such.
Report check_coaction(const Coaction& c);

struct CoactionFromMultiplier {
    Report report;
    std::optional<Coaction> coaction;
    Tensor W, Winv;
};

/**
 * Conjugation coaction x -> W (1 (x) x) W^{-1} (left; mirrored on the right)
 * from an invertible W in H (x) X satisfying the coproduct-leg law
 * (Delta (x) id)(W) = W23 W13 (right: (id (x) Delta)(W) = W12 W13).
 * In the involutive case W must additionally be unitary.
 */
CoactionFromMultiplier coaction_from_multiplier(const Tensor& W, const FDHopf& H,
                                                const FDAlgebra& X, Side side,
                                                const std::string& name = "ad_coaction");

struct OpCoopCoactions {
    Report report;
    std::optional<Coaction> op;    // over H^op on X^op
    std::optional<Coaction> coop;  // over H^co on X^op
};

/**
 * The opposite and co-opposite of a left coaction, both living on X^op. In
 * the involutive case an algebra automorphism `twist` of X with
 * twist . * . twist . * = id and Gamma . twist = (S^-2 (x) twist) . Gamma
 * must be supplied (identity by default); the involution on X^op is then
 * x -> twist(x^*). The intertwining of op and coop through S is verified.
 */
OpCoopCoactions op_coop_coactions(const Coaction& c, std::optional<LinearMap> twist = std::nullopt);

// Duality between actions and coactions along a pairing p : A x B.
// The six directed constructions below cover every slot combination used by
// the Yetter-Drinfeld checks; round trips are exact and tested.

/// left coaction of A  ~>  right action of B: x <| b = (p(.,b) (x) id) Gamma(x).
Action dual_right_action_from_left_coactA(const Coaction& c, const Pairing& p);
/// right action of B  ~>  left coaction of A, via the canonical multiplier.
Coaction dual_left_coaction_from_right_actB(const Action& a, const Pairing& p);
/// left coaction of B  ~>  right action of A: x <| a = (p(a,.) (x) id) Gamma(x).
Action dual_right_action_from_left_coactB(const Coaction& c, const Pairing& p);
/// right action of A  ~>  left coaction of B, via the canonical multiplier.
Coaction dual_left_coaction_from_right_actA(const Action& a, const Pairing& p);
/// right coaction of B  ~>  left action of A: a |> x = (id (x) p(a,.)) Gamma(x).
Action dual_left_action_from_right_coactB(const Coaction& c, const Pairing& p);
/// left action of A  ~>  right coaction of B, via the canonical multiplier.
Coaction dual_right_coaction_from_left_actA(const Action& a, const Pairing& p);

} // namespace ydlab
