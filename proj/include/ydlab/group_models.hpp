#pragma once

#include "ydlab/yd.hpp"

namespace ydlab {

/**
 * Finite group given by its Cayley table. Element 0 is the identity; the
 * table stores index products table[g][h] = g*h.
 */
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;

    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const { return inverse[g]; }
};

/// Builds the group after validating the table (identity row/column,
/// associativity, two-sided inverses). Throws std::invalid_argument with the
/// offending triple or element on failure.
FiniteGroup make_group(std::string name, std::vector<std::string> labels,
                       std::vector<std::vector<int>> table);

/// Validation as report data instead of an exception.
Report validate_group_table(const std::vector<std::string>& labels,
                            const std::vector<std::vector<int>>& table);

/**
 * Left action of a finite group on {0..set_size-1}: one permutation per
 * group element with perm[e] = id and perm[gh] = perm[g] . perm[h].
 */
struct GroupAction {
    std::string name;
    FiniteGroup group;
    int set_size = 0;
    std::vector<std::vector<int>> perm;

    int apply(int g, int s) const { return perm[g][s]; }
};

GroupAction make_group_action(std::string name, FiniteGroup group, int set_size,
                              std::vector<std::vector<int>> perm);

Report validate_group_action(const FiniteGroup& group, int set_size,
                             const std::vector<std::vector<int>>& perm);

/// Function Hopf *-algebra K(G): pointwise products of delta functions,
/// Delta d_x = sum over uv = x, counit at the identity, antipode by group
/// inverse, entrywise star.
FDHopf function_hopf(const FiniteGroup& G);

/// Group Hopf *-algebra k[G]: convolution product, group-like coproduct,
/// star and antipode by group inverse.
FDHopf group_hopf(const FiniteGroup& G);

/// The evaluation pairing of K(G) with k[G]; the form is the identity matrix.
Pairing canonical_group_pairing(const FiniteGroup& G);

/// Function *-algebra on a finite set (no Hopf structure).
FDAlgebra set_function_algebra(int set_size, const std::string& name);

struct TransformationYD {
    Report report;
    YDPair yd;
};

/**
 * The braided commutative ll pair on K(S) attached to a group action:
 * alpha translates along the action, beta is the trivial group-algebra
 * coaction. Both characterizations are verified.
 */
TransformationYD transformation_yd(const GroupAction& act);

struct GroupoidAlgebras {
    FDAlgebra functions;    // K(G x| S), pointwise
    FDAlgebra convolution;  // k[G x| S], from the composition relations
};

/// Function and convolution *-algebras of the transformation groupoid.
GroupoidAlgebras groupoid_algebras(const GroupAction& act);

/// The two crossed products of the transformation pair identified with the
/// groupoid algebras through the explicit generator maps.
Report verify_crossed_isos(const GroupAction& act);

struct HeisenbergOverDouble {
    Report report;
    FDAlgebra H;          // Heisenberg algebra of p
    FDHopf D;             // double of the co-hat pairing
    FDHopf T;             // codouble of the flip pairing
    Coaction gamma_prime; // left coaction of D on H
    Coaction gamma;       // right coaction of T on H
    Pairing P;            // pairing between D and T
};

/**
 * The Yetter-Drinfeld structure on the Heisenberg algebra over the double:
 * the coaction transported from the double's coproduct along the
 * basis-identity isomorphism, the two conjugation coactions assembled from
 * the canonical multiplier, the product identity tying their combined
 * multiplier to the double-codouble pairing, the lr compatibility check,
 * the induced action in both forms, and the coaction law of the combined map
 * over the skew-copairing codouble.
 */
HeisenbergOverDouble heisenberg_over_double(const Pairing& p);

} // namespace ydlab
