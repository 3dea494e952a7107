#include "ydlab/pairing.hpp"

#include <sstream>

namespace ydlab {

Pairing::Pairing(FDHopf A, FDHopf B, Tensor form, std::string name)
    : A_(std::move(A)), B_(std::move(B)), form_(std::move(form)), name_(std::move(name)) {
    if (A_.dim() != B_.dim())
        throw std::invalid_argument(
            "ydlab: non-degenerate pairing needs dim A = dim B (got " + std::to_string(A_.dim()) +
            " and " + std::to_string(B_.dim()) + ")");
    if (form_.shape() != Shape{A_.dim(), B_.dim()})
        throw std::invalid_argument("ydlab: pairing form must be [dimA, dimB]");
}

Scalar Pairing::pair(const Tensor& a, const Tensor& b) const {
    Scalar s = Scalar::zero();
    const std::size_t nb = static_cast<std::size_t>(B_.dim());
    a.for_each_nonzero([&](std::size_t i, const Scalar& av) {
        b.for_each_nonzero([&](std::size_t j, const Scalar& bv) { s += av * bv * form_[i * nb + j]; });
    });
    return s;
}

const LinearMap& Pairing::act_A_on_B() const {
    if (!a_on_b_) {
        const int na = A_.dim(), nb = B_.dim();
        LinearMap f(Shape{na, nb}, Shape{nb});
        for (int j = 0; j < nb; ++j)
            for (const auto& [pq, c] : B_.delta_terms(j)) {
                // a e_i on f_j contributes f_{pq.first} p(e_i, f_{pq.second})
                for (int i = 0; i < na; ++i) {
                    Scalar v = c * pair(i, pq.second);
                    if (!v.is_zero())
                        f.entry(pq.first, static_cast<std::size_t>(i) * nb + j) += v;
                }
            }
        a_on_b_ = std::move(f);
    }
    return *a_on_b_;
}

const LinearMap& Pairing::ract_B_by_A() const {
    if (!b_by_a_) {
        const int na = A_.dim(), nb = B_.dim();
        LinearMap f(Shape{nb, na}, Shape{nb});
        for (int j = 0; j < nb; ++j)
            for (const auto& [pq, c] : B_.delta_terms(j))
                for (int i = 0; i < na; ++i) {
                    Scalar v = c * pair(i, pq.first);
                    if (!v.is_zero())
                        f.entry(pq.second, static_cast<std::size_t>(j) * na + i) += v;
                }
        b_by_a_ = std::move(f);
    }
    return *b_by_a_;
}

const LinearMap& Pairing::act_B_on_A() const {
    if (!b_on_a_) {
        const int na = A_.dim(), nb = B_.dim();
        LinearMap f(Shape{nb, na}, Shape{na});
        for (int i = 0; i < na; ++i)
            for (const auto& [pq, c] : A_.delta_terms(i))
                for (int j = 0; j < nb; ++j) {
                    Scalar v = c * pair(pq.second, j);
                    if (!v.is_zero())
                        f.entry(pq.first, static_cast<std::size_t>(j) * na + i) += v;
                }
        b_on_a_ = std::move(f);
    }
    return *b_on_a_;
}

const LinearMap& Pairing::ract_A_by_B() const {
    if (!a_by_b_) {
        const int na = A_.dim(), nb = B_.dim();
        LinearMap f(Shape{na, nb}, Shape{na});
        for (int i = 0; i < na; ++i)
            for (const auto& [pq, c] : A_.delta_terms(i))
                for (int j = 0; j < nb; ++j) {
                    Scalar v = c * pair(pq.first, j);
                    if (!v.is_zero())
                        f.entry(pq.second, static_cast<std::size_t>(i) * nb + j) += v;
                }
        a_by_b_ = std::move(f);
    }
    return *a_by_b_;
}

const Tensor& Pairing::multiplier() const {
    if (!u_) {
        MultiplierResult r = compute_canonical_multiplier(*this);
        if (!r.report.ok())
            throw std::logic_error("ydlab: canonical multiplier failed for pairing '" + name_ +
                                   "':\n" + r.report.str());
        u_ = std::move(r.U);
        uinv_ = std::move(r.Uinv);
    }
    return *u_;
}

const Tensor& Pairing::multiplier_inverse() const {
    multiplier();
    return *uinv_;
}

void Pairing::cache_multiplier(Tensor u, Tensor uinv) const {
    if (!u_) {
        u_ = std::move(u);
        uinv_ = std::move(uinv);
    }
}

std::string Pairing::str() const {
    std::ostringstream os;
    os << "pairing " << name_ << "\nfirst " << A_.name() << "\nsecond " << B_.name() << "\nform\n"
       << form_.str() << "end\n";
    return os.str();
}

Report check_pairing_axioms(const Pairing& p) {
    Report rep;
    const FDHopf& A = p.A();
    const FDHopf& B = p.B();
    const int na = A.dim(), nb = B.dim();

    rep.add("square_form", na == nb);
    rep.add("non_degenerate", rank_exact(p.form()) == na,
            "rank " + std::to_string(rank_exact(p.form())) + "/" + std::to_string(na));

    // p(a a', b) = p(a, b_(1)) p(a', b_(2)) over all basis triples
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < na && ok; ++i)
            for (int m = 0; m < na && ok; ++m) {
                Tensor prod = A.alg().multiply(A.basis(i), A.basis(m));
                for (int j = 0; j < nb && ok; ++j) {
                    Scalar lhs = p.pair(prod, B.basis(j));
                    Scalar rhs = Scalar::zero();
                    for (const auto& [pq, c] : B.delta_terms(j))
                        rhs += c * p.pair(i, pq.first) * p.pair(m, pq.second);
                    if (lhs != rhs) {
                        ok = false;
                        detail = "(" + A.label(i) + "," + A.label(m) + ";" + B.label(j) + ")";
                    }
                }
            }
        rep.add("multiplicative_first_slot", ok, detail);
    }
    // p(a, b b') = p(a_(1), b) p(a_(2), b')
    {
        bool ok = true;
        std::string detail;
        for (int j = 0; j < nb && ok; ++j)
            for (int m = 0; m < nb && ok; ++m) {
                Tensor prod = B.alg().multiply(B.basis(j), B.basis(m));
                for (int i = 0; i < na && ok; ++i) {
                    Scalar lhs = p.pair(A.basis(i), prod);
                    Scalar rhs = Scalar::zero();
                    for (const auto& [pq, c] : A.delta_terms(i))
                        rhs += c * p.pair(pq.first, j) * p.pair(pq.second, m);
                    if (lhs != rhs) {
                        ok = false;
                        detail = "(" + A.label(i) + ";" + B.label(j) + "," + B.label(m) + ")";
                    }
                }
            }
        rep.add("multiplicative_second_slot", ok, detail);
    }
    // p(S_A(a), b) = p(a, S_B(b)) as matrices
    {
        Tensor lhs(Shape{na, nb}), rhs(Shape{na, nb});
        for (int i = 0; i < na; ++i) {
            Tensor sa = A.apply_antipode(A.basis(i));
            for (int j = 0; j < nb; ++j) {
                lhs[static_cast<std::size_t>(i) * nb + j] = p.pair(sa, B.basis(j));
                rhs[static_cast<std::size_t>(i) * nb + j] =
                    p.pair(A.basis(i), B.apply_antipode(B.basis(j)));
            }
        }
        rep.add("antipode_exchange", lhs == rhs);
    }
    // star compatibilities when both algebras carry stars
    if (A.alg().star() && B.alg().star()) {
        bool ok1 = true, ok2 = true;
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) {
                Scalar lhs1 = p.pair(A.alg().star_of(A.basis(i)), B.basis(j));
                Scalar rhs1 =
                    p.pair(A.basis(i), B.alg().star_of(B.apply_antipode(B.basis(j)))).conj();
                if (lhs1 != rhs1) ok1 = false;
                Scalar lhs2 = p.pair(A.basis(i), B.alg().star_of(B.basis(j)));
                Scalar rhs2 =
                    p.pair(A.alg().star_of(A.apply_antipode(A.basis(i))), B.basis(j)).conj();
                if (lhs2 != rhs2) ok2 = false;
            }
        rep.add("star_first_slot", ok1);
        rep.add("star_second_slot", ok2);
    }
    // unitality of the four regular actions
    {
        LinearMap idB = LinearMap::identity(Shape{nb});
        LinearMap idA = LinearMap::identity(Shape{na});
        auto unit_slice = [](const LinearMap& f, const Tensor& u, bool unit_first, int other_dim) {
            // restrict an action H (x) X -> X (or X (x) H -> X) to the unit of H
            LinearMap out(Shape{other_dim}, f.cod());
            Tensor uv = u;
            for (int x = 0; x < other_dim; ++x) {
                Tensor arg = unit_first ? tensor_product(uv, Tensor::basis(Shape{other_dim}, x))
                                        : tensor_product(Tensor::basis(Shape{other_dim}, x), uv);
                Tensor img = f.apply(arg.reshaped(f.dom()));
                img.for_each_nonzero([&](std::size_t r, const Scalar& v) { out.entry(r, x) = v; });
            }
            return out;
        };
        rep.add("unital_act_A_on_B",
                unit_slice(p.act_A_on_B(), p.A().alg().unit(), true, nb) == idB);
        rep.add("unital_ract_B_by_A",
                unit_slice(p.ract_B_by_A(), p.A().alg().unit(), false, nb) == idB);
        rep.add("unital_act_B_on_A",
                unit_slice(p.act_B_on_A(), p.B().alg().unit(), true, na) == idA);
        rep.add("unital_ract_A_by_B",
                unit_slice(p.ract_A_by_B(), p.B().alg().unit(), false, na) == idA);
    }
    return rep;
}

MultiplierResult compute_canonical_multiplier(const Pairing& p) {
    MultiplierResult out;
    const int na = p.A().dim(), nb = p.B().dim();
    const std::size_t n = static_cast<std::size_t>(na) * nb;

    // unknown U[k,l]; one equation per (a = e_i, b = f_j):
    //   sum_{k,l} U[k,l] p(e_k, f_j) p(e_i, f_l) = p(e_i, f_j)
    Tensor sys(Shape{static_cast<int>(n), static_cast<int>(n)});
    Tensor rhs(Shape{static_cast<int>(n)});
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            const std::size_t row = static_cast<std::size_t>(i) * nb + j;
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    Scalar c = p.pair(k, j) * p.pair(i, l);
                    if (!c.is_zero()) sys[row * n + static_cast<std::size_t>(k) * nb + l] = c;
                }
            rhs[row] = p.pair(i, j);
        }
    SolveResult sol = solve_exact(sys, rhs);
    out.report.add("defining_system_solvable", sol.kind != SolveKind::NoSolution);
    out.report.add("defining_system_unique", sol.kind == SolveKind::Unique,
                   sol.kind == SolveKind::NonUnique
                       ? "kernel dimension " + std::to_string(sol.kernel.size())
                       : "");
    if (sol.kind != SolveKind::Unique) return out;
    out.U = sol.solution.reshaped(Shape{na, nb});

    Report ver = verify_multiplier(p, out.U);
    out.report.merge(ver);
    if (ver.ok()) out.Uinv = p.multiplier_inverse();
    return out;
}

Report verify_multiplier(const Pairing& p, const Tensor& U) {
    Report rep;
    const int na = p.A().dim(), nb = p.B().dim();
    const std::size_t nbs = static_cast<std::size_t>(nb);

    bool defining = true;
    for (int i = 0; i < na && defining; ++i)
        for (int j = 0; j < nb && defining; ++j) {
            Scalar s = Scalar::zero();
            U.for_each_nonzero([&](std::size_t f, const Scalar& v) {
                s += v * p.pair(static_cast<int>(f / nbs), j) * p.pair(i, static_cast<int>(f % nbs));
            });
            if (s != p.pair(i, j)) defining = false;
        }
    rep.add("multiplier_defining_equation", defining);

    ProductAlgebra AB({&p.A().alg(), &p.B().alg()});
    Tensor cand = p.B().antipode().apply_on_legs(U, 1);
    bool inv_ok = AB.multiply(U, cand) == AB.unit() && AB.multiply(cand, U) == AB.unit();
    rep.add("multiplier_invertible", inv_ok, "inverse candidate (id (x) S_B)(U)");
    if (defining && inv_ok) p.cache_multiplier(U, cand);
    return rep;
}

Report check_multiplier_identities(const Pairing& p) {
    Report rep;
    const FDHopf& A = p.A();
    const FDHopf& B = p.B();
    const Tensor& U = p.multiplier();
    const Tensor& Uinv = p.multiplier_inverse();

    {
        ProductAlgebra AAB({&A.alg(), &A.alg(), &B.alg()});
        Tensor lhs = A.delta().apply_on_legs(U, 0);
        Tensor rhs = AAB.multiply(AAB.embed(U, {0, 2}), AAB.embed(U, {1, 2}));
        rep.add("delta_first_leg", lhs == rhs, "(Delta_A (x) id)(U) = U13 U23");
    }
    {
        ProductAlgebra ABB({&A.alg(), &B.alg(), &B.alg()});
        Tensor lhs = B.delta().apply_on_legs(U, 1);
        Tensor rhs = ABB.multiply(ABB.embed(U, {0, 1}), ABB.embed(U, {0, 2}));
        rep.add("delta_second_leg", lhs == rhs, "(id (x) Delta_B)(U) = U12 U13");
    }
    rep.add("antipode_pair_fixed_1",
            A.antipode_inverse().apply_on_legs(B.antipode().apply_on_legs(U, 1), 0) == U,
            "(S_A^-1 (x) S_B)(U) = U");
    rep.add("antipode_pair_fixed_2",
            A.antipode().apply_on_legs(B.antipode_inverse().apply_on_legs(U, 1), 0) == U,
            "(S_A (x) S_B^-1)(U) = U");
    rep.add("inverse_second_leg", B.antipode().apply_on_legs(U, 1) == Uinv,
            "U^-1 = (id (x) S_B)(U)");
    rep.add("inverse_first_leg", A.antipode().apply_on_legs(U, 0) == Uinv,
            "U^-1 = (S_A (x) id)(U)");
    if (A.alg().star() && B.alg().star()) {
        ProductAlgebra AB({&A.alg(), &B.alg()});
        rep.add("unitary", AB.star_of(U) == Uinv, "U* = U^-1");
    }
    return rep;
}

Report adjoint_identities(const Pairing& p) {
    Report rep;
    const FDHopf& A = p.A();
    const FDHopf& B = p.B();
    const int na = A.dim(), nb = B.dim();
    ProductAlgebra AB({&A.alg(), &B.alg()});
    const Tensor& U = p.multiplier();
    const Tensor& Uinv = p.multiplier_inverse();

    auto act_BA = [&](const Tensor& b, const Tensor& a) {
        return p.act_B_on_A().apply(tensor_product(b, a));
    };
    auto ract_AB = [&](const Tensor& a, const Tensor& b) {
        return p.ract_A_by_B().apply(tensor_product(a, b));
    };
    // contract the B leg of w against p(a', .)
    auto slot = [&](const Tensor& w, int m) {
        Tensor out(Shape{na});
        w.for_each_nonzero([&](std::size_t f, const Scalar& v) {
            Scalar c = v * p.pair(m, static_cast<int>(f % nb));
            if (!c.is_zero()) out[f / nb] += c;
        });
        return out;
    };

    const LinearMap& S = A.antipode();
    const LinearMap& Sinv = A.antipode_inverse();
    const LinearMap& SB = B.antipode();
    const LinearMap& SBinv = B.antipode_inverse();

    struct Case {
        const char* tag;
        bool fail = false;
        std::string detail;
    } cases[4] = {{"p1", false, ""}, {"p2", false, ""}, {"p3", false, ""}, {"p4", false, ""}};

    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Tensor a = A.basis(i);
            Tensor b = B.basis(j);
            Tensor ab = tensor_product(a, b);
            Tensor ad = AB.multiply(AB.multiply(U, ab), Uinv);
            Tensor ad_inv = AB.multiply(AB.multiply(Uinv, ab), U);
            Tensor sb = tensor_product(a, SB.apply(b));
            Tensor tu = SBinv.apply_on_legs(AB.multiply(AB.multiply(U, sb), Uinv), 1);
            Tensor tu_inv = SBinv.apply_on_legs(AB.multiply(AB.multiply(Uinv, sb), U), 1);

            for (int m = 0; m < na; ++m) {
                Tensor lhs1 = slot(ad, m), lhs2 = slot(ad_inv, m);
                Tensor lhs3 = slot(tu, m), lhs4 = slot(tu_inv, m);
                Tensor r1a(Shape{na}), r1b(Shape{na}), r2a(Shape{na}), r2b(Shape{na});
                Tensor r3a(Shape{na}), r3b(Shape{na}), r4a(Shape{na}), r4b(Shape{na});
                for (const auto& [pq, c] : A.delta_terms(m)) {
                    Tensor a1 = A.basis(pq.first), a2 = A.basis(pq.second);
                    const FDAlgebra& Al = A.alg();
                    r1a = r1a + c * Al.multiply(Al.multiply(act_BA(b, a1), a), S.apply(a2));
                    r1b = r1b + c * Al.multiply(Al.multiply(a1, a), S.apply(ract_AB(a2, b)));
                    r2a = r2a + c * Al.multiply(Al.multiply(S.apply(a1), a), ract_AB(a2, b));
                    r2b = r2b + c * Al.multiply(Al.multiply(S.apply(act_BA(b, a1)), a), a2);
                    r3a = r3a + c * Al.multiply(Al.multiply(Sinv.apply(ract_AB(a2, b)), a), a1);
                    r3b = r3b + c * Al.multiply(Al.multiply(Sinv.apply(a2), a), act_BA(b, a1));
                    r4a = r4a + c * Al.multiply(Al.multiply(a2, a), Sinv.apply(act_BA(b, a1)));
                    r4b = r4b + c * Al.multiply(Al.multiply(ract_AB(a2, b), a), Sinv.apply(a1));
                }
                auto note = [&](int idx, const Tensor& lhs, const Tensor& ra, const Tensor& rb) {
                    if (!cases[idx].fail && (lhs != ra || ra != rb)) {
                        cases[idx].fail = true;
                        cases[idx].detail = "(" + A.label(i) + "," + A.label(m) + ";" + B.label(j) + ")";
                    }
                };
                note(0, lhs1, r1a, r1b);
                note(1, lhs2, r2a, r2b);
                note(2, lhs3, r3a, r3b);
                note(3, lhs4, r4a, r4b);
            }
        }
    for (const auto& c : cases) rep.add(c.tag, !c.fail, c.detail);
    return rep;
}

Pairing flip_pairing(const Pairing& p) {
    Tensor pt = flip(p.form(), 0, 1);
    Pairing out(p.B(), p.A(), std::move(pt), p.name() + "_flip");
    Tensor u = flip(p.multiplier(), 0, 1);
    Report ver = verify_multiplier(out, u);
    if (!ver.ok())
        throw std::logic_error("ydlab: flip pairing multiplier failed:\n" + ver.str());
    return out;
}

Pairing hat_pairing(const Pairing& p) {
    Tensor pt = flip(p.form(), 0, 1);
    Pairing out(coopposite_hopf(p.B()), opposite_hopf(p.A()), std::move(pt),
                p.name() + "_hat");
    Tensor u = flip(p.multiplier(), 0, 1);
    Report ver = verify_multiplier(out, u);
    if (!ver.ok())
        throw std::logic_error("ydlab: hat pairing multiplier failed:\n" + ver.str());
    return out;
}

Pairing tilde_pairing(const Pairing& p) {
    Tensor pt = flip(p.form(), 0, 1);
    Pairing out(coopposite_hopf(opposite_hopf(p.B())), coopposite_hopf(opposite_hopf(p.A())),
                std::move(pt), p.name() + "_tilde");
    Tensor u = flip(p.multiplier(), 0, 1);
    Report ver = verify_multiplier(out, u);
    if (!ver.ok())
        throw std::logic_error("ydlab: tilde pairing multiplier failed:\n" + ver.str());
    return out;
}

DerivedPairings derived_pairings(const Pairing& p) {
    DerivedPairings out{flip_pairing(p), hat_pairing(p), tilde_pairing(p), Report{}};
    out.report.add("flip_multiplier_verified", out.flip.has_multiplier());
    out.report.add("flip_coop_multiplier_verified", out.flip_coop.has_multiplier());
    out.report.add("flip_coop_op_multiplier_verified", out.flip_coop_op.has_multiplier());
    return out;
}

} // namespace ydlab
