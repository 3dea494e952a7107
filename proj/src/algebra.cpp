#include "ydlab/algebra.hpp"

#include <sstream>

namespace ydlab {

FDAlgebra::FDAlgebra(int dim, std::vector<std::string> labels, Tensor mult, Tensor unit,
                     std::string name, std::optional<StarStructure> star)
    : dim_(dim), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)),
      name_(std::move(name)), star_(std::move(star)) {
    if (dim_ <= 0) throw std::invalid_argument("ydlab: algebra dimension must be positive");
    if (static_cast<int>(labels_.size()) != dim_)
        throw std::invalid_argument("ydlab: label count mismatch");
    if (mult_.shape() != Shape{dim_, dim_, dim_})
        throw std::invalid_argument("ydlab: mult tensor must be [dim,dim,dim]");
    if (unit_.shape() != Shape{dim_})
        throw std::invalid_argument("ydlab: unit must be [dim]");

    const std::size_t d = static_cast<std::size_t>(dim_);
    pair_products_.assign(d * d, {});
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Scalar& c = mult_[(k * d + i) * d + j];
                if (!c.is_zero()) pair_products_[i * d + j].emplace_back(static_cast<int>(k), c);
            }
}

Tensor FDAlgebra::multiply(const Tensor& x, const Tensor& y) const {
    if (x.shape() != Shape{dim_} || y.shape() != Shape{dim_})
        throw std::invalid_argument("ydlab: element shape mismatch");
    Tensor out(Shape{dim_});
    x.for_each_nonzero([&](std::size_t i, const Scalar& xi) {
        y.for_each_nonzero([&](std::size_t j, const Scalar& yj) {
            const Scalar c = xi * yj;
            for (const auto& [k, m] : pair_products(i, j)) out[k] += m * c;
        });
    });
    return out;
}

Tensor FDAlgebra::star_of(const Tensor& x) const {
    if (!star_) throw std::logic_error("ydlab: algebra has no star structure");
    return star_->apply(x);
}

LinearMap FDAlgebra::mult_map() const {
    LinearMap f(Shape{dim_, dim_}, Shape{dim_});
    const std::size_t d = static_cast<std::size_t>(dim_);
    mult_.for_each_nonzero([&](std::size_t flat, const Scalar& v) {
        const std::size_t k = flat / (d * d);
        f.entry(k, flat % (d * d)) = v;
    });
    return f;
}

LinearMap FDAlgebra::left_mult_operator(const Tensor& w) const {
    LinearMap f(Shape{dim_}, Shape{dim_});
    w.for_each_nonzero([&](std::size_t i, const Scalar& wi) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(dim_); ++j)
            for (const auto& [k, m] : pair_products(i, j)) f.entry(k, j) += m * wi;
    });
    return f;
}

LinearMap FDAlgebra::right_mult_operator(const Tensor& w) const {
    LinearMap f(Shape{dim_}, Shape{dim_});
    w.for_each_nonzero([&](std::size_t j, const Scalar& wj) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(dim_); ++i)
            for (const auto& [k, m] : pair_products(i, j)) f.entry(k, i) += m * wj;
    });
    return f;
}

bool FDAlgebra::is_commutative() const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (mult_[(k * d + i) * d + j] != mult_[(k * d + j) * d + i]) return false;
    return true;
}

std::optional<Tensor> FDAlgebra::element_inverse(const Tensor& w) const {
    SolveResult r = solve_exact(left_mult_operator(w).matrix(), unit_);
    if (r.kind != SolveKind::Unique) return std::nullopt;
    if (multiply(r.solution, w) != unit_) return std::nullopt;
    return r.solution;
}

FDAlgebra FDAlgebra::opposite(std::optional<LinearMap> star_twist) const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    Tensor m(Shape{dim_, dim_, dim_});
    mult_.for_each_nonzero([&](std::size_t flat, const Scalar& v) {
        const std::size_t k = flat / (d * d), i = (flat / d) % d, j = flat % d;
        m[(k * d + j) * d + i] = v;
    });
    std::optional<StarStructure> s;
    if (star_) {
        LinearMap sm = star_->matrix;
        if (star_twist) sm = star_twist->compose(sm);
        s = StarStructure{sm};
    }
    return FDAlgebra(dim_, labels_, std::move(m), unit_, name_ + "^op", std::move(s));
}

Report check_algebra(const FDAlgebra& a) {
    Report rep;
    const int d = a.dim();
    LinearMap id = LinearMap::identity(Shape{d});
    {
        bool assoc = true;
        std::string detail;
        for (int i = 0; i < d && assoc; ++i)
            for (int j = 0; j < d && assoc; ++j) {
                Tensor ij = a.multiply(a.basis(i), a.basis(j));
                for (int k = 0; k < d; ++k) {
                    Tensor lhs = a.multiply(ij, a.basis(k));
                    Tensor rhs = a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k)));
                    if (lhs != rhs) {
                        assoc = false;
                        detail = "(" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
                        break;
                    }
                }
            }
        rep.add("associativity", assoc, detail);
    }
    bool unit_ok = a.left_mult_operator(a.unit()) == id && a.right_mult_operator(a.unit()) == id;
    rep.add("two_sided_unit", unit_ok);
    rep.add("non_degenerate", unit_ok, "automatic for unital algebras");
    if (a.star()) {
        const LinearMap& sm = a.star()->matrix;
        rep.add("star_involutive", sm.compose(sm.conj()) == id);
        rep.add("star_unit", a.star_of(a.unit()) == a.unit());
        bool anti = true;
        std::string detail;
        for (int i = 0; i < d && anti; ++i)
            for (int j = 0; j < d && anti; ++j) {
                Tensor lhs = a.star_of(a.multiply(a.basis(i), a.basis(j)));
                Tensor rhs = a.multiply(a.star_of(a.basis(j)), a.star_of(a.basis(i)));
                if (lhs != rhs) {
                    anti = false;
                    detail = "(" + a.label(i) + "," + a.label(j) + ")";
                }
            }
        rep.add("star_anti_multiplicative", anti, detail);
    }
    return rep;
}

ProductAlgebra::ProductAlgebra(std::vector<const FDAlgebra*> factors) : factors_(std::move(factors)) {
    for (const auto* f : factors_) {
        shape_.push_back(f->dim());
        total_ *= static_cast<std::size_t>(f->dim());
    }
}

Tensor ProductAlgebra::unit() const {
    Tensor u = factors_[0]->unit();
    for (std::size_t k = 1; k < factors_.size(); ++k) u = tensor_product(u, factors_[k]->unit());
    return u;
}

Tensor ProductAlgebra::multiply(const Tensor& x, const Tensor& y) const {
    if (x.shape() != shape_ || y.shape() != shape_)
        throw std::invalid_argument("ydlab: product algebra element shape mismatch");
    const int r = arity();
    auto st = shape_strides(shape_);
    Tensor out(shape_);
    std::vector<int> xi(r), yi(r);
    x.for_each_nonzero([&](std::size_t fx, const Scalar& vx) {
        std::size_t rem = fx;
        for (int k = 0; k < r; ++k) {
            xi[k] = static_cast<int>(rem / st[k]);
            rem %= st[k];
        }
        y.for_each_nonzero([&](std::size_t fy, const Scalar& vy) {
            std::size_t rem2 = fy;
            for (int k = 0; k < r; ++k) {
                yi[k] = static_cast<int>(rem2 / st[k]);
                rem2 %= st[k];
            }
            // expand componentwise products, factor by factor
            std::vector<std::pair<std::size_t, Scalar>> acc{{0, vx * vy}};
            for (int k = 0; k < r && !acc.empty(); ++k) {
                const auto& terms = factors_[k]->pair_products(xi[k], yi[k]);
                std::vector<std::pair<std::size_t, Scalar>> next;
                next.reserve(acc.size() * terms.size());
                for (const auto& [off, c] : acc)
                    for (const auto& [kk, mc] : terms)
                        next.emplace_back(off + st[k] * static_cast<std::size_t>(kk), c * mc);
                acc = std::move(next);
            }
            for (const auto& [off, c] : acc) out[off] += c;
        });
    });
    return out;
}

Tensor ProductAlgebra::embed(const Tensor& t, const std::vector<int>& factor_slots) const {
    std::vector<Tensor> fillers;
    std::vector<bool> used(factors_.size(), false);
    for (int s : factor_slots) used[s] = true;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (!used[k]) fillers.push_back(factors_[k]->unit());
    return leg_embed(t, factor_slots, fillers);
}

Tensor ProductAlgebra::star_of(const Tensor& x) const {
    Tensor y = x.conj();
    for (int k = 0; k < arity(); ++k) {
        if (!factors_[k]->star()) throw std::logic_error("ydlab: factor has no star structure");
        y = factors_[k]->star()->matrix.apply_on_legs(y, k);
    }
    return y;
}

std::optional<Tensor> ProductAlgebra::element_inverse(const Tensor& w) const {
    // left-multiplication operator as a matrix, built column by column
    LinearMap L = LinearMap::from_columns(shape_, shape_, [&](std::size_t j) {
        return multiply(w, Tensor::basis(shape_, j));
    });
    SolveResult r = solve_exact(L.matrix().reshaped(Shape{static_cast<int>(total_), static_cast<int>(total_)}),
                                unit().reshaped(Shape{static_cast<int>(total_)}));
    if (r.kind != SolveKind::Unique) return std::nullopt;
    Tensor inv = r.solution.reshaped(shape_);
    if (multiply(inv, w) != unit()) return std::nullopt;
    return inv;
}

FDAlgebra ProductAlgebra::materialize(std::string name) const {
    const int d = static_cast<int>(total_);
    std::vector<std::string> labels(total_);
    auto st = shape_strides(shape_);
    for (std::size_t f = 0; f < total_; ++f) {
        std::string l;
        std::size_t rem = f;
        for (int k = 0; k < arity(); ++k) {
            if (k) l += "|";
            l += factors_[k]->label(rem / st[k]);
            rem %= st[k];
        }
        labels[f] = l;
    }
    Tensor m(Shape{d, d, d});
    for (std::size_t i = 0; i < total_; ++i)
        for (std::size_t j = 0; j < total_; ++j) {
            Tensor p = multiply(Tensor::basis(shape_, i), Tensor::basis(shape_, j));
            p.for_each_nonzero([&](std::size_t k, const Scalar& v) {
                m[(k * total_ + i) * total_ + j] = v;
            });
        }
    std::optional<StarStructure> star;
    bool all_star = true;
    for (const auto* f : factors_)
        if (!f->star()) all_star = false;
    if (all_star) {
        LinearMap sm = factors_[0]->star()->matrix;
        for (int k = 1; k < arity(); ++k) sm = sm.tensor_with(factors_[k]->star()->matrix);
        star = StarStructure{sm.with_shapes(Shape{d}, Shape{d})};
    }
    return FDAlgebra(d, std::move(labels), std::move(m),
                     unit().reshaped(Shape{d}), std::move(name), std::move(star));
}

FDHopf::FDHopf(FDAlgebra alg, LinearMap delta, LinearMap counit,
               std::optional<LinearMap> antipode, std::string name)
    : alg_(std::move(alg)), delta_(std::move(delta)), counit_(std::move(counit)),
      antipode_(std::move(antipode)), name_(std::move(name)) {
    const int d = alg_.dim();
    if (delta_.dom() != Shape{d} || delta_.cod() != Shape{d, d})
        throw std::invalid_argument("ydlab: delta must map [d] -> [d,d]");
    if (counit_.dom() != Shape{d} || counit_.cod() != Shape{})
        throw std::invalid_argument("ydlab: counit must map [d] -> scalar");
    if (antipode_ && (antipode_->dom() != Shape{d} || antipode_->cod() != Shape{d}))
        throw std::invalid_argument("ydlab: antipode must map [d] -> [d]");
}

const LinearMap& FDHopf::antipode() const {
    if (!antipode_) throw std::logic_error("ydlab: Hopf algebra '" + name_ + "' has no antipode");
    return *antipode_;
}

const LinearMap& FDHopf::antipode_inverse() const {
    if (!antipode_inv_) {
        auto inv = invert_map(antipode());
        if (!inv) throw std::logic_error("ydlab: antipode of '" + name_ + "' is singular");
        antipode_inv_ = *inv;
    }
    return *antipode_inv_;
}

std::vector<std::pair<std::pair<int, int>, Scalar>> FDHopf::delta_terms(std::size_t i) const {
    std::vector<std::pair<std::pair<int, int>, Scalar>> out;
    const std::size_t d = static_cast<std::size_t>(dim());
    for (std::size_t row = 0; row < d * d; ++row) {
        const Scalar& v = delta_.entry(row, i);
        if (!v.is_zero())
            out.push_back({{static_cast<int>(row / d), static_cast<int>(row % d)}, v});
    }
    return out;
}

std::string FDHopf::str() const {
    std::ostringstream os;
    os << "hopf " << name_ << "\ndim " << dim() << "\nlabels";
    for (const auto& l : alg_.labels()) os << ' ' << l;
    os << "\nmult\n" << alg_.mult_tensor().str();
    os << "unit\n" << alg_.unit().str();
    os << "delta\n" << delta_.matrix().str();
    os << "counit\n" << counit_.matrix().str();
    if (antipode_) os << "antipode\n" << antipode_->matrix().str();
    if (alg_.star()) os << "star\n" << alg_.star()->matrix.matrix().str();
    os << "end\n";
    return os.str();
}

Report check_hopf_axioms(const FDHopf& h) {
    Report rep = check_algebra(h.alg());
    const int d = h.dim();
    const FDAlgebra& A = h.alg();
    ProductAlgebra AA({&A, &A});

    // Delta is a unital algebra homomorphism into the tensor-square algebra.
    rep.add("delta_unital", h.delta().apply(A.unit()) == AA.unit());
    {
        bool hom = true;
        std::string detail;
        for (int i = 0; i < d && hom; ++i)
            for (int j = 0; j < d && hom; ++j) {
                Tensor lhs = h.delta().apply(A.multiply(A.basis(i), A.basis(j)));
                Tensor rhs = AA.multiply(h.delta().apply(A.basis(i)), h.delta().apply(A.basis(j)));
                if (lhs != rhs) {
                    hom = false;
                    detail = "(" + A.label(i) + "," + A.label(j) + ")";
                }
            }
        rep.add("delta_homomorphism", hom, detail);
    }
    // column-wise checks keep large dimensions affordable
    {
        bool coassoc = true, cl = true, cr = true;
        for (int i = 0; i < d; ++i) {
            Tensor dc = h.delta().column(i);
            if (h.delta().apply_on_legs(dc, 0) != h.delta().apply_on_legs(dc, 1)) coassoc = false;
            if (h.counit().apply_on_legs(dc, 0) != A.basis(i)) cl = false;
            if (h.counit().apply_on_legs(dc, 1) != A.basis(i)) cr = false;
        }
        rep.add("coassociativity", coassoc);
        rep.add("counit_left", cl);
        rep.add("counit_right", cr);
    }
    rep.add("counit_unital", h.counit_of(A.unit()).is_one());
    {
        bool hom = true;
        for (int i = 0; i < d && hom; ++i)
            for (int j = 0; j < d && hom; ++j)
                if (h.counit_of(A.multiply(A.basis(i), A.basis(j))) !=
                    h.counit_of(A.basis(i)) * h.counit_of(A.basis(j)))
                    hom = false;
        rep.add("counit_homomorphism", hom);
    }

    if (h.has_antipode()) {
        const LinearMap& S = h.antipode();
        LinearMap m = A.mult_map();
        bool law_l = true, law_r = true, eps_s = true, delta_s = true;
        for (int i = 0; i < d; ++i) {
            Tensor dc = h.delta().column(i);
            Tensor target = h.counit().entry(0, i) * A.unit();
            if (m.apply(S.apply_on_legs(dc, 0)) != target) law_l = false;
            if (m.apply(S.apply_on_legs(dc, 1)) != target) law_r = false;
            Tensor sc = S.column(i);
            if (h.counit().apply(sc)[0] != h.counit().entry(0, i)) eps_s = false;
            Tensor rhs = S.apply_on_legs(S.apply_on_legs(flip(dc, 0, 1), 0), 1);
            if (h.delta().apply(sc) != rhs) delta_s = false;
        }
        rep.add("antipode_left", law_l);
        rep.add("antipode_right", law_r);
        rep.add("antipode_bijective", invert_map(S).has_value());
        {
            bool anti = true;
            std::string detail;
            for (int i = 0; i < d && anti; ++i)
                for (int j = 0; j < d && anti; ++j) {
                    Tensor lhs = S.apply(A.multiply(A.basis(i), A.basis(j)));
                    Tensor rhs = A.multiply(S.apply(A.basis(j)), S.apply(A.basis(i)));
                    if (lhs != rhs) {
                        anti = false;
                        detail = "(" + A.label(i) + "," + A.label(j) + ")";
                    }
                }
            rep.add("antipode_anti_homomorphism", anti, detail);
        }
        // classical consequences, checked rather than assumed
        rep.add("counit_antipode", eps_s);
        rep.add("delta_antipode", delta_s);
    } else {
        rep.add("antipode_present", false, "no antipode available");
    }

    if (A.star()) {
        const LinearMap& sm = A.star()->matrix;
        bool delta_star = true, counit_star = true, s_star = true;
        for (int i = 0; i < d; ++i) {
            Tensor xs = A.star_of(A.basis(i));
            if (h.delta().apply(xs) != sm.tensor_with(sm).apply(h.delta().apply(A.basis(i)).conj()))
                delta_star = false;
            if (h.counit_of(xs) != h.counit_of(A.basis(i)).conj()) counit_star = false;
            if (h.has_antipode()) {
                Tensor y = A.star_of(h.apply_antipode(A.star_of(h.apply_antipode(A.basis(i)))));
                if (y != A.basis(i)) s_star = false;
            }
        }
        rep.add("star_delta_compatible", delta_star);
        rep.add("star_counit_compatible", counit_star);
        if (h.has_antipode()) rep.add("star_antipode_involution", s_star);
    }
    return rep;
}

GaloisMaps check_galois_maps(const FDHopf& h) {
    GaloisMaps out;
    const int d = h.dim();
    const FDAlgebra& A = h.alg();
    ProductAlgebra AA({&A, &A});
    out.T1 = LinearMap::from_columns(Shape{d, d}, Shape{d, d}, [&](std::size_t col) {
        const std::size_t i = col / d, j = col % d;
        return AA.multiply(h.delta().apply(A.basis(i)), tensor_product(A.unit(), A.basis(j)));
    });
    out.T2 = LinearMap::from_columns(Shape{d, d}, Shape{d, d}, [&](std::size_t col) {
        const std::size_t i = col / d, j = col % d;
        return AA.multiply(tensor_product(A.basis(i), A.unit()), h.delta().apply(A.basis(j)));
    });
    const int full = d * d;
    int r1 = rank_exact(out.T1.matrix());
    int r2 = rank_exact(out.T2.matrix());
    out.report.add("t1_bijective", r1 == full, "rank " + std::to_string(r1) + "/" + std::to_string(full));
    out.report.add("t2_bijective", r2 == full, "rank " + std::to_string(r2) + "/" + std::to_string(full));
    if (r1 == full) out.R1 = invert_map(out.T1);
    if (r2 == full) out.R2 = invert_map(out.T2);
    return out;
}

Report check_galois_by_formula(const FDHopf& h) {
    Report rep;
    const int d = h.dim();
    const std::size_t dd = static_cast<std::size_t>(d) * d;
    const FDAlgebra& A = h.alg();
    ProductAlgebra AA({&A, &A});

    using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
    auto sparsify = [](const Tensor& t) {
        SparseVec s;
        t.for_each_nonzero([&](std::size_t f, const Scalar& v) { s.emplace_back(f, v); });
        return s;
    };
    // columns of the two Galois maps and of their closed inverses
    std::vector<SparseVec> t1(dd), t2(dd), r1(dd), r2(dd);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::size_t col = static_cast<std::size_t>(i) * d + j;
            t1[col] = sparsify(AA.multiply(h.delta().apply(A.basis(i)),
                                           tensor_product(A.unit(), A.basis(j))));
            t2[col] = sparsify(AA.multiply(tensor_product(A.basis(i), A.unit()),
                                           h.delta().apply(A.basis(j))));
            Tensor v1(Shape{d, d}), v2(Shape{d, d});
            for (const auto& [pq, c] : h.delta_terms(i))
                v1 = v1 + c * tensor_product(A.basis(pq.first),
                                             A.multiply(h.apply_antipode(A.basis(pq.second)),
                                                        A.basis(j)));
            for (const auto& [pq, c] : h.delta_terms(j))
                v2 = v2 + c * tensor_product(
                                  A.multiply(A.basis(i),
                                             h.antipode_inverse().apply(A.basis(pq.first))),
                                  A.basis(pq.second));
            r1[col] = sparsify(v1);
            r2[col] = sparsify(v2);
        }

    // round trips both ways, accumulated in a reusable scratch vector
    std::vector<Scalar> scratch(dd, Scalar::zero());
    std::vector<std::size_t> touched;
    auto is_basis = [&](const std::vector<SparseVec>& cols, const SparseVec& v, std::size_t target) {
        for (const auto& [f, c] : v)
            for (const auto& [g, m] : cols[f]) {
                if (scratch[g].is_zero()) touched.push_back(g);
                scratch[g] += c * m;
            }
        bool ok = true;
        for (std::size_t g : touched)
            if (g == target ? !scratch[g].is_one() : !scratch[g].is_zero()) ok = false;
        if (ok) {
            bool seen = false;
            for (std::size_t g : touched) seen = seen || g == target;
            ok = seen;
        }
        for (std::size_t g : touched) scratch[g] = Scalar::zero();
        touched.clear();
        return ok;
    };
    bool ok1 = true, ok2 = true;
    for (std::size_t col = 0; col < dd; ++col) {
        if (ok1 && (!is_basis(r1, t1[col], col) || !is_basis(t1, r1[col], col))) ok1 = false;
        if (ok2 && (!is_basis(r2, t2[col], col) || !is_basis(t2, r2[col], col))) ok2 = false;
    }
    rep.add("t1_bijective_by_formula", ok1, "R1 T1 = id = T1 R1");
    rep.add("t2_bijective_by_formula", ok2, "R2 T2 = id = T2 R2");
    return rep;
}

FDHopf opposite_hopf(const FDHopf& h) {
    std::optional<LinearMap> twist;
    if (h.alg().star()) twist = h.antipode_inverse().compose(h.antipode_inverse());
    FDAlgebra op = h.alg().opposite(twist);
    return FDHopf(std::move(op), h.delta(), h.counit(), h.antipode_inverse(), h.name() + "^op");
}

FDHopf coopposite_hopf(const FDHopf& h) {
    const int d = h.dim();
    LinearMap flip12 = LinearMap::leg_permutation(Shape{d, d}, {1, 0});
    return FDHopf(h.alg(), flip12.compose(h.delta()), h.counit(), h.antipode_inverse(),
                  h.name() + "^co");
}

FDHopf dual_hopf(const FDHopf& h) {
    const int d = h.dim();
    const std::size_t ds = static_cast<std::size_t>(d);
    std::vector<std::string> labels;
    for (const auto& l : h.alg().labels()) labels.push_back(l + "^");

    Tensor mult(Shape{d, d, d});
    h.delta().matrix().for_each_nonzero([&](std::size_t flat, const Scalar& v) {
        const std::size_t row = flat / ds, k = flat % ds;   // row = (i,j) of Delta
        mult[(k * ds + row / ds) * ds + row % ds] = v;      // dual: m[k][i][j] = Delta[(i,j)][k]
    });
    Tensor unit(Shape{d});
    for (int k = 0; k < d; ++k) unit[k] = h.counit().entry(0, k);

    LinearMap delta(Shape{d}, Shape{d, d});
    h.alg().mult_tensor().for_each_nonzero([&](std::size_t flat, const Scalar& v) {
        const std::size_t k = flat / (ds * ds);
        delta.entry(flat % (ds * ds), k) = v;
    });
    LinearMap counit(Shape{d}, Shape{});
    for (int k = 0; k < d; ++k) counit.entry(0, k) = h.alg().unit()[k];
    LinearMap antipode = h.antipode().transpose();

    std::optional<StarStructure> star;
    if (h.alg().star()) {
        // w^*(a) = conj(w(S(a)^*)) on the dual basis
        LinearMap inner = h.alg().star()->matrix.compose(h.antipode().conj());
        star = StarStructure{inner.conj().transpose()};
    }
    FDAlgebra alg(d, std::move(labels), std::move(mult), std::move(unit),
                  h.name() + "^dual", std::move(star));
    return FDHopf(std::move(alg), std::move(delta), std::move(counit), std::move(antipode),
                  h.name() + "^dual");
}

std::optional<LinearMap> solve_antipode(const FDAlgebra& alg, const LinearMap& delta,
                                        const LinearMap& counit) {
    const std::size_t d = static_cast<std::size_t>(alg.dim());
    Tensor sys(Shape{static_cast<int>(d * d), static_cast<int>(d * d)});
    Tensor rhs(Shape{static_cast<int>(d * d)});
    // rows (i,k): sum_{p,q} Delta[(p,q)][i] * m[k][r][q] * S[r][p] = eps_i * u_k
    delta.matrix().for_each_nonzero([&](std::size_t flat, const Scalar& dv) {
        const std::size_t row = flat / d, i = flat % d;
        const std::size_t p = row / d, q = row % d;
        for (std::size_t r = 0; r < d; ++r)
            for (const auto& [k, mv] : alg.pair_products(r, q))
                sys[(i * d + static_cast<std::size_t>(k)) * d * d + (r * d + p)] += dv * mv;
    });
    for (std::size_t i = 0; i < d; ++i) {
        const Scalar e = counit.entry(0, i);
        if (e.is_zero()) continue;
        alg.unit().for_each_nonzero([&](std::size_t k, const Scalar& u) { rhs[i * d + k] = e * u; });
    }
    SolveResult res = solve_exact(sys, rhs);
    if (res.kind != SolveKind::Unique) return std::nullopt;
    return LinearMap(Shape{alg.dim()}, Shape{alg.dim()},
                     res.solution.reshaped(Shape{alg.dim(), alg.dim()}));
}

Report check_hopf_isomorphism(const LinearMap& f, const FDHopf& h, const FDHopf& k) {
    Report rep;
    rep.add("dimensions", h.dim() == k.dim());
    if (h.dim() != k.dim()) return rep;
    rep.add("bijective", invert_map(f).has_value());
    rep.add("unit", f.apply(h.alg().unit()) == k.alg().unit());
    bool hom = true;
    std::string detail;
    for (int i = 0; i < h.dim() && hom; ++i)
        for (int j = 0; j < h.dim() && hom; ++j) {
            Tensor lhs = f.apply(h.alg().multiply(h.basis(i), h.basis(j)));
            Tensor rhs = k.alg().multiply(f.apply(h.basis(i)), f.apply(h.basis(j)));
            if (lhs != rhs) {
                hom = false;
                detail = "(" + h.label(i) + "," + h.label(j) + ")";
            }
        }
    rep.add("algebra_homomorphism", hom, detail);
    rep.add("delta_intertwined", f.tensor_with(f).compose(h.delta()) == k.delta().compose(f));
    rep.add("counit_intertwined", k.counit().compose(f) == h.counit());
    if (h.has_antipode() && k.has_antipode())
        rep.add("antipode_intertwined", f.compose(h.antipode()) == k.antipode().compose(f));
    if (h.alg().star() && k.alg().star()) {
        bool star_ok = true;
        for (int i = 0; i < h.dim(); ++i)
            if (f.apply(h.alg().star_of(h.basis(i))) != k.alg().star_of(f.apply(h.basis(i))))
                star_ok = false;
        rep.add("star_intertwined", star_ok);
    }
    return rep;
}

Report check_anti_isomorphism(const LinearMap& f, const FDAlgebra& a, const FDAlgebra& b,
                              bool check_star) {
    Report rep;
    rep.add("bijective", invert_map(f).has_value());
    rep.add("unit", f.apply(a.unit()) == b.unit());
    bool anti = true;
    std::string detail;
    for (int i = 0; i < a.dim() && anti; ++i)
        for (int j = 0; j < a.dim() && anti; ++j) {
            Tensor lhs = f.apply(a.multiply(a.basis(i), a.basis(j)));
            Tensor rhs = b.multiply(f.apply(a.basis(j)), f.apply(a.basis(i)));
            if (lhs != rhs) {
                anti = false;
                detail = "(" + a.label(i) + "," + a.label(j) + ")";
            }
        }
    rep.add("anti_homomorphism", anti, detail);
    if (check_star && a.star() && b.star()) {
        bool star_ok = true;
        for (int i = 0; i < a.dim(); ++i)
            if (f.apply(a.star_of(a.basis(i))) != b.star_of(f.apply(a.basis(i)))) star_ok = false;
        rep.add("star_preserved", star_ok);
    }
    return rep;
}

} // namespace ydlab
