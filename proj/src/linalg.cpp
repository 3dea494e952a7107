#include "ydlab/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ydlab {

using boost::multiprecision::cpp_int;
using boost::multiprecision::denominator;
using boost::multiprecision::lcm;

LinearMap LinearMap::identity(Shape s) {
    LinearMap f(s, s);
    const std::size_t n = f.dom_total();
    for (std::size_t k = 0; k < n; ++k) f.entry(k, k) = Scalar::one();
    return f;
}

LinearMap LinearMap::from_columns(Shape dom, Shape cod,
                                  const std::function<Tensor(std::size_t)>& column) {
    LinearMap f(std::move(dom), std::move(cod));
    const std::size_t n = f.dom_total();
    for (std::size_t j = 0; j < n; ++j) {
        Tensor col = column(j);
        if (col.total() != f.cod_total())
            throw std::invalid_argument("ydlab: column size mismatch");
        col.for_each_nonzero([&](std::size_t r, const Scalar& v) { f.entry(r, j) = v; });
    }
    return f;
}

LinearMap LinearMap::leg_permutation(const Shape& dom, const std::vector<int>& perm) {
    Shape cod(dom.size());
    for (std::size_t k = 0; k < dom.size(); ++k) cod[k] = dom[perm[k]];
    auto src_st = shape_strides(dom);
    auto dst_st = shape_strides(cod);
    LinearMap f(dom, cod);
    const int r = static_cast<int>(dom.size());
    std::vector<int> idx(r);
    for (std::size_t s = 0; s < f.dom_total(); ++s) {
        std::size_t rem = s, d = 0;
        for (int k = 0; k < r; ++k) {
            idx[k] = static_cast<int>(rem / src_st[k]);
            rem %= src_st[k];
        }
        for (int k = 0; k < r; ++k) d += dst_st[k] * static_cast<std::size_t>(idx[perm[k]]);
        f.entry(d, s) = Scalar::one();
    }
    return f;
}

const std::vector<std::vector<std::pair<int, Scalar>>>& LinearMap::sparse_columns() const {
    if (!cols_) {
        auto cols = std::make_shared<std::vector<std::vector<std::pair<int, Scalar>>>>(dom_total());
        const std::size_t nd = dom_total();
        mat_.for_each_nonzero([&](std::size_t f, const Scalar& v) {
            (*cols)[f % nd].emplace_back(static_cast<int>(f / nd), v);
        });
        cols_ = std::move(cols);
    }
    return *cols_;
}

Tensor LinearMap::apply(const Tensor& v) const {
    if (v.total() != dom_total()) throw std::invalid_argument("ydlab: apply size mismatch");
    Tensor out(cod_);
    const auto& cols = sparse_columns();
    v.for_each_nonzero([&](std::size_t c, const Scalar& vc) {
        for (const auto& [r, m] : cols[c]) out[r] += m * vc;
    });
    return out;
}

Tensor LinearMap::column(std::size_t j) const {
    Tensor out(cod_);
    for (const auto& [r, m] : sparse_columns()[j]) out[r] = m;
    return out;
}

Tensor LinearMap::apply_on_legs(const Tensor& t, int first) const {
    const int k = static_cast<int>(dom_.size());
    if (first < 0 || first + k > t.rank())
        throw std::out_of_range("ydlab: apply_on_legs range");
    for (int j = 0; j < k; ++j)
        if (t.shape()[first + j] != dom_[j])
            throw std::invalid_argument("ydlab: apply_on_legs shape mismatch");

    std::size_t post = 1;
    for (int j = first + k; j < t.rank(); ++j) post *= static_cast<std::size_t>(t.shape()[j]);
    const std::size_t din = dom_total(), dout = cod_total();

    Shape ns(t.shape().begin(), t.shape().begin() + first);
    ns.insert(ns.end(), cod_.begin(), cod_.end());
    ns.insert(ns.end(), t.shape().begin() + first + k, t.shape().end());
    Tensor out(std::move(ns));

    const auto& cols = sparse_columns();
    t.for_each_nonzero([&](std::size_t f, const Scalar& v) {
        const std::size_t p = f % post;
        const std::size_t d = (f / post) % din;
        const std::size_t a = f / (post * din);
        for (const auto& [r, m] : cols[d]) out[(a * dout + r) * post + p] += m * v;
    });
    return out;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (g.cod_total() != dom_total()) throw std::invalid_argument("ydlab: compose shape mismatch");
    LinearMap out(g.dom_, cod_);
    const std::size_t mid = dom_total(), nd = g.dom_total();
    for (std::size_t r = 0; r < cod_total(); ++r)
        for (std::size_t k = 0; k < mid; ++k) {
            const Scalar& f = mat_[r * mid + k];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < nd; ++c) {
                const Scalar& gv = g.mat_[k * nd + c];
                if (!gv.is_zero()) out.entry(r, c) += f * gv;
            }
        }
    return out;
}

LinearMap LinearMap::tensor_with(const LinearMap& g) const {
    Shape dom = dom_, cod = cod_;
    dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
    cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
    LinearMap out(std::move(dom), std::move(cod));
    const std::size_t gd = g.dom_total(), gc = g.cod_total(), nd = dom_total();
    mat_.for_each_nonzero([&](std::size_t fk, const Scalar& fv) {
        const std::size_t fr = fk / nd, fc = fk % nd;
        g.mat_.for_each_nonzero([&](std::size_t gk, const Scalar& gv) {
            const std::size_t gr = gk / gd, gcn = gk % gd;
            out.entry(fr * gc + gr, fc * gd + gcn) = fv * gv;
        });
    });
    return out;
}

LinearMap LinearMap::transpose() const {
    LinearMap out(cod_, dom_);
    const std::size_t nd = dom_total();
    mat_.for_each_nonzero([&](std::size_t k, const Scalar& v) {
        out.entry(k % nd, k / nd) = v;
    });
    return out;
}

LinearMap LinearMap::conj() const { return LinearMap(dom_, cod_, mat_.conj()); }

namespace {

// Fraction-free elimination state over rows of Scalars.
struct Elim {
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivot_cols;     // column of the pivot in row k
    std::size_t ncols_a = 0;         // leading columns belong to A, rest to rhs
    int rank = 0;

    void clear_denominators(std::vector<Scalar>& row) {
        cpp_int l = 1;
        for (const auto& v : row) {
            l = lcm(l, denominator(v.re()));
            l = lcm(l, denominator(v.im()));
        }
        if (l == 1) return;
        Scalar f(Rational(l), Rational(0));
        for (auto& v : row) v = f * v;
    }

    void run() {
        const std::size_t m = rows.size();
        const std::size_t w = m ? rows[0].size() : 0;
        for (auto& r : rows) clear_denominators(r);
        Scalar prev = Scalar::one();
        std::size_t r = 0;
        for (std::size_t c = 0; c < ncols_a && r < m; ++c) {
            std::size_t p = r;
            while (p < m && rows[p][c].is_zero()) ++p;
            if (p == m) continue;
            std::swap(rows[r], rows[p]);
            for (std::size_t i = r + 1; i < m; ++i) {
                if (rows[i][c].is_zero() && prev.is_one()) continue;
                for (std::size_t j = c + 1; j < w; ++j)
                    rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) / prev;
                rows[i][c] = Scalar::zero();
            }
            prev = rows[r][c];
            pivot_cols.push_back(static_cast<int>(c));
            ++r;
        }
        rank = static_cast<int>(r);
    }

    bool consistent_column(std::size_t rhs_col) const {
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (!rows[i][ncols_a + rhs_col].is_zero()) return false;
        return true;
    }

    // Back substitution with free variables fixed to zero.
    std::vector<Scalar> solve_column(std::size_t rhs_col) const {
        std::vector<Scalar> x(ncols_a, Scalar::zero());
        for (int k = rank - 1; k >= 0; --k) {
            const auto& row = rows[k];
            Scalar s = row[ncols_a + rhs_col];
            for (std::size_t j = pivot_cols[k] + 1; j < ncols_a; ++j)
                if (!row[j].is_zero() && !x[j].is_zero()) s -= row[j] * x[j];
            x[pivot_cols[k]] = s / row[pivot_cols[k]];
        }
        return x;
    }

    std::vector<Scalar> kernel_vector(std::size_t free_col) const {
        std::vector<Scalar> x(ncols_a, Scalar::zero());
        x[free_col] = Scalar::one();
        for (int k = rank - 1; k >= 0; --k) {
            const auto& row = rows[k];
            Scalar s = Scalar::zero();
            for (std::size_t j = pivot_cols[k] + 1; j < ncols_a; ++j)
                if (!row[j].is_zero() && !x[j].is_zero()) s -= row[j] * x[j];
            x[pivot_cols[k]] = s / row[pivot_cols[k]];
        }
        return x;
    }
};

} // namespace

SolveResult solve_exact(const Tensor& A, const Tensor& b) {
    if (A.rank() != 2) throw std::invalid_argument("ydlab: solve expects a matrix");
    const std::size_t m = static_cast<std::size_t>(A.shape()[0]);
    const std::size_t n = static_cast<std::size_t>(A.shape()[1]);
    std::size_t k = 1;
    if (b.rank() == 2) {
        if (static_cast<std::size_t>(b.shape()[0]) != m)
            throw std::invalid_argument("ydlab: rhs row count mismatch");
        k = static_cast<std::size_t>(b.shape()[1]);
    } else if (b.rank() == 1) {
        if (static_cast<std::size_t>(b.shape()[0]) != m)
            throw std::invalid_argument("ydlab: rhs size mismatch");
    } else {
        throw std::invalid_argument("ydlab: rhs must be a vector or matrix");
    }

    Elim e;
    e.ncols_a = n;
    e.rows.assign(m, std::vector<Scalar>(n + k, Scalar::zero()));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = A[i * n + j];
        for (std::size_t j = 0; j < k; ++j) e.rows[i][n + j] = b[i * k + j];
    }
    e.run();

    SolveResult res;
    res.rank = e.rank;
    for (std::size_t j = 0; j < k; ++j)
        if (!e.consistent_column(j)) {
            res.kind = SolveKind::NoSolution;
            return res;
        }

    Tensor sol(Shape{static_cast<int>(n), static_cast<int>(k)});
    for (std::size_t j = 0; j < k; ++j) {
        auto xs = e.solve_column(j);
        for (std::size_t i = 0; i < n; ++i) sol[i * k + j] = xs[i];
    }
    res.solution = (b.rank() == 1) ? sol.reshaped(Shape{static_cast<int>(n)}) : sol;

    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            auto xs = e.kernel_vector(c);
            Tensor kv(Shape{static_cast<int>(n)});
            for (std::size_t i = 0; i < n; ++i) kv[i] = xs[i];
            res.kernel.push_back(std::move(kv));
        }
    res.kind = res.kernel.empty() ? SolveKind::Unique : SolveKind::NonUnique;
    return res;
}

int rank_exact(const Tensor& A) {
    if (A.rank() != 2) throw std::invalid_argument("ydlab: rank expects a matrix");
    const std::size_t m = static_cast<std::size_t>(A.shape()[0]);
    const std::size_t n = static_cast<std::size_t>(A.shape()[1]);
    Elim e;
    e.ncols_a = n;
    e.rows.assign(m, std::vector<Scalar>(n, Scalar::zero()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) e.rows[i][j] = A[i * n + j];
    e.run();
    return e.rank;
}

std::optional<Tensor> invert_exact(const Tensor& A) {
    if (A.rank() != 2 || A.shape()[0] != A.shape()[1])
        throw std::invalid_argument("ydlab: inverse expects a square matrix");
    const int n = A.shape()[0];
    Tensor id(Shape{n, n});
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = Scalar::one();
    SolveResult r = solve_exact(A, id);
    if (r.kind != SolveKind::Unique) return std::nullopt;
    return r.solution;
}

std::optional<LinearMap> invert_map(const LinearMap& f) {
    if (f.dom_total() != f.cod_total()) return std::nullopt;
    auto inv = invert_exact(f.matrix());
    if (!inv) return std::nullopt;
    return LinearMap(f.cod(), f.dom(), *inv);
}

} // namespace ydlab
