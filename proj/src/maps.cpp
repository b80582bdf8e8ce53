#include "superalg/maps.hpp"
#include "superalg/errors.hpp"
#include "superalg/kernels.hpp"

namespace superalg {

bool matches_map_pattern(const GradedBasis& basis, const Matrix& m, Parity degree) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && ((basis.p(i) + basis.p(j)) & 1) != bit(degree)) return false;
    return true;
}

LinearMap::LinearMap(const GradedBasis& basis, Matrix m, Parity degree) : m_(std::move(m)), degree_(degree) {
    if (m_.rows() != basis.dim() || m_.cols() != basis.dim())
        fail(ErrorCode::DimensionMismatch, "map matrix size differs from basis size");
    if (!matches_map_pattern(basis, m_, degree_))
        fail(ErrorCode::ParityPatternViolation, "map matrix is not homogeneous of degree " + to_string(degree_));
}

LinearMap LinearMap::zero(const GradedBasis& basis, Parity degree) {
    return LinearMap(basis, Matrix(basis.dim(), basis.dim()), degree);
}

LinearMap LinearMap::identity(const GradedBasis& basis) {
    return LinearMap(basis, Matrix::identity(basis.dim()), Parity::Even);
}

bool LinearMap::invertible() const { return inverse(m_).has_value(); }

LinearMap compose(const LinearMap& d1, const LinearMap& d2) {
    return LinearMap(d1.m_ * d2.m_, d1.degree_ + d2.degree_);
}

LinearMap supercommutator(const LinearMap& d1, const LinearMap& d2) {
    const int s = sgn(d1.d() * d2.d());
    return LinearMap(d1.m_ * d2.m_ - Scalar(s) * (d2.m_ * d1.m_), d1.degree_ + d2.degree_);
}

Report superderivation_check(const LieSuperalgebra& g, const LinearMap& d, Exec exec) {
    if (d.dim() != g.dim()) fail(ErrorCode::DimensionMismatch, "map over a different basis");
    return kernels::derivation(g, d.matrix(), d.d(), exec);
}

Report skew_report(const LieSuperalgebra& g, const BilinearForm& beta, const LinearMap& d) {
    const std::size_t n = g.dim();
    if (beta.dim() != n || d.dim() != n) fail(ErrorCode::DimensionMismatch, "skew check operands");
    Matrix left = d.matrix().transpose() * beta.matrix();  // beta(D b_i, b_j)
    Matrix right = beta.matrix() * d.matrix();            // beta(b_i, D b_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar r = left(i, j) + sgn(d.d() * g.basis().p(i)) * right(i, j);
            if (r != 0) {
                Report rep;
                rep.pass = false;
                rep.witness = {i, j};
                rep.residual = {r};
                rep.detail = "skew-symmetry fails on (" + g.basis().label(i) + ", " + g.basis().label(j) + ")";
                return rep;
            }
        }
    return {};
}

bool skew_check(const LieSuperalgebra& g, const BilinearForm& beta, const LinearMap& d) {
    return skew_report(g, beta, d).pass;
}

std::vector<LinearMap> derivation_space(const LieSuperalgebra& g, Parity degree, const BilinearForm* b) {
    const GradedBasis& basis = g.basis();
    const std::size_t n = g.dim();
    const int d = bit(degree);
    // One unknown per matrix cell allowed by the degree.
    std::vector<long> var(n * n, -1);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (((basis.p(r) + basis.p(c)) & 1) == d) {
                var[r * n + c] = static_cast<long>(cells.size());
                cells.emplace_back(r, c);
            }
    const std::size_t nv = cells.size();
    std::vector<LinearMap> out;
    if (nv == 0) return out;
    std::vector<Vec> rows;
    // coefficient of D_{rc} scaled by s
    auto term = [&](Vec& row, const Scalar& s, std::size_t r, std::size_t c) {
        long v = var[r * n + c];
        if (v >= 0) row[static_cast<std::size_t>(v)] += s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const int sign = sgn(d * basis.p(i));
            // D[b_i,b_j] - [D b_i, b_j] - (-1)^{d|i|} [b_i, D b_j], component k
            for (std::size_t k = 0; k < n; ++k) {
                Vec row = zeros(nv);
                for (const auto& [m, c] : g.sparse(i, j)) term(row, c, k, m);
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& a = g.structure(m, j)[k];
                    if (a != 0) term(row, -a, m, i);
                    const Scalar& bb = g.structure(i, m)[k];
                    if (bb != 0) term(row, Scalar(-sign) * bb, m, j);
                }
                if (!is_zero(row)) rows.push_back(row);
            }
        }
    if (b) {
        // b(D b_i, b_j) + (-1)^{d|i|} b(b_i, D b_j) = 0
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec row = zeros(nv);
                for (std::size_t m = 0; m < n; ++m) {
                    if (b->entry(m, j) != 0) term(row, b->entry(m, j), m, i);
                    if (b->entry(i, m) != 0) term(row, sgn(d * basis.p(i)) * b->entry(i, m), m, j);
                }
                if (!is_zero(row)) rows.push_back(row);
            }
    }
    std::vector<Vec> sols = rows.empty() ? Subspace::whole(nv).basis() : nullspace(Matrix::from_rows(rows, nv));
    for (const auto& sol : sols) {
        Matrix m(n, n);
        for (std::size_t v = 0; v < nv; ++v) m(cells[v].first, cells[v].second) = sol[v];
        out.emplace_back(basis, m, degree);
    }
    return out;
}

LinearMap symplectic_derivation(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega) {
    auto binv = inverse(b.matrix());
    if (!binv) fail(ErrorCode::DegenerateForm, "quadratic form is degenerate");
    if (rank(omega.matrix()) != g.dim()) fail(ErrorCode::DegenerateForm, "symplectic form is degenerate");
    // B(Delta b_i, b_j) = (Delta^T B)_{ij} = omega_{ij}
    Matrix m = (omega.matrix() * *binv).transpose();
    const Parity degree = b.parity() + omega.parity();
    if (!matches_map_pattern(g.basis(), m, degree))
        fail(ErrorCode::NotADerivation, "solved map is not homogeneous of degree " + to_string(degree));
    LinearMap delta(g.basis(), m, degree);
    Report der = superderivation_check(g, delta);
    if (!der.pass) fail(ErrorCode::NotADerivation, der.detail);
    Report skew = skew_report(g, b, delta);
    if (!skew.pass) fail(ErrorCode::NotADerivation, skew.detail);
    return delta;
}

BilinearForm form_from_derivation(const LieSuperalgebra& g, const BilinearForm& b, const LinearMap& delta) {
    return BilinearForm(g.basis(), delta.matrix().transpose() * b.matrix(), b.parity() + delta.degree());
}

EigenSplit rational_eigen_split(const LinearMap& d, const Subspace& s) {
    const std::size_t n = d.dim(), r = s.dim();
    if (s.ambient() != n) fail(ErrorCode::DimensionMismatch, "subspace of a different space");
    EigenSplit out;
    out.residual = Subspace(n);
    if (r == 0) return out;
    // Matrix of D restricted to S in the basis of S.
    Matrix a(r, r);
    for (std::size_t c = 0; c < r; ++c) {
        auto coords = s.coordinates(d(s.basis()[c]));
        if (!coords) fail(ErrorCode::InvariantViolation, "subspace is not invariant under the map");
        for (std::size_t k = 0; k < r; ++k) a(k, c) = (*coords)[k];
    }
    auto lift = [&](const std::vector<Vec>& local) {
        std::vector<Vec> vs;
        for (const auto& x : local) {
            Vec v = zeros(n);
            for (std::size_t k = 0; k < r; ++k) axpy(v, x[k], s.basis()[k]);
            vs.push_back(v);
        }
        return Subspace(n, vs);
    };
    auto [roots, rest] = rational_roots(charpoly(a));
    for (const auto& root : roots) {
        Matrix shifted = a - root.value * Matrix::identity(r);
        Matrix power = Matrix::identity(r);
        for (std::size_t k = 0; k < root.multiplicity; ++k) power = power * shifted;
        out.pairs.push_back({root.value, root.multiplicity, lift(nullspace(shifted)), lift(nullspace(power))});
    }
    out.residual = lift(nullspace(poly_eval(rest, a)));
    return out;
}

}  // namespace superalg
