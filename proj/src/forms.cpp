#include "superalg/forms.hpp"
#include "superalg/errors.hpp"
#include "superalg/kernels.hpp"
#include "superalg/maps.hpp"

#include <random>

namespace superalg {

bool matches_form_pattern(const GradedBasis& basis, const Matrix& m, Parity parity) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && ((basis.p(i) + basis.p(j)) & 1) != bit(parity)) return false;
    return true;
}

BilinearForm::BilinearForm(const GradedBasis& basis, Matrix m, Parity parity) : m_(std::move(m)), parity_(parity) {
    if (m_.rows() != basis.dim() || m_.cols() != basis.dim())
        fail(ErrorCode::DimensionMismatch, "form matrix size differs from basis size");
    if (!matches_form_pattern(basis, m_, parity_))
        fail(ErrorCode::ParityPatternViolation, "form matrix is not " + to_string(parity_));
}

BilinearForm BilinearForm::zero(const GradedBasis& basis, Parity parity) {
    return BilinearForm(basis, Matrix(basis.dim(), basis.dim()), parity);
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const { return dot(x, m_.apply(y)); }

FormReport classify_form(const LieSuperalgebra& g, const BilinearForm& beta, Exec exec) {
    if (beta.dim() != g.dim()) fail(ErrorCode::DimensionMismatch, "form over a different basis");
    if (!matches_form_pattern(g.basis(), beta.matrix(), beta.parity()))
        fail(ErrorCode::ParityPatternViolation, "form matrix contradicts its declared parity");
    const GradedBasis& b = g.basis();
    FormReport rep;
    rep.parity = beta.parity();
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& x = beta.entry(i, j);
            const Scalar& y = beta.entry(j, i);
            const int s = sgn(b.p(i) * b.p(j));
            if (rep.supersymmetric && x != s * y) {
                rep.supersymmetric = false;
                rep.witnesses["supersymmetric"] = {i, j};
            }
            if (rep.skew_supersymmetric && x != -s * y) {
                rep.skew_supersymmetric = false;
                rep.witnesses["skew_supersymmetric"] = {i, j};
            }
        }
    Report inv = kernels::invariance(g, beta.matrix(), exec);
    rep.invariant = inv.pass;
    if (!inv.pass) rep.witnesses["invariant"] = inv.witness;
    Report coc = kernels::cocycle(g, beta.matrix(), exec);
    rep.cocycle = coc.pass;
    if (!coc.pass) rep.witnesses["cocycle"] = coc.witness;
    auto null = nullspace(beta.matrix());
    rep.nondegenerate = null.empty();
    if (!null.empty()) {
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < n; ++k)
            if (null.front()[k] != 0) support.push_back(k);
        rep.witnesses["nondegenerate"] = support;
    }
    return rep;
}

Subspace orthogonal_subspace(const LieSuperalgebra& g, const BilinearForm& beta, const Subspace& s) {
    const std::size_t n = g.dim();
    if (s.dim() == 0) return Subspace::whole(n);
    Matrix m(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec ms = beta.matrix().apply(s.basis()[r]);
        for (std::size_t k = 0; k < n; ++k) m(r, k) = ms[k];
    }
    return Subspace(n, nullspace(m));
}

LinearMap adjoint_map(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d) {
    // M D* = S D^T M with S = diag((-1)^{|D||b_i|})
    const std::size_t n = g.dim();
    auto minv = inverse(omega.matrix());
    if (!minv) fail(ErrorCode::DegenerateForm, "adjoint needs a nondegenerate form");
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = sgn(d.d() * g.basis().p(i));
    return LinearMap(g.basis(), *minv * s * d.matrix().transpose() * omega.matrix(), d.degree());
}

FormSpace invariant_form_space(const LieSuperalgebra& g, Parity parity, Symmetry symmetry) {
    const GradedBasis& b = g.basis();
    const std::size_t n = g.dim();
    FormSpace space{b, parity, {}};
    // Unknowns: the entries allowed by the parity pattern.
    std::vector<long> var(n * n, -1);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (((b.p(i) + b.p(j)) & 1) == bit(parity)) {
                var[i * n + j] = static_cast<long>(cells.size());
                cells.emplace_back(i, j);
            }
    const std::size_t nv = cells.size();
    if (nv == 0) return space;

    std::vector<Vec> rows;
    auto add = [&](const Vec& row) {
        if (!is_zero(row)) rows.push_back(row);
    };
    const bool sym = symmetry == Symmetry::Supersymmetric;
    for (const auto& [i, j] : cells) {
        Vec row = zeros(nv);
        const int s = sgn(b.p(i) * b.p(j));
        row[static_cast<std::size_t>(var[i * n + j])] += 1;
        row[static_cast<std::size_t>(var[j * n + i])] -= sym ? s : -s;
        add(row);
    }
    // coefficient of beta(b_p, b_q) scaled by c
    auto term = [&](Vec& row, const Scalar& c, std::size_t p, std::size_t q) {
        long v = var[p * n + q];
        if (v >= 0) row[static_cast<std::size_t>(v)] += c;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row = zeros(nv);
                if (sym) {
                    for (const auto& [m, c] : g.sparse(i, j)) term(row, c, m, k);
                    for (const auto& [m, c] : g.sparse(j, k)) term(row, -c, i, m);
                } else {
                    const int x = b.p(i), y = b.p(j), z = b.p(k);
                    for (const auto& [m, c] : g.sparse(j, k)) term(row, sgn(z * x) * c, i, m);
                    for (const auto& [m, c] : g.sparse(k, i)) term(row, sgn(x * y) * c, j, m);
                    for (const auto& [m, c] : g.sparse(i, j)) term(row, sgn(y * z) * c, k, m);
                }
                add(row);
            }
    std::vector<Vec> sols = rows.empty() ? Subspace::whole(nv).basis() : nullspace(Matrix::from_rows(rows, nv));
    for (const auto& sol : sols) {
        Matrix m(n, n);
        for (std::size_t v = 0; v < nv; ++v) m(cells[v].first, cells[v].second) = sol[v];
        space.basis_forms.emplace_back(b, m, parity);
    }
    return space;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

Matrix combination(const FormSpace& space, const std::vector<long>& coords) {
    const std::size_t n = space.ambient.dim();
    Matrix m(n, n);
    for (std::size_t t = 0; t < coords.size(); ++t)
        if (coords[t] != 0) m = m + Scalar(coords[t]) * space.basis_forms[t].matrix();
    return m;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t size) {
    Matrix b(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) b(i, j) = m(r0 + i, c0 + j);
    return b;
}

// Calls visit(point) on every a in N^s with sum(a) <= degree until it
// returns true.
template <class Visit>
bool for_lattice(std::size_t s, std::size_t degree, Visit visit) {
    std::vector<long> a(s, 0);
    while (true) {
        if (visit(a)) return true;
        // Next point in reverse-lexicographic order within the simplex.
        std::size_t total = 0;
        for (auto x : a) total += static_cast<std::size_t>(x);
        std::size_t k = 0;
        while (k < s) {
            if (total < degree) {
                ++a[k];
                break;
            }
            total -= static_cast<std::size_t>(a[k]);
            a[k] = 0;
            ++k;
        }
        if (k == s) return false;
    }
}

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

constexpr long kLatticeBudget = 20000;

}  // namespace

NondegenerateAnswer exists_nondegenerate(const FormSpace& space) {
    const GradedBasis& b = space.ambient;
    const std::size_t n = b.dim(), n0 = b.n_even(), n1 = b.n_odd(), s = space.dim();
    NondegenerateAnswer ans;
    if (s == 0 || (space.parity == Parity::Odd && n0 != n1)) {
        ans.verdict = Verdict::No;
        ans.exact = true;
        return ans;
    }
    // Diagonal blocks for even forms, off-diagonal blocks for odd ones.
    struct Block {
        std::size_t r0, c0, size;
    };
    std::vector<Block> blocks = space.parity == Parity::Even
                                    ? std::vector<Block>{{0, 0, n0}, {n0, n0, n1}}
                                    : std::vector<Block>{{0, n0, n0}, {n0, 0, n1}};
    mpz_class cost = 0;
    for (const auto& bl : blocks) cost += binomial(bl.size + s, s);
    auto accept = [&](const std::vector<long>& a) {
        Matrix m = combination(space, a);
        if (determinant(m) == 0) return false;
        ans.verdict = Verdict::Yes;
        ans.witness = BilinearForm(b, m, space.parity);
        return true;
    };
    std::mt19937_64 rng(0x5eedULL);
    const long bound = static_cast<long>(10 * n * s);
    std::uniform_int_distribution<long> dist(-bound, bound);
    auto sample = [&] {
        for (int k = 0; k < 20; ++k) {
            std::vector<long> a(s);
            for (auto& x : a) x = dist(rng);
            if (accept(a)) return true;
        }
        return false;
    };
    if (cost <= kLatticeBudget) {
        ans.exact = true;
        for (const auto& bl : blocks) {
            bool nonzero = for_lattice(s, bl.size, [&](const std::vector<long>& a) {
                return determinant(block(combination(space, a), bl.r0, bl.c0, bl.size)) != 0;
            });
            if (!nonzero) {
                ans.verdict = Verdict::No;
                return ans;
            }
        }
        // Both factors are nonzero polynomials, so their product is nonzero
        // somewhere on the lattice of degree n. Random points find one
        // almost always; the full walk is the fallback.
        if (sample()) return ans;
        if (!for_lattice(s, n, accept))
            fail(ErrorCode::InvariantViolation, "lattice search missed a nonzero determinant");
        return ans;
    }
    if (sample()) return ans;
    ans.verdict = Verdict::Unknown;
    return ans;
}

Verdict admits_both_quadratic(const LieSuperalgebra& g) {
    Verdict even = exists_nondegenerate(invariant_form_space(g, Parity::Even, Symmetry::Supersymmetric)).verdict;
    if (even == Verdict::No) return Verdict::No;
    Verdict odd = exists_nondegenerate(invariant_form_space(g, Parity::Odd, Symmetry::Supersymmetric)).verdict;
    if (odd == Verdict::No) return Verdict::No;
    if (even == Verdict::Yes && odd == Verdict::Yes) return Verdict::Yes;
    return Verdict::Unknown;
}

}  // namespace superalg
