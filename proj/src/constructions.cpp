#include "superalg/constructions.hpp"

#include "support.hpp"

#include <set>

namespace superalg {

using detail::BracketTable;
using detail::require;

void verify_roles(const QuadSympAlgebra& q) {
    const LieSuperalgebra& g = q.algebra;
    if (q.quadratic) {
        FormReport r = classify_form(g, *q.quadratic);
        require(r.quadratic(), ErrorCode::InvariantViolation, "quadratic form fails its role");
    }
    if (q.symplectic) {
        FormReport r = classify_form(g, *q.symplectic);
        require(r.symplectic(), ErrorCode::InvariantViolation, "symplectic form fails its role");
    }
    if (q.derivation) {
        Report r = superderivation_check(g, *q.derivation);
        require(r.pass, ErrorCode::InvariantViolation, "derivation fails: " + r.detail);
        if (q.quadratic) {
            Report s = skew_report(g, *q.quadratic, *q.derivation);
            require(s.pass, ErrorCode::InvariantViolation, "derivation is not skew: " + s.detail);
            if (q.symplectic)
                require(form_from_derivation(g, *q.quadratic, *q.derivation) == *q.symplectic,
                        ErrorCode::InvariantViolation, "symplectic form is not B(Delta ., .)");
        }
    }
}

Vec ExtensionLayout::embed(const Vec& base_vector) const {
    Vec v = zeros(basis.dim());
    for (std::size_t i = 0; i < base_positions.size(); ++i) v[base_positions[i]] = base_vector[i];
    return v;
}

namespace {

std::string suffixed(const std::string& role, std::size_t k) {
    return k == 0 ? role : role + "_" + std::to_string(k);
}

}  // namespace

ExtensionLayout extension_layout(const GradedBasis& base, const std::vector<NewVector>& duals,
                                 const std::vector<NewVector>& news) {
    std::set<std::string> taken(base.labels().begin(), base.labels().end());
    std::size_t k = 0;
    auto clash = [&](std::size_t s) {
        for (const auto* group : {&duals, &news})
            for (const auto& nv : *group)
                if (taken.count(suffixed(nv.role, s))) return true;
        return false;
    };
    while (clash(k)) ++k;

    ExtensionLayout out;
    std::vector<std::string> labels;
    out.base_positions.resize(base.dim());
    for (Parity p : {Parity::Even, Parity::Odd}) {
        for (const auto& nv : duals)
            if (nv.parity == p) {
                out.added[nv.role] = labels.size();
                labels.push_back(suffixed(nv.role, k));
            }
        for (std::size_t i = 0; i < base.dim(); ++i)
            if (base.parity(i) == p) {
                out.base_positions[i] = labels.size();
                labels.push_back(base.label(i));
            }
        for (const auto& nv : news)
            if (nv.parity == p) {
                out.added[nv.role] = labels.size();
                labels.push_back(suffixed(nv.role, k));
            }
    }
    std::size_t n_even = base.n_even();
    for (const auto* group : {&duals, &news})
        for (const auto& nv : *group)
            if (nv.parity == Parity::Even) ++n_even;
    out.basis = GradedBasis(labels, n_even);
    return out;
}

namespace {

// Shared layout of h + h^* or h + P(h^*): base block, then its duals, per
// parity. dual_pos[j] is the position of the dual of h_j.
struct TrivialLayout {
    GradedBasis basis;
    std::vector<std::size_t> base_pos;
    std::vector<std::size_t> dual_pos;
    std::vector<int> dual_parity;
};

TrivialLayout trivial_layout(const GradedBasis& h, Variant variant) {
    const std::size_t n = h.dim();
    const int shift = variant == Variant::Odd ? 1 : 0;
    std::set<std::string> taken(h.labels().begin(), h.labels().end());
    auto dual_label = [&](const std::string& l) {
        std::string s = l + "*";
        while (taken.count(s)) s += "'";
        taken.insert(s);
        return s;
    };
    TrivialLayout t;
    t.base_pos.resize(n);
    t.dual_pos.resize(n);
    t.dual_parity.resize(n);
    std::vector<std::string> labels;
    std::size_t n_even = 0;
    for (int p = 0; p < 2; ++p) {
        for (std::size_t i = 0; i < n; ++i)
            if (h.p(i) == p) {
                t.base_pos[i] = labels.size();
                labels.push_back(h.label(i));
            }
        for (std::size_t i = 0; i < n; ++i)
            if (((h.p(i) + shift) & 1) == p) {
                t.dual_pos[i] = labels.size();
                t.dual_parity[i] = p;
                labels.push_back(dual_label(h.label(i)));
            }
        if (p == 0) n_even = labels.size();
    }
    t.basis = GradedBasis(labels, n_even);
    return t;
}

}  // namespace

Extension trivial_double_extension(const LieSuperalgebra& h, Variant variant) {
    const std::size_t n = h.dim();
    TrivialLayout t = trivial_layout(h.basis(), variant);
    const std::size_t m = t.basis.dim();
    BracketTable table(t.basis);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec v = zeros(m);
            for (const auto& [k, c] : h.sparse(i, j)) v[t.base_pos[k]] = c;
            table.add(t.base_pos[i], t.base_pos[j], v);
        }
    // h_i . f_j = sum_k -(-1)^{|h_i||f_j|} c_{ik}^j f_k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = zeros(m);
            const int s = -sgn(h.basis().p(i) * t.dual_parity[j]);
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.structure(i, k)[j];
                if (c != 0) v[t.dual_pos[k]] += s * c;
            }
            table.add(t.base_pos[i], t.dual_pos[j], v);
        }
    Matrix b(m, m);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t f = t.dual_pos[j], x = t.base_pos[j];
        b(f, x) = 1;
        b(x, f) = variant == Variant::Even ? sgn(h.basis().p(j) * t.dual_parity[j]) : 1;
    }
    Extension ext;
    ext.value.algebra = table.build();
    ext.value.quadratic = BilinearForm(t.basis, b, variant == Variant::Even ? Parity::Even : Parity::Odd);
    ext.base_positions = t.base_pos;
    for (std::size_t j = 0; j < n; ++j) ext.added[t.basis.label(t.dual_pos[j])] = t.dual_pos[j];
    detail::certify(ext);
    return ext;
}

LinearMap lift_derivation(const LieSuperalgebra& h, const LinearMap& d, Variant variant, bool require_invertible) {
    detail::require_map(h, d, d.degree(), "D");
    const std::size_t n = h.dim();
    TrivialLayout t = trivial_layout(h.basis(), variant);
    const std::size_t m = t.basis.dim();
    Matrix lifted(m, m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = d.matrix()(j, k);
            if (c == 0) continue;
            lifted(t.base_pos[j], t.base_pos[k]) = c;
            // D^*(f_j) = sum_k -(-1)^{|f_j| d} D_{jk} f_k
            lifted(t.dual_pos[k], t.dual_pos[j]) = -sgn(t.dual_parity[j] * d.d()) * c;
        }
    LinearMap out(t.basis, lifted, d.degree());
    Extension ext = trivial_double_extension(h, variant);
    Report der = superderivation_check(ext.value.algebra, out);
    require(der.pass, ErrorCode::InvariantViolation, "lifted map is not a derivation: " + der.detail);
    Report skew = skew_report(ext.value.algebra, *ext.value.quadratic, out);
    require(skew.pass, ErrorCode::InvariantViolation, "lifted map is not skew: " + skew.detail);
    if (require_invertible) require(out.invertible(), ErrorCode::NotInvertible, "lifted derivation is singular");
    return out;
}

Vec AssocSuperalgebra::mul(const Vec& x, const Vec& y) const {
    const std::size_t n = basis.dim();
    Vec out = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0) axpy(out, x[i] * y[j], mul(i, j));
    }
    return out;
}

Report associativity_check(const AssocSuperalgebra& a) {
    const std::size_t n = a.basis.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = a.mul(a.mul(i, j), unit(n, k)) - a.mul(unit(n, i), a.mul(j, k));
                if (!is_zero(r)) return {false, {i, j, k}, r, "(ab)c != a(bc)"};
            }
    return {};
}

Report supercommutativity_check(const AssocSuperalgebra& a) {
    const std::size_t n = a.basis.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec r = a.mul(i, j) - Scalar(sgn(a.basis.p(i) * a.basis.p(j))) * a.mul(j, i);
            if (!is_zero(r)) return {false, {i, j}, r, "ab != (-1)^{|a||b|} ba"};
        }
    return {};
}

Extension tensor_odd_symmetric(const LieSuperalgebra& h, const BilinearForm& omega, const AssocSuperalgebra& a,
                               const BilinearForm& b_a) {
    const std::size_t nh = h.dim(), na = a.basis.dim();
    require(h.basis().n_odd() == 0, ErrorCode::WrongParity, "the Lie algebra factor must be purely even");
    require(omega.parity() == Parity::Even, ErrorCode::WrongParity, "omega must be even");
    detail::require_symplectic(h, omega, "omega");
    require(a.product.size() == na * na, ErrorCode::DimensionMismatch, "product table size");
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            require(a.mul(i, j).size() == na, ErrorCode::DimensionMismatch, "product vector length");
            auto deg = degree_of(a.basis, a.mul(i, j));
            require(deg && (is_zero(a.mul(i, j)) || bit(*deg) == ((a.basis.p(i) + a.basis.p(j)) & 1)),
                    ErrorCode::ParityPatternViolation, "product is not graded");
        }
    Report assoc = associativity_check(a);
    require(assoc.pass, ErrorCode::NotAssociative, assoc.detail);
    Report comm = supercommutativity_check(a);
    require(comm.pass, ErrorCode::NotSupercommutative, comm.detail);
    require(b_a.dim() == na, ErrorCode::DimensionMismatch, "B_A lives on a different space");
    require(b_a.parity() == Parity::Odd, ErrorCode::WrongParity, "B_A must be odd");
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            require(b_a.entry(i, j) == sgn(a.basis.p(i) * a.basis.p(j)) * b_a.entry(j, i), ErrorCode::ConditionViolated,
                    "B_A is not supersymmetric");
            for (std::size_t k = 0; k < na; ++k)
                require(b_a(a.mul(i, j), unit(na, k)) == b_a(unit(na, i), a.mul(j, k)), ErrorCode::ConditionViolated,
                        "B_A is not invariant");
        }
    require(rank(b_a.matrix()) == na, ErrorCode::DegenerateForm, "B_A is degenerate");

    // Position of x_s (x) a_i: even a first, each a block in h order.
    std::vector<std::string> labels;
    std::vector<std::size_t> pos(nh * na);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t s = 0; s < nh; ++s) {
            pos[s * na + i] = labels.size();
            labels.push_back(h.basis().label(s) + "." + a.basis.label(i));
        }
    GradedBasis basis(labels, nh * a.basis.n_even());
    const std::size_t m = basis.dim();
    BracketTable table(basis);
    Matrix big(m, m);
    for (std::size_t s = 0; s < nh; ++s)
        for (std::size_t t = 0; t < nh; ++t)
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = 0; j < na; ++j) {
                    const std::size_t p = pos[s * na + i], q = pos[t * na + j];
                    big(p, q) = omega.entry(s, t) * b_a.entry(i, j);
                    if (p > q) continue;
                    Vec v = zeros(m);
                    for (const auto& [u, c] : h.sparse(s, t))
                        for (std::size_t k = 0; k < na; ++k)
                            if (a.mul(i, j)[k] != 0) v[pos[u * na + k]] += c * a.mul(i, j)[k];
                    table.add(p, q, v);
                }
    Extension ext;
    ext.value.algebra = table.build();
    ext.value.symplectic = BilinearForm(basis, big, Parity::Odd);
    detail::certify(ext);
    return ext;
}

namespace {

// D^T M + S M D with S = diag((-1)^{|D| |b_i|}): the matrix of
// (X, Y) -> M(DX, Y) + (-1)^{|D||x|} M(X, DY).
Matrix twist(const GradedBasis& b, const Matrix& m, const LinearMap& d) {
    Matrix left = d.matrix().transpose() * m;
    Matrix right = m * d.matrix();
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (sgn(d.d() * b.p(i)) < 0)
            for (std::size_t j = 0; j < b.dim(); ++j) right(i, j) = -right(i, j);
    return left + right;
}

Scalar omega_sign(const BilinearForm& omega, const LinearMap& d) {
    return omega.parity() == Parity::Odd ? 1 : sgn(d.d());
}

}  // namespace

BilinearForm extension_cocycle(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d) {
    Matrix m = Scalar(-omega_sign(omega, d)) * twist(g.basis(), omega.matrix(), d);
    return BilinearForm(g.basis(), m, omega.parity() + d.degree());
}

BilinearForm coboundary_target(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d) {
    BilinearForm gamma = extension_cocycle(g, omega, d);
    const Scalar s = omega.parity() == Parity::Odd ? -1 : 1;
    return BilinearForm(g.basis(), s * twist(g.basis(), gamma.matrix(), d), omega.parity());
}

BilinearForm theta_operator_form(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d) {
    const std::size_t n = g.dim();
    const Matrix dm = d.matrix();
    const Matrix star = adjoint_map(g, omega, d).matrix();
    const Matrix star_d = star * dm, star_star = star * star, dd = dm * dm;
    Matrix op(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const int x = g.basis().p(i);
        for (std::size_t r = 0; r < n; ++r)
            op(r, i) = sgn(d.d() * x) * star_d(r, i) + star_star(r, i) + dd(r, i) +
                       sgn(d.d() * (x + 1)) * star_d(r, i);
    }
    Matrix m = op.transpose() * omega.matrix();
    if (omega.parity() == Parity::Even) m = Scalar(-sgn(d.d())) * m;
    return BilinearForm(g.basis(), m, omega.parity());
}

std::optional<Vec> solve_coboundary(const LieSuperalgebra& g, const BilinearForm& omega, const BilinearForm& theta) {
    const std::size_t n = g.dim(), n0 = g.basis().n_even();
    Matrix m(n * n, n0);
    Vec rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t r = i * n + j;
            rhs[r] = theta.entry(i, j);
            for (const auto& [u, c] : g.sparse(i, j))
                for (std::size_t k = 0; k < n0; ++k) m(r, k) += c * omega.entry(k, u);
        }
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    Vec b0 = zeros(n);
    for (std::size_t k = 0; k < n0; ++k) b0[k] = (*sol)[k];
    return b0;
}

Extension central_extension(const LieSuperalgebra& g, const BilinearForm& omega, const LinearMap& d,
                            FormVariant variant) {
    const Parity want = variant == FormVariant::Odd ? Parity::Odd : Parity::Even;
    require(omega.parity() == want, ErrorCode::WrongParity, "omega parity does not match the variant");
    require(omega.dim() == g.dim(), ErrorCode::DimensionMismatch, "omega lives on a different space");
    detail::require_map(g, d, d.degree(), "D");
    BilinearForm gamma = extension_cocycle(g, omega, d);
    ExtensionLayout lay = extension_layout(g.basis(), {{"e*", gamma.parity()}}, {});
    const std::size_t star = lay.added.at("e*");
    BracketTable table(lay.basis);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j) {
            Vec v = lay.embed(g.structure(i, j));
            v[star] += gamma.entry(i, j);
            table.add(lay.base_positions[i], lay.base_positions[j], v);
        }
    Extension ext;
    ext.value.algebra = table.build();
    ext.base_positions = lay.base_positions;
    ext.added = lay.added;
    detail::certify(ext);
    return ext;
}

Extension symplectic_double_extension(const LieSuperalgebra& g, const BilinearForm& omega, const Ext1Data& data) {
    detail::require_symplectic(g, omega, "omega");
    const LinearMap& d = data.d;
    detail::require_map(g, d, d.degree(), "D");
    const Parity pe = d.degree();
    const bool odd_omega = omega.parity() == Parity::Odd;
    const Parity pstar = odd_omega ? pe + Parity::Odd : pe;
    const Scalar s = odd_omega ? -1 : 1;
    const bool generalized = data.mode == Ext1Mode::Generalized;
    require(generalized == (pe == Parity::Odd), ErrorCode::BadParams,
            generalized ? "generalized mode needs an odd D" : "double mode needs an even D");
    require(data.k == 0, ErrorCode::ConditionViolated, "k must vanish");

    BilinearForm gamma = extension_cocycle(g, omega, d);
    BilinearForm theta = coboundary_target(g, omega, d);
    Vec b0;
    if (generalized) {
        detail::require_vector(g.basis(), data.x0, Parity::Even, "x0");
        detail::require_equal(d(data.x0), zeros(g.dim()), "D(x0) = 0");
        detail::require_equal(compose(d, d).matrix(), Scalar(1, 2) * g.ad(data.x0), "D^2 = ad(x0)/2");
        if (!odd_omega) require(omega(data.x0, data.x0) == 0, ErrorCode::ConditionViolated, "omega(x0, x0) = 0 fails");
        b0 = Scalar(1, 2) * data.x0;
        if (data.b0) require(*data.b0 == b0, ErrorCode::BadParams, "b0 must be x0/2 in generalized mode");
    } else if (data.b0) {
        detail::require_vector(g.basis(), *data.b0, Parity::Even, "b0");
        b0 = *data.b0;
    } else {
        auto solved = solve_coboundary(g, omega, theta);
        require(solved.has_value(), ErrorCode::NotCoboundary, "theta is not of the form omega(b0, [., .])");
        b0 = *solved;
    }
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            require(omega(b0, g.structure(i, j)) == theta.entry(i, j), ErrorCode::NotCoboundary,
                    "theta differs from omega(b0, [., .]) at (" + g.basis().label(i) + ", " + g.basis().label(j) + ")");

    ExtensionLayout lay = extension_layout(g.basis(), {{"e*", pstar}}, {{"e", pe}});
    const std::size_t star = lay.added.at("e*"), e = lay.added.at("e");
    const std::size_t m = lay.basis.dim();
    BracketTable table(lay.basis);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i; j < g.dim(); ++j) {
            Vec v = lay.embed(g.structure(i, j));
            v[star] += gamma.entry(i, j);
            table.add(lay.base_positions[i], lay.base_positions[j], v);
        }
        // [e, X] = D(X) + s omega(b0, X) e*
        Vec v = lay.embed(d.image(i));
        v[star] += s * omega(b0, unit(g.dim(), i));
        table.add(e, lay.base_positions[i], v);
    }
    if (generalized) table.add(e, e, lay.embed(data.x0));

    Matrix big(m, m);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) big(lay.base_positions[i], lay.base_positions[j]) = omega.entry(i, j);
    big(star, e) = 1;
    big(e, star) = -sgn(bit(pstar) * bit(pe));
    Extension ext;
    ext.value.algebra = table.build();
    ext.value.symplectic = BilinearForm(lay.basis, big, omega.parity());
    ext.base_positions = lay.base_positions;
    ext.added = lay.added;
    detail::certify(ext);
    return ext;
}

namespace {

void check_gode_conditions(const LieSuperalgebra& g, const BilinearForm& b, const GodeData& data) {
    require(b.parity() == Parity::Odd, ErrorCode::WrongParity, "B must be odd");
    detail::require_quadratic(g, b, "B");
    detail::require_map(g, data.dbar, Parity::Odd, "Dbar");
    detail::require_skew(g, b, data.dbar, "Dbar");
    detail::require_vector(g.basis(), data.x0, Parity::Even, "x0");
    detail::require_equal(data.dbar(data.x0), zeros(g.dim()), "Dbar(x0) = 0");
    detail::require_equal(compose(data.dbar, data.dbar).matrix(), Scalar(1, 2) * g.ad(data.x0), "Dbar^2 = ad(x0)/2");
}

}  // namespace

Extension gode_1d(const LieSuperalgebra& g, const BilinearForm& b, const GodeData& data) {
    check_gode_conditions(g, b, data);
    const std::size_t n = g.dim();
    ExtensionLayout lay = extension_layout(g.basis(), {{"e*", Parity::Even}}, {{"e", Parity::Odd}});
    const std::size_t star = lay.added.at("e*"), e = lay.added.at("e");
    const std::size_t m = lay.basis.dim();
    BracketTable table(lay.basis);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec dx = data.dbar.image(i);
        for (std::size_t j = i; j < n; ++j) {
            Vec v = lay.embed(g.structure(i, j));
            v[star] += b(dx, unit(n, j));
            table.add(lay.base_positions[i], lay.base_positions[j], v);
        }
        Vec v = lay.embed(dx);
        v[star] += b(data.x0, unit(n, i));
        table.add(e, lay.base_positions[i], v);
    }
    Vec ee = lay.embed(data.x0);
    ee[star] += data.k;
    table.add(e, e, ee);

    Matrix big(m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big(lay.base_positions[i], lay.base_positions[j]) = b.entry(i, j);
    big(star, e) = 1;
    big(e, star) = 1;
    Extension ext;
    ext.value.algebra = table.build();
    ext.value.quadratic = BilinearForm(lay.basis, big, Parity::Odd);
    ext.base_positions = lay.base_positions;
    ext.added = lay.added;
    detail::certify(ext);
    return ext;
}

Extension gode_1d_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                             const GodeData& data) {
    check_gode_conditions(g, b, data);
    detail::require_symplectic(g, omega, "omega");
    const LinearMap delta = symplectic_derivation(g, b, omega);
    require(delta.degree() == Parity::Even, ErrorCode::WrongParity, "delta must be even");
    require(data.c1.has_value() && data.lambda.has_value(), ErrorCode::BadParams, "c1 and lambda are required");
    const Vec& c1 = *data.c1;
    const Scalar& lambda = *data.lambda;
    detail::require_vector(g.basis(), c1, Parity::Odd, "c1");
    require(lambda != 0, ErrorCode::ZeroLambda, "lambda must be nonzero");
    const std::size_t n = g.dim();
    require(b(c1, data.x0) == lambda * data.k, ErrorCode::ConditionViolated, "B(c1, x0) = lambda k fails");
    detail::require_equal(Scalar(2) * data.dbar(c1), delta(data.x0) + Scalar(2) * lambda * data.x0,
                          "2 Dbar(c1) = delta(x0) + 2 lambda x0");
    detail::require_equal(supercommutator(delta, data.dbar).matrix() + lambda * data.dbar.matrix(), g.ad(c1),
                          "[delta, Dbar] + lambda Dbar = ad(c1)");

    Extension ext = gode_1d(g, b, data);
    const std::size_t star = ext.added.at("e*"), e = ext.added.at("e");
    const std::size_t m = ext.value.algebra.dim();
    Matrix big(m, m);
    big(star, star) = lambda;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t col = ext.base_positions[i];
        for (std::size_t r = 0; r < n; ++r) big(ext.base_positions[r], col) = delta.matrix()(r, i);
        big(star, col) = -b(c1, unit(n, i));
    }
    for (std::size_t r = 0; r < n; ++r) big(ext.base_positions[r], e) = c1[r];
    big(e, e) = -lambda;
    LinearMap big_delta(ext.value.algebra.basis(), big, Parity::Even);
    require(big_delta.invertible(), ErrorCode::NotInvertible, "extended Delta is singular");
    ext.value.derivation = big_delta;
    ext.value.symplectic = form_from_derivation(ext.value.algebra, *ext.value.quadratic, big_delta);
    detail::certify(ext);
    return ext;
}

namespace {

void check_ext2_conditions(const LieSuperalgebra& g, const BilinearForm& b, const Ext2Data& data) {
    detail::require_quadratic(g, b, "B");
    detail::require_map(g, data.d, Parity::Even, "D");
    detail::require_skew(g, b, data.d, "D");
    detail::require_map(g, data.dbar, Parity::Odd, "Dbar");
    detail::require_skew(g, b, data.dbar, "Dbar");
    detail::require_vector(g.basis(), data.x0, Parity::Even, "x0");
    detail::require_vector(g.basis(), data.x1, Parity::Odd, "x1");
    detail::require_equal(compose(data.dbar, data.dbar).matrix(), Scalar(1, 2) * g.ad(data.x0), "Dbar^2 = ad(x0)/2");
    detail::require_equal(data.dbar(data.x0), zeros(g.dim()), "Dbar(x0) = 0");
    detail::require_equal(supercommutator(data.d, data.dbar).matrix(), g.ad(data.x1), "[D, Dbar] = ad(x1)");
    detail::require_equal(data.d(data.x0), Scalar(2) * data.dbar(data.x1), "D(x0) = 2 Dbar(x1)");
    if (b.parity() == Parity::Odd)
        require(b(data.x0, data.x1) == 0, ErrorCode::ConditionViolated, "B(x0, x1) = 0 fails");
    else
        require(b(data.x0, data.x0) == 0, ErrorCode::ConditionViolated, "B(x0, x0) = 0 fails");
}

}  // namespace

Extension gde_2d(const LieSuperalgebra& g, const BilinearForm& b, const Ext2Data& data) {
    check_ext2_conditions(g, b, data);
    const bool odd = b.parity() == Parity::Odd;
    const std::size_t n = g.dim();
    ExtensionLayout lay = extension_layout(g.basis(), {{"e0*", Parity::Even}, {"e1*", Parity::Odd}},
                                           {{"e0", Parity::Even}, {"e1", Parity::Odd}});
    const std::size_t s0 = lay.added.at("e0*"), s1 = lay.added.at("e1*");
    const std::size_t e0 = lay.added.at("e0"), e1 = lay.added.at("e1");
    const std::size_t m = lay.basis.dim();
    BracketTable table(lay.basis);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = unit(n, i);
        const Vec dx = data.d.image(i), dbx = data.dbar.image(i);
        for (std::size_t j = i; j < n; ++j) {
            const Vec y = unit(n, j);
            Vec v = lay.embed(g.structure(i, j));
            if (odd) {
                v[s0] += b(dbx, y);
                v[s1] += b(dx, y);
            } else {
                v[s1] -= b(dbx, y);
                v[s0] += b(dx, y);
            }
            table.add(lay.base_positions[i], lay.base_positions[j], v);
        }
        Vec v0 = lay.embed(dx), v1 = lay.embed(dbx);
        if (odd) {
            v0[s0] -= b(data.x1, x);
            v1[s0] += b(data.x0, x);
            v1[s1] += b(data.x1, x);
        } else {
            v0[s1] += b(data.x1, x);
            v1[s1] -= b(data.x0, x);
            v1[s0] += b(data.x1, x);
        }
        table.add(e0, lay.base_positions[i], v0);
        table.add(e1, lay.base_positions[i], v1);
    }
    Vec v01 = lay.embed(data.x1), v11 = lay.embed(data.x0);
    v11[s0] += data.k;
    if (!odd) v01[s1] += data.k;
    table.add(e0, e1, v01);
    table.add(e1, e1, v11);

    Matrix big(m, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) big(lay.base_positions[i], lay.base_positions[j]) = b.entry(i, j);
    if (odd) {
        big(s0, e1) = big(e1, s0) = 1;
        big(s1, e0) = big(e0, s1) = 1;
    } else {
        big(s0, e0) = big(e0, s0) = 1;
        big(s1, e1) = 1;
        big(e1, s1) = -1;
    }
    Extension ext;
    ext.value.algebra = table.build();
    ext.value.quadratic = BilinearForm(lay.basis, big, b.parity());
    ext.base_positions = lay.base_positions;
    ext.added = lay.added;
    detail::certify(ext);
    return ext;
}

Extension gde_2d_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                            const Ext2Data& data) {
    check_ext2_conditions(g, b, data);
    detail::require_symplectic(g, omega, "omega");
    const LinearMap delta = symplectic_derivation(g, b, omega);
    require(delta.degree() == Parity::Odd, ErrorCode::WrongParity, "delta must be odd");
    require(data.c0 && data.c1 && data.lambda, ErrorCode::BadParams, "c0, c1 and lambda are required");
    const Vec &c0 = *data.c0, &c1 = *data.c1;
    const Scalar& lambda = *data.lambda;
    detail::require_vector(g.basis(), c0, Parity::Even, "c0");
    detail::require_vector(g.basis(), c1, Parity::Odd, "c1");
    require(lambda != 0, ErrorCode::ZeroLambda, "lambda must be nonzero");
    const bool odd = b.parity() == Parity::Odd;
    const Matrix dm = data.d.matrix(), dbm = data.dbar.matrix();
    const Matrix sd = supercommutator(delta, data.d).matrix(), sdb = supercommutator(delta, data.dbar).matrix();
    if (odd) {
        detail::require_equal(sdb - lambda * dm, g.ad(c0), "ad(c0) = [delta, Dbar] - lambda D");
        detail::require_equal(sd + lambda * dbm, g.ad(c1), "ad(c1) = [delta, D] + lambda Dbar");
        detail::require_equal(delta(data.x0), Scalar(-2) * data.dbar(c0) + Scalar(2) * lambda * data.x1,
                              "delta(x0) = -2 Dbar(c0) + 2 lambda x1");
        detail::require_equal(delta(data.x1), data.d(c0) + data.dbar(c1) - lambda * data.x0,
                              "delta(x1) = D(c0) + Dbar(c1) - lambda x0");
        require(lambda * data.k == b(c1, data.x0) - 2 * b(data.x1, c0), ErrorCode::ConditionViolated,
                "lambda k = B(c1, x0) - 2 B(x1, c0) fails");
    } else {
        detail::require_equal(sd - lambda * dbm, g.ad(c1), "[delta, D] - lambda Dbar = ad(c1)");
        detail::require_equal(sdb + lambda * dm, g.ad(c0), "[delta, Dbar] + lambda D = ad(c0)");
        detail::require_equal(delta(data.x0), Scalar(-2) * lambda * data.x1 - Scalar(2) * data.dbar(c0),
                              "delta(x0) = -2 lambda x1 - 2 Dbar(c0)");
        detail::require_equal(delta(data.x1), lambda * data.x0 + data.d(c0) + data.dbar(c1),
                              "delta(x1) = lambda x0 + D(c0) + Dbar(c1)");
        require(lambda * data.k == b(c0, data.x0), ErrorCode::ConditionViolated, "lambda k = B(c0, x0) fails");
    }

    Extension ext = gde_2d(g, b, data);
    const std::size_t s0 = ext.added.at("e0*"), s1 = ext.added.at("e1*");
    const std::size_t e0 = ext.added.at("e0"), e1 = ext.added.at("e1");
    const std::size_t n = g.dim(), m = ext.value.algebra.dim();
    Matrix big(m, m);
    big(s1, s0) = lambda;
    big(s0, s1) = lambda;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t col = ext.base_positions[i];
        const Vec x = unit(n, i);
        for (std::size_t r = 0; r < n; ++r) big(ext.base_positions[r], col) = delta.matrix()(r, i);
        if (odd) {
            big(s0, col) = b(c0, x);
            big(s1, col) = -b(c1, x);
        } else {
            big(s0, col) = -b(c1, x);
            big(s1, col) = -b(c0, x);
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        big(ext.base_positions[r], e0) = c1[r];
        big(ext.base_positions[r], e1) = c0[r];
    }
    if (odd) {
        big(e1, e0) = -lambda;
        big(s0, e1) = data.alpha;
        big(e0, e1) = lambda;
    } else {
        big(s1, e0) = data.alpha;
        big(e1, e0) = lambda;
        big(s0, e1) = -data.alpha;
        big(e0, e1) = -lambda;
    }
    LinearMap big_delta(ext.value.algebra.basis(), big, Parity::Odd);
    require(big_delta.invertible(), ErrorCode::NotInvertible, "extended Delta is singular");
    ext.value.derivation = big_delta;
    ext.value.symplectic = form_from_derivation(ext.value.algebra, *ext.value.quadratic, big_delta);
    detail::certify(ext);
    return ext;
}

}  // namespace superalg
