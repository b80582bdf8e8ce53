#include "superalg/decompositions.hpp"

#include "support.hpp"

namespace superalg {

using detail::require;

std::string to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::OddSymp1d: return "odd_symp_1d";
        case SplitKind::EvenSymp1dDouble: return "even_symp_1d_double";
        case SplitKind::EvenSymp1dGeneralized: return "even_symp_1d_generalized";
        case SplitKind::DirectSum: return "direct_sum";
        case SplitKind::OddQuadOddSymp1d: return "odd_quad_odd_symp_1d";
        case SplitKind::OddQuadEvenSymp2d: return "odd_quad_even_symp_2d";
        case SplitKind::EvenQuadOddSymp2d: return "even_quad_odd_symp_2d";
    }
    return "unknown";
}

namespace {

// Input basis expressed as h (first r columns) followed by the extra vectors.
struct Frame {
    std::size_t r = 0;
    std::vector<Vec> h;
    Matrix q;
    Matrix qinv;

    Frame(const std::vector<Vec>& h_rows, const std::vector<Vec>& extra) : r(h_rows.size()), h(h_rows) {
        std::vector<Vec> cols = h_rows;
        cols.insert(cols.end(), extra.begin(), extra.end());
        const std::size_t n = cols.empty() ? 0 : cols.front().size();
        q = Matrix::from_columns(cols, n);
        auto inv = inverse(q);
        require(inv.has_value(), ErrorCode::InvariantViolation, "split frame is not a basis");
        qinv = *inv;
    }

    Vec coords(const Vec& v) const { return qinv.apply(v); }
    Vec head(const Vec& v) const {
        Vec c = coords(v);
        return Vec(c.begin(), c.begin() + static_cast<long>(r));
    }
    Scalar at(const Vec& v, std::size_t k) const { return coords(v)[r + k]; }
};

std::size_t pivot(const Vec& v) {
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    return p;
}

GradedBasis frame_basis(const LieSuperalgebra& g, const std::vector<Vec>& h) {
    std::vector<std::string> labels;
    std::vector<Parity> parities;
    for (const auto& v : h) {
        labels.push_back(g.basis().label(pivot(v)));
        auto deg = degree_of(g.basis(), v);
        require(deg.has_value(), ErrorCode::InvariantViolation, "complement is not graded");
        parities.push_back(*deg);
    }
    return GradedBasis::from_parities(labels, parities);
}

// Bracket p o [,] on h.
LieSuperalgebra projected_algebra(const LieSuperalgebra& g, const Frame& f, const GradedBasis& basis) {
    detail::BracketTable table(basis);
    for (std::size_t i = 0; i < f.r; ++i)
        for (std::size_t j = i; j < f.r; ++j) table.add(i, j, f.head(g.bracket(f.h[i], f.h[j])));
    return table.build();
}

BilinearForm restricted_form(const BilinearForm& form, const Frame& f, const GradedBasis& basis) {
    Matrix m(f.r, f.r);
    for (std::size_t i = 0; i < f.r; ++i)
        for (std::size_t j = 0; j < f.r; ++j) m(i, j) = form(f.h[i], f.h[j]);
    return BilinearForm(basis, m, form.parity());
}

// p o op restricted to h, where op(v) is any linear map of the input.
template <class Op>
LinearMap projected_map(const Frame& f, const GradedBasis& basis, Parity degree, Op op) {
    Matrix m(f.r, f.r);
    for (std::size_t i = 0; i < f.r; ++i) m.set_column(i, f.head(op(f.h[i])));
    return LinearMap(basis, m, degree);
}

Matrix embedding_for(const Extension& ext, const Frame& f, const std::map<std::string, Vec>& extra) {
    const std::size_t m = ext.value.algebra.dim();
    const std::size_t n = f.q.rows();
    Matrix p(n, m);
    for (std::size_t i = 0; i < f.r; ++i) p.set_column(ext.base_positions[i], f.h[i]);
    for (const auto& [role, v] : extra) p.set_column(ext.added.at(role), v);
    return p;
}

// Runs the construction, attaches the embedding and enforces the round trip.
template <class Build>
void finish(SplitResult& out, const LieSuperalgebra& g, const std::optional<BilinearForm>& b,
            const std::optional<BilinearForm>& omega, const Frame& f, const std::map<std::string, Vec>& extra,
            Build build) {
    try {
        out.reconstructed = build();
    } catch (const AlgebraError& e) {
        fail(ErrorCode::RoundTripFailed, std::string("recovered parameters rejected: ") + e.what());
    }
    out.embedding = embedding_for(out.reconstructed, f, extra);
    require(round_trip_holds(g, b, omega, out), ErrorCode::RoundTripFailed,
            "reconstruction differs from the input");
}

std::optional<Vec> first_partner(const BilinearForm& form, const Vec& star, const std::vector<Vec>& candidates) {
    for (const auto& v : candidates) {
        Scalar c = form(star, v);
        if (c != 0) return Scalar(1) / c * v;
    }
    return std::nullopt;
}

std::optional<Scalar> rational_sqrt(const Scalar& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Scalar(mpq_class(rn, rd));
}

std::vector<Vec> units_of(const GradedBasis& b, Parity p) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (b.parity(i) == p) out.push_back(unit(b.dim(), i));
    return out;
}

// A nonzero v in the span with q(v) = v^T G v = 0, if one is found over Q.
std::optional<Vec> rational_isotropic(const BilinearForm& omega, const std::vector<Vec>& span) {
    const std::size_t d = span.size();
    std::vector<Vec> u = span;
    auto q = [&](const Vec& v) { return omega(v, v); };
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : u)
            if (q(v) == 0) return v;
        // q(x u_i + u_j) = a x^2 + 2 b x + c
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                const Scalar a = q(u[i]), bb = omega(u[i], u[j]), c = q(u[j]);
                auto root = rational_sqrt(bb * bb - a * c);
                if (!root) continue;
                Scalar x = (-bb + *root) / a;
                Vec v = x * u[i] + u[j];
                if (!is_zero(v)) return v;
            }
        // Second pass on an orthogonalised basis.
        for (std::size_t i = 0; i < d; ++i) {
            const Scalar a = q(u[i]);
            if (a == 0) return u[i];
            for (std::size_t j = i + 1; j < d; ++j) u[j] = u[j] - (omega(u[i], u[j]) / a) * u[i];
        }
    }
    return std::nullopt;
}

SplitResult split_direct_sum(const LieSuperalgebra& g, const BilinearForm& omega, const Vec& star) {
    const std::size_t n = g.dim();
    SplitResult out;
    out.kind = SplitKind::DirectSum;
    out.ideal_norm = omega(star, star);
    Subspace h = orthogonal_subspace(g, omega, Subspace(n, {star}));
    require(h.dim() > 0, ErrorCode::EmptyBase, "nothing is left after removing the central ideal");
    Frame f(h.basis(), {star});
    GradedBasis hb = frame_basis(g, h.basis());
    out.base.algebra = projected_algebra(g, f, hb);
    out.base.symplectic = restricted_form(omega, f, hb);

    DirectSumLayout lay = direct_sum_layout(hb, GradedBasis({"e*"}, 0));
    const std::size_t m = lay.basis.dim();
    Matrix big(m, m);
    for (std::size_t i = 0; i < f.r; ++i)
        for (std::size_t j = 0; j < f.r; ++j) big(lay.left[i], lay.left[j]) = out.base.symplectic->entry(i, j);
    big(lay.right[0], lay.right[0]) = out.ideal_norm;
    LieSuperalgebra line = LieSuperalgebra::abelian(GradedBasis({"e*"}, 0));
    auto build = [&] {
        Extension ext;
        ext.value.algebra = direct_sum(out.base.algebra, line);
        ext.value.symplectic = BilinearForm(lay.basis, big, Parity::Even);
        ext.base_positions = lay.left;
        ext.added["e*"] = lay.right[0];
        detail::certify(ext);
        return ext;
    };
    finish(out, g, std::nullopt, omega, f, {{"e*", star}}, build);
    return out;
}

}  // namespace

bool round_trip_holds(const LieSuperalgebra& g, const std::optional<BilinearForm>& b,
                      const std::optional<BilinearForm>& omega, const SplitResult& split) {
    const QuadSympAlgebra& r = split.reconstructed.value;
    const Matrix& p = split.embedding;
    if (p.rows() != g.dim() || p.cols() != r.algebra.dim() || !inverse(p)) return false;
    if (!(change_basis(g, p, r.algebra.basis()) == r.algebra)) return false;
    if (b && (!r.quadratic || !(p.transpose() * b->matrix() * p == r.quadratic->matrix()))) return false;
    if (omega && (!r.symplectic || !(p.transpose() * omega->matrix() * p == r.symplectic->matrix()))) return false;
    return true;
}

SplitResult split_symplectic(const LieSuperalgebra& g, const BilinearForm& omega) {
    detail::require_symplectic(g, omega, "omega");
    Subspace z = center(g);
    require(z.dim() > 0, ErrorCode::EmptyCenter, "the center is zero");
    const bool odd_omega = omega.parity() == Parity::Odd;

    Vec star;
    if (odd_omega) {
        star = z.basis().front();
    } else if (Subspace z0 = z.part(g.basis(), Parity::Even); z0.dim() > 0) {
        star = z0.basis().front();
    } else {
        const auto& odd_center = z.basis();
        auto iso = rational_isotropic(omega, odd_center);
        if (!iso) return split_direct_sum(g, omega, odd_center.front());
        star = *iso;
    }
    const Parity pstar = *degree_of(g.basis(), star);
    const Parity pe = odd_omega ? pstar + Parity::Odd : pstar;
    auto partner = first_partner(omega, star, units_of(g.basis(), pe));
    require(partner.has_value(), ErrorCode::InvariantViolation, "no partner for the central vector");
    Vec e = *partner;
    if (!odd_omega && pe == Parity::Odd) e = e - (omega(e, e) / 2) * star;

    return split_symplectic_along(g, omega, star, e);
}

SplitResult split_symplectic_along(const LieSuperalgebra& g, const BilinearForm& omega, const Vec& star,
                                   const Vec& e) {
    detail::require_symplectic(g, omega, "omega");
    const std::size_t n = g.dim();
    const bool odd_omega = omega.parity() == Parity::Odd;
    detail::require(center(g).contains(star), ErrorCode::ConditionViolated, "e* is not central");
    const auto pstar = degree_of(g.basis(), star);
    const auto pe_opt = degree_of(g.basis(), e);
    require(pstar && pe_opt && !is_zero(star) && !is_zero(e), ErrorCode::WrongParity, "e* and e must be homogeneous");
    const Parity pe = *pe_opt;
    require(pe == (odd_omega ? *pstar + Parity::Odd : *pstar), ErrorCode::WrongParity, "e has the wrong parity");
    require(omega(star, e) == 1, ErrorCode::ConditionViolated, "omega(e*, e) must be 1");
    Subspace h = orthogonal_subspace(g, omega, Subspace(n, {star, e}));
    Frame f(h.basis(), {star, e});
    GradedBasis hb = frame_basis(g, h.basis());

    SplitResult out;
    out.kind = odd_omega ? SplitKind::OddSymp1d
                         : (pe == Parity::Even ? SplitKind::EvenSymp1dDouble : SplitKind::EvenSymp1dGeneralized);
    out.base.algebra = projected_algebra(g, f, hb);
    out.base.symplectic = restricted_form(omega, f, hb);
    const BilinearForm& wh = *out.base.symplectic;

    Ext1Data data;
    data.d = projected_map(f, hb, pe, [&](const Vec& x) { return g.bracket(e, x); });
    if (pe == Parity::Odd) {
        data.mode = Ext1Mode::Generalized;
        Vec ee = g.bracket(e, e);
        data.x0 = f.head(ee);
        data.k = f.at(ee, 0);
    } else {
        data.mode = Ext1Mode::Double;
        data.x0 = zeros(f.r);
        // beta(X) = s omega(b0, X)
        const Scalar s = odd_omega ? -1 : 1;
        Vec beta(f.r);
        for (std::size_t i = 0; i < f.r; ++i) beta[i] = s * f.at(g.bracket(e, f.h[i]), 0);
        auto b0 = solve(wh.matrix().transpose(), beta);
        require(b0.has_value(), ErrorCode::RoundTripFailed, "no b0 reproduces [e, .]");
        data.b0 = *b0;
    }
    out.ext1 = data;
    finish(out, g, std::nullopt, omega, f, {{"e*", star}, {"e", e}},
           [&] { return symplectic_double_extension(out.base.algebra, wh, data); });
    return out;
}

namespace {

SplitResult split_quad_1d(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                          const LinearMap& delta, const Vec& star, const Vec& e, const Scalar& lambda) {
    const std::size_t n = g.dim();
    SplitResult out;
    Subspace h = orthogonal_subspace(g, b, Subspace(n, {star, e}));
    Frame f(h.basis(), {star, e});
    GradedBasis hb = frame_basis(g, h.basis());
    out.kind = SplitKind::OddQuadOddSymp1d;
    out.base.algebra = projected_algebra(g, f, hb);
    out.base.quadratic = restricted_form(b, f, hb);
    out.base.symplectic = restricted_form(omega, f, hb);
    out.base.derivation = projected_map(f, hb, Parity::Even, [&](const Vec& x) { return delta(x); });
    GodeData data;
    data.dbar = projected_map(f, hb, Parity::Odd, [&](const Vec& x) { return g.bracket(e, x); });
    Vec ee = g.bracket(e, e);
    data.x0 = f.head(ee);
    data.k = f.at(ee, 0);
    data.c1 = f.head(delta(e));
    data.lambda = lambda;
    out.gode = data;
    finish(out, g, b, omega, f, {{"e*", star}, {"e", e}}, [&] {
        return gode_1d_symplectic(out.base.algebra, *out.base.quadratic, *out.base.symplectic, data);
    });
    return out;
}

SplitResult split_quad_2d(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                          const LinearMap& delta, const Vec& s0, const Vec& s1, const Vec& e0, const Vec& e1,
                          const Scalar& lambda) {
    const std::size_t n = g.dim();
    const bool odd_b = b.parity() == Parity::Odd;
    SplitResult out;
    Subspace h = orthogonal_subspace(g, b, Subspace(n, {s0, s1, e0, e1}));
    Frame f(h.basis(), {s0, s1, e0, e1});
    GradedBasis hb = frame_basis(g, h.basis());
    out.kind = odd_b ? SplitKind::OddQuadEvenSymp2d : SplitKind::EvenQuadOddSymp2d;
    out.base.algebra = projected_algebra(g, f, hb);
    out.base.quadratic = restricted_form(b, f, hb);
    out.base.symplectic = restricted_form(omega, f, hb);
    out.base.derivation = projected_map(f, hb, Parity::Odd, [&](const Vec& x) { return delta(x); });
    Ext2Data data;
    data.d = projected_map(f, hb, Parity::Even, [&](const Vec& x) { return g.bracket(e0, x); });
    data.dbar = projected_map(f, hb, Parity::Odd, [&](const Vec& x) { return g.bracket(e1, x); });
    Vec v11 = g.bracket(e1, e1);
    data.x0 = f.head(v11);
    data.k = f.at(v11, 0);
    data.x1 = f.head(g.bracket(e0, e1));
    data.c1 = f.head(delta(e0));
    data.c0 = f.head(delta(e1));
    data.lambda = lambda;
    data.alpha = odd_b ? f.at(delta(e1), 0) : f.at(delta(e0), 1);
    out.ext2 = data;
    finish(out, g, b, omega, f, {{"e0*", s0}, {"e1*", s1}, {"e0", e0}, {"e1", e1}}, [&] {
        return gde_2d_symplectic(out.base.algebra, *out.base.quadratic, *out.base.symplectic, data);
    });
    return out;
}

// c with v = c w, if v is a multiple of the nonzero vector w.
std::optional<Scalar> ratio(const Vec& v, const Vec& w) {
    const std::size_t p = pivot(w);
    const Scalar c = v[p] / w[p];
    if (v != c * w) return std::nullopt;
    return c;
}

}  // namespace

SplitResult split_quadratic_symplectic_along(const LieSuperalgebra& g, const BilinearForm& b,
                                             const BilinearForm& omega, const std::vector<Vec>& stars,
                                             const std::vector<Vec>& partners) {
    detail::require_quadratic(g, b, "B");
    detail::require_symplectic(g, omega, "omega");
    if (b.parity() == Parity::Even && omega.parity() == Parity::Even)
        fail(ErrorCode::UnsupportedParities, "both forms even is not covered by these splits");
    const bool one = b.parity() == Parity::Odd && omega.parity() == Parity::Odd;
    require(stars.size() == (one ? 1u : 2u) && partners.size() == stars.size(), ErrorCode::BadParams,
            one ? "expected e* and e" : "expected e0*, e1*, e0 and e1");
    const Subspace z = center(g);
    for (const auto& v : stars) require(!is_zero(v) && z.contains(v), ErrorCode::ConditionViolated, "star vector is not central");
    for (const auto& v : partners) require(!is_zero(v), ErrorCode::BadParams, "partner vector is zero");
    const LinearMap delta = symplectic_derivation(g, b, omega);
    if (one) {
        auto lambda = ratio(delta(stars[0]), stars[0]);
        require(lambda.has_value(), ErrorCode::ConditionViolated, "e* is not an eigenvector of Delta");
        return split_quad_1d(g, b, omega, delta, stars[0], partners[0], *lambda);
    }
    auto lambda = ratio(delta(stars[0]), stars[1]);
    require(lambda.has_value() && *lambda != 0, ErrorCode::ConditionViolated, "Delta(e0*) is not a multiple of e1*");
    return split_quad_2d(g, b, omega, delta, stars[0], stars[1], partners[0], partners[1], *lambda);
}

SplitResult split_quadratic_symplectic(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega) {
    return split_quadratic_symplectic_within(g, b, omega, Subspace::whole(g.dim()), Subspace::whole(g.dim()));
}

SplitResult split_quadratic_symplectic_within(const LieSuperalgebra& g, const BilinearForm& b,
                                              const BilinearForm& omega, const Subspace& star_space,
                                              const Subspace& partner_space) {
    detail::require_quadratic(g, b, "B");
    detail::require_symplectic(g, omega, "omega");
    if (b.parity() == Parity::Even && omega.parity() == Parity::Even)
        fail(ErrorCode::UnsupportedParities, "both forms even is not covered by these splits");
    const LinearMap delta = symplectic_derivation(g, b, omega);
    Subspace z0 = center(g).intersect(star_space).part(g.basis(), Parity::Even);
    require(z0.dim() > 0, ErrorCode::EmptyCenter, "no even central vector in the allowed subspace");
    auto partners = [&](Parity p) { return partner_space.part(g.basis(), p).basis(); };

    if (b.parity() == Parity::Odd && omega.parity() == Parity::Odd) {
        EigenSplit es = rational_eigen_split(delta, z0);
        require(!es.pairs.empty(), ErrorCode::IrrationalSpectrum, "Delta has no rational eigenvalue on the center");
        const Scalar lambda = es.pairs.front().value;
        const Vec star = es.pairs.front().eigenspace.basis().front();
        auto partner = first_partner(b, star, partners(Parity::Odd));
        require(partner.has_value(), ErrorCode::InvariantViolation, "no odd partner for e*");
        return split_quad_1d(g, b, omega, delta, star, *partner, lambda);
    }

    // One form odd, the other even: Delta is odd and pairs e0* with e1*.
    const LinearMap delta2 = compose(delta, delta);
    EigenSplit es = rational_eigen_split(delta2, z0);
    const Eigenpair* chosen = nullptr;
    Scalar lambda;
    for (const auto& pair : es.pairs)
        if (auto r = rational_sqrt(pair.value); r && pair.value != 0) {
            chosen = &pair;
            lambda = *r;
            break;
        }
    require(chosen != nullptr, ErrorCode::IrrationalSpectrum, "Delta^2 has no rational square eigenvalue on the center");
    const Vec s0 = chosen->eigenspace.basis().front();
    const Vec s1 = Scalar(1) / lambda * delta(s0);
    Vec e0, e1;
    const bool odd_b = b.parity() == Parity::Odd;
    if (odd_b) {
        auto p0 = first_partner(b, s1, partners(Parity::Even));
        auto p1 = first_partner(b, s0, partners(Parity::Odd));
        require(p0 && p1, ErrorCode::InvariantViolation, "no partners for e0*, e1*");
        e0 = *p0;
        e1 = *p1;
        e0 = e0 - b(e0, e1) * s0;
    } else {
        auto p0 = first_partner(b, s0, partners(Parity::Even));
        auto p1 = first_partner(b, s1, partners(Parity::Odd));
        require(p0 && p1, ErrorCode::InvariantViolation, "no partners for e0*, e1*");
        e0 = *p0;
        e1 = *p1;
        e0 = e0 - (b(e0, e0) / 2) * s0;
    }
    return split_quad_2d(g, b, omega, delta, s0, s1, e0, e1, lambda);
}

}  // namespace superalg
