#include "superalg/manin.hpp"

#include "support.hpp"

namespace superalg {

using detail::require;

Report manin_pair_report(const LieSuperalgebra& g, const BilinearForm& b, const Subspace& a_part,
                         const Subspace& b_part) {
    const std::size_t n = g.dim();
    auto bad = [](const std::string& why) {
        Report r;
        r.pass = false;
        r.detail = why;
        return r;
    };
    if (a_part.ambient() != n || b_part.ambient() != n) fail(ErrorCode::DimensionMismatch, "factor of another space");
    if (!a_part.is_graded(g.basis()) || !b_part.is_graded(g.basis())) return bad("factor is not graded");
    if (a_part.dim() + b_part.dim() != n || a_part.sum(b_part).dim() != n) return bad("factors are not complementary");
    if (!is_subalgebra(g, a_part) || !is_subalgebra(g, b_part)) return bad("factor is not a subalgebra");
    for (const auto* s : {&a_part, &b_part})
        for (const auto& x : s->basis())
            for (const auto& y : s->basis())
                if (b(x, y) != 0) return bad("factor is not isotropic for B");
    return {};
}

namespace {

bool isotropic(const BilinearForm& w, const Subspace& s) {
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            if (w(x, y) != 0) return false;
    return true;
}

bool stable(const LinearMap& d, const Subspace& s) {
    for (const auto& x : s.basis())
        if (!s.contains(d(x))) return false;
    return true;
}

Subspace embed_subspace(const Extension& ext, const Subspace& s, const std::vector<std::string>& roles) {
    const std::size_t m = ext.value.algebra.dim();
    std::vector<Vec> vs;
    for (const auto& x : s.basis()) {
        Vec v = zeros(m);
        for (std::size_t i = 0; i < x.size(); ++i) v[ext.base_positions[i]] = x[i];
        vs.push_back(v);
    }
    for (const auto& r : roles) vs.push_back(unit(m, ext.added.at(r)));
    return Subspace(m, vs);
}

void require_special(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega, const Subspace& a,
                     const Subspace& bb) {
    require(special_check(g, b, omega, a, bb), ErrorCode::ConditionViolated,
            "(a, b) is not a special Manin pair of the base");
}

void require_in(const Subspace& s, const Vec& v, const std::string& name) {
    require(s.contains(v), ErrorCode::StabilityViolated, name + " must lie in b");
}

void require_stable(const LinearMap& d, const Subspace& s, const std::string& what) {
    require(stable(d, s), ErrorCode::StabilityViolated, what);
}

}  // namespace

ManinSplit manin_split(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega) {
    const std::size_t n = g.dim();
    LinearMap delta = symplectic_derivation(g, b, omega);
    ManinSplit out;
    out.delta_tilde = delta.degree() == Parity::Odd ? supercommutator(delta, delta) : delta;
    EigenSplit es = rational_eigen_split(out.delta_tilde, Subspace::whole(n));
    require(es.fully_rational(), ErrorCode::IrrationalSpectrum, "the operator has irrational eigenvalues");
    std::vector<Vec> pos, neg;
    for (const auto& p : es.pairs) {
        require(p.value != 0, ErrorCode::ZeroEigenvalue, "zero is an eigenvalue");
        bool paired = false;
        for (const auto& q : es.pairs)
            if (q.value == -p.value && q.multiplicity == p.multiplicity) paired = true;
        require(paired, ErrorCode::InvariantViolation, "spectrum is not symmetric under negation");
        auto& side = p.value > 0 ? pos : neg;
        side.insert(side.end(), p.generalized.basis().begin(), p.generalized.basis().end());
    }
    out.spectrum = es.pairs;
    out.a = Subspace(n, pos);
    out.b = Subspace(n, neg);
    Report pair = manin_pair_report(g, b, out.a, out.b);
    require(pair.pass, ErrorCode::InvariantViolation, "spectral split is not a Manin pair: " + pair.detail);
    require(special_check(g, b, omega, out.a, out.b), ErrorCode::InvariantViolation,
            "spectral split is not special");
    Subspace z = center(g);
    out.center_a = z.intersect(out.a);
    out.center_b = z.intersect(out.b);
    return out;
}

bool special_check(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                   const Subspace& a_part, const Subspace& b_part) {
    if (!manin_pair_report(g, b, a_part, b_part).pass) return false;
    const bool by_form = isotropic(omega, a_part) && isotropic(omega, b_part);
    LinearMap delta = symplectic_derivation(g, b, omega);
    const bool by_map = stable(delta, a_part) && stable(delta, b_part);
    require(by_form == by_map, ErrorCode::InvariantViolation,
            "omega-isotropy and Delta-stability disagree on a Manin pair");
    return by_form;
}

ManinExtension manin_double_extension(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                                      const Subspace& a_part, const Subspace& b_part, const GodeData& data) {
    require_special(g, b, omega, a_part, b_part);
    require(data.k == 0, ErrorCode::ConditionViolated, "k must vanish");
    require(data.c1.has_value(), ErrorCode::BadParams, "c1 is required");
    LinearMap delta = symplectic_derivation(g, b, omega);
    require_stable(data.dbar, b_part, "Dbar must stabilize b");
    require_in(b_part, data.x0, "x0");
    require_in(b_part, *data.c1, "c1");
    require_stable(delta, a_part, "delta must stabilize a");
    require_stable(delta, b_part, "delta must stabilize b");
    ManinExtension out;
    out.ext = gode_1d_symplectic(g, b, omega, data);
    out.a = embed_subspace(out.ext, a_part, {"e*"});
    out.b = embed_subspace(out.ext, b_part, {"e"});
    const QuadSympAlgebra& t = out.ext.value;
    require(special_check(t.algebra, *t.quadratic, *t.symplectic, out.a, out.b), ErrorCode::InvariantViolation,
            "extended pair is not special");
    return out;
}

ManinExtension manin_double_extension(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                                      const Subspace& a_part, const Subspace& b_part, const Ext2Data& data) {
    require_special(g, b, omega, a_part, b_part);
    require(data.k == 0, ErrorCode::ConditionViolated, "k must vanish");
    require(data.alpha == 0, ErrorCode::ConditionViolated, "alpha must vanish");
    require(data.c0 && data.c1, ErrorCode::BadParams, "c0 and c1 are required");
    LinearMap delta = symplectic_derivation(g, b, omega);
    require_stable(data.d, b_part, "D must stabilize b");
    require_stable(data.dbar, b_part, "Dbar must stabilize b");
    require_in(b_part, data.x0, "x0");
    require_in(b_part, data.x1, "x1");
    require_in(b_part, *data.c0, "c0");
    require_in(b_part, *data.c1, "c1");
    require_stable(delta, a_part, "delta must stabilize a");
    require_stable(delta, b_part, "delta must stabilize b");
    ManinExtension out;
    out.ext = gde_2d_symplectic(g, b, omega, data);
    out.a = embed_subspace(out.ext, a_part, {"e0*", "e1*"});
    out.b = embed_subspace(out.ext, b_part, {"e0", "e1"});
    const QuadSympAlgebra& t = out.ext.value;
    require(special_check(t.algebra, *t.quadratic, *t.symplectic, out.a, out.b), ErrorCode::InvariantViolation,
            "extended pair is not special");
    return out;
}

ManinInverse manin_inverse(const LieSuperalgebra& g, const BilinearForm& b, const BilinearForm& omega,
                           const Subspace& a_part, const Subspace& b_part) {
    require(special_check(g, b, omega, a_part, b_part), ErrorCode::ConditionViolated,
            "(a, b) is not a special Manin pair");
    ManinInverse out;
    bool found = false;
    for (bool swapped : {false, true}) {
        const Subspace& star = swapped ? b_part : a_part;
        const Subspace& partner = swapped ? a_part : b_part;
        try {
            out.split = split_quadratic_symplectic_within(g, b, omega, star, partner);
        } catch (const AlgebraError& e) {
            if (e.code() != ErrorCode::EmptyCenter) throw;
            continue;
        }
        out.swapped = swapped;
        found = true;
        break;
    }
    require(found, ErrorCode::EmptyCenterInFactors, "no even central vector in a or in b");

    const Extension& rec = out.split.reconstructed;
    const Matrix& p = out.split.embedding;
    const std::size_t r = rec.base_positions.size();
    std::vector<Vec> h;
    for (std::size_t i = 0; i < r; ++i) h.push_back(p.column(rec.base_positions[i]));
    Subspace hs(g.dim(), h);
    Matrix hm = Matrix::from_columns(h, g.dim());
    auto local = [&](const Subspace& s) {
        std::vector<Vec> vs;
        const Subspace inside = s.intersect(hs);
        for (const auto& v : inside.basis()) {
            auto c = solve(hm, v);
            require(c.has_value(), ErrorCode::InvariantViolation, "vector of h without h coordinates");
            vs.push_back(*c);
        }
        return Subspace(r, vs);
    };
    const Subspace& star = out.swapped ? b_part : a_part;
    const Subspace& partner = out.swapped ? a_part : b_part;
    Subspace at = local(star), bt = local(partner);
    require(at.dim() + bt.dim() == r, ErrorCode::InvariantViolation, "factors do not split the base");

    const bool two = out.split.ext2.has_value();
    if (two) {
        require(out.split.ext2->k == 0, ErrorCode::ConditionViolated, "recovered k is not zero");
        require(out.split.ext2->alpha == 0, ErrorCode::ConditionViolated, "recovered alpha is not zero");
    } else {
        require(out.split.gode && out.split.gode->k == 0, ErrorCode::ConditionViolated, "recovered k is not zero");
    }
    // The recovered pair must rebuild the original factors.
    std::vector<std::string> stars = two ? std::vector<std::string>{"e0*", "e1*"} : std::vector<std::string>{"e*"};
    std::vector<std::string> news = two ? std::vector<std::string>{"e0", "e1"} : std::vector<std::string>{"e"};
    auto image = [&](const Subspace& s, const std::vector<std::string>& roles) {
        std::vector<Vec> vs;
        const Subspace lifted = embed_subspace(rec, s, roles);
        for (const auto& v : lifted.basis()) vs.push_back(p.apply(v));
        return Subspace(g.dim(), vs);
    };
    require(image(at, stars) == star && image(bt, news) == partner, ErrorCode::RoundTripFailed,
            "recovered factors do not rebuild the pair");
    const QuadSympAlgebra& base = out.split.base;
    require(special_check(base.algebra, *base.quadratic, *base.symplectic, at, bt), ErrorCode::InvariantViolation,
            "recovered base pair is not special");
    out.a = at;
    out.b = bt;
    return out;
}

}  // namespace superalg
