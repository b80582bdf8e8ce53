#include "superalg/sweeps.hpp"

#include "superalg/catalog.hpp"
#include "superalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace superalg::sweeps {

namespace {

constexpr std::size_t kMaxBaseDim = 8;
constexpr std::size_t kPoolCap = 48;
constexpr int kDraws = 12;

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }
bool coin(Rng& rng, int one_in = 2) { return rng() % static_cast<unsigned>(one_in) == 0; }

std::vector<Vec> homogeneous(const Subspace& s, const GradedBasis& basis, Parity p) {
    return s.part(basis, p).basis();
}

LinearMap random_map(const std::vector<LinearMap>& space, const GradedBasis& basis, Parity degree, Rng& rng) {
    Matrix m(basis.dim(), basis.dim());
    for (const auto& d : space) m = m + random_scalar(rng) * d.matrix();
    return LinearMap(basis, m, degree);
}

bool nilpotent_map(const LinearMap& d) {
    Matrix p = Matrix::identity(d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) p = p * d.matrix();
    return p.is_zero();
}

// x of parity p with ad(x) = target, if one exists.
std::optional<Vec> inner_preimage(const LieSuperalgebra& g, const Matrix& target, Parity p) {
    const std::size_t n = g.dim();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (g.basis().parity(i) == p) idx.push_back(i);
    std::vector<Vec> cols;
    for (std::size_t i : idx) {
        Matrix a = g.ad(unit(n, i));
        Vec flat;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) flat.push_back(a(r, c));
        cols.push_back(flat);
    }
    Vec rhs;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) rhs.push_back(target(r, c));
    if (cols.empty()) return is_zero(rhs) ? std::optional<Vec>(zeros(n)) : std::nullopt;
    auto sol = solve(Matrix::from_columns(cols, n * n), rhs);
    if (!sol) return std::nullopt;
    Vec x = zeros(n);
    for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = (*sol)[k];
    return x;
}

LinearMap ad_map(const LieSuperalgebra& g, const Vec& x, Parity p) { return LinearMap(g.basis(), g.ad(x), p); }

const BilinearForm& quad(const QuadSympAlgebra& q) { return *q.quadratic; }
const BilinearForm& symp(const QuadSympAlgebra& q) { return *q.symplectic; }

Sample plain(QuadSympAlgebra v) {
    const std::size_t n = v.algebra.dim();
    return Sample{std::move(v), Subspace(n), Subspace(n)};
}

// h + h^* (or h + P(h^*)) with omega = B(D~ ., .).
QuadSympAlgebra lifted(const LieSuperalgebra& h, const LinearMap& d, Variant variant) {
    Extension t = trivial_double_extension(h, variant);
    LinearMap delta = lift_derivation(h, d, variant);
    QuadSympAlgebra q = t.value;
    q.derivation = delta;
    q.symplectic = form_from_derivation(q.algebra, *q.quadratic, delta);
    return q;
}

// u -> v, v -> s u on abelian (1|1)
LinearMap swap11(long s) {
    GradedBasis b({"u", "v"}, 1);
    Matrix m(2, 2);
    m(0, 1) = s;
    m(1, 0) = 1;
    return LinearMap(b, m, Parity::Odd);
}

QuadSympAlgebra with_symplectic(const LieSuperalgebra& g, const BilinearForm& w) {
    QuadSympAlgebra q;
    q.algebra = g;
    q.symplectic = w;
    return q;
}

QuadSympAlgebra from_entry(const std::string& name, const std::string& b, const std::string& w,
                           std::optional<int> n = std::nullopt) {
    CatalogEntry e = build_catalog(name, n);
    QuadSympAlgebra q;
    q.algebra = e.value.algebra;
    if (!b.empty()) q.quadratic = e.forms.at(b);
    q.symplectic = e.forms.at(w);
    return q;
}

void add_manin(std::vector<Sample>& pool, const QuadSympAlgebra& q) {
    try {
        ManinSplit s = manin_split(q.algebra, quad(q), symp(q));
        pool.push_back(Sample{q, s.a, s.b});
    } catch (const AlgebraError&) {
        // no rational, sign-symmetric spectrum: not a usable Manin seed
    }
}

bool is_rejection(ErrorCode c) {
    return c == ErrorCode::ConditionViolated || c == ErrorCode::NotCoboundary || c == ErrorCode::StabilityViolated ||
           c == ErrorCode::ZeroLambda;
}

std::string describe(const Sample& s) {
    std::ostringstream os;
    os << "base (" << s.value.algebra.basis().n_even() << "|" << s.value.algebra.basis().n_odd() << ")";
    return os.str();
}

}  // namespace

std::string to_string(Op op) {
    switch (op) {
        case Op::SymplecticOdd: return "symplectic_double_extension_odd";
        case Op::SymplecticEven: return "symplectic_double_extension_even";
        case Op::Gode1d: return "gode_1d_symplectic";
        case Op::Gde2dOdd: return "gde_2d_symplectic_odd";
        case Op::Gde2dEven: return "gde_2d_symplectic_even";
        case Op::ManinOddOdd1d: return "manin_odd_odd_1d";
        case Op::ManinOddEven2d: return "manin_odd_even_2d";
        case Op::ManinEvenOdd2d: return "manin_even_odd_2d";
    }
    return "?";
}

std::vector<Op> all_ops() {
    return {Op::SymplecticOdd, Op::SymplecticEven, Op::Gode1d,         Op::Gde2dOdd,
            Op::Gde2dEven,     Op::ManinOddOdd1d,  Op::ManinOddEven2d, Op::ManinEvenOdd2d};
}

std::optional<Op> parse_op(const std::string& name) {
    for (Op op : all_ops())
        if (to_string(op) == name) return op;
    return std::nullopt;
}

Scalar random_scalar(Rng& rng) { return Scalar(static_cast<long>(rng() % 5) - 2); }

Scalar random_nonzero(Rng& rng) {
    static const Scalar choices[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2)};
    return choices[pick(rng, 6)];
}

Vec random_combination(const std::vector<Vec>& span, std::size_t n, Rng& rng) {
    Vec v = zeros(n);
    for (const auto& s : span) axpy(v, random_scalar(rng), s);
    return v;
}

QuadSympAlgebra zero_atom(Parity omega_parity) {
    GradedBasis b(std::vector<std::string>{}, 0);
    return with_symplectic(LieSuperalgebra::abelian(b), BilinearForm(b, Matrix(0, 0), omega_parity));
}

QuadSympAlgebra odd_line_atom() {
    GradedBasis b({"u"}, 0);
    Matrix m(1, 1);
    m(0, 0) = 1;
    return with_symplectic(LieSuperalgebra::abelian(b), BilinearForm(b, m, Parity::Even));
}

std::optional<Ext1Data> random_ext1(const LieSuperalgebra& g, const BilinearForm& omega, Rng& rng,
                                    bool nilpotent_maps) {
    const std::size_t n = g.dim();
    const GradedBasis& basis = g.basis();
    const Subspace all = Subspace::whole(n);
    const Subspace z = center(g);
    for (int draw = 0; draw < kDraws; ++draw) {
        const bool generalized = coin(rng);
        Ext1Data data;
        data.d = LinearMap::zero(basis, generalized ? Parity::Odd : Parity::Even);
        data.mode = generalized ? Ext1Mode::Generalized : Ext1Mode::Double;
        data.x0 = zeros(n);
        if (!generalized) {
            if (coin(rng, 3)) {
                data.d = ad_map(g, random_combination(homogeneous(all, basis, Parity::Even), n, rng), Parity::Even);
            } else {
                data.d = random_map(derivation_space(g, Parity::Even), basis, Parity::Even, rng);
            }
            if (nilpotent_maps && !nilpotent_map(data.d)) continue;
            if (!solve_coboundary(g, omega, coboundary_target(g, omega, data.d))) continue;
            return data;
        }
        const Vec c = random_combination(homogeneous(z, basis, Parity::Even), n, rng);
        if (coin(rng)) {
            const Vec y = random_combination(homogeneous(all, basis, Parity::Odd), n, rng);
            data.d = ad_map(g, y, Parity::Odd);
            data.x0 = g.bracket(y, y) + c;
        } else {
            data.d = random_map(derivation_space(g, Parity::Odd), basis, Parity::Odd, rng);
            auto x0 = inner_preimage(g, Scalar(2) * compose(data.d, data.d).matrix(), Parity::Even);
            if (!x0) continue;
            data.x0 = *x0 + c;
            if (!is_zero(data.d(data.x0))) continue;
        }
        if (nilpotent_maps && !nilpotent_map(data.d)) continue;
        if (omega.parity() == Parity::Even && omega(data.x0, data.x0) != 0) continue;
        data.b0 = Scalar(1, 2) * data.x0;
        return data;
    }
    return std::nullopt;
}

namespace {

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

void append(Vec& to, const Vec& v) { to.insert(to.end(), v.begin(), v.end()); }

// Random solution of f(u) = 0 for an affine f on K^m. Free directions get
// few nonzero coefficients, which keeps sampled maps sparse and makes the
// quadratic conditions checked afterwards likely to hold.
std::optional<Vec> affine_solution(std::size_t m, const std::function<Vec(const Vec&)>& f, Rng& rng) {
    const Vec f0 = f(zeros(m));
    if (m == 0) return is_zero(f0) ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < m; ++i) cols.push_back(f(unit(m, i)) - f0);
    const Matrix a = Matrix::from_columns(cols, f0.size());
    auto p = solve(a, -f0);
    if (!p) return std::nullopt;
    Vec u = *p;
    const std::vector<Vec> free = nullspace(a);
    if (!free.empty()) {
        const std::size_t used = 1 + pick(rng, std::min<std::size_t>(free.size(), 3));
        for (std::size_t t = 0; t < used; ++t) axpy(u, random_nonzero(rng), free[pick(rng, free.size())]);
    }
    return u;
}

// Linear parametrization of the unknowns: maps as combinations of a basis,
// vectors as combinations of spanning vectors.
struct Layout {
    std::size_t size = 0;
    std::size_t add(std::size_t k) {
        const std::size_t at = size;
        size += k;
        return at;
    }
};

LinearMap map_at(const std::vector<LinearMap>& space, const GradedBasis& basis, Parity degree, const Vec& u,
                 std::size_t at) {
    Matrix m(basis.dim(), basis.dim());
    for (std::size_t i = 0; i < space.size(); ++i)
        if (u[at + i] != 0) m = m + u[at + i] * space[i].matrix();
    return LinearMap(basis, m, degree);
}

Vec vec_at(const std::vector<Vec>& span, std::size_t n, const Vec& u, std::size_t at) {
    Vec v = zeros(n);
    for (std::size_t i = 0; i < span.size(); ++i)
        if (u[at + i] != 0) axpy(v, u[at + i], span[i]);
    return v;
}

// Where the parameters may live: everything, or the b factor of a pair.
struct Room {
    std::vector<Vec> even, odd, zeven, zodd;  // spans, and their central parts
    std::optional<Matrix> to_pair;            // coordinates in (a | b) when restricted
    std::size_t a_dim = 0;

    // Components along a of the images of b, which must vanish.
    Vec leak(const LinearMap& d, const Sample* pair) const {
        Vec out;
        if (!to_pair) return out;
        for (const auto& v : pair->b.basis()) {
            const Vec c = to_pair->apply(d(v));
            out.insert(out.end(), c.begin(), c.begin() + static_cast<long>(a_dim));
        }
        return out;
    }
};

Room room_for(const LieSuperalgebra& g, const Sample* pair) {
    const std::size_t n = g.dim();
    const GradedBasis& basis = g.basis();
    Room r;
    const Subspace space = pair ? pair->b : Subspace::whole(n);
    const Subspace z = center(g).intersect(space);
    r.even = homogeneous(space, basis, Parity::Even);
    r.odd = homogeneous(space, basis, Parity::Odd);
    r.zeven = homogeneous(z, basis, Parity::Even);
    r.zodd = homogeneous(z, basis, Parity::Odd);
    if (pair) {
        std::vector<Vec> cols = pair->a.basis();
        cols.insert(cols.end(), pair->b.basis().begin(), pair->b.basis().end());
        r.a_dim = pair->a.dim();
        r.to_pair = inverse(Matrix::from_columns(cols, n));
    }
    return r;
}

std::optional<Scalar> rational_root(const Scalar& x) {
    if (x <= 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Scalar(mpq_class(rn, rd));
}

// lambda values for which the linear conditions have nonzero solutions even
// on abelian bases, read off the spectrum of delta (1-dim steps) or of
// delta^2 (2-dim steps).
std::vector<Scalar> lambda_candidates(const LinearMap& delta, bool squared) {
    const LinearMap op = squared ? compose(delta, delta) : delta;
    std::vector<Scalar> values, out;
    for (const auto& pair : rational_eigen_split(op, Subspace::whole(op.dim())).pairs) values.push_back(pair.value);
    for (const auto& a : values) {
        // x0 an eigenvector: delta(x0) = -2 lambda x0, or delta^2(x0) = -2 lambda^2 x0
        if (!squared) {
            out.push_back(-a / 2);
        } else if (auto r = rational_root(-a / 2)) {
            out.push_back(*r);
            out.push_back(-*r);
        }
    }
    for (const auto& a : values)
        for (const auto& b : values) {
            if (a == b) continue;
            if (!squared) {
                out.push_back(a - b);
            } else if (auto r = rational_root(a - b)) {
                out.push_back(*r);
                out.push_back(-*r);
            }
        }
    std::erase(out, Scalar(0));
    return out;
}

Scalar draw_lambda(const std::vector<Scalar>& candidates, Rng& rng) {
    if (!candidates.empty() && coin(rng)) return candidates[pick(rng, candidates.size())];
    return random_nonzero(rng);
}

std::optional<GodeData> inner_gode(const QuadSympAlgebra& q, const LinearMap& delta, const Room& room, Rng& rng) {
    const LieSuperalgebra& g = q.algebra;
    const std::size_t n = g.dim();
    GodeData data;
    const Scalar lambda = random_nonzero(rng);
    data.lambda = lambda;
    const Vec y = random_combination(room.odd, n, rng);
    data.dbar = ad_map(g, y, Parity::Odd);
    data.x0 = g.bracket(y, y);
    data.c1 = delta(y) + lambda * y + random_combination(room.zodd, n, rng);
    data.k = quad(q)(*data.c1, data.x0) / lambda;
    return data;
}

std::optional<Ext2Data> inner_ext2(const QuadSympAlgebra& q, const LinearMap& delta, const Room& room, Rng& rng) {
    const LieSuperalgebra& g = q.algebra;
    const BilinearForm& b = quad(q);
    const std::size_t n = g.dim();
    const Vec y = random_combination(room.odd, n, rng);
    const Vec z = random_combination(room.even, n, rng);
    Ext2Data data;
    data.d = ad_map(g, z, Parity::Even);
    data.dbar = ad_map(g, y, Parity::Odd);
    data.x0 = g.bracket(y, y);
    data.x1 = g.bracket(z, y);
    const Scalar lambda = random_nonzero(rng);
    data.lambda = lambda;
    if (b.parity() == Parity::Odd) {
        if (b(data.x0, data.x1) != 0) return std::nullopt;
        data.c0 = delta(y) - lambda * z;
        data.c1 = delta(z) + lambda * y;
        data.k = (b(*data.c1, data.x0) - 2 * b(data.x1, *data.c0)) / lambda;
    } else {
        if (b(data.x0, data.x0) != 0) return std::nullopt;
        data.c1 = delta(z) - lambda * y;
        data.c0 = delta(y) + lambda * z;
        data.k = b(*data.c0, data.x0) / lambda;
    }
    return data;
}

}  // namespace

std::optional<GodeData> random_gode(const QuadSympAlgebra& q, Rng& rng, const Sample* pair) {
    const LieSuperalgebra& g = q.algebra;
    const BilinearForm& b = quad(q);
    const std::size_t n = g.dim();
    const GradedBasis& basis = g.basis();
    const Room room = room_for(g, pair);
    const LinearMap delta = symplectic_derivation(g, b, symp(q));
    if (coin(rng, 3)) return inner_gode(q, delta, room, rng);
    const std::vector<LinearMap> odd_maps = derivation_space(g, Parity::Odd, &b);
    const std::vector<Scalar> lambdas = lambda_candidates(delta, false);
    for (int draw = 0; draw < kDraws; ++draw) {
        const Scalar lambda = draw_lambda(lambdas, rng);
        // Stage one: Dbar and c1 with [delta, Dbar] + lambda Dbar = ad(c1).
        Layout l1;
        const std::size_t at_d = l1.add(odd_maps.size()), at_c = l1.add(room.odd.size());
        auto u = affine_solution(
            l1.size,
            [&](const Vec& u) {
                const LinearMap dbar = map_at(odd_maps, basis, Parity::Odd, u, at_d);
                const Vec c1 = vec_at(room.odd, n, u, at_c);
                Vec r = flatten(supercommutator(delta, dbar).matrix() + lambda * dbar.matrix() - g.ad(c1));
                append(r, room.leak(dbar, pair));
                return r;
            },
            rng);
        if (!u) continue;
        GodeData data;
        data.lambda = lambda;
        data.dbar = map_at(odd_maps, basis, Parity::Odd, *u, at_d);
        const Vec c1 = vec_at(room.odd, n, *u, at_c);
        const Matrix sq = compose(data.dbar, data.dbar).matrix();
        // Stage two: x0 and a central shift of c1.
        Layout l2;
        const std::size_t at_x = l2.add(room.even.size()), at_z = l2.add(room.zodd.size());
        auto w = affine_solution(
            l2.size,
            [&](const Vec& w) {
                const Vec x0 = vec_at(room.even, n, w, at_x);
                const Vec c = c1 + vec_at(room.zodd, n, w, at_z);
                Vec r = flatten(sq - Scalar(1, 2) * g.ad(x0));
                append(r, data.dbar(x0));
                append(r, Scalar(2) * data.dbar(c) - delta(x0) - Scalar(2) * lambda * x0);
                return r;
            },
            rng);
        if (!w) continue;
        data.x0 = vec_at(room.even, n, *w, at_x);
        data.c1 = c1 + vec_at(room.zodd, n, *w, at_z);
        data.k = b(*data.c1, data.x0) / lambda;
        return data;
    }
    return inner_gode(q, delta, room, rng);
}

std::optional<Ext2Data> random_ext2(const QuadSympAlgebra& q, Rng& rng, const Sample* pair) {
    const LieSuperalgebra& g = q.algebra;
    const BilinearForm& b = quad(q);
    const std::size_t n = g.dim();
    const GradedBasis& basis = g.basis();
    const Room room = room_for(g, pair);
    const LinearMap delta = symplectic_derivation(g, b, symp(q));
    const bool odd_b = b.parity() == Parity::Odd;
    if (coin(rng, 3)) return inner_ext2(q, delta, room, rng);
    const std::vector<LinearMap> even_maps = derivation_space(g, Parity::Even, &b);
    const std::vector<LinearMap> odd_maps = derivation_space(g, Parity::Odd, &b);
    const std::vector<Scalar> lambdas = lambda_candidates(delta, false);
    for (int draw = 0; draw < kDraws; ++draw) {
        const Scalar lambda = draw_lambda(lambdas, rng);
        // Stage one: D, Dbar, c0, c1 from the two ad conditions.
        Layout l1;
        const std::size_t at_d = l1.add(even_maps.size()), at_db = l1.add(odd_maps.size());
        const std::size_t at_c0 = l1.add(room.even.size()), at_c1 = l1.add(room.odd.size());
        auto u = affine_solution(
            l1.size,
            [&](const Vec& u) {
                const LinearMap d = map_at(even_maps, basis, Parity::Even, u, at_d);
                const LinearMap dbar = map_at(odd_maps, basis, Parity::Odd, u, at_db);
                const Vec c0 = vec_at(room.even, n, u, at_c0), c1 = vec_at(room.odd, n, u, at_c1);
                const Matrix sd = supercommutator(delta, d).matrix(), sdb = supercommutator(delta, dbar).matrix();
                const Scalar s = odd_b ? Scalar(1) : Scalar(-1);
                Vec r = flatten(sdb - s * lambda * d.matrix() - g.ad(c0));
                append(r, flatten(sd + s * lambda * dbar.matrix() - g.ad(c1)));
                append(r, room.leak(d, pair));
                append(r, room.leak(dbar, pair));
                return r;
            },
            rng);
        if (!u) continue;
        Ext2Data data;
        data.lambda = lambda;
        data.alpha = pair ? Scalar(0) : random_scalar(rng);
        data.d = map_at(even_maps, basis, Parity::Even, *u, at_d);
        data.dbar = map_at(odd_maps, basis, Parity::Odd, *u, at_db);
        const Vec c0 = vec_at(room.even, n, *u, at_c0), c1 = vec_at(room.odd, n, *u, at_c1);
        const Matrix sq = compose(data.dbar, data.dbar).matrix();
        const Matrix mixed = supercommutator(data.d, data.dbar).matrix();
        // Stage two: x0, x1 and central shifts of c0, c1.
        Layout l2;
        const std::size_t at_x0 = l2.add(room.even.size()), at_x1 = l2.add(room.odd.size());
        const std::size_t at_z0 = l2.add(room.zeven.size()), at_z1 = l2.add(room.zodd.size());
        auto w = affine_solution(
            l2.size,
            [&](const Vec& w) {
                const Vec x0 = vec_at(room.even, n, w, at_x0), x1 = vec_at(room.odd, n, w, at_x1);
                const Vec a0 = c0 + vec_at(room.zeven, n, w, at_z0), a1 = c1 + vec_at(room.zodd, n, w, at_z1);
                Vec r = flatten(sq - Scalar(1, 2) * g.ad(x0));
                append(r, data.dbar(x0));
                append(r, flatten(mixed - g.ad(x1)));
                append(r, data.d(x0) - Scalar(2) * data.dbar(x1));
                if (odd_b) {
                    append(r, delta(x0) + Scalar(2) * data.dbar(a0) - Scalar(2) * lambda * x1);
                    append(r, delta(x1) - data.d(a0) - data.dbar(a1) + lambda * x0);
                } else {
                    append(r, delta(x0) + Scalar(2) * lambda * x1 + Scalar(2) * data.dbar(a0));
                    append(r, delta(x1) - lambda * x0 - data.d(a0) - data.dbar(a1));
                }
                return r;
            },
            rng);
        if (!w) continue;
        data.x0 = vec_at(room.even, n, *w, at_x0);
        data.x1 = vec_at(room.odd, n, *w, at_x1);
        data.c0 = c0 + vec_at(room.zeven, n, *w, at_z0);
        data.c1 = c1 + vec_at(room.zodd, n, *w, at_z1);
        if (odd_b) {
            if (b(data.x0, data.x1) != 0) continue;
            data.k = (b(*data.c1, data.x0) - 2 * b(data.x1, *data.c0)) / lambda;
        } else {
            if (b(data.x0, data.x0) != 0) continue;
            data.k = b(*data.c0, data.x0) / lambda;
        }
        return data;
    }
    return inner_ext2(q, delta, room, rng);
}

std::vector<Sample> seed_pool(Op op) {
    std::vector<Sample> pool;
    const LieSuperalgebra l = catalog::L();
    const LieSuperalgebra a10 = LieSuperalgebra::abelian(1, 0), a01 = LieSuperalgebra::abelian(0, 1);
    const LieSuperalgebra a11 = LieSuperalgebra::abelian(1, 1);
    switch (op) {
        case Op::SymplecticOdd: {
            pool.push_back(plain(zero_atom(Parity::Odd)));
            pool.push_back(plain(from_entry("m", "", "omega")));
            pool.push_back(plain(from_entry("h_tensor_A_n", "", "omega", 1)));
            pool.push_back(plain(from_entry("h_tensor_A_n", "", "omega", 2)));
            pool.push_back(plain(from_entry("L_odd_trivial", "", "omega")));
            pool.push_back(plain(from_entry("L_even_trivial", "", "omega")));
            Matrix w(2, 2);
            w(0, 1) = 1;
            w(1, 0) = -1;
            pool.push_back(plain(with_symplectic(a11, BilinearForm(a11.basis(), w, Parity::Odd))));
            break;
        }
        case Op::SymplecticEven: {
            pool.push_back(plain(zero_atom(Parity::Even)));
            pool.push_back(plain(odd_line_atom()));
            pool.push_back(plain(with_symplectic(catalog::h2(), catalog::h2_omega())));
            pool.push_back(plain(from_entry("L_odd_trivial", "", "omega_even")));
            const LieSuperalgebra a02 = LieSuperalgebra::abelian(0, 2);
            pool.push_back(plain(with_symplectic(a02, BilinearForm(a02.basis(), Matrix::identity(2), Parity::Even))));
            break;
        }
        case Op::Gode1d:
        case Op::ManinOddOdd1d: {
            std::vector<QuadSympAlgebra> qs;
            QuadSympAlgebra zero = zero_atom(Parity::Odd);
            zero.quadratic = BilinearForm(zero.algebra.basis(), Matrix(0, 0), Parity::Odd);
            qs.push_back(zero);
            qs.push_back(lifted(a10, LinearMap::identity(a10.basis()), Variant::Odd));
            qs.push_back(lifted(a01, LinearMap::identity(a01.basis()), Variant::Odd));
            qs.push_back(lifted(l, catalog::L_D(), Variant::Odd));
            for (auto& q : qs) {
                if (op == Op::Gode1d)
                    pool.push_back(plain(q));
                else if (q.algebra.dim() == 0)
                    pool.push_back(plain(q));
                else
                    add_manin(pool, q);
            }
            break;
        }
        case Op::Gde2dOdd:
        case Op::Gde2dEven:
        case Op::ManinOddEven2d:
        case Op::ManinEvenOdd2d: {
            const bool odd_b = op == Op::Gde2dOdd || op == Op::ManinOddEven2d;
            const bool manin = op == Op::ManinOddEven2d || op == Op::ManinEvenOdd2d;
            const Variant v = odd_b ? Variant::Odd : Variant::Even;
            std::vector<QuadSympAlgebra> qs;
            QuadSympAlgebra zero = zero_atom(odd_b ? Parity::Even : Parity::Odd);
            zero.quadratic = BilinearForm(zero.algebra.basis(), Matrix(0, 0), odd_b ? Parity::Odd : Parity::Even);
            qs.push_back(zero);
            // s = 2 makes delta^2 = +-2, so lambda = 1, 2 admit nonzero parameters
            qs.push_back(lifted(a11, LinearMap(a11.basis(), swap11(1).matrix(), Parity::Odd), v));
            qs.push_back(lifted(a11, LinearMap(a11.basis(), swap11(2).matrix(), Parity::Odd), v));
            qs.push_back(lifted(l, catalog::L_Delta(), v));
            for (auto& q : qs) {
                if (!manin || q.algebra.dim() == 0)
                    pool.push_back(plain(q));
                else
                    add_manin(pool, q);
            }
            break;
        }
    }
    return pool;
}

namespace {

struct Step {
    Extension ext;
    Subspace a, b;  // Manin factors of the result
};

std::optional<Step> construct(Op op, const Sample& s, Rng& rng) {
    const QuadSympAlgebra& q = s.value;
    switch (op) {
        case Op::SymplecticOdd:
        case Op::SymplecticEven: {
            auto data = random_ext1(q.algebra, symp(q), rng);
            if (!data) return std::nullopt;
            if (data->mode == Ext1Mode::Double && coin(rng)) data->b0.reset();
            return Step{symplectic_double_extension(q.algebra, symp(q), *data), {}, {}};
        }
        case Op::Gode1d: {
            auto data = random_gode(q, rng);
            if (!data) return std::nullopt;
            return Step{gode_1d_symplectic(q.algebra, quad(q), symp(q), *data), {}, {}};
        }
        case Op::Gde2dOdd:
        case Op::Gde2dEven: {
            auto data = random_ext2(q, rng);
            if (!data) return std::nullopt;
            return Step{gde_2d_symplectic(q.algebra, quad(q), symp(q), *data), {}, {}};
        }
        case Op::ManinOddOdd1d: {
            auto data = random_gode(q, rng, &s);
            if (!data) return std::nullopt;
            ManinExtension m = manin_double_extension(q.algebra, quad(q), symp(q), s.a, s.b, *data);
            return Step{m.ext, m.a, m.b};
        }
        case Op::ManinOddEven2d:
        case Op::ManinEvenOdd2d: {
            auto data = random_ext2(q, rng, &s);
            if (!data) return std::nullopt;
            ManinExtension m = manin_double_extension(q.algebra, quad(q), symp(q), s.a, s.b, *data);
            return Step{m.ext, m.a, m.b};
        }
    }
    return std::nullopt;
}

// Splits the constructed structure and rebuilds it from the recovered data.
// Returns an empty string on success, otherwise what went wrong.
std::string check_split(Op op, const Sample& base, const Step& step) {
    const QuadSympAlgebra& t = step.ext.value;
    const LieSuperalgebra& g = t.algebra;
    const std::size_t want = g.dim() - (op == Op::Gde2dOdd || op == Op::Gde2dEven || op == Op::ManinOddEven2d ||
                                                op == Op::ManinEvenOdd2d
                                            ? 4
                                            : 2);
    SplitResult sp;
    Extension again;
    switch (op) {
        case Op::SymplecticOdd:
        case Op::SymplecticEven:
            sp = split_symplectic(g, symp(t));
            if (!sp.ext1) return "split did not recover extension data";
            again = symplectic_double_extension(sp.base.algebra, symp(sp.base), *sp.ext1);
            break;
        case Op::Gode1d:
        case Op::Gde2dOdd:
        case Op::Gde2dEven:
            sp = split_quadratic_symplectic(g, quad(t), symp(t));
            if (op == Op::Gode1d) {
                if (!sp.gode) return "split did not recover 1-dim data";
                again = gode_1d_symplectic(sp.base.algebra, quad(sp.base), symp(sp.base), *sp.gode);
            } else {
                if (!sp.ext2) return "split did not recover 2-dim data";
                again = gde_2d_symplectic(sp.base.algebra, quad(sp.base), symp(sp.base), *sp.ext2);
            }
            break;
        case Op::ManinOddOdd1d:
        case Op::ManinOddEven2d:
        case Op::ManinEvenOdd2d: {
            ManinInverse inv = manin_inverse(g, quad(t), symp(t), step.a, step.b);
            sp = inv.split;
            const QuadSympAlgebra& base = sp.base;
            const bool two = op != Op::ManinOddOdd1d;
            if (two ? !sp.ext2 : !sp.gode) return "manin inverse did not recover data";
            ManinExtension m = two ? manin_double_extension(base.algebra, quad(base), symp(base), inv.a, inv.b, *sp.ext2)
                                   : manin_double_extension(base.algebra, quad(base), symp(base), inv.a, inv.b, *sp.gode);
            again = m.ext;
            break;
        }
    }
    if (sp.base.algebra.dim() != want) return "dimension law fails: base has dim " + std::to_string(sp.base.algebra.dim());
    if (!(again.value.algebra == sp.reconstructed.value.algebra)) return "rebuild differs from reconstruction";
    if (!round_trip_holds(g, t.quadratic, t.symplectic, sp)) return "rebuilt table differs from the input";

    // Splitting along the added vectors gives the base back verbatim.
    const auto& added = step.ext.added;
    auto at = [&](const char* role) { return unit(g.dim(), added.at(role)); };
    SplitResult pinned;
    if (op == Op::SymplecticOdd || op == Op::SymplecticEven)
        pinned = split_symplectic_along(g, symp(t), at("e*"), at("e"));
    else if (added.count("e*"))
        pinned = split_quadratic_symplectic_along(g, quad(t), symp(t), {at("e*")}, {at("e")});
    else
        pinned = split_quadratic_symplectic_along(g, quad(t), symp(t), {at("e0*"), at("e1*")}, {at("e0"), at("e1")});
    const QuadSympAlgebra& orig = base.value;
    if (!(pinned.base.algebra == orig.algebra) || !(pinned.base.symplectic == orig.symplectic) ||
        (orig.quadratic && !(pinned.base.quadratic == orig.quadratic)))
        return "pinned split does not return the original base";
    if (!(pinned.reconstructed.value.algebra == g)) return "pinned reconstruction differs from the input";
    return {};
}

}  // namespace

Outcome round_trip_sweep(Op op, std::size_t count, std::uint64_t seed,
                         const std::function<void(const QuadSympAlgebra&)>& visit) {
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(op));
    std::vector<Sample> pool = seed_pool(op);
    Outcome out;
    const std::size_t budget = 40 * count + 100;
    while (out.accepted < count && out.attempts < budget) {
        ++out.attempts;
        const Sample s = pool[pick(rng, pool.size())];
        std::optional<Step> step;
        try {
            step = construct(op, s, rng);
        } catch (const AlgebraError& e) {
            if (is_rejection(e.code())) continue;
            ++out.accepted;
            out.failures.push_back(to_string(op) + " on " + describe(s) + ": " + e.what());
            continue;
        }
        if (!step) continue;
        ++out.accepted;
        if (visit) visit(step->ext.value);
        std::string problem;
        try {
            problem = check_split(op, s, *step);
        } catch (const AlgebraError& e) {
            problem = e.what();
        }
        if (problem.empty()) {
            ++out.passed;
        } else {
            out.failures.push_back(to_string(op) + " on " + describe(s) + ": " + problem);
        }
        // Abelian outputs are kept only now and then so the pool does not
        // drift toward structures that only admit zero parameters.
        const LieSuperalgebra& made = step->ext.value.algebra;
        if (made.dim() <= kMaxBaseDim && pool.size() < kPoolCap && (!made.is_abelian() || coin(rng, 4)))
            pool.push_back(Sample{step->ext.value, step->a, step->b});
    }
    if (out.accepted < count)
        out.failures.push_back(to_string(op) + ": only " + std::to_string(out.accepted) + " of " +
                               std::to_string(count) + " draws satisfied the conditions");
    return out;
}

Outcome nilpotent_sweep(std::size_t count, std::uint64_t seed) {
    Rng rng(seed * 7919ULL + 17);
    Outcome out;
    const std::size_t budget = 40 * count + 100;
    while (out.accepted < count && out.attempts < budget) {
        ++out.attempts;
        const int atom = static_cast<int>(pick(rng, 3));
        QuadSympAlgebra cur = atom == 0 ? zero_atom(Parity::Odd) : atom == 1 ? zero_atom(Parity::Even) : odd_line_atom();
        const std::size_t steps = 1 + pick(rng, 3);
        bool built = true;
        try {
            for (std::size_t i = 0; i < steps && built; ++i) {
                auto data = random_ext1(cur.algebra, symp(cur), rng, true);
                if (!data) {
                    built = false;
                    break;
                }
                cur = symplectic_double_extension(cur.algebra, symp(cur), *data).value;
            }
        } catch (const AlgebraError& e) {
            if (is_rejection(e.code())) continue;
            ++out.accepted;
            out.failures.push_back(std::string("building: ") + e.what());
            continue;
        }
        if (!built) continue;
        ++out.accepted;
        std::ostringstream tag;
        tag << "(" << cur.algebra.basis().n_even() << "|" << cur.algebra.basis().n_odd() << ") after " << steps
            << " steps";
        if (!is_nilpotent(cur.algebra)) {
            out.failures.push_back(tag.str() + ": not nilpotent");
            continue;
        }
        auto at_atom = [](const LieSuperalgebra& g) { return g.dim() == 0 || (g.dim() == 1 && g.basis().n_odd() == 1); };
        std::size_t splits = 0;
        std::string problem;
        try {
            while (!at_atom(cur.algebra) && splits < 3) {
                SplitResult sp = split_symplectic(cur.algebra, symp(cur));
                cur = sp.base;
                ++splits;
            }
        } catch (const AlgebraError& e) {
            problem = e.what();
        }
        if (problem.empty() && !at_atom(cur.algebra))
            problem = "no atom after 3 splits, stuck at dim " + std::to_string(cur.algebra.dim());
        if (problem.empty())
            ++out.passed;
        else
            out.failures.push_back(tag.str() + ": " + problem);
    }
    if (out.accepted < count) out.failures.push_back("too few nilpotent samples were accepted");
    return out;
}

}  // namespace superalg::sweeps
