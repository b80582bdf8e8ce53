#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "superalg/errors.hpp"
#include "superalg/manin.hpp"

using namespace superalg;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    return ErrorCode::RoundTripFailed;
}

struct Lifted {
    Extension t;
    LinearMap delta;
    BilinearForm omega;
};

// L + L* (even variant) with the symplectic form of the lifted Delta.
Lifted even_lift() {
    const auto L = fixture::L();
    Lifted out{trivial_double_extension(L, Variant::Even), lift_derivation(L, fixture::L_Delta(), Variant::Even), {}};
    out.omega = form_from_derivation(out.t.value.algebra, *out.t.value.quadratic, out.delta);
    return out;
}

// L + P(L*) with the symplectic form of the lifted D.
Lifted odd_lift() {
    const auto L = fixture::L();
    Lifted out{trivial_double_extension(L, Variant::Odd), lift_derivation(L, fixture::L_D(), Variant::Odd), {}};
    out.omega = form_from_derivation(out.t.value.algebra, *out.t.value.quadratic, out.delta);
    return out;
}

Subspace positions(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<Vec> vs;
    for (auto i : idx) vs.push_back(unit(n, i));
    return Subspace(n, vs);
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
    return out;
}

}  // namespace

TEST_SUITE("manin") {
    TEST_CASE("split of the even lift separates L from its dual") {
        const Lifted x = even_lift();
        const LieSuperalgebra& g = x.t.value.algebra;
        const BilinearForm& b = *x.t.value.quadratic;
        const ManinSplit m = manin_split(g, b, x.omega);
        const Subspace image_l = positions(8, x.t.base_positions);
        const Subspace image_dual = positions(8, complement(8, x.t.base_positions));
        CHECK(m.a == image_l);
        CHECK(m.b == image_dual);
        std::vector<Scalar> values;
        for (const auto& p : m.spectrum) values.push_back(p.value);
        CHECK(values == std::vector<Scalar>{-4, -2, 2, 4});
        // 2 Delta~^2 restricted to L: the oracle squares Delta on L directly
        const Matrix sq = oracle::square(fixture::L_Delta().matrix());
        CHECK(sq == fixture::diag({1, 2, 1, 2}));
        CHECK(special_check(g, b, x.omega, m.a, m.b));
        CHECK(oracle::isotropic(b.matrix(), m.a.basis()));
        CHECK(oracle::isotropic(b.matrix(), m.b.basis()));
        CHECK(oracle::isotropic(x.omega.matrix(), m.a.basis()));
        CHECK(oracle::closed(g, m.a.basis()));
        CHECK(oracle::closed(g, m.b.basis()));
        // eigenspaces pair only when the eigenvalues cancel
        for (const auto& p : m.spectrum)
            for (const auto& q : m.spectrum) {
                if (p.value + q.value == 0) continue;
                for (const auto& u : p.generalized.basis())
                    for (const auto& w : q.generalized.basis()) CHECK(b(u, w) == 0);
            }
    }

    TEST_CASE("split of abelian (1|1)") {
        const LieSuperalgebra ab = LieSuperalgebra::abelian(1, 1);
        const BilinearForm b = fixture::odd_pairing(1);
        const BilinearForm w = form_from_derivation(ab, b, LinearMap(ab.basis(), fixture::diag({1, -1}), Parity::Even));
        const ManinSplit m = manin_split(ab, b, w);
        CHECK(m.a == Subspace(2, {unit(2, 0)}));
        CHECK(m.b == Subspace(2, {unit(2, 1)}));
        CHECK(special_check(ab, b, w, m.a, m.b));
    }

    TEST_CASE("irrational spectrum is reported") {
        // abelian (2|2), odd pairing, Delta = A + (-A^T) with A^2 = 2
        const LieSuperalgebra ab = LieSuperalgebra::abelian(2, 2);
        const BilinearForm b = fixture::odd_pairing(2);
        Matrix d(4, 4);
        d(0, 1) = 2;
        d(1, 0) = 1;
        d(2, 3) = -1;
        d(3, 2) = -2;
        const LinearMap delta(ab.basis(), d, Parity::Even);
        REQUIRE(oracle::skew(ab, b.matrix(), d, 0));
        const BilinearForm w = form_from_derivation(ab, b, delta);
        CHECK(code_of([&] { manin_split(ab, b, w); }) == ErrorCode::IrrationalSpectrum);
    }

    TEST_CASE("special check") {
        const Lifted x = even_lift();
        const LieSuperalgebra& g = x.t.value.algebra;
        const BilinearForm& b = *x.t.value.quadratic;
        const auto duals = complement(8, x.t.base_positions);
        // L plus the first dual line is not isotropic
        std::vector<std::size_t> a_idx = x.t.base_positions;
        a_idx.push_back(duals[0]);
        const std::vector<std::size_t> b_idx(duals.begin() + 1, duals.end());
        CHECK_FALSE(special_check(g, b, x.omega, positions(8, a_idx), positions(8, b_idx)));
        CHECK_FALSE(manin_pair_report(g, b, positions(8, a_idx), positions(8, b_idx)).pass);

        const LieSuperalgebra zero = LieSuperalgebra::abelian(0, 0);
        const BilinearForm e0(GradedBasis(), Matrix(0, 0), Parity::Odd), e1(GradedBasis(), Matrix(0, 0), Parity::Even);
        CHECK(special_check(zero, e0, e1, Subspace(0), Subspace(0)));
    }

    TEST_CASE("Manin double extension with zero data over abelian (1|1)") {
        const LieSuperalgebra ab = LieSuperalgebra::abelian(1, 1);
        const BilinearForm b = fixture::odd_pairing(1);
        const BilinearForm w = form_from_derivation(ab, b, LinearMap(ab.basis(), fixture::diag({1, -1}), Parity::Even));
        const Subspace a(2, {unit(2, 0)}), bb(2, {unit(2, 1)});
        GodeData data;
        data.dbar = LinearMap::zero(ab.basis(), Parity::Odd);
        data.x0 = zeros(2);
        data.c1 = zeros(2);
        data.lambda = 1;
        const ManinExtension m = manin_double_extension(ab, b, w, a, bb, data);
        const QuadSympAlgebra& q = m.ext.value;
        CHECK(special_check(q.algebra, *q.quadratic, *q.symplectic, m.a, m.b));
        CHECK(oracle::isotropic(q.quadratic->matrix(), m.a.basis()));
        CHECK(oracle::isotropic(q.symplectic->matrix(), m.b.basis()));

        const ManinInverse inv = manin_inverse(q.algebra, *q.quadratic, *q.symplectic, m.a, m.b);
        CHECK(inv.split.base.algebra.dim() == 2);
        CHECK(round_trip_holds(q.algebra, q.quadratic, q.symplectic, inv.split));

        // x0 = b0 is an eigenvector of delta with eigenvalue -2 lambda for
        // lambda = -1/2, so every condition holds except x0 in b
        GodeData outside = data;
        outside.x0 = unit(2, 0);
        outside.lambda = Scalar(-1, 2);
        CHECK(code_of([&] { manin_double_extension(ab, b, w, a, bb, outside); }) == ErrorCode::StabilityViolated);
    }

    TEST_CASE("Manin double extension over the odd lift") {
        const Lifted x = odd_lift();
        const LieSuperalgebra& g = x.t.value.algebra;
        const BilinearForm& b = *x.t.value.quadratic;
        const ManinSplit split = manin_split(g, b, x.omega);
        REQUIRE(special_check(g, b, x.omega, split.a, split.b));
        GodeData data;
        data.dbar = LinearMap::zero(g.basis(), Parity::Odd);
        data.x0 = zeros(8);
        data.c1 = zeros(8);
        data.lambda = 1;
        const ManinExtension m = manin_double_extension(g, b, x.omega, split.a, split.b, data);
        const QuadSympAlgebra& q = m.ext.value;
        CHECK(q.algebra.dim() == 10);
        CHECK_FALSE(oracle::jacobi_violation(q.algebra));
        CHECK(oracle::quadratic(q.algebra, *q.quadratic));
        CHECK(oracle::symplectic(q.algebra, *q.symplectic));
        CHECK(special_check(q.algebra, *q.quadratic, *q.symplectic, m.a, m.b));

        const ManinInverse inv = manin_inverse(q.algebra, *q.quadratic, *q.symplectic, m.a, m.b);
        CHECK(inv.split.base.algebra.dim() == 8);
        CHECK(round_trip_holds(q.algebra, q.quadratic, q.symplectic, inv.split));
        CHECK(inv.a.dim() + inv.b.dim() == 8);
    }

    TEST_CASE("inverse requires a special pair") {
        const Lifted x = even_lift();
        const auto duals = complement(8, x.t.base_positions);
        std::vector<std::size_t> a_idx = x.t.base_positions;
        a_idx.push_back(duals[0]);
        const std::vector<std::size_t> b_idx(duals.begin() + 1, duals.end());
        CHECK(code_of([&] {
                  manin_inverse(x.t.value.algebra, *x.t.value.quadratic, x.omega, positions(8, a_idx),
                                positions(8, b_idx));
              }) == ErrorCode::ConditionViolated);
    }
}
