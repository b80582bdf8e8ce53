#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "superalg/errors.hpp"
#include "superalg/kernels.hpp"

using namespace superalg;

namespace {

Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(x);
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    FAIL("no AlgebraError thrown");
    return ErrorCode::BadParams;
}

}  // namespace

TEST_SUITE("core") {
    TEST_CASE("bracket on L follows its table") {
        const auto L = fixture::L();
        CHECK(L.bracket(v({1, 0, 0, 0}), v({0, 0, 1, 0})) == v({0, 0, 0, 1}));
        CHECK(L.bracket(v({0, 0, 1, 0}), v({0, 0, 1, 0})) == v({0, 1, 0, 0}));
        CHECK(L.bracket(v({1, 2, 3, 4}), v({0, 0, 0, 0})) == v({0, 0, 0, 0}));
        // super skew-symmetry: [l1, l0] = -[l0, l1]
        CHECK(L.bracket(v({0, 0, 1, 0}), v({1, 0, 0, 0})) == v({0, 0, 0, -1}));
    }

    TEST_CASE("bracket agrees with the bilinear expansion oracle") {
        const auto L = fixture::L();
        const Vec x = v({1, -2, 3, 1}), y = v({2, 1, -1, 5});
        CHECK(L.bracket(x, y) == oracle::br(L, x, y));
    }

    TEST_CASE("constructor rejects broken tables") {
        const GradedBasis b({"x", "y"}, 1);
        // even diagonal must vanish
        CHECK(code_of([&] { LieSuperalgebra(GradedBasis({"a", "b"}, 2), {{0, 0, {0, 1}}}); }) ==
              ErrorCode::InvariantViolation);
        // [even, odd] landing in the even part
        CHECK(code_of([&] { LieSuperalgebra(b, {{0, 1, {1, 0}}}); }) == ErrorCode::InvariantViolation);
        // a pair listed twice
        CHECK(code_of([&] { LieSuperalgebra(b, {{0, 1, {0, 1}}, {1, 0, {0, 1}}}); }) ==
              ErrorCode::InvariantViolation);
    }

    TEST_CASE("graded Jacobi check") {
        CHECK(graded_jacobi_check(fixture::L()).pass);
        CHECK(graded_jacobi_check(fixture::m()).pass);
        CHECK(graded_jacobi_check(LieSuperalgebra::abelian(3, 2)).pass);
        const auto bad = fixture::L_perturbed();
        const Report r = graded_jacobi_check(bad);
        CHECK_FALSE(r.pass);
        const auto witness = oracle::jacobi_violation(bad);
        REQUIRE(witness);
        // the oracle scans all ordered triples; both land on the same set
        CHECK(r.witness == std::vector<std::size_t>{2, 2, 2});
        CHECK(*witness == std::vector<std::size_t>{2, 2, 2});
        CHECK_FALSE(oracle::jacobi_violation(fixture::L()));
    }

    TEST_CASE("serial and parallel Jacobi reports agree") {
        const auto bad = fixture::L_perturbed();
        const Report s = kernels::jacobi(bad, Exec::Serial), p = kernels::jacobi(bad, Exec::Parallel);
        CHECK(s.pass == p.pass);
        CHECK(s.witness == p.witness);
        CHECK(s.residual == p.residual);
    }

    TEST_CASE("center") {
        const Subspace z = center(fixture::L());
        CHECK(z.dim() == oracle::center_dim(fixture::L()));
        CHECK(z == Subspace(4, {v({0, 1, 0, 0}), v({0, 0, 0, 1})}));
        CHECK(center(fixture::m()).dim() == 0);
        CHECK(oracle::center_dim(fixture::m()) == 0);
        CHECK(center(LieSuperalgebra::abelian(2, 1)).dim() == 3);
    }

    TEST_CASE("lower central series") {
        const auto series = lower_central_series(fixture::L());
        std::vector<std::size_t> dims;
        for (const auto& s : series) dims.push_back(s.dim());
        CHECK(dims == std::vector<std::size_t>{4, 2, 0});
        CHECK(dims == oracle::lower_central_dims(fixture::L()));
        CHECK(series[1] == Subspace(4, {v({0, 1, 0, 0}), v({0, 0, 0, 1})}));
        CHECK(is_nilpotent(fixture::L()));

        const auto ms = lower_central_series(fixture::m());
        CHECK(ms.back().dim() == 1);
        CHECK_FALSE(is_nilpotent(fixture::m()));
        CHECK_FALSE(oracle::nilpotent(fixture::m()));

        const auto ab = lower_central_series(LieSuperalgebra::abelian(1, 2));
        CHECK(ab.size() == 2);
        CHECK(ab.back().dim() == 0);
    }

    TEST_CASE("direct sums") {
        const auto L = fixture::L();
        CHECK(direct_sum(LieSuperalgebra::abelian(0, 0), L) == L);

        const auto mm = direct_sum(fixture::m(), fixture::m());
        CHECK(mm.dim() == 4);
        CHECK_FALSE(oracle::jacobi_violation(mm));
        CHECK(oracle::lower_central_dims(mm).back() == 2);

        const auto L5 = direct_sum(L, LieSuperalgebra::abelian(0, 1));
        CHECK(L5.dim() == 5);
        CHECK(L5.basis().n_even() == 2);
        const Subspace z = center(L5);
        CHECK(z.dim() == 3);
        CHECK(oracle::center_dim(L5) == 3);
        for (const char* name : {"k0", "k1"}) CHECK(z.contains(unit(5, *L5.basis().index_of(name))));
    }

    TEST_CASE("parity flip of the dual") {
        const GradedBasis d = parity_flip_dual(fixture::L());
        CHECK(d.dim() == 4);
        CHECK(d.n_even() == 2);
        // l1*, k1* are even, l0*, k0* odd
        CHECK(d.parity(*d.index_of("l1*")) == Parity::Even);
        CHECK(d.parity(*d.index_of("k1*")) == Parity::Even);
        CHECK(d.parity(*d.index_of("l0*")) == Parity::Odd);
        CHECK(d.parity(*d.index_of("k0*")) == Parity::Odd);
        const GradedBasis one = parity_flip_dual(LieSuperalgebra::abelian(1, 0));
        CHECK(one.n_even() == 0);
        CHECK(one.n_odd() == 1);
        CHECK(parity_flip_dual(LieSuperalgebra::abelian(0, 0)).dim() == 0);
    }

    TEST_CASE("change of basis preserves the algebra") {
        const auto L = fixture::L();
        // scale l0 by 2 and k1 by 2: [l0', l1] = 2 k1 = k1'
        Matrix c = fixture::diag({2, 1, 1, 2});
        const auto L2 = change_basis(L, c, L.basis());
        CHECK(L2 == L);
        Matrix c3 = fixture::diag({3, 1, 1, 1});
        const auto L3 = change_basis(L, c3, L.basis());
        CHECK(L3.structure(0, 2) == v({0, 0, 0, 3}));
        CHECK_FALSE(oracle::jacobi_violation(L3));
    }

    TEST_CASE("subspaces") {
        const Subspace a(3, {v({1, 0, 0}), v({1, 1, 0}), v({0, 1, 0})});
        CHECK(a.dim() == 2);
        CHECK(a.contains(v({2, -3, 0})));
        CHECK_FALSE(a.contains(v({0, 0, 1})));
        const Subspace b(3, {v({0, 1, 1})});
        CHECK(a.sum(b).dim() == 3);
        CHECK(a.intersect(b).dim() == 0);
        CHECK(a.intersect(Subspace(3, {v({1, 1, 0}), v({0, 0, 1})})).dim() == 1);
        const auto coords = a.coordinates(v({2, -3, 0}));
        REQUIRE(coords);
        Vec back = zeros(3);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(back, (*coords)[i], a.basis()[i]);
        CHECK(back == v({2, -3, 0}));
    }

    TEST_CASE("subalgebras") {
        const auto L = fixture::L();
        CHECK(is_subalgebra(L, Subspace(4, {v({0, 1, 0, 0}), v({0, 0, 0, 1})})));
        CHECK_FALSE(is_subalgebra(L, Subspace(4, {v({0, 0, 1, 0})})));
        CHECK(is_subalgebra(L, Subspace(4, {v({0, 0, 1, 0}), v({0, 1, 0, 0})})));
    }
}
