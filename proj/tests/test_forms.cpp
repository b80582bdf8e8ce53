#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "superalg/constructions.hpp"

using namespace superalg;

TEST_SUITE("forms") {
    TEST_CASE("parity patterns are enforced") {
        const GradedBasis b({"x", "y"}, 1);
        CHECK_THROWS_AS(BilinearForm(b, fixture::mat(2, {{1, 0}, {0, 0}}), Parity::Odd), AlgebraError);
        CHECK_THROWS_AS(BilinearForm(b, fixture::mat(2, {{0, 1}, {1, 0}}), Parity::Even), AlgebraError);
        CHECK_NOTHROW(BilinearForm(b, fixture::mat(2, {{0, 1}, {1, 0}}), Parity::Odd));
        CHECK(matches_form_pattern(b, fixture::mat(2, {{2, 0}, {0, 3}}), Parity::Even));
    }

    TEST_CASE("canonical pairing on L + P(L*) is odd quadratic") {
        const Extension t = trivial_double_extension(fixture::L(), Variant::Odd);
        const LieSuperalgebra& g = t.value.algebra;
        const BilinearForm& b = *t.value.quadratic;
        const FormReport r = classify_form(g, b);
        CHECK(r.parity == Parity::Odd);
        CHECK(r.supersymmetric);
        CHECK(r.invariant);
        CHECK(r.nondegenerate);
        CHECK(r.quadratic());
        CHECK(oracle::quadratic(g, b));
        CHECK(r.cocycle == oracle::cocycle(g, b.matrix()));
    }

    TEST_CASE("odd symplectic form on m") {
        const auto m = fixture::m();
        const FormReport r = classify_form(m, fixture::m_omega());
        CHECK(r.parity == Parity::Odd);
        CHECK(r.skew_supersymmetric);
        CHECK(r.cocycle);
        CHECK(r.nondegenerate);
        CHECK(r.symplectic());
        CHECK_FALSE(r.supersymmetric);
        CHECK(oracle::symplectic(m, fixture::m_omega()));
    }

    TEST_CASE("zero form") {
        const auto L = fixture::L();
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const FormReport r = classify_form(L, BilinearForm::zero(L.basis(), p));
            CHECK(r.supersymmetric);
            CHECK(r.skew_supersymmetric);
            CHECK(r.invariant);
            CHECK(r.cocycle);
            CHECK_FALSE(r.nondegenerate);
        }
    }

    TEST_CASE("failed flags carry witnesses") {
        // (1|1) abelian with a non-symmetric odd form
        const GradedBasis b({"x", "y"}, 1);
        const LieSuperalgebra g = LieSuperalgebra::abelian(b);
        const FormReport r = classify_form(g, BilinearForm(b, fixture::mat(2, {{0, 1}, {2, 0}}), Parity::Odd));
        CHECK_FALSE(r.supersymmetric);
        CHECK_FALSE(r.skew_supersymmetric);
        CHECK(r.witnesses.count("supersymmetric"));
        CHECK(classify_form(g, BilinearForm(b, fixture::mat(2, {{0, 1}, {2, 0}}), Parity::Odd), Exec::Serial)
                  .witnesses == r.witnesses);
    }

    TEST_CASE("orthogonal subspaces") {
        const auto m = fixture::m();
        const Subspace e1(2, {unit(2, 1)});
        CHECK(orthogonal_subspace(m, fixture::m_omega(), e1) == e1);
        CHECK(orthogonal_subspace(m, fixture::m_omega(), Subspace(2)).dim() == 2);

        const Extension t = trivial_double_extension(fixture::L(), Variant::Odd);
        const GradedBasis& basis = t.value.algebra.basis();
        const auto k0 = basis.index_of("k0"), k0s = basis.index_of("k0*");
        REQUIRE(k0);
        REQUIRE(k0s);
        const Subspace perp = orthogonal_subspace(t.value.algebra, *t.value.quadratic, Subspace(8, {unit(8, *k0)}));
        CHECK(perp.dim() == 7);
        for (std::size_t i = 0; i < 8; ++i) CHECK(perp.contains(unit(8, i)) == (i != *k0s));
    }

    TEST_CASE("adjoint maps") {
        const auto m = fixture::m();
        const auto w = fixture::m_omega();
        CHECK(adjoint_map(m, w, LinearMap::zero(m.basis(), Parity::Even)) == LinearMap::zero(m.basis(), Parity::Even));

        const LinearMap d(m.basis(), fixture::diag({1, 1}), Parity::Even);
        const LinearMap ds = adjoint_map(m, w, d);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(w(d(unit(2, i)), unit(2, j)) == w(unit(2, i), ds(unit(2, j))));

        // the lift of Delta is skew for B, so its adjoint is its negative
        const Extension t = trivial_double_extension(fixture::L(), Variant::Odd);
        const LinearMap delta = lift_derivation(fixture::L(), fixture::L_Delta(), Variant::Odd);
        const LinearMap adj = adjoint_map(t.value.algebra, *t.value.quadratic, delta);
        CHECK(adj.matrix() == Scalar(-1) * delta.matrix());
    }

    TEST_CASE("invariant form spaces") {
        const LieSuperalgebra ab = LieSuperalgebra::abelian(1, 1);
        const FormSpace s = invariant_form_space(ab, Parity::Odd, Symmetry::Supersymmetric);
        CHECK(s.dim() == 1);
        for (const auto& f : s.basis_forms) {
            CHECK(oracle::supersymmetric(ab, f.matrix()));
            CHECK(oracle::invariant(ab, f.matrix()));
        }
        CHECK(exists_nondegenerate(s).verdict == Verdict::Yes);

        const LieSuperalgebra zero = LieSuperalgebra::abelian(0, 0);
        for (Parity p : {Parity::Even, Parity::Odd})
            for (Symmetry sym : {Symmetry::Supersymmetric, Symmetry::SkewSupersymmetricCocycle}) {
                const FormSpace z = invariant_form_space(zero, p, sym);
                CHECK(z.dim() == 0);
            }

        const FormSpace ms = invariant_form_space(fixture::m(), Parity::Odd, Symmetry::Supersymmetric);
        for (const auto& f : ms.basis_forms) CHECK(oracle::det(f.matrix()) == 0);
        const NondegenerateAnswer a = exists_nondegenerate(ms);
        CHECK(a.verdict == Verdict::No);
        CHECK(a.exact);

        const FormSpace mc = invariant_form_space(fixture::m(), Parity::Odd, Symmetry::SkewSupersymmetricCocycle);
        for (const auto& f : mc.basis_forms) {
            CHECK(oracle::skew_supersymmetric(fixture::m(), f.matrix()));
            CHECK(oracle::cocycle(fixture::m(), f.matrix()));
        }
        const NondegenerateAnswer c = exists_nondegenerate(mc);
        CHECK(c.verdict == Verdict::Yes);
        REQUIRE(c.witness);
        CHECK(oracle::symplectic(fixture::m(), *c.witness));
    }

    TEST_CASE("invariant forms on L") {
        // even: B(l0, k0) = B(k1, l1) = a with B(l0, l0) free, nondegenerate
        // for a != 0; odd: k1 pairs to zero with everything
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const FormSpace s = invariant_form_space(fixture::L(), p, Symmetry::Supersymmetric);
            for (const auto& f : s.basis_forms) {
                CHECK(oracle::supersymmetric(fixture::L(), f.matrix()));
                CHECK(oracle::invariant(fixture::L(), f.matrix()));
            }
            const NondegenerateAnswer a = exists_nondegenerate(s);
            if (p == Parity::Even) {
                CHECK(a.verdict == Verdict::Yes);
                REQUIRE(a.witness);
                CHECK(oracle::quadratic(fixture::L(), *a.witness));
            } else {
                CHECK(a.verdict == Verdict::No);
                for (const auto& f : s.basis_forms)
                    for (std::size_t j = 0; j < 4; ++j) CHECK(f.entry(3, j) == 0);
            }
        }
    }

    TEST_CASE("exists_nondegenerate on an empty space") {
        FormSpace s;
        s.ambient = GradedBasis({"x", "y"}, 1);
        s.parity = Parity::Odd;
        CHECK(exists_nondegenerate(s).verdict == Verdict::No);
    }

    TEST_CASE("admits both quadratic structures") {
        // an even supersymmetric form is skew on the odd part, so (n|n)
        // with n odd has no even quadratic structure
        CHECK(admits_both_quadratic(LieSuperalgebra::abelian(2, 2)) == Verdict::Yes);
        CHECK(admits_both_quadratic(LieSuperalgebra::abelian(4, 4)) == Verdict::Yes);
        for (std::size_t n : {1, 3}) {
            const LieSuperalgebra ab = LieSuperalgebra::abelian(n, n);
            CHECK(admits_both_quadratic(ab) == Verdict::No);
            for (const auto& f : invariant_form_space(ab, Parity::Even, Symmetry::Supersymmetric).basis_forms)
                CHECK(oracle::det(f.matrix()) == 0);
            CHECK(exists_nondegenerate(invariant_form_space(ab, Parity::Odd, Symmetry::Supersymmetric)).verdict ==
                  Verdict::Yes);
        }
        CHECK(admits_both_quadratic(LieSuperalgebra::abelian(2, 1)) == Verdict::No);
        CHECK(admits_both_quadratic(fixture::L()) == Verdict::No);
        CHECK(admits_both_quadratic(fixture::m()) == Verdict::No);
    }
}
