#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "superalg/catalog.hpp"
#include "superalg/kernels.hpp"

using namespace superalg;

namespace {

void same(const Report& a, const Report& b) {
    CHECK(a.pass == b.pass);
    CHECK(a.witness == b.witness);
    CHECK(a.residual == b.residual);
}

}  // namespace

TEST_SUITE("kernels") {
    TEST_CASE("serial and parallel agree on the catalog") {
        std::vector<CatalogEntry> entries;
        for (const char* name : {"m", "L", "L_odd_trivial", "L_even_trivial", "Ex5.2"})
            entries.push_back(build_catalog(name));
        for (int n = 1; n <= 3; ++n) entries.push_back(build_catalog("h_tensor_A_n", n));
        for (const auto& e : entries) {
            INFO(e.name);
            const LieSuperalgebra& g = e.value.algebra;
            same(kernels::jacobi(g, Exec::Serial), kernels::jacobi(g, Exec::Parallel));
            CHECK(kernels::jacobi(g, Exec::Parallel).pass == !oracle::jacobi_violation(g));
            for (const auto& [name, f] : e.forms) {
                same(kernels::invariance(g, f.matrix(), Exec::Serial), kernels::invariance(g, f.matrix(), Exec::Parallel));
                same(kernels::cocycle(g, f.matrix(), Exec::Serial), kernels::cocycle(g, f.matrix(), Exec::Parallel));
                CHECK(kernels::invariance(g, f.matrix(), Exec::Serial).pass == oracle::invariant(g, f.matrix()));
                CHECK(kernels::cocycle(g, f.matrix(), Exec::Serial).pass == oracle::cocycle(g, f.matrix()));
            }
            for (const auto& [name, d] : e.maps) {
                const int deg = bit(d.degree());
                same(kernels::derivation(g, d.matrix(), deg, Exec::Serial),
                     kernels::derivation(g, d.matrix(), deg, Exec::Parallel));
                CHECK(kernels::derivation(g, d.matrix(), deg, Exec::Serial).pass ==
                      oracle::derivation(g, d.matrix(), deg));
            }
        }
    }

    TEST_CASE("failures report the first violating tuple in both modes") {
        const LieSuperalgebra bad = fixture::L_perturbed();
        const Report s = kernels::jacobi(bad, Exec::Serial);
        same(s, kernels::jacobi(bad, Exec::Parallel));
        CHECK_FALSE(s.pass);
        CHECK(s.witness == *oracle::jacobi_violation(bad));

        // a non-invariant form on m: omega itself
        const LieSuperalgebra m = fixture::m();
        const Matrix w = fixture::m_omega().matrix();
        const Report inv = kernels::invariance(m, w, Exec::Serial);
        CHECK(inv.pass == oracle::invariant(m, w));
        same(inv, kernels::invariance(m, w, Exec::Parallel));

        const Matrix d = fixture::diag({1, 0, 0, 0});
        const Report der = kernels::derivation(fixture::L(), d, 0, Exec::Serial);
        CHECK_FALSE(der.pass);
        same(der, kernels::derivation(fixture::L(), d, 0, Exec::Parallel));
    }

    TEST_CASE("thread count") { CHECK(kernels::max_threads() >= 1); }
}
