#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "superalg/catalog.hpp"

#include <sstream>

using namespace superalg;

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ':')) out.push_back(part);
    return out;
}

int apar(const AssocSuperalgebra& a, std::size_t i) { return a.basis.p(i); }

Vec amul(const AssocSuperalgebra& a, const Vec& x, const Vec& y) {
    const std::size_t n = a.basis.dim();
    Vec out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (x[i] != 0 && y[j] != 0) out = oracle::add(out, a.mul(i, j), x[i] * y[j]);
    return out;
}

bool assoc_oracle(const AssocSuperalgebra& a) {
    const std::size_t n = a.basis.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ei = unit(n, i), ej = unit(n, j), ek = unit(n, k);
                if (amul(a, amul(a, ei, ej), ek) != amul(a, ei, amul(a, ej, ek))) return false;
            }
    return true;
}

bool supercomm_oracle(const AssocSuperalgebra& a) {
    const std::size_t n = a.basis.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar s = oracle::sign(apar(a, i) * apar(a, j));
            if (a.mul(i, j) != oracle::add(Vec(n, Scalar(0)), a.mul(j, i), s)) return false;
        }
    return true;
}

// Independent evaluation of one expected property.
bool oracle_property(const CatalogEntry& e, const std::string& prop) {
    const LieSuperalgebra& g = e.value.algebra;
    const auto parts = split_colon(prop);
    const std::string& head = parts[0];
    if (head == "jacobi") return !oracle::jacobi_violation(g);
    if (head == "nilpotent") return oracle::nilpotent(g);
    if (head == "associative") return assoc_oracle(*e.associative);
    if (head == "supercommutative") return supercomm_oracle(*e.associative);
    if (head == "quadratic") return oracle::quadratic(g, e.forms.at(parts[1]));
    if (head == "symplectic") return oracle::symplectic(g, e.forms.at(parts[1]));
    const LinearMap& d = e.maps.at(parts[1]);
    if (head == "derivation") return oracle::derivation(g, d.matrix(), bit(d.degree()));
    if (head == "invertible") return oracle::det(d.matrix()) != 0;
    if (head == "skew") return oracle::skew(g, e.forms.at(parts[2]).matrix(), d.matrix(), bit(d.degree()));
    FAIL("unknown property " << prop);
    return false;
}

std::vector<CatalogEntry> corpus() {
    std::vector<CatalogEntry> out;
    for (const auto& name : catalog_names()) {
        if (name == "A_n") {
            for (int n = 1; n <= 4; ++n) out.push_back(build_catalog(name, n));
        } else if (name == "h_tensor_A_n") {
            for (int n = 1; n <= 3; ++n) out.push_back(build_catalog(name, n));
        } else {
            out.push_back(build_catalog(name));
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("every expected property holds, by library and by oracle") {
        for (const CatalogEntry& e : corpus()) {
            for (const auto& prop : e.expected_properties) {
                INFO(e.name << " " << prop);
                CHECK(check_property(e, prop).pass);
                CHECK(oracle_property(e, prop));
            }
        }
    }

    TEST_CASE("named algebras agree with the hand-written tables") {
        CHECK(catalog::L() == fixture::L());
        CHECK(catalog::L_D() == fixture::L_D());
        CHECK(catalog::L_Delta() == fixture::L_Delta());
        const CatalogEntry m = build_catalog("m");
        CHECK(m.value.algebra == fixture::m());
        CHECK(m.forms.at("omega") == fixture::m_omega());
    }

    TEST_CASE("dimensions") {
        CHECK(build_catalog("L_odd_trivial").value.algebra.dim() == 8);
        CHECK(build_catalog("L_even_trivial").value.algebra.dim() == 8);
        const CatalogEntry ex = build_catalog("Ex5.2");
        CHECK(ex.value.algebra.dim() == 12);
        CHECK(ex.value.algebra.basis().n_even() == 6);
        for (int n = 1; n <= 3; ++n) {
            const CatalogEntry h = build_catalog("h_tensor_A_n", n);
            CHECK(h.value.algebra.dim() == static_cast<std::size_t>(4 * n));
            CHECK(h.value.algebra.basis().n_even() == static_cast<std::size_t>(2 * n));
        }
    }

    TEST_CASE("A_n products and pairing") {
        const AssocSuperalgebra a = catalog::A(3);
        // e1 e2 = e3, e1 f2 = f3, f1 f1 = 0, e2 e2 = 0
        CHECK(a.mul(0, 1) == unit(6, 2));
        CHECK(a.mul(0, 4) == unit(6, 5));
        CHECK(oracle::zero(a.mul(3, 3)));
        CHECK(oracle::zero(a.mul(1, 1)));
        const BilinearForm b = catalog::A_pairing(3);
        CHECK(b.parity() == Parity::Odd);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(b.entry(i, 3 + j) == Scalar(i + j == 2 ? 1 : 0));
        CHECK(oracle::det(b.matrix()) != 0);
    }

    TEST_CASE("h2 is symplectic") {
        CHECK(oracle::symplectic(catalog::h2(), catalog::h2_omega()));
        CHECK(oracle::center_dim(catalog::h2()) == 0);
    }

    TEST_CASE("Ex5.2 lifts Dbar without invertibility") {
        CHECK_FALSE(catalog::L_Dbar().invertible());
        CHECK(oracle::derivation(catalog::L(), catalog::L_Dbar().matrix(), 1));
    }

    TEST_CASE("parameters are validated") {
        CHECK_THROWS_AS(build_catalog("A_n"), AlgebraError);
        CHECK_THROWS_AS(build_catalog("A_n", 0), AlgebraError);
        CHECK_THROWS_AS(build_catalog("L", 2), AlgebraError);
        CHECK_THROWS_AS(build_catalog("nope"), AlgebraError);
    }

    TEST_CASE("a broken entry is reported") {
        CatalogEntry e = build_catalog("L");
        e.value.algebra = fixture::L_perturbed();
        const Report r = check_property(e, "jacobi");
        CHECK_FALSE(r.pass);
        CHECK(r.witness == std::vector<std::size_t>{2, 2, 2});
        CHECK(check_property(e, "nilpotent").pass == oracle::nilpotent(e.value.algebra));
    }
}
