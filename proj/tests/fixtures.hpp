#pragma once

// Small algebras written out by hand from their bracket tables, independent
// of the catalog module.

#include "superalg/catalog.hpp"
#include "superalg/errors.hpp"

namespace fixture {

using namespace superalg;

// (2|2): [l0, l1] = k1, [l1, l1] = k0.
inline LieSuperalgebra L() {
    return LieSuperalgebra(GradedBasis({"l0", "k0", "l1", "k1"}, 2), {{0, 2, {0, 0, 0, 1}}, {2, 2, {0, 1, 0, 0}}});
}

// L with [l1, l1] moved from k0 to l0.
inline LieSuperalgebra L_perturbed() {
    return LieSuperalgebra(GradedBasis({"l0", "k0", "l1", "k1"}, 2), {{0, 2, {0, 0, 0, 1}}, {2, 2, {1, 0, 0, 0}}});
}

// (1|1): [e0, e1] = e1.
inline LieSuperalgebra m() { return LieSuperalgebra(GradedBasis({"e0", "e1"}, 1), {{0, 1, {0, 1}}}); }

inline Matrix mat(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
    Matrix out(n, n);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long x : row) out(r, c++) = x;
        ++r;
    }
    return out;
}

inline Matrix diag(std::initializer_list<long> d) {
    Matrix out(d.size(), d.size());
    std::size_t i = 0;
    for (long x : d) out(i, i) = x, ++i;
    return out;
}

// omega(e0, e1) = 1 on m, odd.
inline BilinearForm m_omega() { return BilinearForm(m().basis(), mat(2, {{0, 1}, {-1, 0}}), Parity::Odd); }

// D = diag(1, 2, 1, 2) on L.
inline LinearMap L_D() { return LinearMap(L().basis(), diag({1, 2, 1, 2}), Parity::Even); }

// Delta: l0 <-> l1, k0 -> 2 k1, k1 -> k0.
inline LinearMap L_Delta() {
    Matrix d(4, 4);
    d(2, 0) = 1;
    d(0, 2) = 1;
    d(3, 1) = 2;
    d(1, 3) = 1;
    return LinearMap(L().basis(), d, Parity::Odd);
}

// Odd pairing b_i <-> b_{n+i} on abelian (n|n).
inline BilinearForm odd_pairing(std::size_t n) {
    const GradedBasis b = GradedBasis::standard(n, n);
    Matrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) m(i, n + i) = m(n + i, i) = 1;
    return BilinearForm(b, m, Parity::Odd);
}

}  // namespace fixture
