#include "superalg/kernels.hpp"

#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace superalg::kernels {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Runs `check(i)` for every outer index and returns the report of the
// smallest failing i. The parallel path skips indices above the best failure
// found so far; the chosen report is the same either way.
template <class Check>
Report first_violation(std::size_t outer, Check check, Exec exec) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < outer; ++i) {
            Report r = check(i);
            if (!r.pass) return r;
        }
        return {};
    }
    std::vector<Report> results(outer);
    std::atomic<std::size_t> best{kNone};
    const long n = static_cast<long>(outer);
#pragma omp parallel for schedule(dynamic, 1)
    for (long li = 0; li < n; ++li) {
        const auto i = static_cast<std::size_t>(li);
        if (i > best.load(std::memory_order_relaxed)) continue;
        results[i] = check(i);
        if (!results[i].pass) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    }
    const std::size_t b = best.load();
    return b == kNone ? Report{} : results[b];
}

// Flat n^3 table of w(b_i, [b_j, b_k]) (left) or w([b_i, b_j], b_k)
// (right), filled from the sparse structure constants.
std::vector<Scalar> form_table(const LieSuperalgebra& g, const Matrix& w, bool left, Exec exec) {
    const std::size_t n = g.dim();
    std::vector<Scalar> t(n * n * n);
    const long ln = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
    for (long li = 0; li < ln; ++li) {
        const auto i = static_cast<std::size_t>(li);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar& out = t[(i * n + j) * n + k];
                if (left) {
                    for (const auto& [m, c] : g.sparse(j, k))
                        if (w(i, m) != 0) out += c * w(i, m);
                } else {
                    for (const auto& [m, c] : g.sparse(i, j))
                        if (w(m, k) != 0) out += c * w(m, k);
                }
            }
    }
    return t;
}

Report scalar_failure(std::vector<std::size_t> witness, const Scalar& residual, const char* what) {
    Report r;
    r.pass = false;
    r.witness = std::move(witness);
    r.residual = {residual};
    r.detail = what;
    return r;
}

}  // namespace

Report jacobi(const LieSuperalgebra& g, Exec exec) {
    const std::size_t n = g.dim();
    const GradedBasis& b = g.basis();
    auto check = [&](std::size_t i) -> Report {
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                const int x = b.p(i), y = b.p(j), z = b.p(k);
                Vec r = zeros(n);
                auto add = [&](int sign, std::size_t a, std::size_t p, std::size_t q) {
                    // sign * [b_a, [b_p, b_q]]
                    for (const auto& [m, c] : g.sparse(p, q))
                        for (const auto& [t, d] : g.sparse(a, m)) r[t] += sign * c * d;
                };
                add(sgn(x * z), i, j, k);
                add(sgn(x * y), j, k, i);
                add(sgn(y * z), k, i, j);
                if (!is_zero(r)) {
                    Report rep;
                    rep.pass = false;
                    rep.witness = {i, j, k};
                    rep.residual = r;
                    rep.detail = "graded Jacobi identity fails on (" + b.label(i) + ", " + b.label(j) + ", " +
                                 b.label(k) + ")";
                    return rep;
                }
            }
        return {};
    };
    return first_violation(n, check, exec);
}

Report invariance(const LieSuperalgebra& g, const Matrix& beta, Exec exec) {
    const std::size_t n = g.dim();
    const std::vector<Scalar> lhs = form_table(g, beta, false, exec), rhs = form_table(g, beta, true, exec);
    auto check = [&](std::size_t i) -> Report {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t at = (i * n + j) * n + k;
                if (lhs[at] != rhs[at]) return scalar_failure({i, j, k}, lhs[at] - rhs[at], "invariance");
            }
        return {};
    };
    return first_violation(n, check, exec);
}

Report cocycle(const LieSuperalgebra& g, const Matrix& omega, Exec exec) {
    const std::size_t n = g.dim();
    const GradedBasis& b = g.basis();
    const std::vector<Scalar> t = form_table(g, omega, true, exec);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return t[(i * n + j) * n + k]; };
    auto check = [&](std::size_t i) -> Report {
        Scalar r;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const int x = b.p(i), y = b.p(j), z = b.p(k);
                r = at(i, j, k);
                if (sgn(z * x) < 0) r = -r;
                if (sgn(x * y) < 0)
                    r -= at(j, k, i);
                else
                    r += at(j, k, i);
                if (sgn(y * z) < 0)
                    r -= at(k, i, j);
                else
                    r += at(k, i, j);
                if (r != 0) return scalar_failure({i, j, k}, r, "cocycle identity");
            }
        return {};
    };
    return first_violation(n, check, exec);
}

Report derivation(const LieSuperalgebra& g, const Matrix& d, int degree, Exec exec) {
    const std::size_t n = g.dim();
    const GradedBasis& b = g.basis();
    std::vector<Vec> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = d.column(i);
    auto check = [&](std::size_t i) -> Report {
        for (std::size_t j = i; j < n; ++j) {
            Vec r = d.apply(g.structure(i, j));
            r -= g.bracket(images[i], unit(n, j));
            Vec t = g.bracket_basis(i, images[j]);
            axpy(r, Scalar(-sgn(degree * b.p(i))), t);
            if (!is_zero(r)) {
                Report rep;
                rep.pass = false;
                rep.witness = {i, j};
                rep.residual = r;
                rep.detail = "superderivation identity fails on (" + b.label(i) + ", " + b.label(j) + ")";
                return rep;
            }
        }
        return {};
    };
    return first_violation(n, check, exec);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace superalg::kernels

namespace superalg {

Report graded_jacobi_check(const LieSuperalgebra& g, Exec exec) { return kernels::jacobi(g, exec); }

}  // namespace superalg
