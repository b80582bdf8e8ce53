// Serial reference against the OpenMP kernels on catalog algebras of
// growing size. Usage: bench_kernels [max_n] [repeats]

#include "superalg/catalog.hpp"
#include "superalg/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace superalg;

namespace {

double seconds(const std::function<Report()>& f, int repeats, Report& last) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < repeats; ++r) last = f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / repeats;
}

bool same(const Report& a, const Report& b) { return a.pass == b.pass && a.witness == b.witness && a.residual == b.residual; }

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    std::printf("threads %d\n", kernels::max_threads());
    std::printf("%-10s %4s %12s %12s %8s %s\n", "kernel", "dim", "serial_s", "parallel_s", "speedup", "agree");
    bool all_agree = true;
    for (int n = 2; n <= max_n; n += 2) {
        const CatalogEntry e = build_catalog("h_tensor_A_n", n);
        const LieSuperalgebra& g = e.value.algebra;
        const Matrix& w = e.forms.at("omega").matrix();
        const LinearMap& d = e.maps.at("D");
        const std::vector<std::pair<const char*, std::function<Report(Exec)>>> kernels_list = {
            {"jacobi", [&](Exec x) { return kernels::jacobi(g, x); }},
            {"cocycle", [&](Exec x) { return kernels::cocycle(g, w, x); }},
            {"invariance", [&](Exec x) { return kernels::invariance(g, w, x); }},
            {"derivation", [&](Exec x) { return kernels::derivation(g, d.matrix(), d.d(), x); }},
        };
        for (const auto& [name, run] : kernels_list) {
            Report rs, rp;
            const double ts = seconds([&] { return run(Exec::Serial); }, repeats, rs);
            const double tp = seconds([&] { return run(Exec::Parallel); }, repeats, rp);
            const bool agree = same(rs, rp);
            all_agree = all_agree && agree;
            std::printf("%-10s %4zu %12.5f %12.5f %8.2f %s\n", name, g.dim(), ts, tp, tp > 0 ? ts / tp : 0.0,
                        agree ? "yes" : "NO");
        }
    }
    return all_agree ? 0 : 1;
}
