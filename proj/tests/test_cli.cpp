#include "doctest.h"
#include "fixtures.hpp"
#include "golden.hpp"

#include "superalg/cli.hpp"
#include "superalg/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace superalg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& file) { return golden::path({file, file, {}}); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("superalg_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int count_lines(const std::string& s, const std::string& prefix) {
    int n = 0;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors exit with 2") {
        CHECK(run({}).code == cli::kUsage);
        CHECK(run({"frobnicate"}).code == cli::kUsage);
        CHECK(run({"verify"}).code == cli::kUsage);
        CHECK(run({"verify", golden_path("L"), "--bogus"}).code == cli::kUsage);
        CHECK(run({"construct", "nope", "--base", golden_path("L"), "--params", golden_path("L")}).code ==
              cli::kUsage);
        CHECK(run({"catalog", "A_n"}).code == cli::kUsage);
        CHECK(run({"verify", "/nonexistent/file.lsa.json"}).code == cli::kUsage);
        CHECK(run({"forms", golden_path("L"), "--parity", "sideways"}).code == cli::kUsage);
    }

    TEST_CASE("verify runs the expected properties") {
        const Run r = run({"verify", golden_path("L_odd_trivial")});
        CHECK(r.code == cli::kPass);
        CHECK(count_lines(r.out, "PASS ") == 11);
        CHECK(count_lines(r.out, "FAIL ") == 0);
        const Run p = run({"--parallel", "verify", golden_path("L_odd_trivial")});
        CHECK(p.out == r.out);
        const Run c = run({"verify", golden_path("L"), "--check", "jacobi,center"});
        CHECK(c.code == cli::kPass);
        CHECK(count_lines(c.out, "PASS ") == 2);
    }

    TEST_CASE("verify reports a Jacobi witness") {
        TempDir dir;
        io::Document doc = io::load_file(golden_path("L"));
        doc.algebra = fixture::L_perturbed();
        doc.metadata = nlohmann::json::object();
        io::save_file(dir / "broken.lsa.json", io::save(doc));
        const Run r = run({"verify", dir / "broken.lsa.json", "--check", "jacobi"});
        CHECK(r.code == cli::kCheckFailed);
        CHECK(r.out.find("FAIL jacobi") != std::string::npos);
        CHECK(r.out.find("(l1, l1, l1)") != std::string::npos);
    }

    TEST_CASE("catalog output equals the golden files") {
        for (const auto& item : golden::items()) {
            std::vector<std::string> args = {"catalog", item.name};
            if (item.n) {
                args.push_back("-n");
                args.push_back(std::to_string(*item.n));
            }
            const Run r = run(args);
            CHECK(r.code == cli::kPass);
            CHECK(r.out == io::read_file(golden::path(item)));
        }
        const Run list = run({"catalog", "--list"});
        for (const auto& name : catalog_names()) CHECK(list.out.find(name) != std::string::npos);
    }

    TEST_CASE("construct, decompose, construct is byte exact") {
        TempDir dir;
        io::ParamsDocument p;
        p.kind = "gode_1d_symplectic";
        const io::Document base = io::load_file(golden_path("L_odd_trivial"));
        const GradedBasis& b = base.algebra.basis();
        p.maps.emplace("Dbar", LinearMap::zero(b, Parity::Odd));
        p.vectors.emplace("x0", zeros(b.dim()));
        p.vectors.emplace("c1", zeros(b.dim()));
        p.scalars.emplace("lambda", Scalar(1));
        io::save_file(dir / "p.json", io::save_params(p));

        const Run c1 = run({"construct", "gode_1d_symplectic", "--base", golden_path("L_odd_trivial"), "--params",
                            dir / "p.json", "-o", dir / "g.lsa.json"});
        REQUIRE(c1.code == cli::kPass);
        const io::Document g = io::load_file(dir / "g.lsa.json");
        CHECK(g.algebra.dim() == 10);

        const Run v = run({"verify", dir / "g.lsa.json", "--check", "jacobi,quadratic:B,symplectic:omega"});
        CHECK(v.code == cli::kPass);

        const Run d = run({"decompose", dir / "g.lsa.json", "-o", dir / "base.lsa.json", "--params-out",
                           dir / "p2.json"});
        REQUIRE(d.code == cli::kPass);
        CHECK(io::load_file(dir / "base.lsa.json").algebra == base.algebra);

        const Run c2 = run({"construct", "gode_1d_symplectic", "--base", dir / "base.lsa.json", "--params",
                            dir / "p2.json"});
        REQUIRE(c2.code == cli::kPass);
        CHECK(c2.out == io::read_file(dir / "g.lsa.json"));
    }

    TEST_CASE("manin split and check") {
        TempDir dir;
        const Run r = run({"manin", "split", golden_path("L_even_trivial"), "-o", dir / "pair.lsa.json"});
        CHECK(r.code == cli::kPass);
        CHECK(r.out.find("PASS special") != std::string::npos);
        const Run c = run({"manin", "check", dir / "pair.lsa.json"});
        CHECK(c.code == cli::kPass);
        const Run q = run({"--quiet", "manin", "split", golden_path("L_even_trivial")});
        CHECK(q.out == "PASS special\n");
    }

    TEST_CASE("forms") {
        const Run r = run({"forms", golden_path("L"), "--parity", "odd", "--exists-nondegenerate"});
        CHECK(r.code == cli::kCheckFailed);
        CHECK(r.out.find("FAIL exists_nondegenerate") != std::string::npos);
        const Run a = run({"forms", golden_path("A_1"), "--parity", "odd", "--exists-nondegenerate"});
        CHECK(a.code == cli::kPass);
        const Run m = run({"forms", golden_path("m"), "--parity", "odd", "--cocycle", "--exists-nondegenerate"});
        CHECK(m.code == cli::kPass);
    }

    TEST_CASE("fuzz") {
        const Run r = run({"construct", "gode_1d_symplectic", "--fuzz", "5", "--seed", "3"});
        CHECK(r.code == cli::kPass);
        CHECK(run({"construct", "not_an_op", "--fuzz", "5"}).code == cli::kUsage);
    }

    TEST_CASE("quiet keeps only verdict lines") {
        const Run r = run({"-q", "verify", golden_path("m")});
        CHECK(r.code == cli::kPass);
        CHECK(r.out == "PASS jacobi\nPASS symplectic:omega\n");
    }
}
