#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccs/canonical.hpp"
#include "ccs/cli.hpp"

using namespace ccs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ccs_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& contents = "") {
        fs::path p = path / name;
        if (!contents.empty()) {
            std::ofstream out(p);
            out << contents;
        }
        return p.string();
    }
};

}  // namespace

TEST_CASE("group specs") {
    CHECK(cli::group_from_spec("cyclic:6").order == 6);
    CHECK(cli::group_from_spec("dihedral:4").order == 8);
    CHECK(cli::group_from_spec("symmetric:4").order == 24);
    CHECK(cli::group_from_spec("quaternion8").order == 8);
    CHECK(cli::group_from_spec("product:cyclic:2xcyclic:3").order == 6);
    CHECK(cli::group_from_spec("product:product:cyclic:2xcyclic:2xcyclic:2").order == 8);

    TempDir tmp;
    std::string path = tmp.file("z2.cayley", "2\n0 1\n1 0\n");
    CHECK(cli::group_from_spec("file:" + path).order == 2);

    CHECK_THROWS_AS(cli::group_from_spec("frobnicator:3"), parse_error);
    CHECK_THROWS_AS(cli::group_from_spec("cyclic:x"), parse_error);
    CHECK_THROWS_AS(cli::group_from_spec("product:cyclic:2"), parse_error);
    CHECK_THROWS_AS(cli::group_from_spec("file:/nonexistent/nope"), parse_error);
    // constructor bound violations surface as exit-1 class errors
    CHECK_THROWS_AS(cli::group_from_spec("symmetric:9"), parse_error);
}

TEST_CASE("cmd_validate") {
    TempDir tmp;
    std::ostringstream out, err;
    SECTION("builtin dumps validate") {
        std::string path = tmp.file("torus.surf");
        REQUIRE(cli::cmd_builtin("torus", path, out, err) == 0);
        CHECK(cli::cmd_validate(path, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("ok"));
    }
    SECTION("invariant violations exit 1") {
        std::string path = tmp.file("bad.surf",
                                    "surface bad\n"
                                    "vertex w internal\n"
                                    "edge a w w interior\n"
                                    "face f : a a\n");
        CHECK(cli::cmd_validate(path, out, err) == 1);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("violation"));
    }
    SECTION("parse errors exit 2") {
        std::string path = tmp.file("broken.surf", "vertex v internal\nvertex v internal\n");
        CHECK(cli::cmd_validate(path, out, err) == 2);
    }
    SECTION("missing file exits 2") {
        CHECK(cli::cmd_validate(tmp.file("missing.surf"), out, err) == 2);
    }
}

TEST_CASE("cmd_invariant") {
    std::ostringstream out, err;
    SECTION("sphere over S3") {
        cli::InvariantOptions opt;
        opt.builtin_name = "sphere_a";
        opt.group_spec = "symmetric:3";
        CHECK(cli::cmd_invariant(opt, out, err) == 0);
        CHECK(out.str() == "count=6 half_exponent=4 value≈0.166666666667\n");
    }
    SECTION("cylinder over Z2 with matching colours") {
        cli::InvariantOptions opt;
        opt.builtin_name = "cylinder";
        opt.group_spec = "cyclic:2";
        opt.in_list = "1";
        opt.out_list = "1";
        CHECK(cli::cmd_invariant(opt, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::StartsWith("count=2 half_exponent=2"));
    }
    SECTION("torus over S3") {
        cli::InvariantOptions opt;
        opt.builtin_name = "torus";
        opt.group_spec = "symmetric:3";
        CHECK(cli::cmd_invariant(opt, out, err) == 0);
        CHECK(out.str() == "count=18 half_exponent=2 value≈3\n");
    }
    SECTION("arity mismatch exits 1") {
        cli::InvariantOptions opt;
        opt.builtin_name = "pants";
        opt.group_spec = "cyclic:2";
        opt.in_list = "1";
        opt.out_list = "0";  // needs two out colours
        CHECK(cli::cmd_invariant(opt, out, err) == 1);
    }
    SECTION("bad group spec exits 2") {
        cli::InvariantOptions opt;
        opt.builtin_name = "torus";
        opt.group_spec = "nope";
        CHECK(cli::cmd_invariant(opt, out, err) == 2);
    }
    SECTION("names flag echoes element names") {
        cli::InvariantOptions opt;
        opt.builtin_name = "cylinder";
        opt.group_spec = "symmetric:3";
        opt.in_list = "1";
        opt.out_list = "1";
        opt.names = true;
        CHECK(cli::cmd_invariant(opt, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("in=021"));
    }
}

TEST_CASE("cmd_matrix") {
    TempDir tmp;
    std::ostringstream out, err;
    SECTION("cylinder over Z3 to stdout") {
        CHECK(cli::cmd_matrix("", "cylinder", "cyclic:3", "", out, err) == 0);
        CHECK(out.str() ==
              "tqft n=1 m=1 order=3 he=2\n"
              "3 0 0\n"
              "0 3 0\n"
              "0 0 3\n");
    }
    SECTION("pants over Z2 to a file, entries match p_func") {
        std::string path = tmp.file("pants.tqft");
        CHECK(cli::cmd_matrix("", "pants", "cyclic:2", path, out, err) == 0);
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        CHECK(header == "tqft n=1 m=2 order=2 he=3");
        Group z2 = make_cyclic(2);
        for (int i = 0; i < 2; ++i)
            for (int h = 0; h < 2; ++h) {
                long long e0, e1;
                REQUIRE(in >> e0 >> e1);
                CHECK(e0 == p_func(z2, 0, i, h));
                CHECK(e1 == p_func(z2, 1, i, h));
            }
    }
    SECTION("exactly one surface source required") {
        CHECK(cli::cmd_matrix("", "", "cyclic:2", "", out, err) == 1);
        CHECK(cli::cmd_matrix("a.surf", "torus", "cyclic:2", "", out, err) == 1);
    }
}

TEST_CASE("cmd_check_moves") {
    std::ostringstream out1, out2, err;
    CHECK(cli::cmd_check_moves("torus", "cyclic:3", 11, 20, out1, err) == 0);
    CHECK(cli::cmd_check_moves("torus", "cyclic:3", 11, 20, out2, err) == 0);
    CHECK(out1.str() == out2.str());  // same seed, same trace
    CHECK_THAT(out1.str(), Catch::Matchers::ContainsSubstring("invariant preserved"));

    std::ostringstream out3;
    CHECK(cli::cmd_check_moves("torus", "cyclic:3", 12, 5, out3, err) == 0);
    CHECK(out3.str() != out1.str());

    CHECK(cli::cmd_check_moves("nope", "cyclic:3", 1, 5, out1, err) == 1);
}

TEST_CASE("cmd_identities") {
    std::ostringstream out, err;
    SECTION("S3 passes everything") {
        CHECK(cli::cmd_identities("symmetric:3", false, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("pants_move_1"));
        CHECK_THAT(out.str(), !Catch::Matchers::ContainsSubstring("fail"));
    }
    SECTION("abelian and quaternion groups pass") {
        CHECK(cli::cmd_identities("cyclic:6", false, out, err) == 0);
        CHECK(cli::cmd_identities("quaternion8", false, out, err) == 0);
    }
    SECTION("over-cap checks are skipped, not failed") {
        CHECK(cli::cmd_identities("symmetric:4", false, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("skip"));
    }
    SECTION("names legend") {
        CHECK(cli::cmd_identities("quaternion8", true, out, err) == 0);
        CHECK_THAT(out.str(), Catch::Matchers::ContainsSubstring("-k"));
    }
}

TEST_CASE("cmd_glue and cmd_builtin") {
    TempDir tmp;
    std::ostringstream out, err;
    std::string pants = tmp.file("pants.surf");
    std::string pants_r = tmp.file("pants_r.surf");
    REQUIRE(cli::cmd_builtin("pants", pants, out, err) == 0);
    REQUIRE(cli::cmd_builtin("pants_reflected", pants_r, out, err) == 0);

    SECTION("glue writes a valid, parseable surface") {
        std::string glued = tmp.file("glued.surf");
        CHECK(cli::cmd_glue(pants, pants_r, glued, out, err) == 0);
        CHECK(cli::cmd_validate(glued, out, err) == 0);
        std::ifstream in(glued);
        std::stringstream text;
        text << in.rdbuf();
        ParsedSurface p = parse_surface(text.str());
        CHECK(p.complex.euler_characteristic() == -2);
    }
    SECTION("boundary mismatch exits 1") {
        std::string cyl = tmp.file("cyl.surf");
        REQUIRE(cli::cmd_builtin("cylinder", cyl, out, err) == 0);
        CHECK(cli::cmd_glue(pants, cyl, tmp.file("x.surf"), out, err) == 1);
    }
    SECTION("unknown builtin exits 1") {
        CHECK(cli::cmd_builtin("klein", "", out, err) == 1);
    }
    SECTION("builtin dump to stdout round-trips") {
        std::ostringstream dump;
        REQUIRE(cli::cmd_builtin("punctured_torus_a", "", dump, err) == 0);
        ParsedSurface p = parse_surface(dump.str());
        CHECK(isomorphic(p.complex, builtin("punctured_torus_a")));
    }
}

TEST_CASE("bruteforce budget env override") {
    // restore whatever was set before
    const char* old = std::getenv("CCS_BRUTEFORCE_BUDGET");
    std::string saved = old ? old : "";
    setenv("CCS_BRUTEFORCE_BUDGET", "7", 1);
    CHECK(default_bruteforce_budget() == 7);
    CHECK_THROWS_AS(
        count_colourings_bruteforce(make_symmetric(3), builtin("torus"), {}),
        budget_error);
    if (saved.empty())
        unsetenv("CCS_BRUTEFORCE_BUDGET");
    else
        setenv("CCS_BRUTEFORCE_BUDGET", saved.c_str(), 1);
    CHECK(count_colourings_bruteforce(make_symmetric(3), builtin("torus"), {}) == 18);
}
