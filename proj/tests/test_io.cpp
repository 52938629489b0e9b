#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diocone/errors.hpp"
#include "diocone/io.hpp"
#include "oracle.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace diocone;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_prefix(const char* name) {
    auto dir = std::filesystem::temp_directory_path() / "diocone_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("parse_input") {
    SUBCASE("orthant generators") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        CHECK(p.mode == InputMode::generators);
        CHECK(p.matrix == IntMatrix{{1, 0}, {0, 1}});
    }
    SUBCASE("comments and blank lines") {
        ProblemInput p = parse_input(
            "# a cone\n\n2\n2 # columns\n\n 1 0\n0 1\n\ngenerators # done\n");
        CHECK(p.matrix == IntMatrix{{1, 0}, {0, 1}});
    }
    SUBCASE("equations mode forces the ambient lattice") {
        ProblemInput p = parse_input("1\n2\n1 -1\nequations");
        p.lattice_mode = LatticeMode::ambient_lattice;
        CHECK(p.mode == InputMode::equations);
    }
    SUBCASE("errors carry line numbers") {
        auto line_of = [](const std::string& text) -> std::size_t {
            try {
                parse_input(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("x\n2\n1 0\n0 1\ngenerators") == 1);   // bad row count
        CHECK(line_of("2\n2\n1 zebra\n0 1\ngenerators") == 3); // bad entry
        CHECK(line_of("2\n2\n1 0 5\n0 1\ngenerators") == 3);  // wrong width
        CHECK(line_of("2\n2\n1 0\n0 1\nfrobnicate") == 5);    // unknown keyword
        CHECK(line_of("2\n2\n1 0\n0 1\ngenerators\n7") == 6); // trailing input
        CHECK(line_of("2\n2\n1 0") > 0);                      // truncated
        CHECK(line_of("0\n2\n1 0\ngenerators") == 1);         // nonpositive count
    }
}

TEST_CASE("run") {
    SUBCASE("orthant: both algorithms agree on the core fields") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        p.options.algorithm = Algorithm::primal;
        Report a = run(p);
        p.options.algorithm = Algorithm::dual;
        Report b = run(p);
        CHECK(a.dim == 2);
        CHECK(a.pointed);
        CHECK(a.hilbert_basis == b.hilbert_basis);
        CHECK(a.extreme_rays == b.extreme_rays);
        CHECK(a.support_forms == b.support_forms);
        CHECK(a.hilbert_basis == IntMatrix{{0, 1}, {1, 0}}); // lexicographic
    }
    SUBCASE("single equation") {
        for (auto alg : {Algorithm::primal, Algorithm::dual}) {
            ProblemInput p = parse_input("1\n2\n1 -1\nequations");
            p.options.algorithm = alg;
            Report r = run(p);
            CHECK(r.hilbert_basis == IntMatrix{{1, 1}});
            CHECK(r.dim == 1);
        }
    }
    SUBCASE("hyperplanes mode") {
        for (auto alg : {Algorithm::primal, Algorithm::dual}) {
            ProblemInput p = parse_input("2\n2\n-1 2\n3 -1\nhyperplanes");
            p.options.algorithm = alg;
            Report r = run(p);
            CHECK(oracle::same_rows(r.hilbert_basis, {{1, 1}, {1, 2}, {2, 1}, {1, 3}}));
        }
    }
    SUBCASE("non-pointed hyperplanes are rejected") {
        ProblemInput p = parse_input("1\n2\n1 0\nhyperplanes");
        CHECK_THROWS_AS(run(p), MathError);
    }
    SUBCASE("square cone with h-vector") {
        ProblemInput p = parse_input("4\n3\n0 0 1\n1 0 1\n0 1 1\n1 1 1\ngenerators");
        p.options.compute_hvector = true;
        Report r = run(p);
        REQUIRE(r.hvector);
        CHECK(r.hvector->coefficients == std::vector<Int>{1, 1, 0, 0});
        CHECK(*r.hilbert_polynomial == std::vector<Rat>{1, 2, 1});
        CHECK(r.total_multiplicity == 2);
    }
    SUBCASE("h-vector unavailable on non-homogeneous input") {
        ProblemInput p = parse_input("2\n2\n2 1\n1 3\ngenerators");
        p.options.compute_hvector = true;
        Report r = run(p); // must not throw
        CHECK(r.hvector_requested);
        CHECK_FALSE(r.hvector);
    }
}

TEST_CASE("emit") {
    SUBCASE("orthant files and round trip") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        Report r = run(p);
        auto prefix = temp_prefix("orthant");
        emit(r, prefix.string());
        CHECK(slurp(prefix.string() + ".hilb") == "2\n2\n0 1\n1 0\n");
        CHECK(slurp(prefix.string() + ".ext") == "2\n2\n0 1\n1 0\n");
        CHECK(slurp(prefix.string() + ".supp") == "2\n2\n0 1\n1 0\n");
        CHECK_FALSE(std::filesystem::exists(prefix.string() + ".hvec"));

        // re-parse the emitted matrix
        ProblemInput back = parse_input(slurp(prefix.string() + ".hilb") + "generators\n");
        CHECK(back.matrix == r.hilbert_basis);

        // determinism: emitting again is byte-identical
        std::string first = slurp(prefix.string() + ".json");
        emit(r, prefix.string());
        std::string second = slurp(prefix.string() + ".json");
        // timings differ between runs, not between emissions of one report
        CHECK(first == second);
    }
    SUBCASE("hvec file") {
        ProblemInput p = parse_input("4\n3\n0 0 1\n1 0 1\n0 1 1\n1 1 1\ngenerators");
        p.options.compute_hvector = true;
        Report r = run(p);
        auto prefix = temp_prefix("square");
        emit(r, prefix.string());
        CHECK(slurp(prefix.string() + ".hvec") == "1 1 0 0\n1/1 2/1 1/1\n");
    }
    SUBCASE("json structure") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        Report r = run(p);
        auto j = nlohmann::json::parse(report_to_json(r));
        CHECK(j["dim"] == 2);
        CHECK(j["pointed"] == true);
        CHECK(j["hilbert_basis"] == nlohmann::json::parse(R"([["0","1"],["1","0"]])"));
        CHECK(j["h_vector"].is_null());
        CHECK(j["unit_basis"].empty());
        CHECK(j["timings"].contains("total"));
    }
    SUBCASE("json_only writes only the json file") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        Report r = run(p);
        auto prefix = temp_prefix("jsononly");
        emit(r, prefix.string(), true);
        CHECK(std::filesystem::exists(prefix.string() + ".json"));
        CHECK_FALSE(std::filesystem::exists(prefix.string() + ".hilb"));
    }
    SUBCASE("unwritable prefix") {
        ProblemInput p = parse_input("2\n2\n1 0\n0 1\ngenerators");
        Report r = run(p);
        CHECK_THROWS_AS(emit(r, "/nonexistent_dir_zzz/out"), IoError);
    }
}

TEST_CASE("report determinism across runs") {
    ProblemInput p = parse_input("5\n3\n1 0 1\n0 1 1\n1 1 1\n2 1 1\n0 0 1\ngenerators");
    for (auto alg : {Algorithm::primal, Algorithm::dual}) {
        p.options.algorithm = alg;
        Report a = run(p);
        Report b = run(p);
        CHECK(a.hilbert_basis == b.hilbert_basis);
        CHECK(a.support_forms == b.support_forms);
        CHECK(a.extreme_rays == b.extreme_rays);
    }
}
