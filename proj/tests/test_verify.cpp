#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>

#include "regmap/verify.hpp"

using namespace regmap;

namespace {

int count_passed(const std::vector<CheckResult>& results) {
    int count = 0;
    for (const CheckResult& result : results) {
        if (result.pass) {
            ++count;
        }
    }
    return count;
}

VerifyOptions without_fixtures() {
    VerifyOptions options;
    options.fixture_dir = "does_not_exist";
    return options;
}

}  // namespace

TEST_CASE("the sphere suite passes and covers every census map") {
    const std::vector<CheckResult> results = verify_spherical({});
    CHECK(all_passed(results));
    CHECK(results.size() == 19);
    std::set<std::string> names;
    for (const CheckResult& result : results) {
        names.insert(result.name);
    }
    CHECK(names.count("sphere icosahedron {3,5}") == 1);
    CHECK(names.count("sphere hosohedron {2,7}") == 1);
    CHECK(names.count("sphere dihedron {8,2}") == 1);
}

TEST_CASE("the torus suite checks six sides on the lattice and three by tracing") {
    const std::vector<CheckResult> results = verify_tori({});
    CHECK(all_passed(results));
    int lattice = 0;
    int tracer = 0;
    for (const CheckResult& result : results) {
        if (result.name.find(" lattice") != std::string::npos) {
            ++lattice;
        }
        if (result.name.find(" tracer") != std::string::npos) {
            ++tracer;
        }
    }
    CHECK(lattice == 36);
    CHECK(tracer == 18);
}

TEST_CASE("the family suite passes") {
    const std::vector<CheckResult> results = verify_families({});
    CHECK(all_passed(results));
    std::set<std::string> names;
    for (const CheckResult& result : results) {
        names.insert(result.name);
    }
    CHECK(names.count("family accola_maclachlan 8") == 1);
    CHECK(names.count("family wiman_i 2") == 1);
    CHECK(names.count("family wiman_ii 3") == 1);
    CHECK(names.count("family bolza matrices") == 1);
    CHECK(names.count("family fermat 4 equals census row M.3.2") == 1);
    CHECK(names.count("family fermat 3 equals the side-3 triangular torus") == 1);
    CHECK(names.count("dual wiman_ii 3 equals M.3.7") == 1);
    CHECK(names.count("family hurwitz 1 degenerates") == 1);
    CHECK(names.count("mirror lengths at {3,7}") == 1);
    CHECK(names.count("lengths engage exactly for hyperbolic types") == 1);
}

TEST_CASE("the oracle suite finds no disagreement on any built-in map") {
    const std::vector<CheckResult> results = verify_oracle({});
    CHECK(all_passed(results));
    CHECK(results.size() > 40);
}

TEST_CASE("the census suite passes without any fixture directory") {
    const std::vector<CheckResult> results = verify_fixtures(without_fixtures());
    CHECK(all_passed(results));
    CHECK(results.size() == 28);
    int missing = 0;
    for (const CheckResult& result : results) {
        if (result.detail == "fixture-missing") {
            ++missing;
        }
    }
    CHECK(missing == 18);
}

TEST_CASE("the census suite verifies rows from a fixture directory") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "regmap_test_verify_fixtures";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream manifest(dir / "manifest");
        manifest << "m2_6 8 8 8 01=1,02=1,12=1\n";
        std::ofstream pres(dir / "m2_6.pres");
        pres << "gens A B C;\nrels A^2 B^8 C^8 ABC BCB^-1C^-1 BC^-3;\n";
    }
    VerifyOptions options;
    options.fixture_dir = dir.string();
    const std::vector<CheckResult> results = verify_fixtures(options);
    CHECK(all_passed(results));
    bool found = false;
    for (const CheckResult& result : results) {
        if (result.name == "census M.2.6") {
            found = true;
            CHECK(result.detail.empty());
        }
    }
    CHECK(found);
    std::filesystem::remove_all(dir);
}

TEST_CASE("a fixture that disagrees fails its census check") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "regmap_test_verify_bad";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    {
        std::ofstream manifest(dir / "manifest");
        manifest << "m2_6 8 8 16 01=1,02=1,12=1\n";
        std::ofstream pres(dir / "m2_6.pres");
        pres << "gens A B C;\nrels A^2 B^8 C^8 ABC BCB^-1C^-1 BC^-3;\n";
    }
    VerifyOptions options;
    options.fixture_dir = dir.string();
    const std::vector<CheckResult> results = verify_fixtures(options);
    CHECK(!all_passed(results));
    for (const CheckResult& result : results) {
        if (result.name == "census M.2.6") {
            CHECK(!result.pass);
        } else {
            CHECK(result.pass);
        }
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify_all concatenates the five suites in order") {
    const VerifyOptions options = without_fixtures();
    const std::vector<CheckResult> all = verify_all(options);
    const std::size_t expected = verify_spherical(options).size() +
                                 verify_tori(options).size() +
                                 verify_families(options).size() +
                                 verify_oracle(options).size() +
                                 verify_fixtures(options).size();
    CHECK(all.size() == expected);
    CHECK(all_passed(all));
    CHECK(all.front().name.rfind("sphere ", 0) == 0);
    CHECK(all.back().name.rfind("census ", 0) == 0);
}

TEST_CASE("results render one line per check plus a summary") {
    const std::vector<CheckResult> results = {
        {"alpha", true, ""},
        {"beta", true, "fixture-missing"},
        {"gamma", false, "orders differ"},
    };
    const std::string text = render_check_results(results);
    CHECK(text ==
          "ok alpha\n"
          "ok beta (fixture-missing)\n"
          "FAIL gamma: orders differ\n"
          "2/3 checks passed\n");
    CHECK(!all_passed(results));
    CHECK(all_passed({results[0], results[1]}));
}
