#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gft/verify.hpp"
#include "test_util.hpp"

namespace verify = gft::verify;

TEST_CASE("shell suite passes on default grids") {
    const verify::VerifyReport r = verify::verify_shell({}, 0);
    CHECK(r.suite == "shell");
    CHECK(r.violations == 0);
    CHECK(r.samples > 100);
    CHECK(r.elapsed.count() >= 0.0);
}

TEST_CASE("shell suite respects custom grids") {
    verify::ShellGrids grids;
    grids.radial = 10;
    grids.angular = 40;
    grids.curve_count = 36;
    grids.fib_max = 30;
    grids.tau_max = 20;
    grids.coeff_max = 20;
    const verify::VerifyReport r = verify::verify_shell(grids, 5);
    CHECK(r.violations == 0);
    CHECK(r.seed == 5);
}

TEST_CASE("expansion suite passes") {
    const verify::VerifyReport r = verify::verify_expansions(200, 7, 8);
    CHECK(r.suite == "expansions");
    CHECK(r.samples == 200);
    CHECK(r.violations == 0);
    CHECK_THROWS_AS(verify::verify_expansions(10, 0, 2), std::invalid_argument);
}

TEST_CASE("bounds suite passes and reaches the extremal ratio") {
    const verify::VerifyReport r =
        verify::verify_bounds({1.0, 2.0}, {0.0, 1.0}, 2000, 42);
    CHECK(r.suite == "bounds");
    CHECK(r.seed == 42);
    CHECK(r.samples == 4 * 2002);
    CHECK(r.violations == 0);
    CHECK(r.max_ratio_a2 >= 0.999);
    CHECK(r.max_ratio_a2 <= 1.0 + 1e-9);
    CHECK(r.max_ratio_a3 <= 1.0 + 1e-9);
    CHECK(r.max_ratio_fs <= 1.0 + 1e-9);
}

TEST_CASE("tuples above the piecewise constant are counted, not failed") {
    // The antisymmetric injected tuple attains four times the threshold at
    // mu = 0, lambda = 1, so at least one flag must appear even with a
    // minimal sample count.
    const verify::VerifyReport r = verify::verify_bounds({1.0}, {0.0}, 1, 3);
    CHECK(r.violations == 0);
    CHECK(r.flagged_fs_tuples >= 1);
}

TEST_CASE("reports are deterministic for fixed inputs") {
    const verify::VerifyReport a = verify::verify_bounds({1.0, 1.5}, {1.0}, 500, 9);
    const verify::VerifyReport b = verify::verify_bounds({1.0, 1.5}, {1.0}, 500, 9);
    CHECK(a.json() == b.json());
    CHECK(a.max_ratio_a2 == b.max_ratio_a2);
    CHECK(a.max_ratio_fs == b.max_ratio_fs);

    const verify::VerifyReport c = verify::verify_bounds({1.0, 1.5}, {1.0}, 500, 10);
    CHECK(a.json() != c.json());
}

TEST_CASE("report serialization carries stable field names") {
    const verify::VerifyReport r = verify::verify_bounds({1.0}, {1.0}, 10, 1);
    const auto j = nlohmann::json::parse(r.json());
    CHECK(j.at("suite") == "bounds");
    CHECK(j.at("seed") == 1);
    CHECK(j.at("samples") == 12);
    CHECK(j.at("violations") == 0);
    CHECK(j.at("max_ratio_a2").is_number());
    CHECK(j.at("max_ratio_a3").is_number());
    CHECK(j.at("max_ratio_fs").is_number());
    CHECK(j.at("flagged_fs_tuples").is_number_unsigned());
    CHECK(!j.contains("elapsed"));

    // Field order is pinned so identical runs emit identical bytes.
    CHECK(r.json().rfind("{\"suite\":\"bounds\",\"seed\":1,\"samples\":12,"
                         "\"violations\":0,",
                         0) == 0);
}
