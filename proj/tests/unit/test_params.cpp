#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <limits>
#include <random>

#include "doctest.h"
#include "memsim/errors.hpp"
#include "memsim/format.hpp"
#include "memsim/params.hpp"

using namespace memsim;

TEST_CASE("defaults") {
    const DeviceParams p;
    CHECK(p.mem.r_on == 0.05);
    CHECK(p.mem.r_off == 1.0);
    CHECK(p.mem.alpha == 60.0);
    CHECK(p.mem.c_par == 1e-9);
    CHECK(p.dcg.q == 5.0);
    CHECK(p.dcg.m0 == -400.0);
    CHECK(p.dcg.m1 == 400.0);
    CHECK(p.dcg.gamma == 60.0);
    CHECK(p.dcg.c1 == 1e-3);
    CHECK(p.dcg.v_c == 1.0);
    CHECK(p.sblock.k_s == 2e3);
    CHECK(p.sblock.k_i == 2e3);
    CHECK(p.sblock.i_min == 1e-8);
    CHECK(p.sblock.i_max == 10.0);
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("named access") {
    DeviceParams p;
    for (auto name : DeviceParams::names) {
        CHECK(DeviceParams::is_known(name));
        const double old = p.get(name);
        p.set(name, old * 2.0 + 1.0);
        CHECK(p.get(name) == old * 2.0 + 1.0);
    }
    CHECK_FALSE(DeviceParams::is_known("R_on"));
    CHECK_THROWS_AS(p.set("beta", 1.0), UsageError);
    CHECK_THROWS_AS(p.get("beta"), UsageError);

    DeviceParams bad;
    bad.set("r_on", 2.0);
    CHECK_THROWS_AS(bad.validate(), UsageError);
    bad = {};
    bad.set("i_max", 1e-9);
    CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("round-trip number formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.05) == "0.05");
    CHECK(format_double(-1.0) == "-1");
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int k = 0; k < 20000; ++k) {
        const std::uint64_t b = bits(rng);
        double v;
        std::memcpy(&v, &b, sizeof v);
        if (!std::isfinite(v)) continue;
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("fnv1a digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}
