#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "memsim/analysis.hpp"
#include "memsim/errors.hpp"
#include "memsim/run.hpp"

using namespace memsim;

namespace {

// Root above 1 of -ks s(s-1)(2s-1) + k = 0, by Newton on the cubic.
double cubic_root_above_one(double ks, double k) {
    double s = 1.5;
    for (int it = 0; it < 100; ++it) {
        const double g = -ks * (2 * s * s * s - 3 * s * s + s) + k;
        const double dg = -ks * (6 * s * s - 6 * s + 1);
        s -= g / dg;
    }
    return s;
}

// Trajectory with one free node following signal(t), sampled every dt.
template <class F>
Trajectory synthetic(F signal, double t_end, double dt, double dvdt = 0.0) {
    StateLayout L{1, 0, 1};
    Trajectory tr(L, 1);
    for (double t = 0.0; t <= t_end + 1e-12; t += dt) {
        const double v = signal(t);
        std::vector<double> y{v, 0.0, 0.75};
        std::vector<double> nv{v};
        tr.push(t, y, nv, dvdt);
    }
    return tr;
}

}  // namespace

TEST_CASE("equilibrium detection on synthetic signals") {
    const auto flat = synthetic([](double) { return -1.0; }, 1.0, 1e-3);
    const auto eq = detect_equilibrium(flat, {});
    REQUIRE(eq);
    CHECK(eq->t_star == 0.0);
    CHECK(eq->bits == std::vector<int>{0});

    const auto sine = synthetic([](double t) { return std::sin(2 * std::numbers::pi * 5 * t); }, 1.0, 1e-3);
    CHECK_FALSE(detect_equilibrium(sine, {}));

    // Large derivative keeps it from firing even inside the band.
    const auto busy = synthetic([](double) { return 1.0; }, 1.0, 1e-3, 5.0);
    CHECK_FALSE(detect_equilibrium(busy, {}));

    const auto late = synthetic([](double t) { return t < 0.4 ? 0.0 : 1.02; }, 1.0, 1e-3);
    const auto e2 = detect_equilibrium(late, {});
    REQUIRE(e2);
    CHECK(e2->t_star == doctest::Approx(0.4).epsilon(0.01));
    CHECK(e2->bits == std::vector<int>{1});
    CHECK_FALSE(detect_equilibrium(late, {}, 1.0, 0.0, 0.42));
}

TEST_CASE("equilibrium time is monotone in the band") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> amp(0.05, 0.5), rate(1.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = amp(rng), k = rate(rng);
        const auto tr = synthetic([&](double t) { return 1.0 + a * std::exp(-k * t) * std::cos(30 * t); }, 2.0, 1e-3);
        double prev = 1e300;
        for (double band : {0.02, 0.05, 0.1, 0.2, 0.4}) {
            EquilibriumCriterion c;
            c.v_band = band;
            c.deriv_band = 1e9;
            const auto eq = detect_equilibrium(tr, c);
            const double t = eq ? eq->t_star : 1e300;
            CHECK(t <= prev);
            prev = t;
        }
    }
}

TEST_CASE("limit cycle detection") {
    const auto square = synthetic([](double t) { return std::fmod(t * 10.0, 1.0) < 0.5 ? 1.0 : -1.0; }, 2.0, 1e-3);
    CHECK(detect_limit_cycle(square, 0.5));
    const auto settled = synthetic([](double) { return 1.0; }, 2.0, 1e-3);
    CHECK_FALSE(detect_limit_cycle(settled, 0.5));
    const auto decay = synthetic([](double t) { return std::exp(-3 * t); }, 2.0, 1e-3);
    CHECK_FALSE(detect_limit_cycle(decay, 0.5));
    std::mt19937 rng(1);
    std::normal_distribution<double> noise(0.0, 1.0);
    const auto noisy = synthetic([&](double) { return noise(rng); }, 2.0, 1e-3);
    CHECK_FALSE(detect_limit_cycle(noisy, 0.5));
    CHECK_FALSE(detect_limit_cycle(square, 5.0));
}

TEST_CASE("truth-table validation matches brute force") {
    CHECK(validate_truth_table(GateKind::Or, {1, 1, 1}));
    CHECK_FALSE(validate_truth_table(GateKind::Or, {1, -1, -1}));
    for (auto kind : {GateKind::And, GateKind::Or, GateKind::Xor})
        for (int m = 0; m < 8; ++m) {
            const int a = (m >> 2) & 1, b = (m >> 1) & 1, o = m & 1;
            int expect = 0;
            switch (kind) {
                case GateKind::And: expect = a & b; break;
                case GateKind::Or: expect = a | b; break;
                case GateKind::Xor: expect = a ^ b; break;
            }
            CHECK(validate_truth_table(kind, {2 * a - 1, 2 * b - 1, 2 * o - 1}) == (expect == o));
        }
    int low_ok = 0;
    for (int m = 0; m < 4; ++m)
        low_ok += validate_truth_table(GateKind::Or, {(m & 2) ? 1 : -1, (m & 1) ? 1 : -1, -1});
    CHECK(low_ok == 1);
}

TEST_CASE("iv sweep pinches and boxes") {
    MemristorParams p;
    const auto s = iv_sweep(p, 1.0, 10.0, 2.0, 0.5, 200);
    REQUIRE(s.size() == 401);
    int zeros = 0;
    for (const auto& smp : s) {
        CHECK(smp.x >= 0.0);
        CHECK(smp.x <= 1.0);
        if (smp.v == 0.0) {
            ++zeros;
            CHECK(smp.i_mem == 0.0);
        }
    }
    CHECK(zeros == 5);
    // First positive half cycle lowers x.
    CHECK(s[100].x < s[0].x);
    CHECK_THROWS_AS(iv_sweep(p, 0.0, 10.0, 1.0), UsageError);
    CHECK_THROWS_AS(iv_sweep(p, 1.0, -1.0, 1.0), UsageError);
}

TEST_CASE("loop area shrinks at high frequency") {
    MemristorParams p;
    double prev = 1e300;
    for (double f : {1e5, 3e5, 1e6, 3e6}) {
        const auto s = iv_sweep(p, 1.0, f, 1.0, 0.5, 400);
        const double area = pinched_loop_area(s);
        CHECK(area > 0.0);
        CHECK(area < prev);
        prev = area;
    }
}

TEST_CASE("f_s fixed points") {
    SBlockParams p;
    const double high = cubic_root_above_one(p.k_s, p.k_i);
    for (int grid : {1000, 3000, 6000}) {
        const auto below = fs_root_profile(p, CurrentRegime::AllBelowMin, grid);
        REQUIRE(below.size() == 1);
        CHECK(below[0] == doctest::Approx(high).epsilon(1e-9));
        const auto mid = fs_root_profile(p, CurrentRegime::Between, grid);
        REQUIRE(mid.size() == 3);
        CHECK(mid[0] == doctest::Approx(0.0).scale(1.0));
        CHECK(mid[1] == doctest::Approx(0.5));
        CHECK(mid[2] == doctest::Approx(1.0));
        const auto above = fs_root_profile(p, CurrentRegime::AboveMax, grid);
        REQUIRE(above.size() == 1);
        CHECK(above[0] < 0.0);
        // The cubic is odd about s = 1/2.
        CHECK(above[0] == doctest::Approx(1.0 - high).epsilon(1e-9));
    }
}
