#include "or_reference.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double Ron = 0.05, Roff = 1.0, alpha = 60.0, Cpar = 1e-9;
constexpr double m0 = -400.0, m1 = 400.0, q = 5.0, gamma_ = 60.0, C1 = 1e-3;
constexpr double imin = 1e-8, imax = 10.0, ks = 2e3, ki = 2e3;
constexpr double vc = 1.0, res = 1.0;

double u(double z) { return z > 0.0 ? 1.0 : 0.0; }

double mem(double x) { return Ron + (Roff - Ron) * x; }

double h(double x, double vm) { return u(x) * u(vm) + u(1.0 - x) * u(-vm); }

double fdcg(double x) {
    const double m0b = m0 * kPi / (2 * q), m1b = m1 * kPi / (2 * q);
    return q * (std::atan(m1b * (x + 1)) + std::atan(m0b * x) + std::atan(m1b * (x - 1))) * 2 / kPi;
}

// State: [V3, x11, x14, x21, x24, x32, x34, x35, i, s]
using State = std::array<double, 10>;

State deriv(const State& y, double V1, double V2) {
    const double V3 = y[0];
    std::array<double, 7> x;
    for (int k = 0; k < 7; ++k) x[k] = std::clamp(y[1 + k], 0.0, 1.0);
    const double i = y[8], s = y[9];

    // Generator outputs.
    const double V11 = V3;
    const double V14 = -V2 + V3 - vc;
    const double V21 = V3;
    const double V24 = -V1 + V3 - vc;
    const double V32 = 2 * V1 + 2 * V2 - V3 + 2 * vc;
    const double V34 = V1;
    const double V35 = V2;
    const double V33 = -4 * V1 - 4 * V2 + 7 * V3 - 2 * vc;

    // V(plus, minus) of each element.
    const std::array<double, 7> vm = {
        V1 - V11,   // Xmem11 1 11
        V14 - V1,   // Xmem14 14 1
        V2 - V21,   // Xmem21 2 21
        V24 - V2,   // Xmem24 24 2
        V3 - V32,   // Xmem32 3 32
        V34 - V3,   // Xmem34 34 3
        V35 - V3,   // Xmem35 35 3
    };

    State d{};
    for (int k = 0; k < 7; ++k) d[1 + k] = -alpha * h(x[k], vm[k]) * vm[k] / mem(x[k]);

    // Currents into node 3.
    double in3 = 0.0;
    in3 -= vm[4] / mem(x[4]);  // leaves 3 through Xmem32
    in3 += vm[5] / mem(x[5]);  // arrives through Xmem34
    in3 += vm[6] / mem(x[6]);  // arrives through Xmem35
    in3 += (V33 - V3) / res;   // R31
    in3 += (V1 - V3) / res;    // R1o
    in3 += (V2 - V3) / res;    // R2o
    in3 -= i;                  // G1 2 1 carries i out of the node

    // C1 plus each DCM3 parasitic capacitor, weighted by how much of V3 its
    // far end does not follow.
    const double c3 = C1 + Cpar * (1.0 - (-1.0)) + Cpar * (1.0 - 0.0) + Cpar * (1.0 - 0.0);
    d[0] = in3 / c3;

    d[8] = u(s - 0.5) * fdcg(V3) - gamma_ * u(0.5 - s) * i;
    d[9] = -ks * s * (s - 1) * (2 * s - 1) -
           ki * (1 - u(imin - std::fabs(i)) - u(imax - std::fabs(i)));
    return d;
}

}  // namespace

std::vector<double> simulate(const OrReference& setup, const std::vector<double>& times) {
    State y{};
    for (int k = 0; k < 7; ++k) y[1 + k] = setup.x0[k];
    y[9] = 0.75;

    std::vector<double> out;
    out.reserve(times.size());
    double t = 0.0;
    const double dt = setup.dt;
    std::size_t next = 0;
    auto axpy = [](const State& a, double c, const State& b) {
        State r;
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[k] + c * b[k];
        return r;
    };
    while (next < times.size()) {
        while (next < times.size() && times[next] <= t + 1e-15) {
            out.push_back(y[0]);
            ++next;
        }
        if (next == times.size()) break;
        const double step = std::min(dt, times[next] - t);
        const State k1 = deriv(y, setup.v1, setup.v2);
        const State k2 = deriv(axpy(y, step / 2, k1), setup.v1, setup.v2);
        const State k3 = deriv(axpy(y, step / 2, k2), setup.v1, setup.v2);
        const State k4 = deriv(axpy(y, step, k3), setup.v1, setup.v2);
        for (std::size_t k = 0; k < y.size(); ++k)
            y[k] += step / 6 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);
        for (int k = 1; k <= 7; ++k) y[k] = std::clamp(y[k], 0.0, 1.0);
        t += step;
    }
    return out;
}

}  // namespace oracle
