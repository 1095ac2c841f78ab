#include "memsim/devices.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "memsim/errors.hpp"

namespace memsim {

double step_fn(double z, double eps) {
    if (eps > 0.0) return 1.0 / (1.0 + std::exp(-z / eps));
    return z > 0.0 ? 1.0 : 0.0;
}

double memristance(double x, const MemristorParams& p) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("memristor state out of [0,1]: " + std::to_string(x));
    return (p.r_off - p.r_on) * x + p.r_on;
}

double window_h(double x, double v_m, double eps) {
    return step_fn(x, eps) * step_fn(v_m, eps) + step_fn(1.0 - x, eps) * step_fn(-v_m, eps);
}

double memristor_rate(double x, double v_m, const MemristorParams& p, double eps) {
    const double h = window_h(x, v_m, eps);
    if (h == 0.0) return 0.0;
    return -p.alpha * h * v_m / memristance(x, p);
}

double vcvg_voltage(const VcvgCoeffs& c, double v1, double v2, double vo) {
    return c.a1 * v1 + c.a2 * v2 + c.ao * vo + c.dc;
}

double f_dcg(double v, const VcdcgParams& p) {
    using std::numbers::pi;
    const double k1 = p.m1 * pi / (2.0 * p.q);
    const double k0 = p.m0 * pi / (2.0 * p.q);
    return 2.0 * p.q / pi *
           ((std::atan(k1 * (v + p.v_c)) + std::atan(k1 * (v - p.v_c))) + std::atan(k0 * v));
}

double vcdcg_rate(double i, double v, double s, const VcdcgParams& p, double eps) {
    const double on = step_fn(s - 0.5, eps);
    const double off = step_fn(0.5 - s, eps);
    double rate = 0.0;
    if (on != 0.0) rate += on * f_dcg(v, p);
    if (off != 0.0) rate -= p.gamma * off * i;
    return rate;
}

double f_s_bracket(double bracket, double s, const SBlockParams& p) {
    return -p.k_s * s * (s - 1.0) * (2.0 * s - 1.0) - p.k_i * bracket;
}

double f_s(std::span<const double> currents, double s, const SBlockParams& p, double eps) {
    if (currents.empty()) throw UsageError("f_s needs at least one generator current");
    double all_below_min = 1.0;
    double all_below_max = 1.0;
    if (eps > 0.0) {
        // Thresholds are compared in relative form 1 - (i/i_lim)^2 so that a
        // single slope parameter is meaningful for both limits.
        for (double i : currents) {
            const double r_min = i / p.i_min;
            const double r_max = i / p.i_max;
            all_below_min *= step_fn(1.0 - r_min * r_min, eps);
            all_below_max *= step_fn(1.0 - r_max * r_max, eps);
        }
    } else {
        const double min2 = p.i_min * p.i_min;
        const double max2 = p.i_max * p.i_max;
        for (double i : currents) {
            const double i2 = i * i;
            if (!(i2 < min2)) all_below_min = 0.0;
            if (!(i2 < max2)) all_below_max = 0.0;
        }
    }
    return f_s_bracket(1.0 - all_below_min - all_below_max, s, p);
}

}  // namespace memsim
