#pragma once

// Element laws of the self-organizing circuit: memristive elements, linear
// voltage-controlled voltage generators, differential current generators and
// the shared s-block. All functions are pure.

#include <span>

#include "memsim/params.hpp"

namespace memsim {

// Unit step. With eps == 0 the step is exact and theta(0) == 0, so memristor
// states halt exactly at the ends of [0, 1]. With eps > 0 it is replaced by a
// logistic of slope 1/eps.
double step_fn(double z, double eps = 0.0);

struct VcvgCoeffs {
    double a1 = 0.0;
    double a2 = 0.0;
    double ao = 0.0;
    double dc = 0.0;  // V

    friend bool operator==(const VcvgCoeffs&, const VcvgCoeffs&) = default;
};

// Throws DomainError unless 0 <= x <= 1.
double memristance(double x, const MemristorParams& p);

// Returns 0 or 1 (a value in between only when smoothing is enabled).
double window_h(double x, double v_m, double eps = 0.0);

// dx/dt of a memristive element; always opposite in sign to v_m.
double memristor_rate(double x, double v_m, const MemristorParams& p, double eps = 0.0);

double vcvg_voltage(const VcvgCoeffs& c, double v1, double v2, double vo);

double f_dcg(double v, const VcdcgParams& p);

// di/dt of one differential current generator attached to a node at voltage v.
double vcdcg_rate(double i, double v, double s, const VcdcgParams& p, double eps = 0.0);

// ds/dt of the shared s-variable. Throws UsageError on an empty current list.
double f_s(std::span<const double> currents, double s, const SBlockParams& p, double eps = 0.0);

// f_s with the current-dependent bracket already reduced to its value in
// {-1, 0, +1} (all below i_min, in between, some above i_max).
double f_s_bracket(double bracket, double s, const SBlockParams& p);

}  // namespace memsim
