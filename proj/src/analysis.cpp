#include "memsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "memsim/devices.hpp"
#include "memsim/errors.hpp"
#include "memsim/integrator.hpp"

namespace memsim {

EquilibriumTracker::EquilibriumTracker(const EquilibriumCriterion& criterion, double v_c)
    : criterion_(criterion), v_c_(v_c) {}

void EquilibriumTracker::reset() {
    running_ = false;
    settled_ = false;
    bits_.clear();
}

bool EquilibriumTracker::push(double t, std::span<const double> v_free, double max_dvdt) {
    if (settled_) return true;
    bool ok = max_dvdt < criterion_.deriv_band;
    scratch_.resize(v_free.size());
    for (std::size_t k = 0; ok && k < v_free.size(); ++k) {
        const double v = v_free[k];
        if (std::fabs(v - v_c_) <= criterion_.v_band)
            scratch_[k] = 1;
        else if (std::fabs(v + v_c_) <= criterion_.v_band)
            scratch_[k] = 0;
        else
            ok = false;
    }
    if (!ok) {
        running_ = false;
        return false;
    }
    if (!running_ || scratch_ != bits_) {
        running_ = true;
        start_ = t;
        bits_ = scratch_;
    }
    if (t - start_ >= criterion_.hold) settled_ = true;
    return settled_;
}

std::optional<Equilibrium> detect_equilibrium(const Trajectory& trajectory,
                                              const EquilibriumCriterion& criterion, double v_c,
                                              double t_from, double t_to) {
    EquilibriumTracker tracker(criterion, v_c);
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const double t = trajectory.time(k);
        if (t < t_from) continue;
        if (t >= t_to) break;
        if (tracker.push(t, trajectory.free_voltages(k), trajectory.max_dvdt(k)))
            return Equilibrium{tracker.t_star(), tracker.bits()};
    }
    return std::nullopt;
}

double autocorrelation_peak(std::span<const double> signal) {
    const std::size_t m = signal.size();
    const std::size_t half = m / 2;
    if (half < 4) return 0.0;

    auto corr = [&](std::size_t lag) {
        double ma = 0.0, mb = 0.0;
        for (std::size_t j = 0; j < half; ++j) {
            ma += signal[j];
            mb += signal[j + lag];
        }
        ma /= static_cast<double>(half);
        mb /= static_cast<double>(half);
        double sab = 0.0, saa = 0.0, sbb = 0.0;
        for (std::size_t j = 0; j < half; ++j) {
            const double a = signal[j] - ma;
            const double b = signal[j + lag] - mb;
            sab += a * b;
            saa += a * a;
            sbb += b * b;
        }
        if (saa <= 0.0 || sbb <= 0.0) return 0.0;
        return sab / std::sqrt(saa * sbb);
    };

    bool crossed = false;
    double peak = 0.0;
    for (std::size_t lag = 1; lag + half <= m; ++lag) {
        const double c = corr(lag);
        if (!crossed) {
            crossed = c <= 0.0;
            continue;
        }
        peak = std::max(peak, c);
    }
    return peak;
}

bool detect_limit_cycle(const Trajectory& trajectory, double window, double v_band) {
    if (trajectory.size() < 2 || !(window > 0.0)) return false;
    const double t_end = trajectory.time(trajectory.size() - 1);
    const double t_begin = t_end - 2.0 * window;
    if (t_begin < trajectory.time(0)) return false;

    constexpr std::size_t kGrid = 1024;
    const std::size_t n_v = trajectory.layout().n_v;
    std::vector<double> series(kGrid);
    for (std::size_t node = 0; node < n_v; ++node) {
        std::size_t k = 0;
        for (std::size_t g = 0; g < kGrid; ++g) {
            const double t = t_begin + (t_end - t_begin) * static_cast<double>(g) / (kGrid - 1);
            while (k + 1 < trajectory.size() && trajectory.time(k + 1) < t) ++k;
            const std::size_t k1 = std::min(k + 1, trajectory.size() - 1);
            const double ta = trajectory.time(k), tb = trajectory.time(k1);
            const double va = trajectory.free_voltages(k)[node];
            const double vb = trajectory.free_voltages(k1)[node];
            const double w = tb > ta ? std::clamp((t - ta) / (tb - ta), 0.0, 1.0) : 0.0;
            series[g] = va + w * (vb - va);
        }
        const auto [lo, hi] = std::minmax_element(series.begin() + kGrid / 2, series.end());
        if (*hi - *lo <= v_band) continue;
        if (autocorrelation_peak(series) >= 0.9) return true;
    }
    return false;
}

bool validate_truth_table(GateKind kind, const std::array<int, 3>& levels) {
    return is_consistent(kind, levels);
}

namespace {

// sin(pi * u), exactly zero at integer u.
double sin_pi(double u) {
    const double r = std::fmod(u, 2.0);
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    return std::sin(std::numbers::pi * r);
}

}  // namespace

std::vector<IvSample> iv_sweep(const MemristorParams& p, double amplitude, double frequency,
                               double cycles, double x0, int samples_per_cycle) {
    p.validate();
    if (!(amplitude > 0.0) || !(frequency > 0.0))
        throw UsageError("iv_sweep: amplitude and frequency must be positive");
    if (!(cycles > 0.0) || samples_per_cycle < 4)
        throw UsageError("iv_sweep: need cycles > 0 and at least 4 samples per cycle");
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw DomainError("iv_sweep: initial state out of [0,1]");

    const double omega = 2.0 * std::numbers::pi * frequency;
    const double dt_sample = 1.0 / (frequency * samples_per_cycle);
    const auto n_samples = static_cast<long>(std::llround(cycles * samples_per_cycle));

    AdaptiveStepper::Options opt;
    opt.dt_max = dt_sample;
    opt.dt_min = std::min(1e-15, dt_sample * 1e-6);
    AdaptiveStepper stepper(1, opt, [](std::span<double> y) {
        const double c = std::clamp(y[0], 0.0, 1.0);
        const bool changed = c != y[0];
        y[0] = c;
        return changed;
    });
    const AdaptiveStepper::Rhs f = [&](double t, std::span<const double> y, std::span<double> dy) {
        const double v = amplitude * std::sin(omega * t);
        dy[0] = memristor_rate(std::clamp(y[0], 0.0, 1.0), v, p);
    };

    auto sample = [&](long k, double x) {
        const double phase = 2.0 * static_cast<double>(k) / samples_per_cycle;  // in units of pi
        const double v = amplitude * sin_pi(phase);
        const double dv = amplitude * omega * std::cos(std::numbers::pi * std::fmod(phase, 2.0));
        const double i_mem = v / memristance(x, p);
        return IvSample{static_cast<double>(k) * dt_sample, v, i_mem, i_mem + p.c_par * dv, x};
    };

    std::vector<IvSample> out;
    out.reserve(static_cast<std::size_t>(n_samples) + 1);
    std::vector<double> y{x0};
    double t = 0.0;
    double dt = dt_sample * 1e-3;
    out.push_back(sample(0, x0));
    for (long k = 1; k <= n_samples; ++k) {
        const double t_target = static_cast<double>(k) * dt_sample;
        while (t < t_target) {
            const double remaining = t_target - t;
            const bool to_end = dt >= remaining;
            const auto r = stepper.step(f, t, y, to_end ? remaining : dt);
            if (to_end && r.rejected == 0)
                t = t_target;
            else
                dt = r.dt_next;
        }
        out.push_back(sample(k, y[0]));
    }
    return out;
}

double pinched_loop_area(std::span<const IvSample> samples) {
    double positive = 0.0;
    double negative = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const auto& a = samples[k - 1];
        const auto& b = samples[k];
        const double piece = 0.5 * (a.i_mem + b.i_mem) * (b.v - a.v);
        if (a.v + b.v >= 0.0)
            positive += piece;
        else
            negative += piece;
    }
    return std::fabs(positive) + std::fabs(negative);
}

std::vector<double> fs_root_profile(const SBlockParams& p, CurrentRegime regime, int grid) {
    p.validate();
    if (grid < 3) throw UsageError("fs_root_profile: grid too coarse");
    double current = 0.0;
    switch (regime) {
        case CurrentRegime::AllBelowMin: current = 0.0; break;
        case CurrentRegime::Between: current = std::sqrt(p.i_min * p.i_max); break;
        case CurrentRegime::AboveMax: current = 2.0 * p.i_max; break;
    }
    const std::array<double, 1> currents{current};
    auto f = [&](double s) { return f_s(currents, s, p); };

    constexpr double lo = -1.0, hi = 2.0;
    std::vector<double> roots;
    double s_prev = lo;
    double f_prev = f(lo);
    if (f_prev == 0.0) roots.push_back(lo);
    for (int k = 1; k <= grid; ++k) {
        const double s = lo + (hi - lo) * static_cast<double>(k) / grid;
        const double fs = f(s);
        if (fs == 0.0) {
            roots.push_back(s);
        } else if (f_prev != 0.0 && (f_prev < 0.0) != (fs < 0.0)) {
            double a = s_prev, b = s, fa = f_prev;
            for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        s_prev = s;
        f_prev = fs;
    }
    return roots;
}

}  // namespace memsim
