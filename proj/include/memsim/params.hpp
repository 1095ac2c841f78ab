#pragma once

#include <array>
#include <string>
#include <string_view>

namespace memsim {

struct MemristorParams {
    double r_on = 0.05;   // Ω
    double r_off = 1.0;   // Ω
    double alpha = 60.0;
    double c_par = 1e-9;  // F, in parallel with every memristive element

    void validate() const;
};

struct VcdcgParams {
    double q = 5.0;        // A
    double m0 = -400.0;    // A/V
    double m1 = 400.0;     // A/V
    double gamma = 60.0;   // 1/s
    double v_c = 1.0;      // logic level, V
    double c1 = 1e-3;      // F, node capacitor across the generator

    void validate() const;
};

struct SBlockParams {
    double k_s = 2e3;
    double k_i = 2e3;
    double i_min = 1e-8;  // A
    double i_max = 10.0;  // A

    void validate() const;
};

// Every tunable physical constant of a simulation, addressable by name.
struct DeviceParams {
    MemristorParams mem;
    VcdcgParams dcg;
    SBlockParams sblock;

    static constexpr std::array<std::string_view, 14> names = {
        "r_on", "r_off", "alpha", "c_par", "q",   "m0",    "m1",
        "gamma", "c1",  "k_s",   "k_i",   "i_min", "i_max", "v_c"};

    static bool is_known(std::string_view name);

    // Throws UsageError for an unknown name. Does not validate.
    void set(std::string_view name, double value);
    double get(std::string_view name) const;

    void validate() const;
};

}  // namespace memsim
