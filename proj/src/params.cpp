#include "memsim/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "memsim/errors.hpp"

namespace memsim {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw UsageError(std::string("invalid parameters: ") + what);
}

}  // namespace

void MemristorParams::validate() const {
    require(std::isfinite(r_on) && std::isfinite(r_off), "resistances must be finite");
    require(0.0 < r_on && r_on < r_off, "need 0 < r_on < r_off");
    require(alpha > 0.0 && std::isfinite(alpha), "need alpha > 0");
    require(c_par >= 0.0 && std::isfinite(c_par), "need c_par >= 0");
}

void VcdcgParams::validate() const {
    require(m0 < 0.0 && 0.0 < m1, "need m0 < 0 < m1");
    require(gamma > 0.0, "need gamma > 0");
    require(q > 0.0, "need q > 0");
    require(v_c > 0.0, "need v_c > 0");
    require(c1 > 0.0, "need c1 > 0");
    require(std::isfinite(m0) && std::isfinite(m1) && std::isfinite(gamma) && std::isfinite(q) &&
                std::isfinite(v_c) && std::isfinite(c1),
            "generator parameters must be finite");
}

void SBlockParams::validate() const {
    require(0.0 < i_min && i_min < i_max && std::isfinite(i_max), "need 0 < i_min < i_max");
    require(k_s > 0.0 && k_i > 0.0 && std::isfinite(k_s) && std::isfinite(k_i),
            "need k_s, k_i > 0");
}

bool DeviceParams::is_known(std::string_view name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

template <class Params>
auto field(Params& p, std::string_view name) -> decltype(&p.mem.r_on) {
    if (name == "r_on") return &p.mem.r_on;
    if (name == "r_off") return &p.mem.r_off;
    if (name == "alpha") return &p.mem.alpha;
    if (name == "c_par") return &p.mem.c_par;
    if (name == "q") return &p.dcg.q;
    if (name == "m0") return &p.dcg.m0;
    if (name == "m1") return &p.dcg.m1;
    if (name == "gamma") return &p.dcg.gamma;
    if (name == "c1") return &p.dcg.c1;
    if (name == "v_c") return &p.dcg.v_c;
    if (name == "k_s") return &p.sblock.k_s;
    if (name == "k_i") return &p.sblock.k_i;
    if (name == "i_min") return &p.sblock.i_min;
    if (name == "i_max") return &p.sblock.i_max;
    throw UsageError("unknown parameter '" + std::string(name) + "'");
}

}  // namespace

void DeviceParams::set(std::string_view name, double value) { *field(*this, name) = value; }

double DeviceParams::get(std::string_view name) const {
    return *field(const_cast<DeviceParams&>(*this), name);
}

void DeviceParams::validate() const {
    mem.validate();
    dcg.validate();
    sblock.validate();
}

}  // namespace memsim
