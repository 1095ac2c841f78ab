#include "memsim/trajectory.hpp"

namespace memsim {

void Trajectory::push(double t, std::span<const double> y, std::span<const double> node_v,
                      double max_dvdt) {
    t_.push_back(t);
    y_.insert(y_.end(), y.begin(), y.end());
    node_v_.insert(node_v_.end(), node_v.begin(), node_v.end());
    dvdt_.push_back(max_dvdt);
}

}  // namespace memsim
