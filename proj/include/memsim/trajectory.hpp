#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memsim/solver.hpp"

namespace memsim {

// Sampled run output. Each sample keeps the flat state, every node voltage
// (clamped nodes included) and the largest |dv/dt| over free nodes.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(const StateLayout& layout, std::size_t n_nodes) : layout_(layout), n_nodes_(n_nodes) {}

    const StateLayout& layout() const { return layout_; }
    std::size_t node_count() const { return n_nodes_; }
    std::size_t size() const { return t_.size(); }
    bool empty() const { return t_.empty(); }

    double time(std::size_t k) const { return t_[k]; }
    std::span<const double> state(std::size_t k) const {
        return {y_.data() + k * layout_.size(), layout_.size()};
    }
    std::span<const double> free_voltages(std::size_t k) const {
        return state(k).first(layout_.n_v);
    }
    std::span<const double> node_voltages(std::size_t k) const {
        return {node_v_.data() + k * n_nodes_, n_nodes_};
    }
    double max_dvdt(std::size_t k) const { return dvdt_[k]; }

    void push(double t, std::span<const double> y, std::span<const double> node_v, double max_dvdt);

private:
    StateLayout layout_;
    std::size_t n_nodes_ = 0;
    std::vector<double> t_;
    std::vector<double> y_;
    std::vector<double> node_v_;
    std::vector<double> dvdt_;
};

}  // namespace memsim
