#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "memsim/analysis.hpp"
#include "memsim/run.hpp"

namespace memsim::cli {

// Ordered key=value document.
class Summary {
public:
    void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, double value);
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "1" : "0")); }

    std::string text() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

// t followed by probe voltages, or with full set, every state component:
// free-node voltages, memristor states, generator currents and s.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                          const CompiledSystem& sys, const std::vector<std::string>& probes,
                          bool full);

void write_iv_csv(const std::filesystem::path& path, const std::vector<IvSample>& samples);

void write_text(const std::filesystem::path& path, const std::string& text);

// Verdict fields shared by every simulation summary.
void add_verdict(Summary& summary, const RunVerdict& verdict, const RunResult& result);

}  // namespace memsim::cli
