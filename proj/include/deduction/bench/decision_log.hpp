#pragma once

#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "deduction/agent.hpp"

namespace deduction::bench {

// One JSON line per decision. `zero_wall_times` replaces measured wall
// times with 0 so the log stays byte-deterministic.
std::string decision_to_jsonl(const GameDef& game, const DecisionRecord& rec,
                              bool zero_wall_times);

// Streams decisions to an ostream; safe for concurrent record() calls,
// though line order then follows execution order.
class JsonlDecisionSink final : public DecisionSink {
public:
    explicit JsonlDecisionSink(std::ostream& out, bool zero_wall_times = false)
        : out_(out), zero_wall_times_(zero_wall_times) {}

    void record(const GameDef& game, const DecisionRecord& rec) override;

private:
    std::ostream& out_;
    bool zero_wall_times_;
    std::mutex mutex_;
};

// Collects decision lines in memory; the benchmark runner gives each
// episode its own buffer and concatenates them in canonical episode
// order, keeping the log deterministic under any worker count.
class BufferingDecisionSink final : public DecisionSink {
public:
    explicit BufferingDecisionSink(bool zero_wall_times = false)
        : zero_wall_times_(zero_wall_times) {}

    void record(const GameDef& game, const DecisionRecord& rec) override;
    const std::vector<std::string>& lines() const noexcept { return lines_; }
    std::vector<std::string> take_lines() noexcept { return std::move(lines_); }

private:
    bool zero_wall_times_;
    std::vector<std::string> lines_;
};

}  // namespace deduction::bench
