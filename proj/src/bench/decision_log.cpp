#include "deduction/bench/decision_log.hpp"

#include <json.hpp>

namespace deduction::bench {

std::string decision_to_jsonl(const GameDef& game, const DecisionRecord& rec,
                              bool zero_wall_times) {
    nlohmann::json scored = nlohmann::json::array();
    for (const auto& [action, value] : rec.scored) {
        scored.push_back({game.format_action(action), value});
    }
    const nlohmann::json line{{"agent", rec.agent},
                              {"game", game.game_id()},
                              {"wall_ms", zero_wall_times ? 0.0 : rec.wall_ms},
                              {"states_used", rec.states_used},
                              {"actions_scored", rec.actions_scored},
                              {"chosen", game.format_action(rec.chosen)},
                              {"fallback", rec.fallback},
                              {"scored", std::move(scored)}};
    return line.dump();
}

void JsonlDecisionSink::record(const GameDef& game, const DecisionRecord& rec) {
    const std::string line = decision_to_jsonl(game, rec, zero_wall_times_);
    const std::scoped_lock lock(mutex_);
    out_ << line << '\n';
}

void BufferingDecisionSink::record(const GameDef& game, const DecisionRecord& rec) {
    lines_.push_back(decision_to_jsonl(game, rec, zero_wall_times_));
}

}  // namespace deduction::bench
