#include "oplab/pairing.hpp"

#include "oplab/rng.hpp"

namespace oplab {

namespace {

// Index of the best/worst valid summary; -1 when none is valid.
// Ties keep the earliest entry.
int argbest(const PromptGroup& g, bool want_max) {
    int best = -1;
    for (std::size_t i = 0; i < g.summaries.size(); ++i) {
        const RewardSummary& s = g.summaries[i].second;
        if (!s.valid) continue;
        if (best < 0) {
            best = static_cast<int>(i);
            continue;
        }
        const double cur = g.summaries[best].second.mean_score;
        if ((want_max && s.mean_score > cur) || (!want_max && s.mean_score < cur)) {
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::optional<DpoPair> max_min_pair(const PromptGroup& g, const std::string& tag) {
    int valid = 0;
    for (const auto& [id, s] : g.summaries) {
        (void)id;
        if (s.valid) ++valid;
    }
    if (valid < 2) return std::nullopt;
    const int hi = argbest(g, true);
    const int lo = argbest(g, false);
    const double hi_score = g.summaries[hi].second.mean_score;
    const double lo_score = g.summaries[lo].second.mean_score;
    if (!(hi_score > lo_score)) return std::nullopt;  // no preference signal
    DpoPair pair;
    pair.prompt_id = g.prompt_id;
    pair.chosen_ift_id = g.summaries[hi].first;
    pair.rejected_ift_id = g.summaries[lo].first;
    pair.chosen_reward = hi_score;
    pair.rejected_reward = lo_score;
    pair.strategy_tag = tag;
    return pair;
}

}  // namespace

SeedPairMode seed_pair_mode_from_string(const std::string& s) {
    if (s == "spin") return SeedPairMode::spin;
    if (s == "spin_eval") return SeedPairMode::spin_eval;
    if (s == "eval_only") return SeedPairMode::eval_only;
    throw ArgumentError("unknown seed pair mode '" + s + "'");
}

std::string to_string(SeedPairMode m) {
    switch (m) {
        case SeedPairMode::spin: return "spin";
        case SeedPairMode::spin_eval: return "spin_eval";
        default: return "eval_only";
    }
}

std::vector<DpoPair> make_dpo_pairs(const std::vector<PromptGroup>& groups,
                                    const std::string& strategy_tag) {
    std::vector<DpoPair> pairs;
    pairs.reserve(groups.size());
    for (const auto& g : groups) {
        if (auto pair = max_min_pair(g, strategy_tag)) pairs.push_back(std::move(*pair));
    }
    return pairs;
}

std::vector<DpoPair> seed_prompt_pairs(const std::vector<PromptGroup>& groups, SeedPairMode mode,
                                       std::uint64_t seed) {
    std::vector<DpoPair> pairs;
    pairs.reserve(groups.size());
    for (const auto& g : groups) {
        if (mode == SeedPairMode::eval_only) {
            if (auto pair = max_min_pair(g, "eval_only")) pairs.push_back(std::move(*pair));
            continue;
        }
        if (!g.groundtruth_ift_id) {
            throw ArgumentError("seed_prompt_pairs: prompt '" + g.prompt_id +
                                "' has no ground-truth response for " + to_string(mode));
        }
        if (g.summaries.empty()) continue;  // nothing generated for this prompt

        DpoPair pair;
        pair.prompt_id = g.prompt_id;
        pair.chosen_ift_id = *g.groundtruth_ift_id;
        pair.chosen_reward = kGroundtruthReward;
        pair.strategy_tag = to_string(mode);

        if (mode == SeedPairMode::spin) {
            // Uniform over all generated responses, seeded per prompt so group
            // order does not matter.
            Rng rng(mix_seed(seed, "spin", g.prompt_id));
            const std::size_t j = rng.uniform_index(g.summaries.size());
            pair.rejected_ift_id = g.summaries[j].first;
            pair.rejected_reward =
                g.summaries[j].second.valid ? g.summaries[j].second.mean_score : kUnscoredReward;
        } else {  // spin_eval
            const int lo = argbest(g, false);
            if (lo < 0) continue;  // no response ever received a reward
            pair.rejected_ift_id = g.summaries[lo].first;
            pair.rejected_reward = g.summaries[lo].second.mean_score;
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

}  // namespace oplab
