#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplab/records.hpp"

namespace oplab {

// All reward-labeled responses of one prompt, in a stable order. groundtruth
// is only set for seed prompts and feeds the SPIN pairing modes.
struct PromptGroup {
    std::string prompt_id;
    std::vector<std::pair<std::string, RewardSummary>> summaries;  // (ift_id, summary)
    std::optional<std::string> groundtruth_ift_id;
};

enum class SeedPairMode { spin, spin_eval, eval_only };

SeedPairMode seed_pair_mode_from_string(const std::string& s);
std::string to_string(SeedPairMode m);

// Highest vs lowest mean reward per group, ties to the lowest in-group index.
// Groups with fewer than two valid summaries or a degenerate max == min are
// skipped; this is where the pool shrinks from N prompts to fewer pairs.
std::vector<DpoPair> make_dpo_pairs(const std::vector<PromptGroup>& groups,
                                    const std::string& strategy_tag);

// SPIN-family pairing over seed prompts:
//   spin      - ground truth vs a uniformly sampled generated response
//   spin_eval - ground truth vs the lowest-reward generated response
//   eval_only - highest vs lowest reward, same rule as make_dpo_pairs
std::vector<DpoPair> seed_prompt_pairs(const std::vector<PromptGroup>& groups, SeedPairMode mode,
                                       std::uint64_t seed);

}  // namespace oplab
