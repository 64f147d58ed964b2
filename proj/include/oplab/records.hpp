#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oplab/errors.hpp"

namespace oplab {

enum class PromptSource { seed, pool };
enum class IftSource { seed_groundtruth, generated };
enum class JudgeKind { expert, proxy };

std::string to_string(PromptSource s);
std::string to_string(IftSource s);
std::string to_string(JudgeKind s);
PromptSource prompt_source_from_string(const std::string& s);
IftSource ift_source_from_string(const std::string& s);
JudgeKind judge_kind_from_string(const std::string& s);

// One prompt, either from the seed set or the unlabeled pool.
struct PromptRecord {
    std::string id;
    std::string text;
    PromptSource source = PromptSource::pool;
};

// One [prompt, response] sample. Generated ones come from the policy model;
// seed ones may carry an external reward used only for threshold filtering.
struct IftRecord {
    std::string id;
    std::string prompt_id;
    std::string response;
    IftSource source = IftSource::generated;
    std::optional<double> seed_reward;
};

// One judged sample: criterion + justification + integer score 0..5.
struct EftRecord {
    std::string id;
    std::string ift_id;
    std::string criterion;
    std::string justification;
    int score = 0;
    JudgeKind judge = JudgeKind::expert;
    std::string raw_text;
};

// Aggregated evaluator calls for one response. Invalid summaries mark
// samples that never received a parsable reward and get discarded downstream.
struct RewardSummary {
    std::string ift_id;
    double mean_score = 0.0;  // meaningful only when valid
    int valid_calls = 0;
    bool valid = false;
};

// Preference pair built from the highest- and lowest-rewarded responses.
struct DpoPair {
    std::string prompt_id;
    std::string chosen_ift_id;
    std::string rejected_ift_id;
    double chosen_reward = 0.0;
    double rejected_reward = 0.0;
    std::string strategy_tag;
};

// Reward means are stored with 4 fractional digits so artifact files stay
// byte-deterministic across runs.
inline double quantize_reward(double x) { return std::round(x * 10000.0) / 10000.0; }

// Marks the assumed-best ground-truth response in SPIN-style pairs. Never
// feeds numeric computations.
inline constexpr double kGroundtruthReward = 6.0;
// Marks a rejected response that was never scored (plain SPIN pairing).
inline constexpr double kUnscoredReward = -1.0;

void validate(const PromptRecord& r);
void validate(const IftRecord& r);
void validate(const EftRecord& r);
void validate(const RewardSummary& r);
void validate(const DpoPair& r);

// Seed-data filter: keeps records whose seed_reward is present and at least
// `threshold`. Passing -infinity disables the filter and returns everything.
std::vector<IftRecord> filter_high_reward(const std::vector<IftRecord>& records, double threshold);

}  // namespace oplab
