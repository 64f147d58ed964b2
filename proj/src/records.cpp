#include "oplab/records.hpp"

#include <cmath>

namespace oplab {

std::string to_string(PromptSource s) { return s == PromptSource::seed ? "seed" : "pool"; }

std::string to_string(IftSource s) {
    return s == IftSource::seed_groundtruth ? "seed_groundtruth" : "generated";
}

std::string to_string(JudgeKind s) { return s == JudgeKind::expert ? "expert" : "proxy"; }

PromptSource prompt_source_from_string(const std::string& s) {
    if (s == "seed") return PromptSource::seed;
    if (s == "pool") return PromptSource::pool;
    throw ValidationError("unknown prompt source '" + s + "'");
}

IftSource ift_source_from_string(const std::string& s) {
    if (s == "seed_groundtruth") return IftSource::seed_groundtruth;
    if (s == "generated") return IftSource::generated;
    throw ValidationError("unknown ift source '" + s + "'");
}

JudgeKind judge_kind_from_string(const std::string& s) {
    if (s == "expert") return JudgeKind::expert;
    if (s == "proxy") return JudgeKind::proxy;
    throw ValidationError("unknown judge kind '" + s + "'");
}

void validate(const PromptRecord& r) {
    if (r.id.empty()) throw ValidationError("prompt record with empty id");
    if (r.text.empty()) throw ValidationError("prompt '" + r.id + "': text must be non-empty");
}

void validate(const IftRecord& r) {
    if (r.id.empty()) throw ValidationError("ift record with empty id");
    if (r.prompt_id.empty()) throw ValidationError("ift '" + r.id + "': prompt_id must be non-empty");
    if (r.response.empty()) throw ValidationError("ift '" + r.id + "': response must be non-empty");
    if (r.seed_reward && r.source != IftSource::seed_groundtruth) {
        throw ValidationError("ift '" + r.id + "': seed_reward is only allowed on seed_groundtruth records");
    }
    if (r.seed_reward && !std::isfinite(*r.seed_reward)) {
        throw ValidationError("ift '" + r.id + "': seed_reward must be finite");
    }
}

void validate(const EftRecord& r) {
    if (r.id.empty()) throw ValidationError("eft record with empty id");
    if (r.ift_id.empty()) throw ValidationError("eft '" + r.id + "': ift_id must be non-empty");
    if (r.score < 0 || r.score > 5) {
        throw ValidationError("eft '" + r.id + "': score " + std::to_string(r.score) +
                              " outside the integer range [0,5]");
    }
}

void validate(const RewardSummary& r) {
    if (r.ift_id.empty()) throw ValidationError("reward summary with empty ift_id");
    if (r.valid != (r.valid_calls >= 1)) {
        throw ValidationError("reward summary '" + r.ift_id + "': valid flag must equal valid_calls >= 1");
    }
    if (r.valid && (!std::isfinite(r.mean_score) || r.mean_score < 0.0 || r.mean_score > 5.0)) {
        throw ValidationError("reward summary '" + r.ift_id + "': mean_score outside [0,5]");
    }
}

void validate(const DpoPair& r) {
    if (r.prompt_id.empty()) throw ValidationError("dpo pair with empty prompt_id");
    if (r.chosen_ift_id.empty() || r.rejected_ift_id.empty()) {
        throw ValidationError("dpo pair for prompt '" + r.prompt_id + "': both response ids required");
    }
    if (r.chosen_ift_id == r.rejected_ift_id) {
        throw ValidationError("dpo pair for prompt '" + r.prompt_id + "': chosen and rejected must differ");
    }
    if (!(r.chosen_reward > r.rejected_reward)) {
        throw ValidationError("dpo pair for prompt '" + r.prompt_id +
                              "': chosen_reward must exceed rejected_reward strictly");
    }
}

std::vector<IftRecord> filter_high_reward(const std::vector<IftRecord>& records, double threshold) {
    if (std::isinf(threshold) && threshold < 0.0) return records;  // filter disabled
    std::vector<IftRecord> out;
    for (const auto& r : records) {
        if (r.seed_reward && *r.seed_reward >= threshold) out.push_back(r);
    }
    return out;
}

}  // namespace oplab
