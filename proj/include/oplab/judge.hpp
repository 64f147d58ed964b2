#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oplab/budget.hpp"
#include "oplab/records.hpp"

namespace oplab {

struct JudgeVerdict {
    std::string raw_text;
    std::string justification;
    int score = 0;
    bool ok = false;
};

// Judge endpoint contract. `attempt` distinguishes repeat/retry calls with an
// identical prompt; HTTP clients forward it, deterministic fakes hash on it.
class JudgeClient {
public:
    virtual ~JudgeClient() = default;
    virtual std::string complete(const std::string& prompt, int attempt) = 0;
};

// Evaluation template: criterion first, then the instruction and response
// blocks, then the required "Score: <0-5>" output format.
std::string render_eval_prompt(const std::string& prompt_text, const std::string& response_text,
                               const std::string& criterion);

// Finds the last line of the form "Score: <integer>". Everything before that
// line is the justification. ok is true only for an in-range integer score;
// parse failures yield ok=false rather than an exception.
JudgeVerdict parse_score(const std::string& raw);

// One budgeted expert judgment. Each attempt reserves one unit before the
// network call; parse failures retry up to `retries` more times and then
// raise JudgeFailure with those units staying charged.
EftRecord query_expert(JudgeClient& client, BudgetLedger& ledger, const IftRecord& ift,
                       const std::string& prompt_text, const std::string& criterion,
                       int retries = 0);

// `repeats` proxy calls, mean over the ones that parsed. Never touches the
// expert budget; transport failures count as unsuccessful calls.
RewardSummary proxy_evaluate(JudgeClient& scorer, const IftRecord& ift,
                             const std::string& prompt_text, const std::string& criterion,
                             int repeats = 3);

// Seeded uniform holdout without replacement; train and validation partition
// the input and both keep the original relative order.
std::pair<std::vector<EftRecord>, std::vector<EftRecord>> split_train_validation(
    const std::vector<EftRecord>& efts, std::size_t holdout, std::uint64_t seed);

}  // namespace oplab
