#include "oplab/judge.hpp"

#include <cctype>

#include "oplab/selection.hpp"

namespace oplab {

namespace {

// Parses a line of the exact shape "Score: <integer>" (surrounding
// whitespace allowed). Returns true and fills `value` on match.
bool match_score_line(const std::string& line, long& value) {
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::string tag = "Score:";
    if (line.compare(i, tag.size(), tag) != 0) return false;
    i += tag.size();
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    if (i < n && (line[i] == '-' || line[i] == '+')) ++i;
    std::size_t digits_from = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits_from) return false;
    const std::string number = line.substr(start, i - start);
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i != n) return false;
    try {
        value = std::stol(number);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

std::string render_eval_prompt(const std::string& prompt_text, const std::string& response_text,
                               const std::string& criterion) {
    if (criterion.empty()) throw ArgumentError("render_eval_prompt: criterion must be non-empty");
    std::string out;
    out.reserve(criterion.size() + prompt_text.size() + response_text.size() + 160);
    out += criterion;
    out += "\n\nInstruction:\n";
    out += prompt_text;
    out += "\n\nResponse:\n";
    out += response_text;
    out += "\n\nGive a short justification, then end with one final line of the form \"Score: <0-5>\".";
    return out;
}

JudgeVerdict parse_score(const std::string& raw) {
    JudgeVerdict v;
    v.raw_text = raw;

    // Locate the last matching score line.
    std::size_t line_start = 0;
    std::size_t best_start = std::string::npos;
    std::size_t best_end = 0;
    long best_value = 0;
    for (std::size_t i = 0; i <= raw.size(); ++i) {
        if (i == raw.size() || raw[i] == '\n') {
            const std::string line = raw.substr(line_start, i - line_start);
            long value = 0;
            if (match_score_line(line, value)) {
                best_start = line_start;
                best_end = i;
                best_value = value;
            }
            line_start = i + 1;
        }
    }
    (void)best_end;
    if (best_start == std::string::npos) return v;  // no score line at all

    std::string justification = raw.substr(0, best_start);
    while (!justification.empty() &&
           (justification.back() == '\n' || justification.back() == '\r')) {
        justification.pop_back();
    }
    v.justification = std::move(justification);
    if (best_value < 0 || best_value > 5) return v;  // found but out of range
    v.score = static_cast<int>(best_value);
    v.ok = true;
    return v;
}

EftRecord query_expert(JudgeClient& client, BudgetLedger& ledger, const IftRecord& ift,
                       const std::string& prompt_text, const std::string& criterion,
                       int retries) {
    const std::string rendered = render_eval_prompt(prompt_text, ift.response, criterion);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        ledger.reserve(1, "expert:" + ift.id);
        const std::string reply = client.complete(rendered, attempt);
        const JudgeVerdict verdict = parse_score(reply);
        if (!verdict.ok) continue;
        EftRecord eft;
        eft.id = ift.id + "#e";
        eft.ift_id = ift.id;
        eft.criterion = criterion;
        eft.justification = verdict.justification;
        eft.score = verdict.score;
        eft.judge = JudgeKind::expert;
        eft.raw_text = verdict.raw_text;
        return eft;
    }
    throw JudgeFailure("expert never produced a parsable verdict for ift '" + ift.id + "' after " +
                       std::to_string(retries + 1) + " attempt(s)");
}

RewardSummary proxy_evaluate(JudgeClient& scorer, const IftRecord& ift,
                             const std::string& prompt_text, const std::string& criterion,
                             int repeats) {
    if (repeats < 1) throw ArgumentError("proxy_evaluate: repeats must be >= 1");
    const std::string rendered = render_eval_prompt(prompt_text, ift.response, criterion);
    int successes = 0;
    double total = 0.0;
    for (int attempt = 0; attempt < repeats; ++attempt) {
        std::string reply;
        try {
            reply = scorer.complete(rendered, attempt);
        } catch (const TransportError&) {
            continue;  // transport failure counts as an unsuccessful call
        }
        const JudgeVerdict verdict = parse_score(reply);
        if (!verdict.ok) continue;
        ++successes;
        total += verdict.score;
    }
    RewardSummary summary;
    summary.ift_id = ift.id;
    summary.valid_calls = successes;
    summary.valid = successes >= 1;
    if (summary.valid) summary.mean_score = quantize_reward(total / successes);
    return summary;
}

std::pair<std::vector<EftRecord>, std::vector<EftRecord>> split_train_validation(
    const std::vector<EftRecord>& efts, std::size_t holdout, std::uint64_t seed) {
    if (holdout > efts.size()) {
        throw ArgumentError("split_train_validation: holdout exceeds record count");
    }
    const std::vector<std::size_t> picks = random_select(efts.size(), holdout, seed);
    std::vector<bool> held(efts.size(), false);
    for (std::size_t p : picks) held[p] = true;
    std::vector<EftRecord> train;
    std::vector<EftRecord> validation;
    train.reserve(efts.size() - holdout);
    validation.reserve(holdout);
    for (std::size_t i = 0; i < efts.size(); ++i) {
        (held[i] ? validation : train).push_back(efts[i]);
    }
    return {std::move(train), std::move(validation)};
}

}  // namespace oplab
