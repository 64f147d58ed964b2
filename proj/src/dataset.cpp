#include "oplab/dataset.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace oplab {

using json = nlohmann::ordered_json;

namespace {

json to_json(const PromptRecord& r) {
    json j;
    j["id"] = r.id;
    j["text"] = r.text;
    j["source"] = to_string(r.source);
    return j;
}

json to_json(const IftRecord& r) {
    json j;
    j["id"] = r.id;
    j["prompt_id"] = r.prompt_id;
    j["response"] = r.response;
    j["source"] = to_string(r.source);
    if (r.seed_reward) j["seed_reward"] = *r.seed_reward;
    return j;
}

json to_json(const EftRecord& r) {
    json j;
    j["id"] = r.id;
    j["ift_id"] = r.ift_id;
    j["criterion"] = r.criterion;
    j["justification"] = r.justification;
    j["score"] = r.score;
    j["judge"] = to_string(r.judge);
    j["raw_text"] = r.raw_text;
    return j;
}

json to_json(const DpoPair& r) {
    json j;
    j["prompt_id"] = r.prompt_id;
    j["chosen_ift_id"] = r.chosen_ift_id;
    j["rejected_ift_id"] = r.rejected_ift_id;
    j["chosen_reward"] = quantize_reward(r.chosen_reward);
    j["rejected_reward"] = quantize_reward(r.rejected_reward);
    j["strategy_tag"] = r.strategy_tag;
    return j;
}

json to_json(const RewardSummary& r) {
    json j;
    j["ift_id"] = r.ift_id;
    j["mean_score"] = quantize_reward(r.mean_score);
    j["valid_calls"] = r.valid_calls;
    j["valid"] = r.valid;
    return j;
}

PromptRecord prompt_from_json(const json& j) {
    PromptRecord r;
    r.id = j.at("id").get<std::string>();
    r.text = j.at("text").get<std::string>();
    r.source = prompt_source_from_string(j.at("source").get<std::string>());
    return r;
}

IftRecord ift_from_json(const json& j) {
    IftRecord r;
    r.id = j.at("id").get<std::string>();
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.response = j.at("response").get<std::string>();
    r.source = ift_source_from_string(j.at("source").get<std::string>());
    if (j.contains("seed_reward") && !j.at("seed_reward").is_null()) {
        r.seed_reward = j.at("seed_reward").get<double>();
    }
    return r;
}

EftRecord eft_from_json(const json& j) {
    EftRecord r;
    r.id = j.at("id").get<std::string>();
    r.ift_id = j.at("ift_id").get<std::string>();
    r.criterion = j.at("criterion").get<std::string>();
    r.justification = j.at("justification").get<std::string>();
    if (!j.at("score").is_number_integer()) {
        throw ValidationError("eft '" + r.id + "': score must be an integer");
    }
    r.score = j.at("score").get<int>();
    r.judge = judge_kind_from_string(j.at("judge").get<std::string>());
    r.raw_text = j.at("raw_text").get<std::string>();
    return r;
}

DpoPair dpo_from_json(const json& j) {
    DpoPair r;
    r.prompt_id = j.at("prompt_id").get<std::string>();
    r.chosen_ift_id = j.at("chosen_ift_id").get<std::string>();
    r.rejected_ift_id = j.at("rejected_ift_id").get<std::string>();
    r.chosen_reward = j.at("chosen_reward").get<double>();
    r.rejected_reward = j.at("rejected_reward").get<double>();
    r.strategy_tag = j.at("strategy_tag").get<std::string>();
    return r;
}

RewardSummary reward_from_json(const json& j) {
    RewardSummary r;
    r.ift_id = j.at("ift_id").get<std::string>();
    r.mean_score = j.at("mean_score").get<double>();
    r.valid_calls = j.at("valid_calls").get<int>();
    r.valid = j.at("valid").get<bool>();
    return r;
}

template <typename T, typename FromJson>
std::vector<T> load_lines(const std::string& path, FromJson from_json) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::vector<T> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        T record;
        try {
            record = from_json(j);
        } catch (const ValidationError&) {
            throw;
        } catch (const json::exception& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        validate(record);
        out.push_back(std::move(record));
    }
    return out;
}

template <typename T, typename ToJson>
void save_lines(const std::vector<T>& records, const std::string& path, ToJson to_json_fn) {
    for (const auto& r : records) validate(r);
    std::ostringstream body;
    for (const auto& r : records) body << to_json_fn(r).dump() << '\n';
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << body.str();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

DatasetKind dataset_kind_from_string(const std::string& s) {
    if (s == "prompt") return DatasetKind::prompt;
    if (s == "ift") return DatasetKind::ift;
    if (s == "eft") return DatasetKind::eft;
    if (s == "dpo") return DatasetKind::dpo;
    throw ArgumentError("unknown dataset kind '" + s + "'");
}

std::vector<PromptRecord> load_prompts(const std::string& path) {
    return load_lines<PromptRecord>(path, prompt_from_json);
}

std::vector<IftRecord> load_ift(const std::string& path) {
    return load_lines<IftRecord>(path, ift_from_json);
}

std::vector<EftRecord> load_eft(const std::string& path) {
    return load_lines<EftRecord>(path, eft_from_json);
}

std::vector<DpoPair> load_dpo(const std::string& path) {
    return load_lines<DpoPair>(path, dpo_from_json);
}

std::vector<RewardSummary> load_rewards(const std::string& path) {
    return load_lines<RewardSummary>(path, reward_from_json);
}

void save_prompts(const std::vector<PromptRecord>& records, const std::string& path) {
    save_lines(records, path, [](const PromptRecord& r) { return to_json(r); });
}

void save_ift(const std::vector<IftRecord>& records, const std::string& path) {
    save_lines(records, path, [](const IftRecord& r) { return to_json(r); });
}

void save_eft(const std::vector<EftRecord>& records, const std::string& path) {
    save_lines(records, path, [](const EftRecord& r) { return to_json(r); });
}

void save_dpo(const std::vector<DpoPair>& records, const std::string& path) {
    save_lines(records, path, [](const DpoPair& r) { return to_json(r); });
}

void save_rewards(const std::vector<RewardSummary>& records, const std::string& path) {
    save_lines(records, path, [](const RewardSummary& r) { return to_json(r); });
}

void check_prompt_refs(const std::vector<PromptRecord>& prompts, const std::vector<IftRecord>& ifts) {
    std::unordered_set<std::string> ids;
    for (const auto& p : prompts) {
        if (!ids.insert(p.id).second) throw ValidationError("duplicate prompt id '" + p.id + "'");
    }
    for (const auto& r : ifts) {
        if (!ids.count(r.prompt_id)) {
            throw ValidationError("ift '" + r.id + "': unknown prompt_id '" + r.prompt_id + "'");
        }
    }
}

void check_ift_refs(const std::vector<IftRecord>& ifts, const std::vector<EftRecord>& efts) {
    std::unordered_set<std::string> ids;
    for (const auto& r : ifts) {
        if (!ids.insert(r.id).second) throw ValidationError("duplicate ift id '" + r.id + "'");
    }
    for (const auto& e : efts) {
        if (!ids.count(e.ift_id)) {
            throw ValidationError("eft '" + e.id + "': unknown ift_id '" + e.ift_id + "'");
        }
    }
}

std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<PromptRecord>& records) {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < records.size(); ++i) m.emplace(records[i].id, i);
    return m;
}

std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<IftRecord>& records) {
    std::unordered_map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < records.size(); ++i) m.emplace(records[i].id, i);
    return m;
}

}  // namespace oplab
