#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "oplab/records.hpp"

namespace oplab {

enum class DatasetKind { prompt, ift, eft, dpo };

DatasetKind dataset_kind_from_string(const std::string& s);

// JSON Lines persistence. Keys are written in a fixed order and reward
// fields carry 4 fractional digits, so save(load(x)) is byte-identical.
std::vector<PromptRecord> load_prompts(const std::string& path);
std::vector<IftRecord> load_ift(const std::string& path);
std::vector<EftRecord> load_eft(const std::string& path);
std::vector<DpoPair> load_dpo(const std::string& path);
std::vector<RewardSummary> load_rewards(const std::string& path);

void save_prompts(const std::vector<PromptRecord>& records, const std::string& path);
void save_ift(const std::vector<IftRecord>& records, const std::string& path);
void save_eft(const std::vector<EftRecord>& records, const std::string& path);
void save_dpo(const std::vector<DpoPair>& records, const std::string& path);
void save_rewards(const std::vector<RewardSummary>& records, const std::string& path);

// Cross-file referential checks; load_* only validates per-record invariants.
void check_prompt_refs(const std::vector<PromptRecord>& prompts, const std::vector<IftRecord>& ifts);
void check_ift_refs(const std::vector<IftRecord>& ifts, const std::vector<EftRecord>& efts);

std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<PromptRecord>& records);
std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<IftRecord>& records);

}  // namespace oplab
