#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oplab/errors.hpp"
#include "oplab/records.hpp"

namespace oplab {

struct EmbeddingVector {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
};

enum class CandidateMode { eft, ift };

// Text fed to the feature extractor. eft mode concatenates prompt, generated
// response and evaluation criterion; ift mode is the prompt alone.
struct CandidateText {
    std::string prompt_id;
    std::optional<std::string> ift_id;
    std::string text;
    CandidateMode mode = CandidateMode::ift;
};

CandidateText build_candidate_text(const PromptRecord& prompt, const IftRecord* response,
                                   const std::optional<std::string>& criterion, CandidateMode mode);

// Pluggable extractor contract. Implementations: the HTTP client in
// endpoints.hpp, the hash extractor below, and the synthetic-world decoders.
class EmbeddingClient {
public:
    virtual ~EmbeddingClient() = default;
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
};

// One vector per text, same order, uniform dimension. Count or dimension
// mismatches from the extractor raise ProtocolError.
std::vector<EmbeddingVector> embed_batch(EmbeddingClient& extractor,
                                         const std::vector<CandidateText>& texts);

// Deterministic test extractor: hashes whitespace-delimited tokens into dim
// signed-count buckets and normalizes to unit length. Empty text maps to the
// first basis vector.
EmbeddingVector synthetic_embed(const std::string& text, std::size_t dim, std::uint64_t seed);

class HashEmbedder : public EmbeddingClient {
public:
    HashEmbedder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {}

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override {
        std::vector<EmbeddingVector> out;
        out.reserve(texts.size());
        for (const auto& t : texts) out.push_back(synthetic_embed(t, dim_, seed_));
        return out;
    }

private:
    std::size_t dim_;
    std::uint64_t seed_;
};

}  // namespace oplab
