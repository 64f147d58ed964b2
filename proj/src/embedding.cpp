#include "oplab/embedding.hpp"

#include <cmath>
#include <sstream>

#include "oplab/rng.hpp"

namespace oplab {

CandidateText build_candidate_text(const PromptRecord& prompt, const IftRecord* response,
                                   const std::optional<std::string>& criterion, CandidateMode mode) {
    CandidateText ct;
    ct.prompt_id = prompt.id;
    ct.mode = mode;
    if (mode == CandidateMode::eft) {
        if (response == nullptr || !criterion) {
            throw ArgumentError("eft candidate text requires both a response and a criterion");
        }
        ct.ift_id = response->id;
        ct.text = prompt.text + "\n" + response->response + "\n" + *criterion;
    } else {
        ct.text = prompt.text;
    }
    return ct;
}

std::vector<EmbeddingVector> embed_batch(EmbeddingClient& extractor,
                                         const std::vector<CandidateText>& texts) {
    if (texts.empty()) throw ArgumentError("embed_batch: texts must be non-empty");
    std::vector<std::string> raw;
    raw.reserve(texts.size());
    for (const auto& t : texts) raw.push_back(t.text);
    std::vector<EmbeddingVector> vectors = extractor.embed(raw);
    if (vectors.size() != texts.size()) {
        throw ProtocolError("extractor returned " + std::to_string(vectors.size()) +
                            " vectors for " + std::to_string(texts.size()) + " texts");
    }
    const std::size_t dim = vectors.front().dim();
    for (const auto& v : vectors) {
        if (v.dim() != dim) {
            throw ProtocolError("extractor returned mixed dimensions (" + std::to_string(dim) +
                                " vs " + std::to_string(v.dim()) + ")");
        }
        for (double x : v.values) {
            if (!std::isfinite(x)) throw ProtocolError("extractor returned a non-finite value");
        }
    }
    return vectors;
}

EmbeddingVector synthetic_embed(const std::string& text, std::size_t dim, std::uint64_t seed) {
    if (dim < 1) throw ArgumentError("synthetic_embed: dim must be >= 1");
    EmbeddingVector v;
    v.values.assign(dim, 0.0);
    std::istringstream in(text);
    std::string token;
    bool any = false;
    while (in >> token) {
        any = true;
        const std::uint64_t h = fnv1a64(token, fnv1a64_u64(seed));
        const std::size_t bucket = static_cast<std::size_t>(h % dim);
        const double sign = ((h >> 63) & 1u) ? -1.0 : 1.0;
        v.values[bucket] += sign;
    }
    double norm_sq = 0.0;
    for (double x : v.values) norm_sq += x * x;
    if (!any || norm_sq == 0.0) {
        // All-zero accumulations (in particular empty text) map to e1.
        v.values.assign(dim, 0.0);
        v.values[0] = 1.0;
        return v;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : v.values) x *= inv;
    return v;
}

}  // namespace oplab
