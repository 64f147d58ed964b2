#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oplab/embedding.hpp"
#include "oplab/endpoints.hpp"
#include "oplab/records.hpp"

namespace oplab {

// Row-major dense matrix, just big enough for the synthetic world.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    static Mat zero(std::size_t r, std::size_t c) { return Mat{r, c, std::vector<double>(r * c, 0.0)}; }
    static Mat identity(std::size_t n);

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::vector<double> apply(const std::vector<double>& x) const;
};

// Deterministic toy universe: prompts and responses are vectors, the ideal
// response map is w_star, and the hidden reward is r*(x,y) = -|y - w_star x|^2.
// Seed and pool prompts come from different means, modeling the distribution
// shift between seed data and the unlabeled pool.
struct SyntheticWorld {
    std::size_t dim = 4;
    Mat w_star;
    std::vector<double> seed_mean;
    std::vector<double> pool_mean;
    double expert_noise_sd = 0.0;
    double scale = 0.25;  // squash rate of the expert's exp() scoring curve
    std::uint64_t seed = 0;
};

void validate(const SyntheticWorld& world);

// w_star drawn from the seed, means offset in the first coordinate.
SyntheticWorld make_world(std::size_t dim, std::uint64_t seed, double expert_noise_sd = 0.0,
                          double scale = 0.25);

double true_reward(const SyntheticWorld& world, const std::vector<double>& prompt,
                   const std::vector<double>& response);

// Fixed-precision text codec for vectors; synthetic "text" is just numbers.
std::string encode_vec(const std::vector<double>& v);
std::vector<double> decode_vec(const std::string& text);

std::vector<double> sample_prompt_vec(const SyntheticWorld& world, bool from_seed, std::uint64_t seed);

// k responses y_i = policy x + noise, i.i.d. seeded Gaussian noise.
std::vector<std::vector<double>> synth_generate(const SyntheticWorld& world, const Mat& policy,
                                                const std::vector<double>& prompt_vec, int k,
                                                double noise_sd, std::uint64_t seed);

// clamp(round(5 exp(scale r*) + eta), 0, 5); monotone in the residual when
// the noise sd is zero.
int synth_expert_score(const SyntheticWorld& world, const std::vector<double>& prompt_vec,
                       const std::vector<double>& response_vec, std::uint64_t seed);

enum class EvaluatorKind { ridge, nearest_neighbor };
EvaluatorKind evaluator_kind_from_string(const std::string& s);

// The trained proxy scorer: a regressor from embedding to score.
struct ProxyEvaluator {
    EvaluatorKind kind = EvaluatorKind::ridge;
    std::vector<double> weights;                                   // ridge
    std::vector<std::pair<std::vector<double>, double>> memory;    // nearest neighbor
    std::size_t neighbors = 1;
    double validation_loss = 0.0;

    double predict(const std::vector<double>& features) const;
};

// Fits `restarts` candidates (ridge: seeded regularization strengths;
// nearest neighbor: growing neighborhood sizes) and keeps the one with the
// lowest squared-error validation loss.
ProxyEvaluator train_proxy_evaluator(
    const std::vector<EftRecord>& eft_train, const std::vector<EftRecord>& eft_val,
    const std::unordered_map<std::string, EmbeddingVector>& embeddings_by_eft_id,
    EvaluatorKind kind, int restarts, std::uint64_t seed);

// Prompt/response vectors decoded from synthetic records, keyed by id.
struct SynthCorpus {
    std::unordered_map<std::string, std::vector<double>> prompt_vecs;
    std::unordered_map<std::string, std::vector<double>> response_vecs;
    std::unordered_map<std::string, std::string> prompt_of_ift;

    static SynthCorpus from_records(const std::vector<PromptRecord>& prompts,
                                    const std::vector<IftRecord>& ifts);
};

// Fraction of pairs whose chosen response truly beats the rejected one.
// Ties count as incorrect.
double pair_accuracy(const std::vector<DpoPair>& pairs, const SynthCorpus& corpus,
                     const SyntheticWorld& world);

// Toy preference step: policy + step * mean over pairs of (y_chosen - y_rejected) x^T.
Mat policy_update_step(const Mat& policy, const std::vector<DpoPair>& pairs,
                       const SynthCorpus& corpus, double step_size);

// Quadratic feature map [1, x, y, x*x, y*y, vec(x y^T)]; linear models over it
// can represent the hidden reward exactly.
std::vector<double> candidate_features(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> prompt_features(const std::vector<double>& x);

// Tuning knobs for the synthetic endpoints that are not part of the world itself.
struct SyntheticSpec {
    SyntheticWorld world;
    double policy_offset = 0.3;    // how far the generator's policy sits from w_star
    double gen_noise_sd = 0.6;     // response noise inside synth_generate
    double proxy_fail_prob = 0.0;  // per-call chance the scorer returns garbage
    double expert_fail_prob = 0.0;
    EvaluatorKind evaluator = EvaluatorKind::ridge;
    int restarts = 3;
};

// In-process endpoints backed by one shared world. All replies are pure
// functions of (request, attempt, world seed), so fan-out order cannot change
// a run's artifacts. The proxy scorer becomes available once the trainer has
// run its "eval_sft" task (or set_evaluator was called).
class SyntheticBackend {
public:
    explicit SyntheticBackend(SyntheticSpec spec);

    const SyntheticWorld& world() const { return spec_.world; }
    const Mat& policy() const { return policy_; }
    const SyntheticSpec& spec() const { return spec_; }

    std::unique_ptr<GeneratorClient> generator();
    std::unique_ptr<JudgeClient> expert();
    std::unique_ptr<JudgeClient> proxy_scorer();
    std::unique_ptr<TrainerClient> trainer();
    std::unique_ptr<EmbeddingClient> embedder_eft();
    std::unique_ptr<EmbeddingClient> embedder_ift();
    std::unique_ptr<EmbeddingClient> hash_embedder(std::size_t dim);

    void set_evaluator(ProxyEvaluator evaluator);
    std::optional<ProxyEvaluator> evaluator() const;
    std::optional<Mat> updated_policy() const;

private:
    friend class SynthTrainer;

    SyntheticSpec spec_;
    Mat policy_;
    mutable std::mutex mu_;
    std::optional<ProxyEvaluator> evaluator_;
    std::optional<Mat> updated_policy_;
};

}  // namespace oplab
