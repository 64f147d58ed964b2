#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "oplab/embedding.hpp"
#include "oplab/judge.hpp"

namespace oplab {

// Response generator contract. Wire protocol:
//   POST {"prompt","k","max_length","seed"} -> {"responses":[...]}
class GeneratorClient {
public:
    virtual ~GeneratorClient() = default;
    virtual std::vector<std::string> generate(const std::string& prompt, int k, int max_length,
                                              std::uint64_t seed) = 0;
};

// External trainer contract. Wire protocol:
//   POST {"task":"sft"|"eval_sft"|"dpo","data_path"} -> {"model_ref"}
class TrainerClient {
public:
    virtual ~TrainerClient() = default;
    virtual std::string train(const std::string& task, const std::string& data_path) = 0;
};

struct HttpOptions {
    int timeout_ms = 30000;
    int retries = 2;           // transient-failure retries (not judge parse retries)
    std::string auth_env;      // env var holding a bearer token, may be empty
};

// Embedding protocol: POST {"texts":[...]} -> {"vectors":[[...],...]}
class HttpEmbedder : public EmbeddingClient {
public:
    HttpEmbedder(std::string url, HttpOptions options);
    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;

private:
    std::string url_;
    HttpOptions options_;
};

// Judge protocol: POST {"prompt": string, "attempt": int} -> {"text": string}.
// "attempt" is a retry/repeat counter for idempotency on the server side.
class HttpJudge : public JudgeClient {
public:
    HttpJudge(std::string url, HttpOptions options);
    std::string complete(const std::string& prompt, int attempt) override;

private:
    std::string url_;
    HttpOptions options_;
};

class HttpGenerator : public GeneratorClient {
public:
    HttpGenerator(std::string url, HttpOptions options);
    std::vector<std::string> generate(const std::string& prompt, int k, int max_length,
                                      std::uint64_t seed) override;

private:
    std::string url_;
    HttpOptions options_;
};

class HttpTrainer : public TrainerClient {
public:
    HttpTrainer(std::string url, HttpOptions options);
    std::string train(const std::string& task, const std::string& data_path) override;

private:
    std::string url_;
    HttpOptions options_;
};

// Runs fn(i) for i in [0, count) on up to `parallelism` threads. Exceptions
// are captured and the first one (by index) is rethrown after the join, so
// results stay index-stable regardless of scheduling.
void parallel_for(std::size_t count, int parallelism, const std::function<void(std::size_t)>& fn);

}  // namespace oplab
