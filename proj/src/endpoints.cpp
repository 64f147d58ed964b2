#include "oplab/endpoints.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace oplab {

namespace {

using json = nlohmann::json;

// Splits "http://host:port/path" into the client base and the request path.
std::pair<std::string, std::string> split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ArgumentError("endpoint url '" + url + "' must start with http://");
    }
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

json post_json(const std::string& url, const HttpOptions& options, const json& body) {
    const auto [base, path] = split_url(url);
    httplib::Client client(base);
    client.set_connection_timeout(0, options.timeout_ms * 1000);
    client.set_read_timeout(options.timeout_ms / 1000, (options.timeout_ms % 1000) * 1000);
    httplib::Headers headers;
    if (!options.auth_env.empty()) {
        if (const char* token = std::getenv(options.auth_env.c_str())) {
            headers.emplace("Authorization", std::string("Bearer ") + token);
        }
    }
    const std::string payload = body.dump();
    std::string last_error;
    for (int attempt = 0; attempt <= options.retries; ++attempt) {
        auto res = client.Post(path, headers, payload, "application/json");
        if (!res) {
            last_error = "connection failed (" + httplib::to_string(res.error()) + ")";
            continue;
        }
        if (res->status >= 500) {
            last_error = "server returned status " + std::to_string(res->status);
            continue;  // transient
        }
        if (res->status != 200) {
            throw TransportError("endpoint '" + url + "' returned status " +
                                 std::to_string(res->status));
        }
        try {
            return json::parse(res->body);
        } catch (const json::parse_error& e) {
            throw ProtocolError("endpoint '" + url + "' returned invalid JSON: " + e.what());
        }
    }
    throw TransportError("endpoint '" + url + "' unreachable after " +
                         std::to_string(options.retries + 1) + " attempt(s): " + last_error);
}

}  // namespace

HttpEmbedder::HttpEmbedder(std::string url, HttpOptions options)
    : url_(std::move(url)), options_(std::move(options)) {}

std::vector<EmbeddingVector> HttpEmbedder::embed(const std::vector<std::string>& texts) {
    json body;
    body["texts"] = texts;
    const json reply = post_json(url_, options_, body);
    if (!reply.contains("vectors") || !reply["vectors"].is_array()) {
        throw ProtocolError("embedding endpoint reply is missing 'vectors'");
    }
    std::vector<EmbeddingVector> out;
    out.reserve(reply["vectors"].size());
    for (const auto& row : reply["vectors"]) {
        EmbeddingVector v;
        if (!row.is_array()) throw ProtocolError("embedding endpoint returned a non-array vector");
        v.values.reserve(row.size());
        for (const auto& x : row) {
            if (!x.is_number()) throw ProtocolError("embedding endpoint returned a non-numeric entry");
            v.values.push_back(x.get<double>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

HttpJudge::HttpJudge(std::string url, HttpOptions options)
    : url_(std::move(url)), options_(std::move(options)) {}

std::string HttpJudge::complete(const std::string& prompt, int attempt) {
    json body;
    body["prompt"] = prompt;
    body["attempt"] = attempt;
    const json reply = post_json(url_, options_, body);
    if (!reply.contains("text") || !reply["text"].is_string()) {
        throw ProtocolError("judge endpoint reply is missing 'text'");
    }
    return reply["text"].get<std::string>();
}

HttpGenerator::HttpGenerator(std::string url, HttpOptions options)
    : url_(std::move(url)), options_(std::move(options)) {}

std::vector<std::string> HttpGenerator::generate(const std::string& prompt, int k, int max_length,
                                                 std::uint64_t seed) {
    json body;
    body["prompt"] = prompt;
    body["k"] = k;
    body["max_length"] = max_length;
    body["seed"] = seed;
    const json reply = post_json(url_, options_, body);
    if (!reply.contains("responses") || !reply["responses"].is_array()) {
        throw ProtocolError("generator endpoint reply is missing 'responses'");
    }
    std::vector<std::string> out;
    for (const auto& r : reply["responses"]) {
        if (!r.is_string()) throw ProtocolError("generator endpoint returned a non-string response");
        out.push_back(r.get<std::string>());
    }
    if (static_cast<int>(out.size()) != k) {
        throw ProtocolError("generator endpoint returned " + std::to_string(out.size()) +
                            " responses, expected " + std::to_string(k));
    }
    return out;
}

HttpTrainer::HttpTrainer(std::string url, HttpOptions options)
    : url_(std::move(url)), options_(std::move(options)) {}

std::string HttpTrainer::train(const std::string& task, const std::string& data_path) {
    json body;
    body["task"] = task;
    body["data_path"] = data_path;
    const json reply = post_json(url_, options_, body);
    if (!reply.contains("model_ref") || !reply["model_ref"].is_string()) {
        throw ProtocolError("trainer endpoint reply is missing 'model_ref'");
    }
    return reply["model_ref"].get<std::string>();
}

void parallel_for(std::size_t count, int parallelism, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const int workers = std::max(1, std::min<int>(parallelism, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace oplab
