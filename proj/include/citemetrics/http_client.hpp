#pragma once
// HTTP transport for the catalog API, kept out of ingest.hpp so offline
// users never compile the HTTP stack.
//
// URL templates and the auth header are configuration; the default profile
// targets the public Semantic Scholar Academic Graph API. Requests pass a
// token-bucket rate limiter (default 1 request/second).

#include "citemetrics/ingest.hpp"
#include "citemetrics/types.hpp"

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <memory>
#include <string>
#include <thread>

namespace citemetrics::ingest {

struct ApiProfile {
    std::string base_url = "https://api.semanticscholar.org";
    std::string paper_path = "/graph/v1/paper/{id}?fields=title,year,authors";
    std::string title_search_path =
        "/graph/v1/paper/search?query={title}&year={year}&fields=title,year,authors";
    std::string citations_path =
        "/graph/v1/paper/{id}/citations?fields=title,year,authors&limit=1000";
    std::string author_search_path = "/graph/v1/author/search?query={name}";
    std::string author_papers_path =
        "/graph/v1/author/{id}/papers?fields=title,year,authors&limit=1000";
    std::string api_key_header = "x-api-key";
    std::string api_key_env = "S2_API_KEY";  // key read from this variable
    double requests_per_second = 1.0;
    double burst = 1.0;
};

class RateLimiter {
  public:
    RateLimiter(double rate_per_second, double burst)
        : rate_(rate_per_second), tokens_(burst), burst_(burst),
          last_(clock::now()) {}

    void acquire() {
        refill();
        while (tokens_ < 1.0) {
            double missing = 1.0 - tokens_;
            std::this_thread::sleep_for(
                std::chrono::duration<double>(missing / rate_));
            refill();
        }
        tokens_ -= 1.0;
    }

  private:
    using clock = std::chrono::steady_clock;

    void refill() {
        auto now = clock::now();
        double elapsed = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        tokens_ = std::min(burst_, tokens_ + elapsed * rate_);
    }

    double rate_;
    double tokens_;
    double burst_;
    clock::time_point last_;
};

namespace detail {

inline std::string url_encode(const std::string& value) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : value) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xf];
        }
    }
    return out;
}

inline std::string expand(std::string path, const std::string& placeholder,
                          const std::string& value) {
    auto pos = path.find(placeholder);
    if (pos != std::string::npos)
        path.replace(pos, placeholder.size(), url_encode(value));
    return path;
}

}  // namespace detail

class HttpTransport : public Transport {
  public:
    explicit HttpTransport(ApiProfile profile = {})
        : profile_(std::move(profile)),
          limiter_(profile_.requests_per_second, profile_.burst),
          client_(std::make_unique<httplib::Client>(profile_.base_url)) {
        client_->set_follow_location(true);
        if (const char* key = std::getenv(profile_.api_key_env.c_str()))
            headers_.emplace(profile_.api_key_header, key);
    }

    nlohmann::json fetch(const ApiRequest& req) override {
        std::string path = path_for(req);
        limiter_.acquire();
        auto res = client_->Get(path, headers_);
        if (!res)
            throw error("network error fetching " + path + ": " +
                        httplib::to_string(res.error()));
        if (res->status == 429)
            throw error("rate limited by server fetching " + path);  // retryable
        if (res->status != 200)
            throw error("HTTP " + std::to_string(res->status) + " fetching " + path);
        nlohmann::json payload = nlohmann::json::parse(res->body, nullptr, false);
        if (payload.is_discarded())
            throw error("non-JSON response fetching " + path);
        return payload;
    }

  private:
    std::string path_for(const ApiRequest& req) const {
        using Kind = ApiRequest::Kind;
        switch (req.kind) {
            case Kind::paper:
                return detail::expand(profile_.paper_path, "{id}", req.subject);
            case Kind::title_search: {
                std::string path =
                    detail::expand(profile_.title_search_path, "{title}", req.subject);
                return detail::expand(path, "{year}", std::to_string(req.year));
            }
            case Kind::citations:
                return detail::expand(profile_.citations_path, "{id}", req.subject);
            case Kind::author_search:
                return detail::expand(profile_.author_search_path, "{name}",
                                      req.subject);
            case Kind::author_papers:
                return detail::expand(profile_.author_papers_path, "{id}",
                                      req.subject);
        }
        throw error("unhandled request kind");
    }

    ApiProfile profile_;
    RateLimiter limiter_;
    std::unique_ptr<httplib::Client> client_;
    httplib::Headers headers_;
};

}  // namespace citemetrics::ingest
