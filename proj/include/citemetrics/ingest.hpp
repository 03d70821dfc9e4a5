#pragma once
// Catalog ingest: title resolution, the review queue, and the
// two-generation citation harvest.
//
// Every remote interaction goes through ApiClient. The CachedApi
// implementation records each raw response verbatim in a per-request JSON
// file, so a populated cache replays a whole ingest offline and
// byte-identically, and an interrupted harvest resumes from where the
// cache ends.

#include "citemetrics/fuzzy.hpp"
#include "citemetrics/graph.hpp"
#include "citemetrics/types.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace citemetrics::ingest {

// A paper as the catalog reports it.
struct PaperStub {
    Id id;
    std::string title;
    std::optional<int> year;
    int author_count = 1;
    std::vector<Id> author_ids;
};

struct AuthorStub {
    Id author_id;
    std::string name;
};

// Catalog access surface. Implementations: CachedApi (cache +
// optional transport) and test fakes.
class ApiClient {
  public:
    virtual ~ApiClient() = default;
    virtual PaperStub fetch_paper(const Id& paper) = 0;
    virtual std::vector<PaperStub> search_by_title(const std::string& title,
                                                   int year) = 0;
    virtual std::vector<PaperStub> fetch_citations(const Id& paper) = 0;
    virtual std::vector<AuthorStub> search_author(const std::string& name) = 0;
    virtual std::vector<PaperStub> fetch_author_papers(const Id& author) = 0;
};

// ---------------------------------------------------------------------------
// Request keys and the response cache

struct ApiRequest {
    enum class Kind { paper, title_search, citations, author_search, author_papers };
    Kind kind;
    std::string subject;  // paper id, author id, title, or author name
    int year = 0;         // title_search only
};

inline std::string request_key(const ApiRequest& req) {
    switch (req.kind) {
        case ApiRequest::Kind::paper: return "paper|" + req.subject;
        case ApiRequest::Kind::title_search:
            return "search|" + std::to_string(req.year) + "|" + req.subject;
        case ApiRequest::Kind::citations: return "citations|" + req.subject;
        case ApiRequest::Kind::author_search: return "author_search|" + req.subject;
        case ApiRequest::Kind::author_papers: return "author_papers|" + req.subject;
    }
    return {};
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

// One JSON file per request key: {"key": ..., "payload": ...}. File names
// are the key's fnv1a-64 hex, so any byte sequence in a title is safe.
class CacheStore {
  public:
    explicit CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    static std::string file_name(const std::string& key) {
        static const char* hex = "0123456789abcdef";
        std::uint64_t h = fnv1a64(key);
        std::string name(16, '0');
        for (int i = 15; i >= 0; --i) {
            name[i] = hex[h & 0xf];
            h >>= 4;
        }
        return name + ".json";
    }

    std::optional<nlohmann::json> get(const std::string& key) const {
        std::ifstream in(dir_ / file_name(key));
        if (!in) return std::nullopt;
        nlohmann::json rec = nlohmann::json::parse(in, nullptr, false);
        if (rec.is_discarded() || !rec.is_object() || rec.value("key", "") != key)
            throw error("corrupt cache entry for key: " + key);
        return rec.at("payload");
    }

    void put(const std::string& key, const nlohmann::json& payload) const {
        std::filesystem::create_directories(dir_);
        std::ofstream out(dir_ / file_name(key), std::ios::binary);
        if (!out) throw error("cannot write cache entry for key: " + key);
        out << nlohmann::json{{"key", key}, {"payload", payload}}.dump() << '\n';
    }

  private:
    std::filesystem::path dir_;
};

// ---------------------------------------------------------------------------
// Payload parsing (catalog wire shape: {"data": [...]})

inline PaperStub parse_paper_item(const nlohmann::json& item) {
    const nlohmann::json& paper =
        item.contains("citingPaper") ? item.at("citingPaper") : item;
    PaperStub stub;
    stub.id = paper.at("paperId").get<std::string>();
    stub.title = paper.value("title", std::string{});
    if (paper.contains("year") && paper.at("year").is_number())
        stub.year = paper.at("year").get<int>();
    if (paper.contains("authors") && paper.at("authors").is_array()) {
        for (const auto& author : paper.at("authors")) {
            if (author.contains("authorId") && author.at("authorId").is_string())
                stub.author_ids.push_back(author.at("authorId").get<std::string>());
        }
        stub.author_count =
            std::max<int>(1, static_cast<int>(paper.at("authors").size()));
        if (stub.author_ids.size() != static_cast<std::size_t>(stub.author_count))
            stub.author_ids.clear();  // partial author ids are worse than none
    }
    return stub;
}

inline std::vector<PaperStub> parse_paper_list(const nlohmann::json& payload) {
    std::vector<PaperStub> out;
    for (const auto& item : payload.value("data", nlohmann::json::array()))
        out.push_back(parse_paper_item(item));
    return out;
}

inline std::vector<AuthorStub> parse_author_list(const nlohmann::json& payload) {
    std::vector<AuthorStub> out;
    for (const auto& item : payload.value("data", nlohmann::json::array()))
        out.push_back({item.at("authorId").get<std::string>(),
                       item.value("name", std::string{})});
    return out;
}

// Raw response fetcher; HttpTransport implements this over the real API.
class Transport {
  public:
    virtual ~Transport() = default;
    virtual nlohmann::json fetch(const ApiRequest& req) = 0;
};

// Cache-first ApiClient. With no transport it only serves cached data and
// raises offline_error on a miss; with one, misses are fetched once,
// recorded, then parsed. A key is never requested twice per run.
class CachedApi : public ApiClient {
  public:
    CachedApi(CacheStore cache, std::shared_ptr<Transport> upstream = nullptr)
        : cache_(std::move(cache)), upstream_(std::move(upstream)) {}

    PaperStub fetch_paper(const Id& paper) override {
        return parse_paper_item(
            payload({ApiRequest::Kind::paper, paper}));
    }
    std::vector<PaperStub> search_by_title(const std::string& title,
                                           int year) override {
        return parse_paper_list(
            payload({ApiRequest::Kind::title_search, title, year}));
    }
    std::vector<PaperStub> fetch_citations(const Id& paper) override {
        return parse_paper_list(
            payload({ApiRequest::Kind::citations, paper}));
    }
    std::vector<AuthorStub> search_author(const std::string& name) override {
        return parse_author_list(
            payload({ApiRequest::Kind::author_search, name}));
    }
    std::vector<PaperStub> fetch_author_papers(const Id& author) override {
        return parse_paper_list(
            payload({ApiRequest::Kind::author_papers, author}));
    }

  private:
    nlohmann::json payload(const ApiRequest& req) {
        std::string key = request_key(req);
        if (auto cached = cache_.get(key)) return *cached;
        if (!upstream_)
            throw offline_error("no cached response and no transport for: " + key);
        nlohmann::json fresh = upstream_->fetch(req);
        cache_.put(key, fresh);
        return fresh;
    }

    CacheStore cache_;
    std::shared_ptr<Transport> upstream_;
};

// ---------------------------------------------------------------------------
// Title resolution

struct TitleRecord {
    std::string title;
    int year = 0;
    std::string source_key;
};

enum class ResolutionStatus { auto_matched, needs_review, confirmed, rejected, unresolved };

inline std::string to_string(ResolutionStatus status) {
    switch (status) {
        case ResolutionStatus::auto_matched: return "auto_matched";
        case ResolutionStatus::needs_review: return "needs_review";
        case ResolutionStatus::confirmed: return "confirmed";
        case ResolutionStatus::rejected: return "rejected";
        case ResolutionStatus::unresolved: return "unresolved";
    }
    return "unresolved";
}

struct ResolutionResult {
    TitleRecord record;
    std::optional<Id> resolved_id;
    std::string matched_title;
    double confidence = 0.0;
    ResolutionStatus status = ResolutionStatus::unresolved;
};

struct MatchThresholds {
    double auto_accept = 0.95;
    double review_low = 0.80;
};

// Candidates are filtered to the record's publishing year, then scored by
// normalized title similarity. The best candidate decides the outcome:
// >= auto_accept, in the review band, or unresolved.
inline ResolutionResult resolve_title(const TitleRecord& record,
                                      ApiClient& client,
                                      const MatchThresholds& thresholds = {}) {
    ResolutionResult result{record, std::nullopt, {}, 0.0,
                            ResolutionStatus::unresolved};
    std::vector<PaperStub> candidates =
        client.search_by_title(record.title, record.year);
    const PaperStub* best = nullptr;
    double best_score = -1.0;
    for (const PaperStub& candidate : candidates) {
        if (!candidate.year || *candidate.year != record.year) continue;
        double score = title_similarity(record.title, candidate.title);
        if (score > best_score ||
            (score == best_score && best && candidate.id < best->id)) {
            best = &candidate;
            best_score = score;
        }
    }
    if (!best) return result;
    result.confidence = best_score;
    result.matched_title = best->title;
    if (best_score >= thresholds.auto_accept) {
        result.status = ResolutionStatus::auto_matched;
        result.resolved_id = best->id;
    } else if (best_score >= thresholds.review_low) {
        result.status = ResolutionStatus::needs_review;
        result.resolved_id = best->id;  // the proposal under review
    }
    return result;
}

inline std::vector<ResolutionResult> review_queue(
    const std::vector<ResolutionResult>& results) {
    std::vector<ResolutionResult> queue;
    for (const ResolutionResult& r : results)
        if (r.status == ResolutionStatus::needs_review) queue.push_back(r);
    return queue;
}

inline ResolutionResult confirm(const ResolutionResult& result, bool accept) {
    if (result.status != ResolutionStatus::needs_review)
        throw std::invalid_argument("confirm: result is not under review: " +
                                    result.record.title);
    ResolutionResult out = result;
    if (accept) {
        out.status = ResolutionStatus::confirmed;
    } else {
        out.status = ResolutionStatus::rejected;
        out.resolved_id.reset();
    }
    return out;
}

// Persisted review decisions, JSONL of
// {title, year, resolved_id, decision, timestamp}. Replaying the log keeps
// re-runs from re-asking.
class ReviewLog {
  public:
    struct Entry {
        std::string title;
        int year = 0;
        std::optional<Id> resolved_id;
        std::string decision;  // "accept" | "reject"
        std::string timestamp;
    };

    ReviewLog() = default;

    static ReviewLog load(const std::filesystem::path& path) {
        ReviewLog log;
        log.path_ = path;
        std::ifstream in(path);
        if (!in) return log;  // nothing decided yet
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded())
                throw parse_error("invalid review log record", lineno);
            Entry entry;
            entry.title = rec.at("title").get<std::string>();
            entry.year = rec.at("year").get<int>();
            if (rec.contains("resolved_id") && !rec.at("resolved_id").is_null())
                entry.resolved_id = rec.at("resolved_id").get<std::string>();
            entry.decision = rec.at("decision").get<std::string>();
            entry.timestamp = rec.value("timestamp", std::string{});
            log.entries_[key_of(entry.title, entry.year)] = entry;
        }
        return log;
    }

    std::optional<Entry> lookup(const std::string& title, int year) const {
        auto it = entries_.find(key_of(title, year));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    // Records the decision and appends it to the backing file.
    void append(const Entry& entry) {
        entries_[key_of(entry.title, entry.year)] = entry;
        if (path_.empty()) return;
        std::filesystem::create_directories(path_.parent_path());
        std::ofstream out(path_, std::ios::app | std::ios::binary);
        if (!out) throw error("cannot append review log: " + path_.string());
        nlohmann::json rec{{"title", entry.title},
                           {"year", entry.year},
                           {"decision", entry.decision},
                           {"timestamp", entry.timestamp}};
        rec["resolved_id"] =
            entry.resolved_id ? nlohmann::json(*entry.resolved_id)
                              : nlohmann::json(nullptr);
        out << rec.dump() << '\n';
    }

    // Applies a persisted decision to a needs_review result. Returns true
    // when the result was settled by the log.
    bool apply(ResolutionResult& result) const {
        if (result.status != ResolutionStatus::needs_review) return false;
        auto entry = lookup(result.record.title, result.record.year);
        if (!entry) return false;
        if (entry->decision == "accept") {
            result.status = ResolutionStatus::confirmed;
            if (entry->resolved_id) result.resolved_id = entry->resolved_id;
        } else {
            result.status = ResolutionStatus::rejected;
            result.resolved_id.reset();
        }
        return true;
    }

  private:
    static std::string key_of(const std::string& title, int year) {
        return std::to_string(year) + "|" + title;
    }

    std::filesystem::path path_;
    std::map<std::string, Entry> entries_;
};

// Resolves a batch, replaying any persisted review decisions.
inline std::vector<ResolutionResult> resolve_titles(
    const std::vector<TitleRecord>& records, ApiClient& client,
    const MatchThresholds& thresholds = {}, const ReviewLog* log = nullptr) {
    std::vector<ResolutionResult> results;
    results.reserve(records.size());
    for (const TitleRecord& record : records) {
        ResolutionResult result = resolve_title(record, client, thresholds);
        if (log) log->apply(result);
        results.push_back(std::move(result));
    }
    return results;
}

// Status breakdown; the five counts always partition the batch.
struct ResolutionReport {
    std::map<ResolutionStatus, int> counts;
    int total = 0;
};

inline ResolutionReport resolution_report(
    const std::vector<ResolutionResult>& results) {
    ResolutionReport report;
    for (ResolutionStatus s :
         {ResolutionStatus::auto_matched, ResolutionStatus::needs_review,
          ResolutionStatus::confirmed, ResolutionStatus::rejected,
          ResolutionStatus::unresolved})
        report.counts[s] = 0;
    for (const ResolutionResult& r : results) ++report.counts[r.status];
    report.total = static_cast<int>(results.size());
    return report;
}

// ---------------------------------------------------------------------------
// Harvest

struct HarvestReport {
    // (id, reason) for fetches that failed; harvest continues past them.
    std::vector<std::pair<Id, std::string>> failed;
    // citers dropped for missing publication years
    std::vector<Id> skipped_no_year;
    int skipped_edges = 0;  // self-citations and generation-order violations
};

struct HarvestResult {
    CitationGraph graph;
    HarvestReport report;
};

namespace detail {

inline PaperNode node_from_stub(const PaperStub& stub) {
    PaperNode node;
    node.id = stub.id;
    node.title = stub.title;
    node.year = stub.year.value_or(0);
    node.author_count = stub.author_count;
    node.author_ids = stub.author_ids;
    return node;
}

// Breadth-first over generations: fetch citers of every node at level g,
// adding unseen citers at level g+1. Frontiers are processed in id order so
// a fully cached run is reproducible byte for byte.
inline HarvestResult harvest_from_stubs(const std::vector<PaperStub>& seeds,
                                        ApiClient& client, int depth) {
    HarvestResult out;
    CitationGraph::Builder builder;
    std::map<Id, int> generation;
    std::set<Edge> edges;

    std::vector<Id> frontier;
    for (const PaperStub& seed : seeds) {
        if (generation.count(seed.id)) continue;  // duplicate seed
        if (!seed.year) {
            out.report.skipped_no_year.push_back(seed.id);
            continue;
        }
        builder.add_node(detail::node_from_stub(seed), 0);
        generation[seed.id] = 0;
        frontier.push_back(seed.id);
    }
    std::sort(frontier.begin(), frontier.end());

    for (int level = 0; level < depth; ++level) {
        std::vector<Id> next;
        for (const Id& id : frontier) {
            std::vector<PaperStub> citers;
            try {
                citers = client.fetch_citations(id);
            } catch (const std::exception& e) {
                out.report.failed.emplace_back(id, e.what());
                continue;
            }
            for (const PaperStub& citer : citers) {
                if (citer.id == id) {
                    ++out.report.skipped_edges;
                    continue;
                }
                auto known = generation.find(citer.id);
                if (known == generation.end()) {
                    if (!citer.year) {
                        out.report.skipped_no_year.push_back(citer.id);
                        continue;
                    }
                    builder.add_node(detail::node_from_stub(citer), level + 1);
                    generation[citer.id] = level + 1;
                    next.push_back(citer.id);
                } else if (level <= 1 && known->second < level) {
                    // citing generation would fall below the cited one
                    ++out.report.skipped_edges;
                    continue;
                }
                if (edges.insert({id, citer.id}).second)
                    builder.add_edge(id, citer.id);
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    out.graph = std::move(builder).build();
    return out;
}

}  // namespace detail

// Two citation generations above the resolved seeds: generation 0 is the
// seeds, 1 their direct citers, 2 the citers of those.
inline HarvestResult harvest_generations(const std::vector<Id>& seed_ids,
                                         ApiClient& client, int depth = 2) {
    std::vector<PaperStub> seeds;
    HarvestReport pre;
    for (const Id& id : seed_ids) {
        try {
            seeds.push_back(client.fetch_paper(id));
        } catch (const std::exception& e) {
            pre.failed.emplace_back(id, e.what());
        }
    }
    HarvestResult out = detail::harvest_from_stubs(seeds, client, depth);
    out.report.failed.insert(out.report.failed.begin(), pre.failed.begin(),
                             pre.failed.end());
    return out;
}

struct AuthorProfileSets {
    Id author_id;
    std::string name;
    std::vector<Id> papers;               // P_w
    std::vector<Id> first_level_citers;   // P_c^1
    std::vector<Id> second_level_citers;  // P_c^2
};

struct AuthorHarvest {
    ResolutionStatus status = ResolutionStatus::unresolved;
    std::vector<AuthorStub> candidates;  // non-empty when ambiguous
    std::optional<AuthorProfileSets> profile;
    CitationGraph graph;
    HarvestReport report;
};

// Harvests a known author id: P_w as generation 0, then two citer levels.
// Set membership is read off the final edge list, so a paper can sit in
// several sets while being stored once.
inline AuthorHarvest harvest_author_by_id(const Id& author_id,
                                          const std::string& name,
                                          ApiClient& client) {
    AuthorHarvest out;
    std::vector<PaperStub> papers = client.fetch_author_papers(author_id);
    HarvestResult h = detail::harvest_from_stubs(papers, client, 2);
    out.status = ResolutionStatus::auto_matched;
    out.graph = std::move(h.graph);
    out.report = std::move(h.report);

    AuthorProfileSets profile;
    profile.author_id = author_id;
    profile.name = name;
    std::set<Id> written, first, second;
    for (const PaperStub& paper : papers)
        if (out.graph.contains(paper.id)) written.insert(paper.id);
    for (const Id& paper : written)
        for (const Id& citer : out.graph.citer_ids(paper)) first.insert(citer);
    for (const Id& paper : first)
        for (const Id& citer : out.graph.citer_ids(paper)) second.insert(citer);
    profile.papers.assign(written.begin(), written.end());
    profile.first_level_citers.assign(first.begin(), first.end());
    profile.second_level_citers.assign(second.begin(), second.end());
    out.profile = std::move(profile);
    return out;
}

// Resolves an author by name first. A single candidate (or a single exact
// name match) proceeds; several candidates land in the review path;
// none means unresolved.
inline AuthorHarvest harvest_author(const std::string& author_name,
                                    ApiClient& client) {
    std::vector<AuthorStub> candidates = client.search_author(author_name);
    if (candidates.empty()) {
        AuthorHarvest out;
        out.status = ResolutionStatus::unresolved;
        return out;
    }
    const AuthorStub* chosen = nullptr;
    if (candidates.size() == 1) {
        chosen = &candidates[0];
    } else {
        const AuthorStub* exact = nullptr;
        int exact_matches = 0;
        for (const AuthorStub& c : candidates) {
            if (normalize_title(c.name) == normalize_title(author_name)) {
                exact = &c;
                ++exact_matches;
            }
        }
        if (exact_matches == 1) chosen = exact;
    }
    if (!chosen) {
        AuthorHarvest out;
        out.status = ResolutionStatus::needs_review;
        out.candidates = std::move(candidates);
        return out;
    }
    return harvest_author_by_id(chosen->author_id, chosen->name, client);
}

}  // namespace citemetrics::ingest
