#pragma once
// Ranked-list comparison and the award evaluation protocols.
//
// RBO follows the extrapolated form: with A_d the fraction of shared items
// in the two top-d prefixes and k the length of the shorter list,
//
//     RBO(a, b, p) = (1 - p) * sum_{d=1..k} p^(d-1) * A_d  +  A_k * p^k
//
// The tail term makes the endpoints exact for finite lists: identical
// lists score 1, disjoint lists score 0, for any p in (0, 1).

#include "citemetrics/graph.hpp"
#include "citemetrics/paper_metrics.hpp"
#include "citemetrics/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace citemetrics {

// An ordered list of entity ids with scores, produced by one ranker's total
// order. Ranks are 1-based.
class RankedList {
  public:
    RankedList() = default;
    RankedList(std::string key, std::vector<std::pair<Id, double>> entries)
        : key_(std::move(key)), entries_(std::move(entries)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            auto [it, inserted] = rank_of_.emplace(entries_[i].first, i + 1);
            if (!inserted)
                throw validation_error("duplicate entity in ranked list: " +
                                       entries_[i].first);
        }
    }

    const std::string& key() const { return key_; }
    const std::vector<std::pair<Id, double>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const Id& id) const { return rank_of_.count(id) != 0; }

    int rank_of(const Id& id) const {
        auto it = rank_of_.find(id);
        if (it == rank_of_.end())
            throw lookup_error("entity not in ranked list: " + id);
        return it->second;
    }

    const Id& id_at(std::size_t rank) const { return entries_.at(rank - 1).first; }

  private:
    std::string key_;
    std::vector<std::pair<Id, double>> entries_;
    std::unordered_map<Id, int> rank_of_;
};

// |top-d(a) ∩ top-d(b)| / d.
inline double overlap_at_depth(const RankedList& a, const RankedList& b, int d) {
    if (d < 1 || static_cast<std::size_t>(d) > std::min(a.size(), b.size()))
        throw std::out_of_range("overlap depth " + std::to_string(d) +
                                " out of range");
    std::unordered_set<Id> top_a;
    for (int i = 1; i <= d; ++i) top_a.insert(a.id_at(i));
    int shared = 0;
    for (int i = 1; i <= d; ++i) shared += top_a.count(b.id_at(i));
    return static_cast<double>(shared) / d;
}

// Mean of overlap_at_depth over d = 1..depth.
inline double average_overlap(const RankedList& a, const RankedList& b,
                              int depth) {
    if (depth < 1 || static_cast<std::size_t>(depth) > std::min(a.size(), b.size()))
        throw std::out_of_range("overlap depth " + std::to_string(depth) +
                                " out of range");
    double sum = 0.0;
    for (int d = 1; d <= depth; ++d) sum += overlap_at_depth(a, b, d);
    return sum / depth;
}

// Extrapolated rank-biased overlap at persistence p.
inline double rbo(const RankedList& a, const RankedList& b, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("RBO persistence p must be in (0, 1)");
    if (a.size() == 0 || b.size() == 0)
        throw std::invalid_argument("RBO requires non-empty lists");

    std::size_t k = std::min(a.size(), b.size());
    // Incremental intersection: an element seen once is pending; seeing it
    // from the other list completes one shared pair.
    std::unordered_set<Id> pending;
    int shared = 0;
    double weighted_sum = 0.0;
    double weight = 1.0;  // p^(d-1)
    double agreement = 0.0;
    for (std::size_t d = 1; d <= k; ++d) {
        const Id& ea = a.id_at(d);
        const Id& eb = b.id_at(d);
        if (ea == eb) {
            ++shared;
        } else {
            if (pending.erase(ea)) ++shared; else pending.insert(ea);
            if (pending.erase(eb)) ++shared; else pending.insert(eb);
        }
        agreement = static_cast<double>(shared) / static_cast<double>(d);
        weighted_sum += weight * agreement;
        weight *= p;
    }
    // weight now holds p^k.
    return (1.0 - p) * weighted_sum + agreement * weight;
}

// Pairwise RBO of n lists: symmetric, unit diagonal.
inline std::vector<std::vector<double>> rbo_matrix(
    const std::vector<RankedList>& lists, double p) {
    std::size_t n = lists.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = rbo(lists[i], lists[j], p);
    }
    return m;
}

namespace detail {

// Average ranks (1-based), ties share the mean of their rank positions.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
    std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return values[l] < values[r];
    });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double mean_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

inline double pearson(const std::vector<double>& xs,
                      const std::vector<double>& ys) {
    std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= n; my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::numeric_limits<double>::quiet_NaN();  // no rank variance
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace detail

// Spearman rank correlation with average-rank tie handling. NaN when either
// input has no rank variance.
inline double spearman(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("spearman: length mismatch");
    if (xs.size() < 2)
        throw std::invalid_argument("spearman: need at least 2 observations");
    return detail::pearson(detail::average_ranks(xs), detail::average_ranks(ys));
}

// Inclusive publication-year range from which an award's competitors are
// drawn.
struct YearRange {
    int first_year;
    int last_year;
    bool contains(int year) const { return year >= first_year && year <= last_year; }
};

inline bool venue_equal(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

// VLDB awards draw candidates from 10-12 years before the award; SIGMOD
// from exactly 10 years before. Other venues need explicit offsets
// (years-before-award, oldest first).
inline YearRange candidate_window(
    const std::string& venue, int award_year,
    std::optional<std::pair<int, int>> explicit_offsets = {}) {
    if (venue_equal(venue, "VLDB")) return {award_year - 12, award_year - 10};
    if (venue_equal(venue, "SIGMOD")) return {award_year - 10, award_year - 10};
    if (explicit_offsets) {
        auto [oldest, newest] = *explicit_offsets;
        return {award_year - oldest, award_year - newest};
    }
    throw std::invalid_argument("venue \"" + venue +
                                "\" needs an explicit candidate window");
}

// One test-of-time style award: the winning paper and the year it was given.
struct AwardRecord {
    std::string venue;
    int award_year = 0;
    Id paper;
};

// Half-open percentile buckets (prev_edge, edge], e.g. edges {.05,.10,.20}
// give (0,5%], (5,10%], (10,20%]. Percentiles beyond the last edge fall in
// no bucket.
struct BucketScheme {
    std::vector<double> upper_edges;

    // Paper protocol: top 5%, 5-10%, 10-20%, 20-30%, 30-40%.
    static BucketScheme paper_default() {
        return {{0.05, 0.10, 0.20, 0.30, 0.40}};
    }
    // Author protocol: 5% steps up to 20%.
    static BucketScheme author_default() {
        return {{0.05, 0.10, 0.15, 0.20}};
    }

    // Index of the bucket containing `percentile`, or -1 when beyond the
    // last edge.
    int bucket_for(double percentile) const {
        for (std::size_t i = 0; i < upper_edges.size(); ++i)
            if (percentile <= upper_edges[i]) return static_cast<int>(i);
        return -1;
    }

    std::string label(std::size_t i) const {
        auto pct = [](double e) {
            double v = e * 100.0;
            int iv = static_cast<int>(v + 0.5);
            return std::to_string(iv);
        };
        std::string low = i == 0 ? "0" : pct(upper_edges[i - 1]);
        return low + "-" + pct(upper_edges[i]) + "%";
    }
};

// Deterministic ranking of a candidate set by one paper index. Ties break
// by descending citation count, then ascending id.
inline RankedList rank_papers(const CitationGraph& graph,
                              const std::vector<Id>& candidates,
                              const std::string& index,
                              const MaybeSlice& slice = {}) {
    struct Row {
        Id id;
        double score;
        int cites;
    };
    std::vector<Row> rows;
    rows.reserve(candidates.size());
    for (const Id& id : candidates) {
        PaperIndexVector v = all_paper_indices(graph, id, slice);
        auto it = v.scores.find(index);
        if (it == v.scores.end())
            throw lookup_error("unknown paper index: " + index);
        rows.push_back({id, it->second,
                        static_cast<int>(v.scores.at("ncites"))});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.cites != b.cites) return a.cites > b.cites;
        return a.id < b.id;
    });
    std::vector<std::pair<Id, double>> entries;
    entries.reserve(rows.size());
    for (const Row& r : rows) entries.emplace_back(r.id, r.score);
    return RankedList(index, std::move(entries));
}

// All generation-0 papers ranked by one index.
inline RankedList rank_generation0(const CitationGraph& graph,
                                   const std::string& index,
                                   const MaybeSlice& slice = {}) {
    return rank_papers(graph, graph.generation_ids(0), index, slice);
}

// Candidate set for an award: same venue, publication year inside the
// window. Ascending id.
inline std::vector<Id> award_candidates(const CitationGraph& graph,
                                        const AwardRecord& award,
                                        const YearRange& window) {
    std::vector<Id> out;
    for (const auto& [id, node] : graph.nodes()) {
        if (!node.venue || !venue_equal(*node.venue, award.venue)) continue;
        if (window.contains(node.year)) out.push_back(id);
    }
    return out;
}

struct AwardRankDetail {
    AwardRecord award;
    std::string index;
    int rank = 0;
    int candidate_count = 0;
    double percentile = 0.0;
};

struct BucketReport {
    BucketScheme scheme;
    std::vector<std::string> indices;
    std::map<std::string, std::vector<int>> counts;  // index -> per-bucket
    std::vector<AwardRankDetail> details;
    std::vector<std::pair<AwardRecord, std::string>> excluded;
    int evaluated_count = 0;
};

// The award protocol: for each award, rank the candidate set per index with
// citations sliced at the award year (inclusive), record the awardee's
// percentile, tally buckets. Awards whose paper is missing or outside its
// window are reported and excluded from every denominator.
inline BucketReport evaluate_awards(
    const CitationGraph& graph, const std::vector<AwardRecord>& awards,
    const std::vector<std::string>& indices,
    const BucketScheme& scheme = BucketScheme::paper_default(),
    std::optional<std::pair<int, int>> explicit_offsets = {}) {
    BucketReport report;
    report.scheme = scheme;
    report.indices = indices;
    for (const std::string& index : indices)
        report.counts[index] = std::vector<int>(scheme.upper_edges.size(), 0);

    for (const AwardRecord& award : awards) {
        YearRange window =
            candidate_window(award.venue, award.award_year, explicit_offsets);
        if (!graph.contains(award.paper)) {
            report.excluded.emplace_back(award, "awardee not in graph");
            continue;
        }
        std::vector<Id> candidates = award_candidates(graph, award, window);
        if (std::find(candidates.begin(), candidates.end(), award.paper) ==
            candidates.end()) {
            report.excluded.emplace_back(award,
                                         "awardee outside candidate window");
            continue;
        }
        TimeSlice slice{award.award_year};
        for (const std::string& index : indices) {
            RankedList ranked = rank_papers(graph, candidates, index, slice);
            int rank = ranked.rank_of(award.paper);
            double percentile =
                static_cast<double>(rank) / static_cast<double>(candidates.size());
            report.details.push_back(
                {award, index, rank, static_cast<int>(candidates.size()),
                 percentile});
            int bucket = scheme.bucket_for(percentile);
            if (bucket >= 0) ++report.counts[index][bucket];
        }
        ++report.evaluated_count;
    }
    return report;
}

struct TrendReport {
    std::vector<std::string> indices;
    int horizon = 0;
    // counts[index][t-1]: awardees ranked in the top 5% of their candidate
    // list when citations are sliced at publication_year + t.
    std::map<std::string, std::vector<int>> counts;
};

// Performance over time: re-rank each award's candidates at cutoffs
// publication_year + 1 .. publication_year + horizon and count top-5%
// appearances per index per offset.
inline TrendReport trend_over_time(
    const CitationGraph& graph, const std::vector<AwardRecord>& awards,
    const std::vector<std::string>& indices, int horizon,
    std::optional<std::pair<int, int>> explicit_offsets = {}) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    TrendReport report;
    report.indices = indices;
    report.horizon = horizon;
    for (const std::string& index : indices)
        report.counts[index] = std::vector<int>(horizon, 0);

    for (const AwardRecord& award : awards) {
        YearRange window =
            candidate_window(award.venue, award.award_year, explicit_offsets);
        if (!graph.contains(award.paper)) continue;
        std::vector<Id> candidates = award_candidates(graph, award, window);
        if (std::find(candidates.begin(), candidates.end(), award.paper) ==
            candidates.end())
            continue;
        int published = graph.node(award.paper).year;
        for (int t = 1; t <= horizon; ++t) {
            TimeSlice slice{published + t};
            for (const std::string& index : indices) {
                RankedList ranked = rank_papers(graph, candidates, index, slice);
                double percentile = static_cast<double>(ranked.rank_of(award.paper)) /
                                    static_cast<double>(candidates.size());
                if (percentile <= 0.05) ++report.counts[index][t - 1];
            }
        }
    }
    return report;
}

}  // namespace citemetrics
