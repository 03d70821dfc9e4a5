#pragma once
// Single-publication indicators computed over a paper's citation
// neighborhood: h, g, h2, a, m, r, w, ncites.
//
// All of them derive from the paper's CitationProfile — the multiset of
// citation counts of its citing papers — and all respect an optional
// TimeSlice: a citer and the citer's own citers are only visible when
// published at or before the cutoff year.

#include "citemetrics/graph.hpp"
#include "citemetrics/types.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace citemetrics {

// The shared h-index core H(.): the largest h such that at least h of the
// given values are >= h. Works on any arithmetic value type; order of the
// input does not matter.
template <typename T>
    requires std::integral<T> || std::floating_point<T>
int h_of_values(std::vector<T> values) {
    std::sort(values.begin(), values.end(), std::greater<T>());
    int h = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= static_cast<T>(i + 1))
            h = static_cast<int>(i + 1);
        else
            break;
    }
    return h;
}

// Citation counts of a paper's citing papers ("list of citation of
// citation"). One entry per visible citer; entries are >= 0.
struct CitationProfile {
    Id paper;
    std::vector<int> citing_counts;
};

inline CitationProfile citation_profile(const CitationGraph& graph,
                                        const Id& paper,
                                        const MaybeSlice& slice = {}) {
    CitationProfile profile{paper, {}};
    for (const Id& citer : graph.citer_ids(paper)) {
        if (!visible_in(graph.node(citer), slice)) continue;
        profile.citing_counts.push_back(citation_count(graph, citer, slice));
    }
    return profile;
}

// h-index of a paper: largest h such that at least h citing papers have at
// least h citations each.
inline int paper_h_index(const CitationGraph& graph, const Id& paper,
                         const MaybeSlice& slice = {}) {
    return h_of_values(citation_profile(graph, paper, slice).citing_counts);
}

namespace detail {

// Counts sorted descending; the first h entries form the h-core.
inline std::vector<int> sorted_desc(const CitationProfile& profile) {
    std::vector<int> counts = profile.citing_counts;
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    return counts;
}

inline std::vector<int> h_core(const CitationProfile& profile) {
    std::vector<int> counts = sorted_desc(profile);
    int h = h_of_values(counts);
    counts.resize(h);
    return counts;
}

}  // namespace detail

// Largest g <= n such that the g most-cited citers together have at least
// g^2 citations.
inline int g_index(const CitationProfile& profile) {
    std::vector<int> counts = detail::sorted_desc(profile);
    long long sum = 0;
    int g = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        sum += counts[i];
        long long rank = static_cast<long long>(i + 1);
        if (sum >= rank * rank) g = static_cast<int>(rank);
    }
    return g;
}

// Largest h such that at least h citers have at least h^2 citations.
inline int h2_index(const CitationProfile& profile) {
    std::vector<int> counts = detail::sorted_desc(profile);
    int h = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        long long rank = static_cast<long long>(i + 1);
        if (counts[i] >= rank * rank)
            h = static_cast<int>(rank);
        else
            break;
    }
    return h;
}

// Mean of the h-core counts; 0 when the h-core is empty.
inline double a_index(const CitationProfile& profile) {
    std::vector<int> core = detail::h_core(profile);
    if (core.empty()) return 0.0;
    long long sum = std::accumulate(core.begin(), core.end(), 0LL);
    return static_cast<double>(sum) / static_cast<double>(core.size());
}

// Median of the h-core counts; 0 when the h-core is empty.
inline double m_index(const CitationProfile& profile) {
    std::vector<int> core = detail::h_core(profile);
    if (core.empty()) return 0.0;
    std::size_t mid = core.size() / 2;
    if (core.size() % 2 == 1) return static_cast<double>(core[mid]);
    return (static_cast<double>(core[mid - 1]) + static_cast<double>(core[mid])) / 2.0;
}

// Square root of the sum of the h-core counts. The sum stays in integer
// arithmetic until the root.
inline double r_index(const CitationProfile& profile) {
    std::vector<int> core = detail::h_core(profile);
    long long sum = std::accumulate(core.begin(), core.end(), 0LL);
    return std::sqrt(static_cast<double>(sum));
}

// Largest w such that at least w citers have at least 10*w citations.
inline int w_index(const CitationProfile& profile) {
    std::vector<int> counts = detail::sorted_desc(profile);
    int w = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        long long rank = static_cast<long long>(i + 1);
        if (counts[i] >= 10 * rank)
            w = static_cast<int>(rank);
        else
            break;
    }
    return w;
}

// Number of visible citing papers.
inline int ncites(const CitationProfile& profile) {
    return static_cast<int>(profile.citing_counts.size());
}

// Canonical index names in column order.
inline const std::vector<std::string>& paper_index_names() {
    static const std::vector<std::string> names{"h",  "g", "h2", "a",
                                                "m",  "r", "w",  "ncites"};
    return names;
}

// All indicators of one paper, mutually consistent (same slice, same
// profile).
struct PaperIndexVector {
    Id paper;
    std::map<std::string, double> scores;
};

inline PaperIndexVector all_paper_indices(const CitationGraph& graph,
                                          const Id& paper,
                                          const MaybeSlice& slice = {}) {
    CitationProfile profile = citation_profile(graph, paper, slice);
    PaperIndexVector v{paper, {}};
    v.scores["h"] = h_of_values(profile.citing_counts);
    v.scores["g"] = g_index(profile);
    v.scores["h2"] = h2_index(profile);
    v.scores["a"] = a_index(profile);
    v.scores["m"] = m_index(profile);
    v.scores["r"] = r_index(profile);
    v.scores["w"] = w_index(profile);
    v.scores["ncites"] = ncites(profile);
    return v;
}

}  // namespace citemetrics
