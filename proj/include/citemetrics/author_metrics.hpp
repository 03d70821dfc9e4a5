#pragma once
// Author-level indices: h, h-frac, hp, hp-frac.
//
// h       : H over the citation counts of the author's papers.
// h_frac  : H over floor(citations / author_count) per paper.
// hp      : H over the papers' own h-indices.
// hp_frac : H over floor(paper_h / author_count) per paper.
//
// Every division floors before H is applied; the worked values (h_frac = 2,
// hp_frac = 1 on the reference author) hold only under elementwise floor.

#include "citemetrics/graph.hpp"
#include "citemetrics/paper_metrics.hpp"
#include "citemetrics/rank_analysis.hpp"
#include "citemetrics/types.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace citemetrics {

// One researcher and their paper sets: P_w (written), first-level citers
// (P_c^1) and second-level citers (P_c^2). A paper may appear in more than
// one set; each membership is recorded once per set.
struct AuthorProfile {
    Id author_id;
    std::string name;
    std::vector<Id> papers;
    std::vector<Id> first_level_citers;
    std::vector<Id> second_level_citers;
};

// Derives one profile per distinct author id appearing in the graph's
// node metadata. Citer sets are computed from the edge list.
inline std::vector<AuthorProfile> author_profiles(const CitationGraph& graph) {
    std::map<Id, AuthorProfile> by_author;
    for (const auto& [id, node] : graph.nodes()) {
        for (const Id& author : node.author_ids) {
            AuthorProfile& p = by_author[author];
            p.author_id = author;
            p.papers.push_back(id);
        }
    }
    for (auto& [author, profile] : by_author) {
        std::set<Id> first, second;
        for (const Id& paper : profile.papers)
            for (const Id& citer : graph.citer_ids(paper)) first.insert(citer);
        for (const Id& paper : first)
            for (const Id& citer : graph.citer_ids(paper)) second.insert(citer);
        profile.first_level_citers.assign(first.begin(), first.end());
        profile.second_level_citers.assign(second.begin(), second.end());
    }
    std::vector<AuthorProfile> out;
    out.reserve(by_author.size());
    for (auto& [author, profile] : by_author) out.push_back(std::move(profile));
    return out;
}

namespace detail {

inline const PaperNode& profile_paper(const AuthorProfile& profile,
                                      const CitationGraph& graph,
                                      const Id& paper) {
    if (!graph.contains(paper))
        throw lookup_error("author " + profile.author_id +
                           " lists paper missing from graph: " + paper);
    return graph.node(paper);
}

}  // namespace detail

inline int author_h(const AuthorProfile& profile, const CitationGraph& graph,
                    const MaybeSlice& slice = {}) {
    std::vector<int> counts;
    counts.reserve(profile.papers.size());
    for (const Id& paper : profile.papers) {
        detail::profile_paper(profile, graph, paper);
        counts.push_back(citation_count(graph, paper, slice));
    }
    return h_of_values(counts);
}

inline int author_h_frac(const AuthorProfile& profile,
                         const CitationGraph& graph,
                         const MaybeSlice& slice = {}) {
    std::vector<int> fracs;
    fracs.reserve(profile.papers.size());
    for (const Id& paper : profile.papers) {
        const PaperNode& node = detail::profile_paper(profile, graph, paper);
        fracs.push_back(citation_count(graph, paper, slice) / node.author_count);
    }
    return h_of_values(fracs);
}

inline int author_hp(const AuthorProfile& profile, const CitationGraph& graph,
                     const MaybeSlice& slice = {}) {
    std::vector<int> hs;
    hs.reserve(profile.papers.size());
    for (const Id& paper : profile.papers) {
        detail::profile_paper(profile, graph, paper);
        hs.push_back(paper_h_index(graph, paper, slice));
    }
    return h_of_values(hs);
}

inline int author_hp_frac(const AuthorProfile& profile,
                          const CitationGraph& graph,
                          const MaybeSlice& slice = {}) {
    std::vector<int> fracs;
    fracs.reserve(profile.papers.size());
    for (const Id& paper : profile.papers) {
        const PaperNode& node = detail::profile_paper(profile, graph, paper);
        fracs.push_back(paper_h_index(graph, paper, slice) / node.author_count);
    }
    return h_of_values(fracs);
}

inline const std::vector<std::string>& author_index_names() {
    static const std::vector<std::string> names{"h", "h_frac", "hp", "hp_frac"};
    return names;
}

// All four indices plus the tie-break and reporting aggregates.
// total_citations is the number of distinct first-level citers visible in
// the slice; avg_coauthors is the mean author_count over P_w (1 when the
// author has no papers, keeping the >= 1 floor).
struct AuthorIndexVector {
    Id author_id;
    std::map<std::string, int> scores;
    long long total_citations = 0;
    double avg_coauthors = 1.0;
    int publication_count = 0;
};

inline AuthorIndexVector author_index_vector(const AuthorProfile& profile,
                                             const CitationGraph& graph,
                                             const MaybeSlice& slice = {}) {
    AuthorIndexVector v;
    v.author_id = profile.author_id;
    v.scores["h"] = author_h(profile, graph, slice);
    v.scores["h_frac"] = author_h_frac(profile, graph, slice);
    v.scores["hp"] = author_hp(profile, graph, slice);
    v.scores["hp_frac"] = author_hp_frac(profile, graph, slice);
    v.publication_count = static_cast<int>(profile.papers.size());

    std::set<Id> citers;
    long long coauthor_sum = 0;
    for (const Id& paper : profile.papers) {
        const PaperNode& node = graph.node(paper);
        coauthor_sum += node.author_count;
        for (const Id& citer : graph.citer_ids(paper))
            if (visible_in(graph.node(citer), slice)) citers.insert(citer);
    }
    v.total_citations = static_cast<long long>(citers.size());
    if (!profile.papers.empty())
        v.avg_coauthors = static_cast<double>(coauthor_sum) /
                          static_cast<double>(profile.papers.size());
    return v;
}

// Descending by the chosen index; ties go to the author with more
// citations, remaining ties to the lexicographically smaller id.
inline RankedList rank_authors(const std::vector<AuthorIndexVector>& vectors,
                               const std::string& key) {
    if (vectors.empty())
        throw std::invalid_argument("rank_authors: no authors to rank");
    for (const AuthorIndexVector& v : vectors)
        if (!v.scores.count(key))
            throw lookup_error("unknown author index: " + key);

    std::vector<const AuthorIndexVector*> order;
    order.reserve(vectors.size());
    for (const AuthorIndexVector& v : vectors) order.push_back(&v);
    std::sort(order.begin(), order.end(),
              [&](const AuthorIndexVector* a, const AuthorIndexVector* b) {
                  int sa = a->scores.at(key), sb = b->scores.at(key);
                  if (sa != sb) return sa > sb;
                  if (a->total_citations != b->total_citations)
                      return a->total_citations > b->total_citations;
                  return a->author_id < b->author_id;
              });
    std::vector<std::pair<Id, double>> entries;
    entries.reserve(order.size());
    for (const AuthorIndexVector* v : order)
        entries.emplace_back(v->author_id, v->scores.at(key));
    return RankedList(key, std::move(entries));
}

// Per-author differences h - h_frac and hp - hp_frac. Both are >= 0:
// flooring never increases any element fed to H.
struct AuthorDiff {
    Id author_id;
    int diff1 = 0;  // h - h_frac
    int diff2 = 0;  // hp - hp_frac
};

inline std::vector<AuthorDiff> diff_metrics(
    const std::vector<AuthorIndexVector>& vectors) {
    std::vector<AuthorDiff> out;
    out.reserve(vectors.size());
    for (const AuthorIndexVector& v : vectors)
        out.push_back({v.author_id,
                       v.scores.at("h") - v.scores.at("h_frac"),
                       v.scores.at("hp") - v.scores.at("hp_frac")});
    return out;
}

}  // namespace citemetrics
