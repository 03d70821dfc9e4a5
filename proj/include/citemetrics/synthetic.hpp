#pragma once
// Deterministic synthetic citation corpus.
//
// Three generations: n_gen0 seed papers split across two venues, 3x as many
// first-generation citers, 6x as many second-generation citers. Citation
// targets follow preferential attachment: the chance of picking a paper is
// proportional to (in-degree + 1)^attach_exponent. All randomness comes
// from a local splitmix64 stream, so equal arguments give equal graphs on
// every platform and run.

#include "citemetrics/graph.hpp"
#include "citemetrics/types.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace citemetrics {

namespace detail {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [0, 1).
    double unit() { return (next() >> 11) * 0x1.0p-53; }
};

// Weighted pick without replacement: chosen entries get weight 0.
inline std::size_t weighted_pick(SplitMix64& rng, std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = rng.unit() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        last_positive = i;
        acc += weights[i];
        if (r < acc) return i;
    }
    return last_positive;  // numeric edge: r landed on the total
}

inline std::string zero_padded(const char* prefix, int n) {
    std::string digits = std::to_string(n);
    std::string out(prefix);
    for (std::size_t i = digits.size(); i < 6; ++i) out += '0';
    return out + digits;
}

}  // namespace detail

// Pure function of its arguments; output always satisfies every
// CitationGraph invariant and survives a save/load round trip.
inline CitationGraph generate_synthetic(std::uint64_t seed, int n_gen0,
                                        double attach_exponent,
                                        int max_authors) {
    if (n_gen0 < 1)
        throw std::invalid_argument("generate_synthetic: n_gen0 must be >= 1");
    if (max_authors < 1)
        throw std::invalid_argument("generate_synthetic: max_authors must be >= 1");

    detail::SplitMix64 rng(seed);
    CitationGraph::Builder builder;

    int author_pool = std::max(2 * n_gen0, max_authors);
    auto sample_authors = [&](PaperNode& node) {
        node.author_count =
            1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_authors)));
        std::vector<int> pool(author_pool);
        for (int i = 0; i < author_pool; ++i) pool[i] = i;
        for (int i = 0; i < node.author_count; ++i) {
            std::size_t j =
                i + static_cast<std::size_t>(rng.below(pool.size() - i));
            std::swap(pool[i], pool[j]);
            node.author_ids.push_back(detail::zero_padded("a", pool[i]));
        }
    };

    // Seeds: the conference papers everything else cites.
    std::vector<Id> gen0_ids;
    std::vector<int> gen0_year;
    for (int i = 0; i < n_gen0; ++i) {
        PaperNode node;
        node.id = detail::zero_padded("p", i);
        node.title = "Synthetic paper " + std::to_string(i);
        node.year = 1995 + static_cast<int>(rng.below(16));
        node.venue = rng.below(2) == 0 ? "VLDB" : "SIGMOD";
        sample_authors(node);
        gen0_ids.push_back(node.id);
        gen0_year.push_back(node.year);
        builder.add_node(std::move(node), 0);
    }

    auto attach_weight = [&](int indegree) {
        return std::pow(static_cast<double>(indegree + 1), attach_exponent);
    };

    // First generation: each node cites 1..3 distinct seeds.
    int n_gen1 = 3 * n_gen0;
    std::vector<int> gen0_indeg(n_gen0, 0);
    std::vector<Id> gen1_ids;
    std::vector<int> gen1_year;
    int next_id = n_gen0;
    for (int i = 0; i < n_gen1; ++i) {
        int fanout = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(std::min(3, n_gen0))));
        std::vector<double> weights(n_gen0);
        for (int t = 0; t < n_gen0; ++t) weights[t] = attach_weight(gen0_indeg[t]);
        std::vector<std::size_t> targets;
        int latest_cited_year = 0;
        for (int k = 0; k < fanout; ++k) {
            std::size_t t = detail::weighted_pick(rng, weights);
            weights[t] = 0.0;
            targets.push_back(t);
            latest_cited_year = std::max(latest_cited_year, gen0_year[t]);
        }
        PaperNode node;
        node.id = detail::zero_padded("p", next_id++);
        node.title = "Synthetic paper " + std::to_string(next_id - 1);
        node.year = std::min(kMaxYear,
                             latest_cited_year + 1 + static_cast<int>(rng.below(5)));
        sample_authors(node);
        gen1_ids.push_back(node.id);
        gen1_year.push_back(node.year);
        for (std::size_t t : targets) {
            ++gen0_indeg[t];
            builder.add_edge(gen0_ids[t], node.id);
        }
        builder.add_node(std::move(node), 1);
    }

    // Second generation: each node cites 1..2 distinct gen-1 papers.
    int n_gen2 = 6 * n_gen0;
    std::vector<int> gen1_indeg(n_gen1, 0);
    for (int i = 0; i < n_gen2; ++i) {
        int fanout = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(std::min(2, n_gen1))));
        std::vector<double> weights(n_gen1);
        for (int t = 0; t < n_gen1; ++t) weights[t] = attach_weight(gen1_indeg[t]);
        std::vector<std::size_t> targets;
        int latest_cited_year = 0;
        for (int k = 0; k < fanout; ++k) {
            std::size_t t = detail::weighted_pick(rng, weights);
            weights[t] = 0.0;
            targets.push_back(t);
            latest_cited_year = std::max(latest_cited_year, gen1_year[t]);
        }
        PaperNode node;
        node.id = detail::zero_padded("p", next_id++);
        node.title = "Synthetic paper " + std::to_string(next_id - 1);
        node.year = std::min(kMaxYear,
                             latest_cited_year + 1 + static_cast<int>(rng.below(5)));
        sample_authors(node);
        for (std::size_t t : targets) {
            ++gen1_indeg[t];
            builder.add_edge(gen1_ids[t], node.id);
        }
        builder.add_node(std::move(node), 2);
    }

    return std::move(builder).build();
}

}  // namespace citemetrics
