#pragma once
// Citation graph data model.
//
// An edge (cited, citing) means "cited is cited by citing". Adjacency is
// indexed in that direction because every metric walks citations forward.
// Graphs are immutable once built; construction goes through the Builder,
// which validates every invariant and reports the offending node or edge.

#include "citemetrics/types.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace citemetrics {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

// One publication. author_ids may be empty when authorship is unknown;
// author_count is still at least 1 so fractional allocation stays defined.
struct PaperNode {
    Id id;
    std::string title;
    int year = 0;
    int author_count = 1;
    std::vector<Id> author_ids;
    std::optional<std::string> venue;

    bool operator==(const PaperNode&) const = default;
};

using Edge = std::pair<Id, Id>;  // (cited, citing)

class CitationGraph {
  public:
    class Builder;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains(const Id& id) const { return nodes_.count(id) != 0; }

    const PaperNode& node(const Id& id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw lookup_error("unknown paper id: " + id);
        return it->second;
    }

    int generation_of(const Id& id) const {
        auto it = generation_.find(id);
        if (it == generation_.end()) throw lookup_error("unknown paper id: " + id);
        return it->second;
    }

    // Nodes keyed by id; iteration order is the canonical (ascending) order.
    const std::map<Id, PaperNode>& nodes() const { return nodes_; }

    // Edges sorted ascending by (cited, citing).
    const std::vector<Edge>& edges() const { return edges_; }

    // Ids of papers citing `id`, ascending. Empty for papers nobody cites.
    const std::vector<Id>& citer_ids(const Id& id) const {
        node(id);  // existence check
        auto it = citers_.find(id);
        if (it == citers_.end()) return kNoCiters;
        return it->second;
    }

    std::vector<Id> generation_ids(int generation) const {
        std::vector<Id> out;
        for (const auto& [id, gen] : generation_)
            if (gen == generation) out.push_back(id);
        return out;  // map iteration keeps ids ascending
    }

    bool operator==(const CitationGraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_ &&
               generation_ == other.generation_;
    }

  private:
    static const std::vector<Id> kNoCiters;

    std::map<Id, PaperNode> nodes_;
    std::map<Id, int> generation_;
    std::vector<Edge> edges_;
    std::unordered_map<Id, std::vector<Id>> citers_;
};

inline const std::vector<Id> CitationGraph::kNoCiters{};

class CitationGraph::Builder {
  public:
    Builder& add_node(PaperNode node, int generation) {
        if (nodes_.count(node.id))
            throw validation_error("duplicate node id: " + node.id);
        generation_[node.id] = generation;
        nodes_.emplace(node.id, std::move(node));
        return *this;
    }

    Builder& add_edge(Id cited, Id citing) {
        edges_.emplace_back(std::move(cited), std::move(citing));
        return *this;
    }

    bool has_node(const Id& id) const { return nodes_.count(id) != 0; }
    bool has_edge(const Id& cited, const Id& citing) const {
        return std::find(edges_.begin(), edges_.end(),
                         Edge{cited, citing}) != edges_.end();
    }

    // Validates all invariants and freezes the graph. Throws
    // validation_error naming the offending node or edge.
    CitationGraph build() && {
        CitationGraph g;
        for (const auto& [id, node] : nodes_) {
            validate_node(node, generation_.at(id));
            g.generation_[id] = generation_.at(id);
        }
        g.nodes_ = std::move(nodes_);

        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& [cited, citing] = edges_[i];
            if (i > 0 && edges_[i] == edges_[i - 1])
                throw validation_error("duplicate edge: (" + cited + ", " +
                                       citing + ")");
            if (cited == citing)
                throw validation_error("self-citation edge: (" + cited + ", " +
                                       citing + ")");
            if (!g.nodes_.count(cited))
                throw validation_error("edge references unknown id: " + cited);
            if (!g.nodes_.count(citing))
                throw validation_error("edge references unknown id: " + citing);
            int gen_cited = g.generation_.at(cited);
            int gen_citing = g.generation_.at(citing);
            if (gen_cited <= 1 && gen_citing < gen_cited)
                throw validation_error(
                    "generation order violated by edge: (" + cited + ", " +
                    citing + "): citing generation " +
                    std::to_string(gen_citing) + " < cited generation " +
                    std::to_string(gen_cited));
            g.citers_[cited].push_back(citing);
        }
        g.edges_ = std::move(edges_);
        for (auto& [id, citers] : g.citers_) std::sort(citers.begin(), citers.end());
        return g;
    }

  private:
    static void validate_node(const PaperNode& node, int generation) {
        if (node.author_count < 1)
            throw validation_error("node " + node.id + ": author_count " +
                                   std::to_string(node.author_count) +
                                   " < 1");
        if (!node.author_ids.empty() &&
            node.author_ids.size() != static_cast<std::size_t>(node.author_count))
            throw validation_error(
                "node " + node.id + ": author_count " +
                std::to_string(node.author_count) + " != " +
                std::to_string(node.author_ids.size()) + " author_ids");
        if (node.year < kMinYear || node.year > kMaxYear)
            throw validation_error("node " + node.id + ": year " +
                                   std::to_string(node.year) +
                                   " outside [1900, 2100]");
        if (generation < 0 || generation > 2)
            throw validation_error("node " + node.id + ": generation " +
                                   std::to_string(generation) +
                                   " not in {0, 1, 2}");
    }

    std::map<Id, PaperNode> nodes_;
    std::map<Id, int> generation_;
    std::vector<Edge> edges_;
};

inline bool visible_in(const PaperNode& node, const MaybeSlice& slice) {
    return !slice || node.year <= slice->cutoff_year;
}

// All papers citing `paper`, ascending by id. With a slice, only citing
// papers published at or before the cutoff year.
inline std::vector<PaperNode> citing_papers(const CitationGraph& graph,
                                            const Id& paper,
                                            const MaybeSlice& slice = {}) {
    std::vector<PaperNode> out;
    for (const Id& citer : graph.citer_ids(paper)) {
        const PaperNode& node = graph.node(citer);
        if (visible_in(node, slice)) out.push_back(node);
    }
    return out;
}

// Number of visible citers of `paper`.
inline int citation_count(const CitationGraph& graph, const Id& paper,
                          const MaybeSlice& slice = {}) {
    int n = 0;
    for (const Id& citer : graph.citer_ids(paper))
        if (visible_in(graph.node(citer), slice)) ++n;
    return n;
}

}  // namespace citemetrics
