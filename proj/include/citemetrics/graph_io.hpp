#pragma once
// JSON Lines graph format.
//
// One record per line:
//   {"kind":"node","id":...,"title":...,"year":...,"author_count":...,
//    "author_ids":[...],"venue":...,"generation":0|1|2}
//   {"kind":"edge","cited":...,"citing":...}
//
// Nodes must precede edges that reference them. save_graph writes the
// canonical order (nodes by id ascending, then edges by (cited, citing)
// ascending) so output is byte-stable and load(save(g)) == g.

#include "citemetrics/graph.hpp"
#include "citemetrics/types.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace citemetrics {

namespace detail {

inline nlohmann::json parse_line(const std::string& line, std::size_t lineno) {
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded())
        throw parse_error("invalid JSON record", lineno);
    if (!rec.is_object())
        throw parse_error("record is not a JSON object", lineno);
    return rec;
}

template <typename T>
T require_field(const nlohmann::json& rec, const char* key, std::size_t lineno) {
    auto it = rec.find(key);
    if (it == rec.end())
        throw parse_error(std::string("missing field \"") + key + "\"", lineno);
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw parse_error(std::string("field \"") + key + "\" has wrong type",
                          lineno);
    }
}

}  // namespace detail

inline CitationGraph load_graph(std::istream& in) {
    CitationGraph::Builder builder;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec = detail::parse_line(line, lineno);
        auto kind = detail::require_field<std::string>(rec, "kind", lineno);
        if (kind == "node") {
            PaperNode node;
            node.id = detail::require_field<std::string>(rec, "id", lineno);
            if (rec.contains("title"))
                node.title = detail::require_field<std::string>(rec, "title", lineno);
            // Papers with unknown year are rejected outright: every protocol
            // downstream slices by year.
            node.year = detail::require_field<int>(rec, "year", lineno);
            node.author_count =
                rec.contains("author_count")
                    ? detail::require_field<int>(rec, "author_count", lineno)
                    : 1;
            if (rec.contains("author_ids"))
                node.author_ids = detail::require_field<std::vector<Id>>(
                    rec, "author_ids", lineno);
            if (rec.contains("venue") && !rec["venue"].is_null())
                node.venue = detail::require_field<std::string>(rec, "venue", lineno);
            int generation = detail::require_field<int>(rec, "generation", lineno);
            try {
                builder.add_node(std::move(node), generation);
            } catch (const validation_error& e) {
                throw parse_error(e.what(), lineno);
            }
        } else if (kind == "edge") {
            Id cited = detail::require_field<std::string>(rec, "cited", lineno);
            Id citing = detail::require_field<std::string>(rec, "citing", lineno);
            // Nodes must precede the edges that reference them.
            if (!builder.has_node(cited))
                throw parse_error("edge references unknown id: " + cited, lineno);
            if (!builder.has_node(citing))
                throw parse_error("edge references unknown id: " + citing, lineno);
            builder.add_edge(std::move(cited), std::move(citing));
        } else {
            throw parse_error("unknown record kind \"" + kind + "\"", lineno);
        }
    }
    return std::move(builder).build();
}

inline CitationGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open graph file: " + path.string());
    return load_graph(in);
}

inline void save_graph(const CitationGraph& graph, std::ostream& out) {
    for (const auto& [id, node] : graph.nodes()) {
        nlohmann::json rec{{"kind", "node"},
                           {"id", node.id},
                           {"title", node.title},
                           {"year", node.year},
                           {"author_count", node.author_count},
                           {"author_ids", node.author_ids},
                           {"generation", graph.generation_of(id)}};
        if (node.venue) rec["venue"] = *node.venue;
        out << rec.dump() << '\n';
    }
    for (const auto& [cited, citing] : graph.edges()) {
        nlohmann::json rec{{"kind", "edge"}, {"cited", cited}, {"citing", citing}};
        out << rec.dump() << '\n';
    }
}

inline void save_graph(const CitationGraph& graph,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write graph file: " + path.string());
    save_graph(graph, out);
    out.flush();
    if (!out) throw error("write failed: " + path.string());
}

}  // namespace citemetrics
