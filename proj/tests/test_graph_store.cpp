#include "citemetrics/graph.hpp"
#include "citemetrics/graph_io.hpp"
#include "citemetrics/synthetic.hpp"

#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace citemetrics;
using Catch::Matchers::ContainsSubstring;
using test_support::TempDir;

static PaperNode make_node(Id id, int year, int author_count = 1) {
    PaperNode n;
    n.id = std::move(id);
    n.title = "Paper " + n.id;
    n.year = year;
    n.author_count = author_count;
    return n;
}

TEST_CASE("empty file loads as empty graph") {
    std::istringstream in("");
    CitationGraph g = load_graph(in);
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("worked-example fixture loads with the documented shape") {
    CitationGraph g = load_graph(test_support::worked_example_path());
    CHECK(g.node_count() == 29);
    CHECK(g.edge_count() == 68);
    CHECK(g.generation_ids(0) ==
          std::vector<Id>{"A", "B", "C", "D", "E", "F", "G", "H"});
    CHECK(g.generation_ids(2).empty());
    CHECK(g.node("A").author_count == 2);
    CHECK(g.node("G").author_ids ==
          std::vector<Id>{"X", "coG1", "coG2"});
}

TEST_CASE("edge referencing an unknown id names the id and the line") {
    std::istringstream in(
        R"({"kind":"node","id":"A","year":2000,"generation":0})"
        "\n"
        R"({"kind":"edge","cited":"A","citing":"GHOST"})"
        "\n");
    REQUIRE_THROWS_MATCHES(load_graph(in), parse_error,
                           Catch::Matchers::MessageMatches(
                               ContainsSubstring("GHOST") &&
                               ContainsSubstring("line 2")));
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad_json("this is not json\n");
    REQUIRE_THROWS_MATCHES(load_graph(bad_json), parse_error,
                           Catch::Matchers::MessageMatches(
                               ContainsSubstring("line 1")));

    SECTION("missing year is rejected") {
        std::istringstream in(R"({"kind":"node","id":"A","generation":0})" "\n");
        REQUIRE_THROWS_MATCHES(load_graph(in), parse_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("year")));
    }
    SECTION("unknown record kind") {
        std::istringstream in(R"({"kind":"blob"})" "\n");
        REQUIRE_THROWS_AS(load_graph(in), parse_error);
    }
}

TEST_CASE("round trip is identity and output is canonical") {
    CitationGraph g = load_graph(test_support::worked_example_path());
    TempDir tmp;
    save_graph(g, tmp.file("copy.jsonl"));
    CitationGraph again = load_graph(tmp.file("copy.jsonl"));
    CHECK(again == g);

    // canonical ordering makes saves byte-stable, and the committed fixture
    // is already in canonical form
    CHECK(test_support::slurp(tmp.file("copy.jsonl")) ==
          test_support::slurp(test_support::worked_example_path()));
}

TEST_CASE("empty graph round-trips") {
    CitationGraph g = std::move(CitationGraph::Builder{}).build();
    TempDir tmp;
    save_graph(g, tmp.file("empty.jsonl"));
    CHECK(load_graph(tmp.file("empty.jsonl")) == g);
}

TEST_CASE("unicode titles survive the round trip") {
    CitationGraph::Builder b;
    PaperNode n = make_node("u1", 2001);
    n.title = "Größenordnung 引用 — naïve ☃";
    n.venue = "Wörkshop";
    b.add_node(n, 0);
    CitationGraph g = std::move(b).build();
    TempDir tmp;
    save_graph(g, tmp.file("unicode.jsonl"));
    CitationGraph again = load_graph(tmp.file("unicode.jsonl"));
    CHECK(again.node("u1").title == n.title);
    CHECK(again == g);
}

TEST_CASE("builder rejects invariant violations by name") {
    SECTION("self-citation") {
        CitationGraph::Builder b;
        b.add_node(make_node("A", 2000), 0);
        b.add_edge("A", "A");
        REQUIRE_THROWS_MATCHES(std::move(b).build(), validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("self-citation")));
    }
    SECTION("duplicate edge") {
        CitationGraph::Builder b;
        b.add_node(make_node("A", 2000), 0).add_node(make_node("B", 2001), 1);
        b.add_edge("A", "B").add_edge("A", "B");
        REQUIRE_THROWS_MATCHES(std::move(b).build(), validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("duplicate edge")));
    }
    SECTION("duplicate node id") {
        CitationGraph::Builder b;
        b.add_node(make_node("A", 2000), 0);
        REQUIRE_THROWS_MATCHES(b.add_node(make_node("A", 2001), 0),
                               validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("duplicate node id: A")));
    }
    SECTION("author_count below one") {
        CitationGraph::Builder b;
        b.add_node(make_node("A", 2000, 0), 0);
        REQUIRE_THROWS_MATCHES(std::move(b).build(), validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("author_count")));
    }
    SECTION("author_ids length mismatch") {
        CitationGraph::Builder b;
        PaperNode n = make_node("A", 2000, 3);
        n.author_ids = {"x"};
        b.add_node(n, 0);
        REQUIRE_THROWS_AS(std::move(b).build(), validation_error);
    }
    SECTION("year out of range") {
        CitationGraph::Builder b;
        b.add_node(make_node("A", 1776), 0);
        REQUIRE_THROWS_MATCHES(std::move(b).build(), validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("1776")));
    }
    SECTION("generation order violation") {
        CitationGraph::Builder b;
        b.add_node(make_node("seed", 2000), 0);
        b.add_node(make_node("citer", 2005), 1);
        b.add_edge("citer", "seed");  // generation-0 citing generation-1
        REQUIRE_THROWS_MATCHES(std::move(b).build(), validation_error,
                               Catch::Matchers::MessageMatches(
                                   ContainsSubstring("generation")));
    }
    SECTION("generation-2 citing generation-2 is allowed") {
        CitationGraph::Builder b;
        b.add_node(make_node("a", 2000), 2).add_node(make_node("b", 2001), 2);
        b.add_edge("a", "b");
        CHECK(std::move(b).build().edge_count() == 1);
    }
}

TEST_CASE("citing_papers respects the slice") {
    CitationGraph g = load_graph(test_support::worked_example_path());

    CHECK(citing_papers(g, "A").size() == 4);   // Table-5 citation count
    CHECK(citing_papers(g, "B").size() == 1);
    CHECK(citing_papers(g, "A", TimeSlice{2011}).empty());
    CHECK(citing_papers(g, "A", TimeSlice{2012}).size() == 4);
    REQUIRE_THROWS_AS(citing_papers(g, "nope"), lookup_error);

    SECTION("slice monotonicity on a synthetic graph") {
        CitationGraph s = generate_synthetic(7, 12, 1.0, 4);
        for (int y1 = 1995; y1 <= 2025; y1 += 5) {
            for (const auto& [id, node] : s.nodes()) {
                auto at_y1 = citing_papers(s, id, TimeSlice{y1});
                auto at_y2 = citing_papers(s, id, TimeSlice{y1 + 5});
                // every citer visible at y1 is visible at y1+5
                std::set<Id> later;
                for (const auto& n : at_y2) later.insert(n.id);
                for (const auto& n : at_y1) REQUIRE(later.count(n.id) == 1);
            }
        }
    }
}

TEST_CASE("synthetic generation is deterministic and valid") {
    CitationGraph a = generate_synthetic(1, 10, 1.0, 5);
    CitationGraph b = generate_synthetic(1, 10, 1.0, 5);
    CHECK(a == b);

    std::ostringstream sa, sb;
    save_graph(a, sa);
    save_graph(b, sb);
    CHECK(sa.str() == sb.str());

    CHECK(generate_synthetic(2, 10, 1.0, 5) != a);

    SECTION("single seed") {
        CitationGraph g = generate_synthetic(5, 1, 1.0, 3);
        CHECK(g.generation_ids(0).size() == 1);
    }
    SECTION("round-trips and validates") {
        TempDir tmp;
        CitationGraph g = generate_synthetic(3, 8, 1.2, 6);
        save_graph(g, tmp.file("synth.jsonl"));
        CHECK(load_graph(tmp.file("synth.jsonl")) == g);
    }
    SECTION("invalid parameters") {
        REQUIRE_THROWS_AS(generate_synthetic(1, 0, 1.0, 5), std::invalid_argument);
        REQUIRE_THROWS_AS(generate_synthetic(1, 5, 1.0, 0), std::invalid_argument);
    }
}
