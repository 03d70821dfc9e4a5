#!/usr/bin/env python3
"""Regenerates the worked-example graph fixture and the API cache that
replays its ingest. Output is committed; run only when the fixture design
changes."""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))

# Generation-0 papers: (id, author_ids). All published 2010.
RED = [
    ("A", ["X", "coA"]),
    ("B", ["X"]),
    ("C", ["X"]),
    ("D", ["X", "coD"]),
    ("E", ["X", "coE"]),
    ("F", ["X"]),
    ("G", ["X", "coG1", "coG2"]),
    ("H", ["X", "coH"]),
]

# Direct citers per generation-0 paper, published 2012.
BLUE = {
    "A": ["A1", "A2", "A3", "A4"],
    "B": ["B1"],
    "C": ["C1", "C2", "C3", "C4"],
    "D": ["D1", "D2"],
    "E": ["E1", "E2", "E3"],
    "F": ["F1", "F2"],
    "G": ["G1", "G2"],
    "H": ["H1", "H2", "H3"],
}

# Citation count each citer must end up with ("list of citation of
# citation"). Those citations come from other generation-1 papers.
CITER_COUNTS = {
    "A1": 4, "A2": 3, "A3": 5, "A4": 2,
    "B1": 0,
    "C1": 4, "C2": 3, "C3": 2, "C4": 4,
    "D1": 0, "D2": 4,
    "E1": 0, "E2": 2, "E3": 3,
    "F1": 1, "F2": 0,
    "G1": 2, "G2": 3,
    "H1": 1, "H2": 2, "H3": 2,
}


def blue_ids():
    return sorted(CITER_COUNTS)


def citers_of_blue(target):
    """First k blue ids (ascending) other than the target itself."""
    k = CITER_COUNTS[target]
    return [b for b in blue_ids() if b != target][:k]


def dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def write_graph_fixture():
    lines = []
    nodes = []
    for pid, authors in RED:
        nodes.append({
            "kind": "node", "id": pid, "title": f"Paper {pid}", "year": 2010,
            "author_count": len(authors), "author_ids": authors,
            "generation": 0,
        })
    for pid in blue_ids():
        nodes.append({
            "kind": "node", "id": pid, "title": f"Paper {pid}", "year": 2012,
            "author_count": 1, "author_ids": [], "generation": 1,
        })
    edges = []
    for red, citers in BLUE.items():
        for citer in citers:
            edges.append((red, citer))
    for target in blue_ids():
        for citer in citers_of_blue(target):
            edges.append((target, citer))
    for node in sorted(nodes, key=lambda n: n["id"]):
        lines.append(dump(node))
    for cited, citing in sorted(edges):
        lines.append(dump({"kind": "edge", "cited": cited, "citing": citing}))
    path = os.path.join(HERE, "worked_example.jsonl")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path}: {len(nodes)} nodes, {len(edges)} edges")


def fnv1a64(s):
    h = 0xCBF29CE484222325
    for byte in s.encode("utf-8"):
        h ^= byte
        h = (h * 0x100000001B3) % (1 << 64)
    return h


def cache_file(key):
    return f"{fnv1a64(key):016x}.json"


def paper_payload(pid, year, author_ids):
    return {
        "paperId": pid,
        "title": f"Paper {pid}",
        "year": year,
        "authors": [{"authorId": a, "name": f"Author {a}"} for a in author_ids],
    }


def write_api_cache():
    cache_dir = os.path.join(HERE, "api_cache")
    os.makedirs(cache_dir, exist_ok=True)
    for f in os.listdir(cache_dir):
        os.remove(os.path.join(cache_dir, f))

    entries = {}
    red_authors = dict(RED)
    for pid, authors in RED:
        payload = paper_payload(pid, 2010, authors)
        entries[f"search|2010|Paper {pid}"] = {"data": [payload]}
        entries[f"paper|{pid}"] = payload
        entries[f"citations|{pid}"] = {
            "data": [{"citingPaper": paper_payload(c, 2012, [])}
                     for c in BLUE[pid]]
        }
    for target in blue_ids():
        entries[f"citations|{target}"] = {
            "data": [{"citingPaper": paper_payload(c, 2012, [])}
                     for c in citers_of_blue(target)]
        }

    for key, payload in entries.items():
        with open(os.path.join(cache_dir, cache_file(key)), "w") as f:
            f.write(dump({"key": key, "payload": payload}) + "\n")
    print(f"wrote {cache_dir}: {len(entries)} entries")


if __name__ == "__main__":
    write_graph_fixture()
    write_api_cache()
