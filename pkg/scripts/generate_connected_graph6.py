#!/usr/bin/env python3
"""
Write connected graphs on n vertices as a graph6 file, one graph per line.
With --unique, keeps one graph per isomorphism class, giving a smaller
universe that read_graph6_stream can feed to the campaigns.

Run from the repository root:
    python scripts/generate_connected_graph6.py 6 --unique -o datasets/connected6.g6
"""

import argparse
import os
import sys

import networkx as nx
from tqdm import tqdm

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.data.enumerators import candidate_count, enumerate_connected_graphs
from src.data.graph6 import emit_graph6


def unique_up_to_isomorphism(graphs, total):
    """Bucket by Weisfeiler-Lehman hash, then confirm with an exact isomorphism test"""
    buckets = {}
    for g in tqdm(graphs, total=total, desc="Reducing", unit="graph"):
        nx_graph = g.to_networkx()
        key = (g.num_edges, nx.weisfeiler_lehman_graph_hash(nx_graph))
        seen = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nx_graph, other) for _, other in seen):
            continue
        seen.append((g, nx_graph))
    return [g for bucket in buckets.values() for g, _ in bucket]


def main():
    parser = argparse.ArgumentParser(description="Generate connected graphs in graph6 format.")
    parser.add_argument("n", type=int, help="Number of vertices (1-7)")
    parser.add_argument("--unique", action="store_true", help="One graph per isomorphism class")
    parser.add_argument("-o", "--output", help="Output file (default: stdout)")
    args = parser.parse_args()

    graphs = enumerate_connected_graphs(args.n)
    if args.unique:
        graphs = unique_up_to_isomorphism(graphs, candidate_count(args.n))
        graphs.sort(key=emit_graph6)

    out = open(args.output, 'w') if args.output else sys.stdout
    count = 0
    try:
        for g in graphs:
            out.write(emit_graph6(g) + "\n")
            count += 1
    finally:
        if args.output:
            out.close()
    print(f"Wrote {count} graphs on {args.n} vertices", file=sys.stderr)


if __name__ == "__main__":
    main()
