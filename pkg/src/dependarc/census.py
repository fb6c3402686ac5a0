"""Small-graph populations for exhaustive sweeps and seeded sampling.

Non-isomorphic enumeration leans on networkx (its graph atlas covers every
graph on up to 7 vertices, and its isomorphism test deduplicates the
edge-augmentation used for edge-bounded families).
"""

from __future__ import annotations

import random
from typing import Iterator

import networkx as nx

from .graph import Graph, build_graph


def _from_nx(h: nx.Graph) -> Graph:
    mapping = {v: k for k, v in enumerate(sorted(h.nodes))}
    return build_graph(len(mapping), [(mapping[a], mapping[b]) for a, b in h.edges])


def all_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[Graph]:
    """Every graph up to isomorphism with the given vertex range (at most 7)."""
    if max_vertices > 7:
        raise ValueError("the atlas only covers graphs on up to 7 vertices")
    for h in nx.graph_atlas_g():
        if min_vertices <= h.number_of_nodes() <= max_vertices:
            yield _from_nx(h)


def connected_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[Graph]:
    for g in all_graphs(max_vertices, min_vertices):
        if g.is_connected():
            yield g


def connected_graphs_by_edges(max_edges: int) -> list[Graph]:
    """Every connected graph with 1..max_edges edges, up to isomorphism.

    Grown one edge at a time (a pendant edge or a chord), deduplicated per
    level with a Weisfeiler-Lehman hash bucket and an exact isomorphism test.
    """
    level = [nx.Graph([(0, 1)])]
    out = list(level)
    for _ in range(max_edges - 1):
        buckets: dict[str, list[nx.Graph]] = {}
        for h in level:
            nodes = sorted(h.nodes)
            new = len(nodes)
            grown = [(v, new) for v in nodes]
            grown += [(a, b) for i, a in enumerate(nodes) for b in nodes[i + 1:] if not h.has_edge(a, b)]
            for a, b in grown:
                k = h.copy()
                k.add_edge(a, b)
                key = nx.weisfeiler_lehman_graph_hash(k, iterations=3)
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(k, other) for other in bucket):
                    bucket.append(k)
        level = [h for key in sorted(buckets) for h in buckets[key]]
        out.extend(level)
    return [_from_nx(h) for h in out]


def random_connected_graph(n: int, rng: random.Random, p: float = 0.4) -> Graph:
    """A random spanning tree plus independent extra edges with probability p."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for a in range(n):
        for b in range(a + 1, n):
            if (a, b) not in edges and rng.random() < p:
                edges.add((a, b))
    return build_graph(n, sorted(edges))


def random_tree(n: int, rng: random.Random) -> Graph:
    return random_connected_graph(n, rng, p=0.0)


def random_triangle_free_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random edges in random order, skipping any that would close a triangle."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    edges = []
    for a, b in pairs:
        if rng.random() < p and not adj[a] & adj[b]:
            edges.append((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return build_graph(n, edges)
