"""Exact brute-force subgraph counting.

These are the ground-truth oracles the encoder is checked against, so
they favour exactness and independence over speed: induced counts come
from explicit vertex-subset enumeration, non-induced counts from an
injective-homomorphism search divided by the pattern's automorphism
count.  Attribute matching is exact equality throughout.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import (
    Graph,
    UnsupportedSizeError,
    _canonical_code,
    _isomorphic,
    _search_order,
    bits_of,
)

MAX_PATTERN_NODES = 8
MAX_HOST_NODES = 64
MAX_HISTOGRAM_PATTERN_NODES = 5
MAX_HISTOGRAM_HOST_NODES = 40


def _check_sizes(g: Graph, h: Graph) -> None:
    if h.node_count > MAX_PATTERN_NODES:
        raise UnsupportedSizeError(
            f"pattern has {h.node_count} nodes, limit is {MAX_PATTERN_NODES}"
        )
    if g.node_count > MAX_HOST_NODES:
        raise UnsupportedSizeError(
            f"host has {g.node_count} nodes, limit is {MAX_HOST_NODES}"
        )


def _induced_rows(g: Graph, nodes: tuple[int, ...]) -> tuple[int, ...]:
    rows = []
    for u in nodes:
        row = 0
        adj_u = g.adjacency[u]
        for j, v in enumerate(nodes):
            row |= ((adj_u >> v) & 1) << j
        rows.append(row)
    return tuple(rows)


def count_induced(g: Graph, h: Graph) -> int:
    """Number of vertex subsets of g whose induced subgraph is isomorphic to h."""
    _check_sizes(g, h)
    k = h.node_count
    if k > g.node_count:
        return 0
    if k == 0:
        return 1
    h_edges = h.edge_count
    h_degrees = sorted(row.bit_count() for row in h.adjacency)
    h_attrs = sorted(h.attributes)
    count = 0
    for subset in combinations(range(g.node_count), k):
        if sorted(g.attributes[v] for v in subset) != h_attrs:
            continue
        rows = _induced_rows(g, subset)
        if sum(r.bit_count() for r in rows) != 2 * h_edges:
            continue
        if sorted(r.bit_count() for r in rows) != h_degrees:
            continue
        attrs = tuple(g.attributes[v] for v in subset)
        if _isomorphic(rows, attrs, h.adjacency, h.attributes):
            count += 1
    return count


def _injective_homomorphisms(h: Graph, g: Graph) -> int:
    # Injective maps of h's nodes into g's preserving attributes and
    # mapping every h-edge onto a g-edge (g may have extra edges).
    k = h.node_count
    order = _search_order(h.adjacency)
    candidates = [
        [
            w
            for w in range(g.node_count)
            if g.attributes[w] == h.attributes[u]
            and g.adjacency[w].bit_count() >= h.adjacency[u].bit_count()
        ]
        for u in order
    ]
    mapping = [-1] * k
    total = 0

    def backtrack(i: int, used: int, placed: int) -> None:
        nonlocal total
        if i == k:
            total += 1
            return
        u = order[i]
        need = 0
        for x in bits_of(h.adjacency[u] & placed):
            need |= 1 << mapping[x]
        for w in candidates[i]:
            if (used >> w) & 1:
                continue
            if g.adjacency[w] & need != need:
                continue
            mapping[u] = w
            backtrack(i + 1, used | (1 << w), placed | (1 << u))
        mapping[u] = -1

    backtrack(0, 0, 0)
    return total


def automorphism_count(h: Graph) -> int:
    """Number of attribute- and adjacency-preserving self-bijections of h."""
    if h.node_count > MAX_PATTERN_NODES:
        raise UnsupportedSizeError(
            f"pattern has {h.node_count} nodes, limit is {MAX_PATTERN_NODES}"
        )
    k = h.node_count
    if k == 0:
        return 1
    order = _search_order(h.adjacency)
    candidates = [
        [
            w
            for w in range(k)
            if h.attributes[w] == h.attributes[u]
            and h.adjacency[w].bit_count() == h.adjacency[u].bit_count()
        ]
        for u in order
    ]
    mapping = [-1] * k
    total = 0

    def backtrack(i: int, used: int, placed: int) -> None:
        nonlocal total
        if i == k:
            total += 1
            return
        u = order[i]
        need = 0
        for x in bits_of(h.adjacency[u] & placed):
            need |= 1 << mapping[x]
        for w in candidates[i]:
            if (used >> w) & 1:
                continue
            if h.adjacency[w] & used != need:
                continue
            mapping[u] = w
            backtrack(i + 1, used | (1 << w), placed | (1 << u))
        mapping[u] = -1

    backtrack(0, 0, 0)
    return total


def count_noninduced(g: Graph, h: Graph) -> int:
    """Number of (vertex set, edge set) subgraphs of g isomorphic to h."""
    _check_sizes(g, h)
    if h.node_count > g.node_count:
        return 0
    if h.node_count == 0:
        return 1
    return _injective_homomorphisms(h, g) // automorphism_count(h)


def count_all_patterns(g: Graph, k: int) -> dict[bytes, int]:
    """Histogram of all k-node induced subgraph classes, keyed by canonical code."""
    if k < 1:
        raise ValueError("pattern size must be at least 1")
    if k > MAX_HISTOGRAM_PATTERN_NODES:
        raise UnsupportedSizeError(
            f"pattern size {k} exceeds limit {MAX_HISTOGRAM_PATTERN_NODES}"
        )
    if g.node_count > MAX_HISTOGRAM_HOST_NODES:
        raise UnsupportedSizeError(
            f"host has {g.node_count} nodes, limit is {MAX_HISTOGRAM_HOST_NODES}"
        )
    histogram: dict[bytes, int] = {}
    for subset in combinations(range(g.node_count), k):
        rows = _induced_rows(g, subset)
        attrs = tuple(g.attributes[v] for v in subset)
        code = _canonical_code(rows, attrs)
        histogram[code] = histogram.get(code, 0) + 1
    return histogram
