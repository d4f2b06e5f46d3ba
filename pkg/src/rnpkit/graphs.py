"""Attributed simple undirected graphs and exact small-graph machinery.

Adjacency is stored as one integer bitmask per node, which keeps
neighbourhood expansion, induced subgraphs and isomorphism backtracking
fast at the desk scale this package targets (hosts up to 64 nodes,
patterns up to 8).  Graph values are immutable and hashable; every
function in this module is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

INFINITY = math.inf

CANONICAL_MAX_NODES = 8


class ParseError(ValueError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnsupportedSizeError(ValueError):
    """Input exceeds the size limit of an exact small-graph routine."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def ball_mask(adjacency: tuple[int, ...], within: int, v: int, radius: int) -> int:
    """Closed ball of ``radius`` around ``v`` inside the node set ``within``."""
    ball = 1 << v
    frontier = ball
    for _ in range(radius):
        grown = 0
        for u in bits_of(frontier):
            grown |= adjacency[u]
        frontier = grown & within & ~ball
        if not frontier:
            break
        ball |= frontier
    return ball


def component_mask(adjacency: tuple[int, ...], within: int, v: int) -> int:
    """Connected component of ``v`` inside the node set ``within``."""
    return ball_mask(adjacency, within, v, max(0, within.bit_count() - 1))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with one nonnegative integer attribute per node."""

    node_count: int
    adjacency: tuple[int, ...]
    attributes: tuple[int, ...]

    def __post_init__(self):
        n = self.node_count
        if n < 0:
            raise ValueError("node_count must be nonnegative")
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one row per node")
        if len(self.attributes) != n:
            raise ValueError("attributes must have one entry per node")
        full = (1 << n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references nodes out of range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at node {v}")
            for u in bits_of(row):
                if not (self.adjacency[u] >> v) & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")
        for v, x in enumerate(self.attributes):
            if x < 0:
                raise ValueError(f"negative attribute at node {v}")

    @staticmethod
    def from_edges(
        node_count: int,
        edges: Iterable[tuple[int, int]] = (),
        attributes: Iterable[int] | None = None,
    ) -> "Graph":
        rows = [0] * node_count
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        attrs = tuple(attributes) if attributes is not None else (0,) * node_count
        return Graph(node_count, tuple(rows), attrs)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits_of(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.node_count)
            for v in bits_of(self.adjacency[u])
            if u < v
        ]


def permuted(g: Graph, perm: Iterable[int]) -> Graph:
    """Relabel ``g`` so that old node ``v`` becomes ``perm[v]``."""
    p = list(perm)
    if sorted(p) != list(range(g.node_count)):
        raise ValueError("perm must be a permutation of the node indices")
    rows = [0] * g.node_count
    attrs = [0] * g.node_count
    for v in range(g.node_count):
        attrs[p[v]] = g.attributes[v]
        for u in bits_of(g.adjacency[v]):
            rows[p[v]] |= 1 << p[u]
    return Graph(g.node_count, tuple(rows), tuple(attrs))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.node_count
    rows = list(a.adjacency) + [row << shift for row in b.adjacency]
    return Graph(a.node_count + b.node_count, tuple(rows), a.attributes + b.attributes)


def _check_node(g: Graph, v: int) -> None:
    if not (0 <= v < g.node_count):
        raise ValueError(f"node {v} out of range for graph with {g.node_count} nodes")


def _members_mask(g: Graph, members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        _check_node(g, v)
        mask |= 1 << v
    return mask


def neighborhood(g: Graph, v: int, radius: int) -> frozenset[int]:
    """All nodes at shortest-path distance <= radius from v, including v."""
    _check_node(g, v)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    full = (1 << g.node_count) - 1
    return frozenset(bits_of(ball_mask(g.adjacency, full, v, radius)))


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``members``, plus the old-index -> new-index map.

    New indices follow ascending old index, so the result is deterministic.
    """
    selected = sorted(set(members))
    for v in selected:
        _check_node(g, v)
    index_map = {u: i for i, u in enumerate(selected)}
    rows = []
    for u in selected:
        row = 0
        for w in bits_of(g.adjacency[u]):
            if w in index_map:
                row |= 1 << index_map[w]
        rows.append(row)
    attrs = tuple(g.attributes[u] for u in selected)
    return Graph(len(selected), tuple(rows), attrs), index_map


def all_pairs_shortest_paths(g: Graph) -> tuple[tuple[int | float, ...], ...]:
    """Exact unweighted BFS distances; INFINITY across components."""
    n = g.node_count
    full = (1 << n) - 1
    rows = []
    for v in range(n):
        dist: list[int | float] = [INFINITY] * n
        dist[v] = 0
        seen = 1 << v
        frontier = seen
        level = 0
        while frontier:
            level += 1
            grown = 0
            for u in bits_of(frontier):
                grown |= g.adjacency[u]
            frontier = grown & full & ~seen
            seen |= frontier
            for u in bits_of(frontier):
                dist[u] = level
        rows.append(tuple(dist))
    return tuple(rows)


def is_connected(g: Graph) -> bool:
    if g.node_count <= 1:
        return True
    full = (1 << g.node_count) - 1
    return component_mask(g.adjacency, full, 0) == full


def _search_order(adj: tuple[int, ...]) -> list[int]:
    # Order nodes so each one touches as many already-ordered nodes as
    # possible; this makes the isomorphism backtracking prune early.
    n = len(adj)
    remaining = set(range(n))
    order: list[int] = []
    placed = 0
    while remaining:
        best = max(
            remaining,
            key=lambda u: ((adj[u] & placed).bit_count(), adj[u].bit_count(), -u),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def _isomorphic(
    adj_a: tuple[int, ...],
    attrs_a: tuple[int, ...],
    adj_b: tuple[int, ...],
    attrs_b: tuple[int, ...],
) -> bool:
    n = len(adj_a)
    if len(adj_b) != n:
        return False
    sig_a = sorted((attrs_a[v], adj_a[v].bit_count()) for v in range(n))
    sig_b = sorted((attrs_b[v], adj_b[v].bit_count()) for v in range(n))
    if sig_a != sig_b:
        return False
    order = _search_order(adj_a)
    candidates = [
        [
            w
            for w in range(n)
            if attrs_b[w] == attrs_a[u] and adj_b[w].bit_count() == adj_a[u].bit_count()
        ]
        for u in order
    ]
    mapping = [-1] * n

    def backtrack(i: int, used: int, placed_a: int) -> bool:
        if i == n:
            return True
        u = order[i]
        need = 0
        for x in bits_of(adj_a[u] & placed_a):
            need |= 1 << mapping[x]
        for w in candidates[i]:
            if (used >> w) & 1:
                continue
            if adj_b[w] & used != need:
                continue
            mapping[u] = w
            if backtrack(i + 1, used | (1 << w), placed_a | (1 << u)):
                return True
        mapping[u] = -1
        return False

    return backtrack(0, 0, 0)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Attribute-preserving isomorphism test (exact backtracking; small graphs)."""
    return _isomorphic(g.adjacency, g.attributes, h.adjacency, h.attributes)


@lru_cache(maxsize=1 << 16)
def _canonical_code(adj: tuple[int, ...], attrs: tuple[int, ...]) -> bytes:
    n = len(adj)
    # Canonical form: among all placements whose attribute sequence is the
    # sorted one, the lexicographically smallest sequence of "new node's
    # adjacency to already-placed nodes" columns.  Equal codes iff isomorphic.
    sorted_attrs = tuple(sorted(attrs))
    best: list[int] | None = None
    cols: list[int] = []
    placed: list[int] = []
    used = [False] * n

    def dfs() -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        target = sorted_attrs[p]
        options = []
        for u in range(n):
            if used[u] or attrs[u] != target:
                continue
            col = 0
            for x in placed:
                col = (col << 1) | ((adj[u] >> x) & 1)
            options.append((col, u))
        options.sort()
        for col, u in options:
            if best is not None and cols + [col] > best[: p + 1]:
                break
            used[u] = True
            placed.append(u)
            cols.append(col)
            dfs()
            cols.pop()
            placed.pop()
            used[u] = False

    dfs()
    assert best is not None or n == 0
    bit_part = "".join(
        format(col, f"0{i}b") for i, col in enumerate(best or []) if i
    )
    attr_part = ",".join(str(a) for a in sorted_attrs)
    return f"{n}|{attr_part}|{bit_part}".encode("ascii")


def canonical_code(g: Graph) -> bytes:
    """Deterministic byte string equal for two graphs iff they are isomorphic."""
    if g.node_count > CANONICAL_MAX_NODES:
        raise UnsupportedSizeError(
            f"canonical_code supports at most {CANONICAL_MAX_NODES} nodes,"
            f" got {g.node_count}"
        )
    return _canonical_code(g.adjacency, g.attributes)


def parse_graph(text: str) -> Graph:
    """Parse the plain-text graph format (see ``serialize_graph``).

    Format: header line ``<n> <m>``, then m edge lines ``<u> <v>`` with
    u < v, then optional ``attr <u> <x>`` lines.  ``#`` starts a comment.
    """
    node_count = -1
    edge_target = 0
    edges_seen = 0
    rows: list[int] = []
    attrs: list[int] = []
    assigned: set[int] = set()
    header_done = False
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not header_done:
            if len(tokens) != 2:
                raise ParseError(lineno, "header must be '<node count> <edge count>'")
            try:
                node_count, edge_target = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(lineno, "header values must be integers") from None
            if node_count < 0 or edge_target < 0:
                raise ParseError(lineno, "header values must be nonnegative")
            rows = [0] * node_count
            attrs = [0] * node_count
            header_done = True
            continue
        if edges_seen < edge_target:
            if len(tokens) != 2:
                raise ParseError(lineno, "edge line must be '<u> <v>'")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be integers") from None
            if u == v:
                raise ParseError(lineno, f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ParseError(lineno, f"edge ({u}, {v}) out of range")
            if u > v:
                raise ParseError(lineno, f"edge endpoints must satisfy u < v, got {u} {v}")
            if (rows[u] >> v) & 1:
                raise ParseError(lineno, f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            edges_seen += 1
            continue
        if tokens[0] != "attr" or len(tokens) != 3:
            raise ParseError(lineno, "expected 'attr <node> <value>'")
        try:
            u, x = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(lineno, "attribute line values must be integers") from None
        if not 0 <= u < node_count:
            raise ParseError(lineno, f"attribute node {u} out of range")
        if x < 0:
            raise ParseError(lineno, f"attribute for node {u} must be nonnegative")
        if u in assigned:
            raise ParseError(lineno, f"attribute for node {u} assigned twice")
        assigned.add(u)
        attrs[u] = x
    if not header_done:
        raise ParseError(last_line + 1, "missing header line")
    if edges_seen != edge_target:
        raise ParseError(
            last_line + 1, f"expected {edge_target} edge lines, found {edges_seen}"
        )
    return Graph(node_count, tuple(rows), tuple(attrs))


def serialize_graph(g: Graph) -> str:
    """Canonical text form; ``parse_graph`` round-trips it exactly."""
    lines = [f"{g.node_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    lines.extend(
        f"attr {v} {x}" for v, x in enumerate(g.attributes) if x != 0
    )
    return "\n".join(lines) + "\n"
