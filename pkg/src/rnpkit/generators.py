"""Seeded graph families, named patterns, and exhaustive small-graph enumeration.

Random families are driven exclusively by the pinned SplitMix64 stream
(see ``rng``), so a (parameters, seed) pair yields the same graph on any
platform, forever.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graphs import Graph, UnsupportedSizeError, canonical_code, component_mask
from .rng import SplitMix64

MAX_ENUMERATION_NODES = 6


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Each unordered pair becomes an edge independently with probability p.

    Pairs are visited in lexicographic order, one uniform draw per pair.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


_PAIRING_MAX_ATTEMPTS = 100_000


def random_regular_perturbed(n: int, d: int, deletions: int, seed: int) -> Graph:
    """Pairing-model d-regular graph with ``deletions`` random edges removed.

    The pairing model is resampled wholesale until it yields a simple
    graph, then ``deletions`` distinct edges are deleted uniformly.
    """
    if d < 0 or deletions < 0:
        raise ValueError("degree and deletions must be nonnegative")
    if d >= n and not (n == 0 and d == 0):
        raise ValueError("degree must be smaller than the node count")
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    if deletions > n * d // 2:
        raise ValueError("cannot delete more edges than the regular graph has")
    rng = SplitMix64(seed)
    pairing = rng.split(0)
    deleting = rng.split(1)
    edges: list[tuple[int, int]] = []
    for _ in range(_PAIRING_MAX_ATTEMPTS):
        stubs = [v for v in range(n) for _ in range(d)]
        pairing.shuffle(stubs)
        seen: set[tuple[int, int]] = set()
        simple = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                simple = False
                break
            e = (min(u, v), max(u, v))
            if e in seen:
                simple = False
                break
            seen.add(e)
        if simple:
            edges = sorted(seen)
            break
    else:
        raise RuntimeError(
            f"pairing model failed to produce a simple {d}-regular graph on "
            f"{n} nodes after {_PAIRING_MAX_ATTEMPTS} attempts"
        )
    for _ in range(deletions):
        edges.pop(deleting.below(len(edges)))
    return Graph.from_edges(n, edges)


def primes_below(x: int) -> list[int]:
    """Ascending primes strictly below x (sieve of Eratosthenes)."""
    if x < 2:
        raise ValueError("x must be at least 2")
    sieve = bytearray([1]) * x
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(x**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(x) if sieve[i]]


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    i = 2
    while i * i <= x:
        if x % i == 0:
            return False
        i += 1
    return True


def prime_partite(primes: "set[int] | list[int] | tuple[int, ...]", n: int) -> Graph:
    """Complete multipartite graph with prime-sized parts plus isolated filler.

    Parts of sizes ``primes`` (ascending) occupy the first nodes; the rest
    of the n nodes are isolated.  Its k-clique count is the product of the
    part sizes, so distinct prime sets give distinct clique counts.
    """
    parts = sorted(primes)
    if len(parts) != len(set(parts)):
        raise ValueError("part sizes must be distinct")
    if not parts:
        raise ValueError("at least one part is required")
    for p in parts:
        if not _is_prime(p):
            raise ValueError(f"part size {p} is not prime")
    if sum(parts) > n:
        raise ValueError(f"part sizes sum to {sum(parts)}, exceeding n = {n}")
    boundaries = []
    start = 0
    for p in parts:
        boundaries.append((start, start + p))
        start += p
    edges = []
    for i, (a0, a1) in enumerate(boundaries):
        for b0, b1 in boundaries[i + 1 :]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph.from_edges(n, edges)


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 nodes")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])


def complete(k: int) -> Graph:
    if k < 1:
        raise ValueError("a complete graph needs at least 1 node")
    return Graph.from_edges(k, list(combinations(range(k), 2)))


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("a path needs at least 1 node")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star(k: int) -> Graph:
    """Star with k leaves: node 0 is the center, k + 1 nodes in total."""
    if k < 1:
        raise ValueError("a star needs at least 1 leaf")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def figure2_pair() -> tuple[Graph, Graph]:
    """A 6-cycle and two disjoint triangles: 1-WL-equivalent, unequal triangle counts."""
    return cycle(6), two_triangles()


def pattern(name: str, size: int | None = None):
    """Named pattern dispatcher used by the command-line front end."""
    sized = {"cycle": cycle, "complete": complete, "path": path, "star": star}
    if name in sized:
        if size is None:
            raise ValueError(f"pattern '{name}' requires a size")
        return sized[name](size)
    if name == "figure2_pair":
        if size is not None:
            raise ValueError("pattern 'figure2_pair' takes no size")
        return figure2_pair()
    raise ValueError(f"unknown pattern '{name}'")


@lru_cache(maxsize=None)
def enumerate_connected_graphs(k: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected k-node graphs."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > MAX_ENUMERATION_NODES:
        raise UnsupportedSizeError(
            f"enumeration supports at most {MAX_ENUMERATION_NODES} nodes, got {k}"
        )
    pairs = list(combinations(range(k), 2))
    full = (1 << k) - 1
    seen: dict[bytes, Graph] = {}
    for bitmask in range(1 << len(pairs)):
        rows = [0] * k
        for i, (u, v) in enumerate(pairs):
            if (bitmask >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        if k > 1 and component_mask(tuple(rows), full, 0) != full:
            continue
        g = Graph(k, tuple(rows), (0,) * k)
        seen.setdefault(canonical_code(g), g)
    return tuple(seen.values())
