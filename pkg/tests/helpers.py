"""Shared fixtures-as-functions and brute-force oracles for the test suite.

The oracles deliberately avoid the library's own algorithms: path minima come
from exhaustive DFS over simple paths, so Dijkstra has something independent
to agree with.
"""
from __future__ import annotations

from skyway_delivery import Package, SkywayNetwork, build_network

N1_NODE_SPECS = [
    ("S", 0.0, 0.0, 0.0),
    ("A", 30.0, 40.0, 10.0),
    ("B", 100.0, 0.0, 5.0),
    ("C", 130.0, 40.0, 20.0),
]
N1_SEGMENT_SPECS = [("S", "A"), ("S", "B"), ("A", "B"), ("B", "C")]
N1_PACKAGES = (
    Package("p1", 2.0, "A"),
    Package("p2", 2.0, "B"),
    Package("p3", 2.0, "C"),
)

# Collinear points S=0, A=+1, B=-2, C=+4 with every pairwise segment.
N2_NODE_SPECS = [
    ("S", 0.0, 0.0, 0.0),
    ("A", 1.0, 0.0, 0.0),
    ("B", -2.0, 0.0, 0.0),
    ("C", 4.0, 0.0, 0.0),
]
N2_SEGMENT_SPECS = [
    ("S", "A"), ("S", "B"), ("S", "C"), ("A", "B"), ("A", "C"), ("B", "C"),
]
N2_PACKAGES = (
    Package("pA", 1.2, "A"),
    Package("pB", 0.8, "B"),
    Package("pC", 1.5, "C"),
)


def build_n1() -> SkywayNetwork:
    return build_network(N1_NODE_SPECS, N1_SEGMENT_SPECS)


def build_n2() -> SkywayNetwork:
    return build_network(N2_NODE_SPECS, N2_SEGMENT_SPECS)


def best_simple_paths(network: SkywayNetwork, source: str):
    """(length, lexicographically smallest sequence) per node, by brute force."""
    best: dict[str, tuple[float, tuple[str, ...]]] = {source: (0.0, (source,))}

    def walk(node: str, dist: float, seq: tuple[str, ...], seen: frozenset[str]):
        for neighbour, weight in network.adjacency[node]:
            if neighbour in seen:
                continue
            candidate = (dist + weight, seq + (neighbour,))
            known = best.get(neighbour)
            if known is None or candidate < known:
                best[neighbour] = candidate
            walk(neighbour, candidate[0], candidate[1], seen | {neighbour})

    walk(source, 0.0, (source,), frozenset({source}))
    return best


def simple_path_minima(network: SkywayNetwork, source: str) -> dict[str, float]:
    """Minimum simple-path length from source to every node, by brute force."""
    minima: dict[str, float] = {source: 0.0}

    def walk(node: str, dist: float, seen: frozenset[str]):
        for neighbour, weight in network.adjacency[node]:
            if neighbour in seen:
                continue
            total = dist + weight
            if neighbour not in minima or total < minima[neighbour]:
                minima[neighbour] = total
            walk(neighbour, total, seen | {neighbour})

    walk(source, 0.0, frozenset({source}))
    return minima
