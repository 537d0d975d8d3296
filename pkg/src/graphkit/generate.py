"""Seeded random graphs without parallel edges."""

from __future__ import annotations

import math
import random

from .errors import InputError
from .kernel import AdjListGraph


def random_pairs(n: int, m: int, seed: int) -> list[tuple[int, int]]:
    """``m`` distinct ordered pairs ``(u, v)``, ``u != v``, drawn uniformly."""
    total = n * (n - 1)
    if n < 0 or m < 0 or m > total:
        raise InputError(f"cannot draw {m} distinct edges on {n} nodes (at most {max(total, 0)})")
    rng = random.Random(seed)
    out = []
    for k in rng.sample(range(total), m):
        u, r = divmod(k, n - 1)
        out.append((u, r + (r >= u)))
    return out


def generate_random(n: int, m: int, seed: int) -> AdjListGraph:
    """Directed graph with ``n`` nodes and ``m`` distinct non-loop edges."""
    return AdjListGraph(n, random_pairs(n, m, seed))


def random_dag(n: int, m: int, seed: int) -> AdjListGraph:
    """Acyclic graph: ``m`` distinct pairs forward along a random node ranking."""
    total = n * (n - 1) // 2
    if n < 0 or m < 0 or m > total:
        raise InputError(f"cannot draw {m} acyclic edges on {n} nodes (at most {max(total, 0)})")
    rng = random.Random(seed)
    rank = list(range(n))
    rng.shuffle(rank)
    pairs = []
    for k in rng.sample(range(total), m):
        # k-th pair u < v in the order (0,1), (0,2), (1,2), (0,3), ...
        v = (1 + math.isqrt(1 + 8 * k)) // 2
        u = k - v * (v - 1) // 2
        pairs.append((rank[u], rank[v]))
    return AdjListGraph(n, pairs)


def random_weights(m: int, seed: int, low: int = 1, high: int = 100) -> list[int]:
    rng = random.Random(seed)
    return [rng.randint(low, high) for _ in range(m)]
