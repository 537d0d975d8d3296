"""Direct one-shot implementations used as references for the loop kernels."""

from __future__ import annotations

import heapq
import math
from collections.abc import Callable
from typing import Any

from .errors import InputError


def textbook_dijkstra(graph: Any, weight: Callable[[Any], Any], source: Any) -> dict:
    """Classic single-loop Dijkstra with a lazy-deletion binary heap.

    ``weight(e)`` gives the length of edge ``e``.
    """
    dist = {v: math.inf for v in graph.nodes()}
    dist[source] = 0
    heap = [(0, 0, source)]
    done = set()
    tick = 1
    while heap:
        d, _, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        for e in graph.out_edges(u):
            w = weight(e)
            if w < 0:
                raise InputError(f"negative edge length {w!r}")
            v = graph.target(e)
            if d + w < dist[v]:
                dist[v] = d + w
                heapq.heappush(heap, (dist[v], tick, v))
                tick += 1
    return dist
