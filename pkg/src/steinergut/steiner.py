"""Exact Steiner distances by three independent routes.

The Steiner distance of a vertex set S is the least number of edges of a
connected subgraph containing S, equivalently min{|T| - 1 : S is a subset of
T and the subgraph induced by T is connected}.  Singletons get distance 0 and
a set meeting several components gets INF.

Three algorithms that share no code path:

* steiner_all_subsets: mark every connected induced subset with |T| - 1,
  then a superset-min zeta sweep gives the whole table at once.
* DreyfusWagner / steiner_single: terminal-subset DP with merge and
  tree-grow transitions, for one query set at a time.
* steiner_oracle: literal transcription of the definition, supersets by
  increasing size; test oracle only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .errors import EmptySet, IndexOutOfRange, OrderTooLarge
from .graph import Graph, _flood, induced_connected

INF = float("inf")

# 2^n table entries; beyond this the full table stops being a desk job.
DEFAULT_TABLE_CAP = 20


@dataclass(frozen=True)
class SteinerTable:
    """dist[mask] is the Steiner distance of the vertex set ``mask``.

    Index 0 (the empty set) is stored as 0 and has no meaning.
    """

    n: int
    dist: Tuple[float, ...]


def steiner_all_subsets(g: Graph, cap: int = DEFAULT_TABLE_CAP) -> SteinerTable:
    """Steiner distances of every nonempty vertex subset of ``g``."""
    n = g.n
    if n > cap:
        raise OrderTooLarge(f"full table wants n <= {cap}, got {n}")
    adj = g.adj
    size = 1 << n
    dist = [INF] * size
    dist[0] = 0
    for t in range(1, size):
        low = t & -t
        if _flood(adj, low, t) == t:
            dist[t] = t.bit_count() - 1
    for v in range(n):
        bit = 1 << v
        for t in range(size):
            if not t & bit:
                cand = dist[t | bit]
                if cand < dist[t]:
                    dist[t] = cand
    return SteinerTable(n, tuple(dist))


def _bfs_row(g: Graph, src: int) -> List[float]:
    """Distances from ``src`` to every vertex, INF where unreachable."""
    row: List[float] = [INF] * g.n
    row[src] = 0
    nbrs = g.neighbors
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in nbrs[v]:
                if d < row[w]:
                    row[w] = d
                    nxt.append(w)
        frontier = nxt
    return row


def _grow(g: Graph, row: List[float]) -> None:
    """Close ``row`` under row[w] <= row[v] + 1 along edges (bucket Dijkstra)."""
    n = g.n
    nbrs = g.neighbors
    buckets: List[List[int]] = [[] for _ in range(n)]
    for v, dv in enumerate(row):
        if dv < n:
            buckets[dv].append(v)
    for d in range(n - 1):
        nd = d + 1
        for v in buckets[d]:
            if row[v] != d:
                continue
            for w in nbrs[v]:
                if nd < row[w]:
                    row[w] = nd
                    buckets[nd].append(w)


class DreyfusWagner:
    """Single-query Steiner distances via the classic terminal-subset DP.

    dp rows are indexed by a terminal subset X and give, per vertex v, the
    least edge count of a tree containing X and v.  Rows are cached on the
    instance, so repeated queries against one graph share work; a fresh
    instance recomputes everything.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._rows: Dict[int, List[float]] = {}

    def distance(self, s: int) -> float:
        g = self.graph
        if s == 0:
            raise EmptySet("steiner distance needs a nonempty vertex set")
        if s & ~g.full_mask:
            raise IndexOutOfRange("vertex set outside 0..n-1")
        low = s & -s
        if s == low:
            return 0
        return self._row(s ^ low)[low.bit_length() - 1]

    def _row(self, x: int) -> List[float]:
        row = self._rows.get(x)
        if row is not None:
            return row
        g = self.graph
        if x & (x - 1) == 0:
            row = _bfs_row(g, x.bit_length() - 1)
        else:
            n = g.n
            row = [INF] * n
            low = x & -x
            sub = (x - 1) & x
            while sub:
                # each unordered split once: keep the half holding the low bit
                if sub & low:
                    ra = self._row(sub)
                    rb = self._row(x ^ sub)
                    for v in range(n):
                        t = ra[v] + rb[v]
                        if t < row[v]:
                            row[v] = t
                sub = (sub - 1) & x
            _grow(g, row)
        self._rows[x] = row
        return row


def steiner_single(g: Graph, s: int) -> float:
    """Steiner distance of the vertex set ``s`` by the terminal-subset DP."""
    return DreyfusWagner(g).distance(s)


@lru_cache(maxsize=4096)
def _submasks_by_size(mask: int) -> Tuple[int, ...]:
    subs = []
    sub = mask
    while True:
        subs.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    subs.sort(key=lambda x: (x.bit_count(), x))
    return tuple(subs)


def steiner_oracle(g: Graph, s: int) -> float:
    """Slow reference: try every superset of ``s`` in increasing size."""
    if s == 0:
        raise EmptySet("steiner distance needs a nonempty vertex set")
    if s & ~g.full_mask:
        raise IndexOutOfRange("vertex set outside 0..n-1")
    for extra in _submasks_by_size(g.full_mask ^ s):
        t = s | extra
        if induced_connected(g, t):
            return t.bit_count() - 1
    return INF


def pairwise_distances(g: Graph) -> Tuple[Tuple[float, ...], ...]:
    """All-pairs shortest path distances by BFS from every vertex."""
    return tuple(tuple(_bfs_row(g, v)) for v in range(g.n))
