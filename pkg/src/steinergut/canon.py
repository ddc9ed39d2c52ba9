"""Canonical labeling for isomorphism dedup.

The canonical form of a graph is the vertex order whose upper-triangle
adjacency bitstring, read column by column with the bits of each column
packed most-significant-first, is lexicographically smallest.  A
branch-and-bound search keeps every tied prefix alive level by level, so
the final frontier is exactly the set of optimal orderings: applied to an
already canonical graph those are its automorphisms.
"""

from __future__ import annotations

from typing import List, Tuple

from .graph import Graph


def canonical_key_and_perms(
    adj: Tuple[int, ...]
) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Return the canonical column key and all orderings that achieve it.

    Each ordering is a tuple seq with seq[i] = the original vertex placed at
    canonical position i.  The key has one integer per column 1..n-1.
    """
    n = len(adj)
    if n == 1:
        return (), ((0,),)
    frontier: List[Tuple[Tuple[int, ...], int]] = [((u,), 1 << u) for u in range(n)]
    key: List[int] = []
    for _ in range(1, n):
        best = -1
        next_frontier: List[Tuple[Tuple[int, ...], int]] = []
        for seq, used in frontier:
            for v in range(n):
                bit = 1 << v
                if used & bit:
                    continue
                av = adj[v]
                bits = 0
                for u in seq:
                    bits = (bits << 1) | (av >> u & 1)
                if best < 0 or bits < best:
                    best = bits
                    next_frontier = [(seq + (v,), used | bit)]
                elif bits == best:
                    next_frontier.append((seq + (v,), used | bit))
        key.append(best)
        frontier = next_frontier
    return tuple(key), tuple(seq for seq, _ in frontier)


def canonical_key(adj: Tuple[int, ...]) -> Tuple[int, ...]:
    return canonical_key_and_perms(adj)[0]


def relabel_rows(adj: Tuple[int, ...], seq: Tuple[int, ...]) -> Tuple[int, ...]:
    """Adjacency rows after placing original vertex seq[i] at position i."""
    n = len(adj)
    out = [0] * n
    for i, u in enumerate(seq):
        row = adj[u]
        for j, v in enumerate(seq):
            if row >> v & 1:
                out[i] |= 1 << j
    return tuple(out)


def canonical_graph(g: Graph) -> Graph:
    """Relabel g into its canonical form."""
    _, perms = canonical_key_and_perms(g.adj)
    return Graph(g.n, relabel_rows(g.adj, perms[0]), g.m)
