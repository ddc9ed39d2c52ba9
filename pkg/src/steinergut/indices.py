"""Steiner-distance graph invariants.

For a connected graph G and 2 <= k <= n, summing over the k-element vertex
subsets S:

* steiner_gutman:          sum of (product of degrees over S) * d(S)
* steiner_wiener:          sum of d(S)                  (k = 1 allowed, gives 0)
* steiner_degree_distance: sum of (sum of degrees over S) * d(S)
* gutman: the classical k = 2 case, computed independently from the BFS
  distance matrix as a cross-check target.

All values are exact ints.  Subsets are enumerated in ascending mask order
and accumulated in that fixed order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import Disconnected, KOutOfRange
from .graph import Graph, is_connected, iter_bits
from .steiner import SteinerTable, pairwise_distances, steiner_all_subsets


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """All masks with k of the low n bits set, in ascending numeric order."""
    if k == 0 or k > n:
        return
    c = (1 << k) - 1
    top = 1 << n
    while c < top:
        yield c
        low = c & -c
        ripple = c + low
        c = ripple | (((c ^ ripple) >> 2) // low)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("invariant defined for connected graphs only")


def _require_k(g: Graph, k: int, lo: int = 2) -> None:
    if not lo <= k <= g.n:
        raise KOutOfRange(f"k must satisfy {lo} <= k <= {g.n}, got {k}")


def _table(g: Graph, table: Optional[SteinerTable]) -> SteinerTable:
    if table is None:
        return steiner_all_subsets(g)
    if table.n != g.n:
        raise KOutOfRange("precomputed table is for a different order")
    return table


def steiner_gutman(g: Graph, k: int, *, table: Optional[SteinerTable] = None) -> int:
    """Degree-product weighted Steiner k-distance sum."""
    _require_connected(g)
    _require_k(g, k)
    dist = _table(g, table).dist
    degs = g.degrees
    total = 0
    for mask in k_subset_masks(g.n, k):
        p = 1
        for v in iter_bits(mask):
            p *= degs[v]
        total += p * int(dist[mask])
    return total


def steiner_wiener(g: Graph, k: int, *, table: Optional[SteinerTable] = None) -> int:
    """Plain Steiner k-distance sum; k = 1 is allowed and gives 0."""
    _require_connected(g)
    _require_k(g, k, lo=1)
    if k == 1:
        return 0
    dist = _table(g, table).dist
    total = 0
    for mask in k_subset_masks(g.n, k):
        total += int(dist[mask])
    return total


def steiner_degree_distance(g: Graph, k: int, *, table: Optional[SteinerTable] = None) -> int:
    """Degree-sum weighted Steiner k-distance sum."""
    _require_connected(g)
    _require_k(g, k)
    dist = _table(g, table).dist
    degs = g.degrees
    total = 0
    for mask in k_subset_masks(g.n, k):
        s = 0
        for v in iter_bits(mask):
            s += degs[v]
        total += s * int(dist[mask])
    return total


def gutman(g: Graph) -> int:
    """Classical Gutman index from the BFS distance matrix (no Steiner table)."""
    _require_connected(g)
    if g.n < 2:
        raise KOutOfRange("the Gutman index needs at least 2 vertices")
    dm = pairwise_distances(g)
    degs = g.degrees
    total = 0
    for u in range(g.n):
        du = degs[u]
        row = dm[u]
        for v in range(u + 1, g.n):
            total += du * degs[v] * int(row[v])
    return total


@dataclass(frozen=True)
class IndexReport:
    graph_id: str
    k: int
    sgut: int
    sw: int
    sdd: int
    gut: Optional[int]  # only populated at k = 2


def index_report(g: Graph, k: int, graph_id: str = "", *, table: Optional[SteinerTable] = None) -> IndexReport:
    tb = _table(g, table)
    return IndexReport(
        graph_id=graph_id,
        k=k,
        sgut=steiner_gutman(g, k, table=tb),
        sw=steiner_wiener(g, k, table=tb),
        sdd=steiner_degree_distance(g, k, table=tb),
        gut=gutman(g) if k == 2 else None,
    )
