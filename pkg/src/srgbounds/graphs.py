"""Concrete graph constructions, regularity checks, and exact maximum clique.

Graphs are stored as dense bitset adjacency rows (one Python int per vertex),
which keeps the branch-and-bound clique search fast at desk scale (n <= 512).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .cab import cap_min_over_b
from .srg import EdgeRegularParams, SrgParams

MAX_CLIQUE_VERTEX_LIMIT = 512


class GraphSizeError(ValueError):
    """Graph exceeds the desk-scale vertex limit for exact clique search."""


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.

    Treat instances as immutable once constructed.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            while rest:
                v = (rest & -rest).bit_length() - 1
                out.append((u, v))
                rest &= rest - 1
        return out

    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- constructions -----------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def paley(p: int) -> Graph:
    """Paley graph on a prime p = 1 mod 4: a ~ b iff a-b is a nonzero square
    mod p.  The congruence makes -1 a square, so adjacency is symmetric."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime (prime powers are unsupported)")
    if p % 4 != 1:
        raise ValueError(f"{p} != 1 mod 4: Paley adjacency would not be symmetric")
    squares = {(x * x) % p for x in range(1, p)}
    g = Graph(p)
    for a in range(p):
        for b in range(a + 1, p):
            if (a - b) % p in squares:
                g.add_edge(a, b)
    return g


# Fano plane as 7 point-triples (1-indexed); fixed fixture for the Heawood graph.
FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def heawood_graph() -> Graph:
    """Point-line incidence graph of the Fano plane: 14 vertices, cubic.
    Points are vertices 0..6, lines are 7..13."""
    g = Graph(14)
    for i, line in enumerate(FANO_LINES):
        for pt in line:
            g.add_edge(pt - 1, 7 + i)
    return g


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g; adjacent iff the edges share an endpoint."""
    edges = g.edges()
    if not edges:
        raise ValueError("line graph of an edgeless graph is undefined here")
    lg = Graph(len(edges))
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a in (c, d) or b in (c, d):
                lg.add_edge(i, j)
    return lg


def distance_graph(g: Graph, i: int) -> Graph:
    """Same vertex set; edge iff BFS distance in g is exactly i."""
    if i < 1:
        raise ValueError("distance must be >= 1")
    out = Graph(g.n)
    for src in range(g.n):
        dist = {src: 0}
        frontier = [src]
        d = 0
        while frontier and d < i:
            d += 1
            nxt = []
            for u in frontier:
                rest = g.adj[u]
                while rest:
                    w = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        for w in frontier:
            if src < w:
                out.add_edge(src, w)
    return out


def heawood_line_distance3() -> Graph:
    """The distance-3 graph of the line graph of the Heawood graph: the fixture
    edge-regular (21, 8, 3) graph that is not strongly regular."""
    return distance_graph(line_graph(heawood_graph()), 3)


# -- regularity checks -------------------------------------------------------


def is_edge_regular(g: Graph) -> Optional[EdgeRegularParams]:
    """Parameters (v, k, lam) if g is non-empty, regular, and the common
    neighbour count is constant over edges; None otherwise."""
    if g.n == 0 or g.edge_count() == 0:
        return None
    k = g.degree(0)
    if any(g.degree(u) != k for u in range(1, g.n)):
        return None
    lam = None
    for u in range(g.n):
        rest = g.adj[u] >> (u + 1) << (u + 1)
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            common = (g.adj[u] & g.adj[v]).bit_count()
            if lam is None:
                lam = common
            elif lam != common:
                return None
    return EdgeRegularParams(g.n, k, lam)


def is_strongly_regular(g: Graph) -> Optional[SrgParams]:
    """SrgParams if g is edge-regular, non-complete, and the common neighbour
    count over non-adjacent pairs is also constant; None otherwise."""
    er = is_edge_regular(g)
    if er is None or er.k == g.n - 1:
        return None
    mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            common = (g.adj[u] & g.adj[v]).bit_count()
            if mu is None:
                mu = common
            elif mu != common:
                return None
    return SrgParams(er.v, er.k, er.lam, mu if mu is not None else 0)


# -- maximum clique ----------------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; vertices returned in color order,
    so colors[i] upper-bounds any clique inside order[:i+1]."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v]
            avail &= ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: Graph) -> CliqueResult:
    """Exact maximum clique by branch-and-bound on bitsets with a greedy
    coloring upper bound.  Deterministic: vertices are explored in
    degree-descending order with index tie-break."""
    if g.n > MAX_CLIQUE_VERTEX_LIMIT:
        raise GraphSizeError(f"n={g.n} exceeds limit {MAX_CLIQUE_VERTEX_LIMIT}")
    if g.n == 0:
        return CliqueResult(0, ())

    # relabel by degree-descending, original index tie-break
    perm = sorted(range(g.n), key=lambda u: (-g.degree(u), u))
    pos = [0] * g.n
    for new, old in enumerate(perm):
        pos[old] = new
    adj = [0] * g.n
    for old_u in range(g.n):
        rest = g.adj[old_u]
        while rest:
            old_v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            adj[pos[old_u]] |= 1 << pos[old_v]

    best_size = 0
    best: tuple[int, ...] = ()
    clique: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best_size, best
        order, colors = _color_sort(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + colors[i] <= best_size:
                return
            v = order[i]
            clique.append(v)
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_cand)
            elif len(clique) > best_size:
                best_size = len(clique)
                best = tuple(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand((1 << g.n) - 1)
    witness = tuple(sorted(perm[v] for v in best))
    return CliqueResult(best_size, witness)


def max_clique_bruteforce(g: Graph) -> int:
    """Independent oracle: exhaustive subset growth; exponential, n <= ~20."""
    best = 0

    def grow(cand: list[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, u in enumerate(cand):
            rest = [w for w in cand[i + 1 :] if g.has_edge(u, w)]
            if size + 1 + len(rest) > best:
                grow(rest, size + 1)

    grow(list(range(g.n)), 0)
    return best


def check_thm42(g: Graph, p: EdgeRegularParams) -> bool:
    """For every clique size c in 2..omega(g), the clique adjacency polynomial
    must be nonnegative over all integer b at level y = c."""
    actual = is_edge_regular(g)
    if actual != p:
        raise ValueError(f"graph has parameters {actual}, expected {p}")
    omega = max_clique(g).size
    for c in range(2, omega + 1):
        _, val = cap_min_over_b(p.v, p.k, p.lam, c)
        if val < 0:
            return False
    return True
