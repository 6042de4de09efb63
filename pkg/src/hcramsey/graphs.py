"""Finite graphs with deletion-semantics connectivity and certified verdicts.

Connectivity here follows the deletion convention: a graph is
kappa-connected when removing any fewer than kappa vertices leaves a
connected graph, and graphs on 0 or 1 vertices (including the empty
graph) count as connected.  Under this convention a complete graph is
kappa-connected for every kappa.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

CONNECTED = "connected"
SEPARATED = "separated"

ORACLE_SIZE_LIMIT = 12


class InputFormatError(ValueError):
    """Malformed text input; message carries a line/field diagnostic."""


def pair_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered pairs over {0..n-1} in lexicographic order."""
    return list(itertools.combinations(range(n), 2))


def pair_index(n: int, u: int, v: int) -> int:
    """Position of the pair (u, v), u < v, in lexicographic pair order."""
    if not 0 <= u < v < n:
        raise ValueError(f"bad pair ({u}, {v}) for n={n}")
    return u * (n - 1) - u * (u - 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        object.__setattr__(self, "edges", frozenset(map(tuple, self.edges)))
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n, edges) -> "Graph":
        return cls(n, frozenset(pair_key(u, v) for u, v in edges))

    @classmethod
    def complete(cls, n) -> "Graph":
        return cls(n, frozenset(all_pairs(n)))

    @classmethod
    def path(cls, n) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u, v) -> bool:
        return pair_key(u, v) in self.edges

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class ConnectivityVerdict:
    """Menger-style certificate: disjoint paths for a distinguished pair,
    or a separating vertex set."""

    kind: str
    pair: tuple | None = None
    paths: tuple = ()
    separator: frozenset = frozenset()


@dataclass(frozen=True)
class EdgeColoring:
    """Total color assignment on unordered pairs of {0..n-1} into k colors.

    Colors are stored as a flat tuple in lexicographic pair order.
    """

    n: int
    k: int
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        npairs = self.n * (self.n - 1) // 2
        if len(self.colors) != npairs:
            raise ValueError(
                f"expected {npairs} colors for n={self.n}, got {len(self.colors)}"
            )
        for c in self.colors:
            if not 0 <= c < self.k:
                raise ValueError(f"color {c} out of range for k={self.k}")

    @classmethod
    def from_map(cls, n, k, mapping) -> "EdgeColoring":
        colors = [mapping[p] for p in all_pairs(n)]
        return cls(n, k, tuple(colors))

    @classmethod
    def constant(cls, n, k, color=0) -> "EdgeColoring":
        return cls(n, k, tuple([color] * (n * (n - 1) // 2)))

    def color_of(self, u, v) -> int:
        u, v = pair_key(u, v)
        return self.colors[pair_index(self.n, u, v)]

    def pairs(self):
        return all_pairs(self.n)

    def color_class(self, xi) -> Graph:
        """The graph on all n vertices whose edges carry color xi."""
        return Graph(
            self.n,
            frozenset(p for p, c in zip(all_pairs(self.n), self.colors) if c == xi),
        )


class InducedSubgraph(NamedTuple):
    graph: Graph
    labels: tuple  # labels[i] = original vertex of local vertex i


# ---------------------------------------------------------------------------
# Connectivity


def is_connected(g: Graph) -> bool:
    """True iff g has at most one connected component (n <= 1 is connected)."""
    if g.n <= 1:
        return True
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _max_disjoint_paths(g: Graph, s: int, t: int):
    """Max internally vertex-disjoint s-t paths for a nonadjacent pair.

    Unit-capacity flow on the vertex-split digraph; returns
    (value, paths, separator) where paths are vertex tuples and the
    separator is a minimum vertex cut disjoint from {s, t}.
    """
    n = g.n
    big = n + 2

    def vin(v):
        return 2 * v

    def vout(v):
        return 2 * v + 1

    cap: dict = {}
    adj: dict = {}

    def add_arc(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for v in range(n):
        if v not in (s, t):
            add_arc(vin(v), vout(v), 1)
    for u, v in g.edges:
        add_arc(vout(u), vin(v), big)
        add_arc(vout(v), vin(u), big)

    src, snk = vout(s), vin(t)
    adj.setdefault(src, set())
    adj.setdefault(snk, set())

    value = 0
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            a = queue.popleft()
            for b in sorted(adj[a]):
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if snk not in parent:
            break
        b = snk
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        value += 1

    # Minimum vertex cut from residual reachability.
    seen = {src}
    queue = deque([src])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen and cap.get((a, b), 0) > 0:
                seen.add(b)
                queue.append(b)
    separator = frozenset(
        v for v in range(n) if v not in (s, t) and vin(v) in seen and vout(v) not in seen
    )

    # Net flow per arc; vertex capacities make its support a disjoint
    # union of s-t paths (plus possible cycles the walk never enters).
    flow = {}
    for v in range(n):
        if v not in (s, t):
            f = 1 - cap[(vin(v), vout(v))]
            if f > 0:
                flow[(vin(v), vout(v))] = f
    for u, v in g.edges:
        for a, b in ((vout(u), vin(v)), (vout(v), vin(u))):
            f = big - cap[(a, b)]
            if f > 0:
                flow[(a, b)] = f

    paths = []
    for _ in range(value):
        path = [s]
        cur = src
        while True:
            nxt = min(b for (a, b) in flow if a == cur and flow[(a, b)] > 0)
            flow[(cur, nxt)] -= 1
            w = nxt // 2
            path.append(w)
            if nxt == snk:
                break
            flow[(nxt, vout(w))] -= 1
            cur = vout(w)
        paths.append(tuple(path))

    return value, tuple(paths), separator


@lru_cache(maxsize=None)
def _connectivity_certificate(g: Graph):
    """(kappa, pair, paths, separator) for an incomplete graph on >= 2
    vertices; the minimizing nonadjacent pair is the lexicographically
    least one."""
    best = None
    for s, t in all_pairs(g.n):
        if g.has_edge(s, t):
            continue
        value, paths, separator = _max_disjoint_paths(g, s, t)
        if best is None or value < best[0]:
            best = (value, (s, t), paths, separator)
    assert best is not None
    return best


def vertex_connectivity(g: Graph) -> int:
    """Classical kappa(g): min over nonadjacent pairs of the max number of
    internally disjoint paths; n-1 for complete graphs, 0 if disconnected."""
    if g.n == 0:
        raise ValueError("empty graph")
    if g.is_complete():
        return g.n - 1
    return _connectivity_certificate(g)[0]


def is_kappa_connected(g: Graph, kappa: int):
    """Deletion-semantics kappa-connectivity with a certificate.

    Returns (answer, verdict).  Complete graphs (and n <= 1) are
    kappa-connected for every kappa; otherwise the answer is
    vertex_connectivity(g) >= kappa.
    """
    if g.n <= 1 or g.is_complete():
        return True, ConnectivityVerdict(CONNECTED)
    value, pair, paths, separator = _connectivity_certificate(g)
    if value >= kappa:
        return True, ConnectivityVerdict(CONNECTED, pair=pair, paths=paths)
    return False, ConnectivityVerdict(SEPARATED, pair=pair, separator=separator)


def is_highly_connected(g: Graph) -> bool:
    """kappa-connected for kappa = |V|; finite graphs: equivalent to complete."""
    return is_kappa_connected(g, g.n)[0]


# ---------------------------------------------------------------------------
# Brute-force oracle (bitmask internals for speed)


def _adj_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _mask_connected(adj: list[int], remaining: int) -> bool:
    if remaining == 0:
        return True
    start = remaining & -remaining
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= adj[bit.bit_length() - 1]
        nxt &= remaining & ~seen
        seen |= nxt
        frontier = nxt
    return seen == remaining


def brute_force_kappa(g: Graph) -> int:
    """Largest kappa such that deleting every vertex set of size < kappa
    leaves a connected graph, by literal enumeration of deletion sets.
    Returns n for complete graphs (deletion semantics)."""
    if g.n > ORACLE_SIZE_LIMIT:
        raise ValueError("oracle size limit")
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            removed = 0
            for v in subset:
                removed |= 1 << v
            if not _mask_connected(adj, full & ~removed):
                return size
    return g.n


def is_forest(g: Graph) -> bool:
    """True iff g is acyclic: |E| = n - #components."""
    adj = _adj_masks(g)
    full = (1 << g.n) - 1
    components = 0
    left = full
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= adj[bit.bit_length() - 1]
            nxt &= full & ~seen
            seen |= nxt
            frontier = nxt
        left &= ~seen
        components += 1
    return len(g.edges) == g.n - components


def induced_color_graph(c: EdgeColoring, xi: int, vertices) -> InducedSubgraph:
    """Graph on the given vertex set (relabeled order-preservingly) whose
    edges are exactly the pairs of color xi; the relabeling is returned."""
    labels = tuple(sorted(set(vertices)))
    if labels and not (0 <= labels[0] and labels[-1] < c.n):
        raise ValueError(f"vertex set {labels} out of range for n={c.n}")
    if not 0 <= xi < c.k:
        raise ValueError(f"color {xi} out of range for k={c.k}")
    edges = set()
    for i, j in itertools.combinations(range(len(labels)), 2):
        if c.color_of(labels[i], labels[j]) == xi:
            edges.add((i, j))
    return InducedSubgraph(Graph(len(labels), frozenset(edges)), labels)


# ---------------------------------------------------------------------------
# Graph text format: first line "n m", then m lines "u v" with u < v.


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputFormatError("line 1: missing 'n m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise InputFormatError("line 1: expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputFormatError("line 1: 'n m' must be integers") from None
    if len(lines) - 1 != m:
        raise InputFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != 2:
            raise InputFormatError(f"line {i}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputFormatError(f"line {i}: endpoints must be integers") from None
        if not 0 <= u < v < n:
            raise InputFormatError(f"line {i}: edge ({u}, {v}) out of range")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise InputFormatError("duplicate edge")
    return Graph(n, frozenset(edges))
