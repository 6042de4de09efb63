"""Deciding the finite arrow relation on concrete colorings, searching for
avoiding colorings, and computing finite connected Ramsey numbers."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .graphs import (
    ConnectivityVerdict,
    EdgeColoring,
    Graph,
    all_pairs,
    induced_color_graph,
    is_kappa_connected,
    pair_index,
)

ENUMERATION_VERTEX_LIMIT = 7

AVOIDING = "avoiding"
EXHAUSTED = "exhausted"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ArrowWitness:
    """A color and a vertex set whose induced color graph is
    kappa-connected, plus the connectivity certificate."""

    color: int
    vertices: tuple
    verdict: ConnectivityVerdict


@dataclass(frozen=True)
class ForbiddenList:
    """All edge-minimal kappa-connected graphs on m labeled vertices.

    A graph on m vertices is kappa-connected iff it contains a member as a
    spanning subgraph; masks index edges in lexicographic pair order.
    """

    m: int
    kappa: int
    graphs: tuple
    masks: tuple

    def spans_member(self, edge_mask: int) -> bool:
        return any(fm & edge_mask == fm for fm in self.masks)


@dataclass
class SearchStats:
    nodes: int = 0
    forbidden_prunes: int = 0
    wall_time: float = 0.0


@dataclass
class SearchOutcome:
    n: int
    m: int
    kappa: int
    k: int
    kind: str  # avoiding | exhausted | unknown
    coloring: EdgeColoring | None
    stats: SearchStats
    workers: int = 1

    def to_json_dict(self) -> dict:
        return {
            "params": {"n": self.n, "m": self.m, "kappa": self.kappa, "k": self.k},
            "result": self.kind,
            "coloring": list(self.coloring.colors) if self.coloring else None,
            "stats": {
                "nodes": self.stats.nodes,
                "forbidden_prunes": self.stats.forbidden_prunes,
                "wall_time": self.stats.wall_time,
            },
            "workers": self.workers,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SearchOutcome":
        p = data["params"]
        coloring = None
        if data.get("coloring") is not None:
            coloring = EdgeColoring(p["n"], p["k"], tuple(data["coloring"]))
        stats = SearchStats(**data["stats"])
        return cls(
            p["n"], p["m"], p["kappa"], p["k"],
            data["result"], coloring, stats, data.get("workers", 1),
        )


# ---------------------------------------------------------------------------
# Forbidden-list enumeration


def _mask_kappa_connected_table(m: int, kappa: int) -> list[bool]:
    """table[mask] = deletion-semantics kappa-connectivity of the graph on
    m vertices whose edge set is `mask` (lexicographic pair order)."""
    pairs = all_pairs(m)
    nedges = len(pairs)
    full_vertices = (1 << m) - 1
    deletions = []
    for size in range(min(kappa, m + 1)):
        for subset in itertools.combinations(range(m), size):
            removed = 0
            for v in subset:
                removed |= 1 << v
            deletions.append(full_vertices & ~removed)

    def connected(adj, remaining):
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

    table = []
    complete_mask = (1 << nedges) - 1
    for mask in range(1 << nedges):
        if mask == complete_mask:
            table.append(True)
            continue
        adj = [0] * m
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            u, v = pairs[bit.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        ok = True
        for remaining in deletions:
            masked = [adj[v] & remaining for v in range(m)]
            if not connected(masked, remaining):
                ok = False
                break
        table.append(ok)
    return table


@lru_cache(maxsize=None)
def minimal_connected_graphs(m: int, kappa: int) -> ForbiddenList:
    """Edge-minimal kappa-connected graphs on m labeled vertices, from
    enumeration of all 2^C(m,2) labeled graphs."""
    if m > 7:
        raise ValueError("enumeration size limit")
    pairs = all_pairs(m)
    table = _mask_kappa_connected_table(m, kappa)
    masks = []
    for mask in range(1 << len(pairs)):
        if not table[mask]:
            continue
        minimal = True
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if table[mask ^ bit]:
                minimal = False
                break
        if minimal:
            masks.append(mask)
    graphs = tuple(
        Graph(m, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        for mask in masks
    )
    return ForbiddenList(m, kappa, graphs, tuple(masks))


# ---------------------------------------------------------------------------
# Arrow relation on a concrete coloring


def arrow_check(c: EdgeColoring, kappa: int, m: int, mode: str = "exact"):
    """First witness (subsets lexicographic, colors ascending) of a
    monochromatic kappa-connected subgraph of the stated size, or None.

    "exact" looks only at size-m sets; "atLeast" sweeps sizes m..n.
    Min-degree pruning applies on >= kappa+2 vertices.
    """
    if not 1 <= m <= c.n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={c.n}")
    if mode not in ("exact", "atLeast"):
        raise ValueError(f"unknown mode {mode!r}")
    sizes = [m] if mode == "exact" else range(m, c.n + 1)
    for size in sizes:
        for subset in itertools.combinations(range(c.n), size):
            for xi in range(c.k):
                if size >= kappa + 2:
                    degrees_ok = all(
                        sum(
                            1
                            for w in subset
                            if w != v and c.color_of(v, w) == xi
                        )
                        >= kappa
                        for v in subset
                    )
                    if not degrees_ok:
                        continue
                induced = induced_color_graph(c, xi, subset)
                ok, verdict = is_kappa_connected(induced.graph, kappa)
                if ok:
                    return ArrowWitness(xi, subset, verdict)
    return None


# ---------------------------------------------------------------------------
# Backtracking search for avoiding colorings


class _Budget(Exception):
    pass


def _colex_order(n: int):
    """Edge assignment order: pairs sorted by (max, min).  With this order
    the m-sets completed by assigning (u, v) are exactly {v} together with
    m-1 vertices from {0..u} including u."""
    return sorted(all_pairs(n), key=lambda p: (p[1], p[0]))


def _completion_checks(n: int, m: int, fl: ForbiddenList):
    """For each colex position, the list of forbidden-subgraph edge-index
    tuples (lexicographic pair indices) that become fully colored there."""
    order = _colex_order(n)
    checks = []
    for u, v in order:
        tuples = []
        if m <= u + 2:
            for rest in itertools.combinations(range(u), m - 2):
                subset = tuple(sorted(rest + (u, v)))
                for fg in fl.graphs:
                    idxs = tuple(
                        pair_index(n, subset[a], subset[b]) for a, b in sorted(fg.edges)
                    )
                    tuples.append(idxs)
        checks.append(tuples)
    return order, checks


def _backtrack(n, m, kappa, k, node_budget, prefix=()):
    """Core search; `prefix` pins the colors of the first edges in colex
    order (used to split work across processes).  Returns (kind, colors,
    stats)."""
    fl = minimal_connected_graphs(m, kappa)
    order, checks = _completion_checks(n, m, fl)
    nedges = len(order)
    lex_of = [pair_index(n, u, v) for u, v in order]
    colors = [-1] * (n * (n - 1) // 2)
    stats = SearchStats()

    def consistent(pos):
        for idxs in checks[pos]:
            first = colors[idxs[0]]
            if all(colors[i] == first for i in idxs[1:]):
                stats.forbidden_prunes += 1
                return False
        return True

    def rec(pos, used):
        if pos == nedges:
            return True
        if pos < len(prefix):
            choices = [prefix[pos]]
        else:
            choices = range(min(used + 1, k))
        for col in choices:
            stats.nodes += 1
            if node_budget is not None and stats.nodes > node_budget:
                raise _Budget
            colors[lex_of[pos]] = col
            if consistent(pos) and rec(pos + 1, max(used, col + 1)):
                return True
            colors[lex_of[pos]] = -1
        return False

    start = time.perf_counter()
    try:
        if nedges == 0:
            found = True
        else:
            found = rec(0, 0)
        kind = AVOIDING if found else EXHAUSTED
    except _Budget:
        kind = UNKNOWN
    stats.wall_time = time.perf_counter() - start
    if kind == AVOIDING:
        return kind, tuple(colors), stats
    return kind, None, stats


def _valid_prefixes(k: int, depth: int, nedges: int):
    """Color prefixes of the given depth respecting first-use symmetry
    breaking (color j appears only after every color < j has)."""
    depth = min(depth, nedges)
    prefixes = [()]
    for _ in range(depth):
        nxt = []
        for p in prefixes:
            used = max(p) + 1 if p else 0
            for col in range(min(used + 1, k)):
                nxt.append(p + (col,))
        prefixes = nxt
    return prefixes


def _worker(args):
    return _backtrack(*args)


def exists_avoiding_coloring(
    n: int,
    m: int,
    kappa: int,
    k: int,
    node_budget: int | None = None,
    workers: int = 1,
) -> SearchOutcome:
    """Backtracking search over k-colorings of K_n for one lacking a
    monochromatic kappa-connected m-set.

    Symmetry breaking is color-first-use only.  A node budget turns
    nontermination risk into an explicit "unknown" outcome.  With more
    than one worker, top-level color prefixes are searched in parallel
    and any avoiding coloring is accepted.
    """
    if m < 2 or kappa < 1 or k < 1:
        raise ValueError("need m >= 2, kappa >= 1, k >= 1")
    start = time.perf_counter()
    nedges = n * (n - 1) // 2

    if workers <= 1 or nedges < 3:
        kind, colors, stats = _backtrack(n, m, kappa, k, node_budget)
        stats.wall_time = time.perf_counter() - start
        coloring = EdgeColoring(n, k, colors) if colors is not None else None
        return SearchOutcome(n, m, kappa, k, kind, coloring, stats, 1)

    depth = 1
    while len(_valid_prefixes(k, depth, nedges)) < workers and depth < nedges:
        depth += 1
    prefixes = _valid_prefixes(k, depth, nedges)
    share = None if node_budget is None else max(1, node_budget // len(prefixes))
    args = [(n, m, kappa, k, share, p) for p in prefixes]
    total = SearchStats()
    best_kind, best_colors = EXHAUSTED, None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for kind, colors, stats in pool.map(_worker, args):
            total.nodes += stats.nodes
            total.forbidden_prunes += stats.forbidden_prunes
            if kind == AVOIDING and best_kind != AVOIDING:
                best_kind, best_colors = AVOIDING, colors
            elif kind == UNKNOWN and best_kind == EXHAUSTED:
                best_kind = UNKNOWN
    total.wall_time = time.perf_counter() - start
    coloring = EdgeColoring(n, k, best_colors) if best_colors is not None else None
    return SearchOutcome(n, m, kappa, k, best_kind, coloring, total, workers)


@dataclass
class RamseyResult:
    m: int
    kappa: int
    k: int
    n_max: int
    value: int | None  # least n with no avoiding coloring; None if > n_max
    status: str  # determined | open | unknown
    outcomes: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "params": {
                "m": self.m, "kappa": self.kappa, "k": self.k, "n_max": self.n_max,
            },
            "value": self.value,
            "status": self.status,
            "outcomes": {str(n): o.to_json_dict() for n, o in self.outcomes.items()},
        }


def ramsey_number(
    m: int,
    kappa: int,
    k: int,
    n_max: int,
    node_budget: int | None = None,
    workers: int = 1,
) -> RamseyResult:
    """Least n <= n_max such that every k-coloring of K_n has a
    monochromatic kappa-connected m-set, with per-n search outcomes;
    status "open" means every n <= n_max still admits an avoiding
    coloring."""
    if n_max < m:
        raise ValueError("need n_max >= m")
    outcomes = {}
    for n in range(m, n_max + 1):
        outcome = exists_avoiding_coloring(
            n, m, kappa, k, node_budget=node_budget, workers=workers
        )
        outcomes[n] = outcome
        if outcome.kind == EXHAUSTED:
            return RamseyResult(m, kappa, k, n_max, n, "determined", outcomes)
        if outcome.kind == UNKNOWN:
            return RamseyResult(m, kappa, k, n_max, None, UNKNOWN, outcomes)
    return RamseyResult(m, kappa, k, n_max, None, "open", outcomes)


def enumerate_all_colorings(n: int, k: int):
    """Every k-coloring of K_n, for completeness cross-checks."""
    if n > ENUMERATION_VERTEX_LIMIT:
        raise ValueError("enumeration size limit")
    nedges = n * (n - 1) // 2
    for colors in itertools.product(range(k), repeat=nedges):
        yield EdgeColoring(n, k, colors)
