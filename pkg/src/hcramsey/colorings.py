"""Explicit edge colorings at desk scale and checkers for the structural
properties that make them avoid large well-connected monochromatic pieces."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .graphs import (
    EdgeColoring,
    InputFormatError,
    all_pairs,
    pair_key,
)

DELTA_MINER_SIZE_LIMIT = 10

# An OrderedColoring is an EdgeColoring whose colors carry the natural
# order 0 < 1 < ... < k-1; nothing extra is stored.
OrderedColoring = EdgeColoring


@dataclass(frozen=True)
class BitstringFamily:
    """Pairwise-distinct binary strings of one length; the index order
    stands in for the enumeration order of the family and need not be
    lexicographic."""

    length: int
    strings: tuple

    def __post_init__(self):
        object.__setattr__(self, "strings", tuple(self.strings))
        for s in self.strings:
            if len(s) != self.length or any(ch not in "01" for ch in s):
                raise ValueError(f"bad bitstring {s!r} for length {self.length}")
        if len(set(self.strings)) != len(self.strings):
            raise ValueError("duplicate strings in family")

    @classmethod
    def full(cls, length) -> "BitstringFamily":
        """All 2^length strings in binary counting order."""
        return cls(length, tuple(format(i, f"0{length}b") for i in range(2**length)))

    def size(self) -> int:
        return len(self.strings)


def first_difference(a: str, b: str) -> int:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    raise ValueError("strings are equal")


def sierpinski_coloring(family: BitstringFamily) -> EdgeColoring:
    """Color a pair by the first position where its two strings differ,
    together with the lower-indexed string's bit there, flattened as
    2*position + bit.  Color space: 2*length."""
    n = family.size()
    colors = []
    for a, b in all_pairs(n):
        d = first_difference(family.strings[a], family.strings[b])
        bit = int(family.strings[a][d])
        colors.append(2 * d + bit)
    return EdgeColoring(n, 2 * family.length, tuple(colors))


def check_sierpinski_triangle_free(family: BitstringFamily) -> bool:
    """Exhaustive triple scan for a monochromatic triangle in the
    first-difference coloring.  Always true (an edge of color (d, i)
    pins the lower endpoint's bit at d to i and the upper's to 1-i),
    so this doubles as a self-test."""
    c = sierpinski_coloring(family)
    for a, b, g in itertools.combinations(range(c.n), 3):
        if c.color_of(a, b) == c.color_of(a, g) == c.color_of(b, g):
            return False
    return True


def forest_partition_coloring(n: int) -> EdgeColoring:
    """Partition the edges of K_n (n even) into n/2 spanning paths.

    Class i is the zig-zag path i, i+1, i-1, i+2, i-2, ... (mod n); the
    n/2 translates partition the edge set, so every color class is a
    tree on n vertices.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError("use n even at desk scale")
    mapping = {}
    for i in range(n // 2):
        seq = [i]
        for t in range(1, n):
            step = (t + 1) // 2 if t % 2 else -(t // 2)
            seq.append((i + step) % n)
        for a, b in zip(seq, seq[1:]):
            key = pair_key(a, b)
            if key in mapping:
                raise AssertionError(f"edge {key} covered twice")
            mapping[key] = i
    return EdgeColoring.from_map(n, n // 2, mapping)


def blowup_coloring(base: EdgeColoring, block_sizes, inner_color: int) -> EdgeColoring:
    """Replace each base vertex by a block; cross-block pairs inherit the
    base color of their block pair, within-block pairs get inner_color
    (the lift leaves these undefined, so the choice is explicit)."""
    block_sizes = tuple(block_sizes)
    if len(block_sizes) != base.n:
        raise ValueError("need one block size per base vertex")
    if any(s < 1 for s in block_sizes):
        raise ValueError("block sizes must be positive")
    if not 0 <= inner_color < base.k:
        raise ValueError(f"inner color {inner_color} out of range for k={base.k}")
    block_of = []
    for idx, size in enumerate(block_sizes):
        block_of.extend([idx] * size)
    total = len(block_of)
    colors = []
    for u, v in all_pairs(total):
        bu, bv = block_of[u], block_of[v]
        colors.append(inner_color if bu == bv else base.color_of(bu, bv))
    return EdgeColoring(total, base.k, tuple(colors))


def random_coloring(n: int, k: int, seed) -> EdgeColoring:
    """Uniform independent colors from a seeded generator; same seed,
    same coloring."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    return EdgeColoring(n, k, tuple(rng.randrange(k) for _ in all_pairs(n)))


# ---------------------------------------------------------------------------
# Subadditivity, tree orders, and path confinement


class SubadditivityViolation(NamedTuple):
    triple: tuple  # (alpha, beta, gamma)
    inequality: int  # 1 or 2


def subadditivity_violation(c: OrderedColoring):
    """Lexicographically first triple violating either
    (1) c(a,b) <= max(c(a,g), c(b,g)) or
    (2) c(a,g) <= max(c(a,b), c(b,g)),
    or None if both hold everywhere."""
    for a, b, g in itertools.combinations(range(c.n), 3):
        cab, cag, cbg = c.color_of(a, b), c.color_of(a, g), c.color_of(b, g)
        if cab > max(cag, cbg):
            return SubadditivityViolation((a, b, g), 1)
        if cag > max(cab, cbg):
            return SubadditivityViolation((a, b, g), 2)
    return None


def is_subadditive(c: OrderedColoring) -> bool:
    return subadditivity_violation(c) is None


class TreeOrder(NamedTuple):
    relation: frozenset  # pairs (a, b) with a < b and c(a, b) <= xi
    valid: bool  # strict predecessors of each vertex are linearly ordered


def tree_order(c: OrderedColoring, xi: int) -> TreeOrder:
    """The relation {(a, b) : a < b and c(a, b) <= xi}, together with the
    check that each vertex's predecessors form a chain."""
    if not is_subadditive(c):
        raise ValueError("not subadditive")
    relation = frozenset((a, b) for a, b in all_pairs(c.n) if c.color_of(a, b) <= xi)
    valid = True
    for b in range(c.n):
        preds = sorted(a for a, bb in relation if bb == b)
        for a1, a2 in itertools.combinations(preds, 2):
            if (a1, a2) not in relation:
                valid = False
    return TreeOrder(relation, valid)


class ConfinementCounterexample(NamedTuple):
    alpha: int
    beta: int
    path: tuple
    max_color: int


def path_confinement_counterexample(c: OrderedColoring, enforce_guard: bool = True):
    """Search for a path a = v0, ..., vj+1 = b whose internal vertices all
    exceed a and whose max edge color is below c(a, b).  Returns None when
    every such path is confined (the subadditive case), else the first
    counterexample found.

    Works by raising a color threshold and BFS-ing the subgraph of edges
    with color <= threshold among vertices >= a.
    """
    if enforce_guard and not is_subadditive(c):
        raise ValueError("not subadditive")
    for a in range(c.n):
        reached_at = {}
        for xi in range(c.k):
            parent = {a: None}
            queue = [a]
            while queue:
                v = queue.pop(0)
                for w in range(a, c.n):
                    if w != v and w not in parent and c.color_of(v, w) <= xi:
                        parent[w] = v
                        queue.append(w)
            for b in range(a + 1, c.n):
                if b in parent and b not in reached_at:
                    reached_at[b] = xi
                    if c.color_of(a, b) > xi:
                        path = []
                        v = b
                        while v is not None:
                            path.append(v)
                            v = parent[v]
                        path.reverse()
                        return ConfinementCounterexample(a, b, tuple(path), xi)
    return None


def path_confinement_check(c: OrderedColoring, enforce_guard: bool = True) -> bool:
    return path_confinement_counterexample(c, enforce_guard) is None


def common_neighbor_certify(c: EdgeColoring, vertices, i: int, kappa: int) -> bool:
    """Sufficient condition for the color-i graph on the given set to be
    kappa-connected: every pair has >= kappa common color-i neighbors
    inside the set."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        raise ValueError("need at least 2 vertices")
    if not 0 <= i < c.k:
        raise ValueError(f"color {i} out of range for k={c.k}")
    for a, b in itertools.combinations(vs, 2):
        common = sum(
            1
            for g in vs
            if g not in (a, b) and c.color_of(a, g) == i and c.color_of(b, g) == i
        )
        if common < kappa:
            return False
    return True


# ---------------------------------------------------------------------------
# Two-dimensional Delta-system miner


@dataclass(frozen=True)
class DeltaSystemReport:
    """Witness that an index set B exhibits the row/column sunflower
    structure.  Roots are None where the witnessing family has fewer than
    two members (any root works there; such roots are treated as empty in
    the union and residue computations)."""

    B: tuple
    row_roots: Mapping  # alpha -> frozenset | None
    col_roots: Mapping  # beta -> frozenset | None
    union_root: frozenset  # root of the family {row_root | col_root}
    residues_disjoint: bool
    root_sizes_uniform: bool  # reported, not required


def _indexed_delta_root(sets):
    """Common pairwise intersection of an indexed family of >= 2 sets, or
    None if the intersections disagree.  Equal members intersect to
    themselves (multiset reading)."""
    root = sets[0] & sets[1]
    for x, y in itertools.combinations(sets, 2):
        if x & y != root:
            return None
    return root


def _check_delta_candidate(family, members: tuple):
    """Verify the four sunflower conditions on the index set `members`;
    returns a DeltaSystemReport or None."""
    row_roots = {}
    col_roots = {}
    for a in members:
        row = [family[(a, b)] for b in members if b > a]
        if len(row) >= 2:
            root = _indexed_delta_root(row)
            if root is None:
                return None
            row_roots[a] = root
        else:
            row_roots[a] = None
    for b in members:
        col = [family[(a, b)] for a in members if a < b]
        if len(col) >= 2:
            root = _indexed_delta_root(col)
            if root is None:
                return None
            col_roots[b] = root
        else:
            col_roots[b] = None

    determined_rows = [r for r in row_roots.values() if r is not None]
    if len(determined_rows) >= 2 and _indexed_delta_root(determined_rows) is None:
        return None
    determined_cols = [r for r in col_roots.values() if r is not None]
    if len(determined_cols) >= 2 and _indexed_delta_root(determined_cols) is None:
        return None

    unions = [
        (row_roots[a] or frozenset()) | (col_roots[a] or frozenset()) for a in members
    ]
    if len(unions) >= 2:
        union_root = _indexed_delta_root(unions)
        if union_root is None:
            return None
    else:
        union_root = unions[0] if unions else frozenset()

    residues = []
    for a, b in itertools.combinations(members, 2):
        res = family[(a, b)] - (
            (row_roots[a] or frozenset()) | (col_roots[b] or frozenset())
        )
        residues.append(res)
    for x, y in itertools.combinations(residues, 2):
        if x & y:
            return None

    uniform = (
        len({len(r) for r in determined_rows}) <= 1
        and len({len(r) for r in determined_cols}) <= 1
    )
    return DeltaSystemReport(
        B=members,
        row_roots=row_roots,
        col_roots=col_roots,
        union_root=union_root,
        residues_disjoint=True,
        root_sizes_uniform=uniform,
    )


def mine_delta_system(family, n: int, target_size: int):
    """First (in lexicographic subset order) index set B of the target size
    whose rows and columns of the pair-indexed family form sunflowers with
    compatible roots and pairwise disjoint residues; None on exhaustion.

    `family` maps pairs (alpha, beta), alpha < beta < n, to finite sets.
    """
    if n > DELTA_MINER_SIZE_LIMIT:
        raise ValueError("miner size limit")
    if target_size < 1:
        raise ValueError("target size must be positive")
    fam = {pair: frozenset(members) for pair, members in family.items()}
    for pair in all_pairs(n):
        if pair not in fam:
            raise ValueError(f"family missing pair {pair}")
    for members in itertools.combinations(range(n), target_size):
        report = _check_delta_candidate(fam, members)
        if report is not None:
            return report
    return None


# ---------------------------------------------------------------------------
# Text formats


def format_coloring_text(c: EdgeColoring) -> str:
    """Header "n k", then one line "u v color" per pair in lexicographic
    pair order."""
    lines = [f"{c.n} {c.k}"]
    lines.extend(f"{u} {v} {col}" for (u, v), col in zip(all_pairs(c.n), c.colors))
    return "\n".join(lines) + "\n"


def parse_coloring_text(text: str) -> EdgeColoring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputFormatError("line 1: missing 'n k' header")
    header = lines[0].split()
    if len(header) != 2:
        raise InputFormatError("line 1: expected 'n k'")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise InputFormatError("line 1: 'n k' must be integers") from None
    expected = all_pairs(n)
    if len(lines) - 1 != len(expected):
        raise InputFormatError(
            f"expected {len(expected)} pair lines, found {len(lines) - 1}"
        )
    colors = []
    for i, (line, pair) in enumerate(zip(lines[1:], expected), start=2):
        fields = line.split()
        if len(fields) != 3:
            raise InputFormatError(f"line {i}: expected 'u v color'")
        try:
            u, v, col = (int(f) for f in fields)
        except ValueError:
            raise InputFormatError(f"line {i}: fields must be integers") from None
        if (u, v) != pair:
            raise InputFormatError(f"line {i}: expected pair {pair}, got ({u}, {v})")
        if not 0 <= col < k:
            raise InputFormatError(f"line {i}: color {col} out of range")
        colors.append(col)
    return EdgeColoring(n, k, tuple(colors))


def format_family_text(family: BitstringFamily) -> str:
    """Header "lambda mu", then mu lines of 0/1 strings in index order."""
    lines = [f"{family.length} {family.size()}"]
    lines.extend(family.strings)
    return "\n".join(lines) + "\n"


def parse_family_text(text: str) -> BitstringFamily:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputFormatError("line 1: missing 'lambda mu' header")
    header = lines[0].split()
    if len(header) != 2:
        raise InputFormatError("line 1: expected 'lambda mu'")
    try:
        length, mu = int(header[0]), int(header[1])
    except ValueError:
        raise InputFormatError("line 1: 'lambda mu' must be integers") from None
    if len(lines) - 1 != mu:
        raise InputFormatError(f"expected {mu} strings, found {len(lines) - 1}")
    try:
        return BitstringFamily(length, tuple(lines[1:]))
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def format_set_family_text(family, n: int) -> str:
    """Header "n", then one line "alpha beta e1 e2 ..." per pair."""
    lines = [str(n)]
    for a, b in all_pairs(n):
        members = " ".join(str(x) for x in sorted(family[(a, b)]))
        lines.append(f"{a} {b} {members}".rstrip())
    return "\n".join(lines) + "\n"


def parse_set_family_text(text: str):
    """Returns (family dict, n) for the delta-system miner."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputFormatError("line 1: missing 'n' header")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise InputFormatError("line 1: 'n' must be an integer") from None
    family = {}
    for i, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) < 2:
            raise InputFormatError(f"line {i}: expected 'alpha beta members...'")
        try:
            a, b = int(fields[0]), int(fields[1])
            members = frozenset(int(f) for f in fields[2:])
        except ValueError:
            raise InputFormatError(f"line {i}: fields must be integers") from None
        if not 0 <= a < b < n:
            raise InputFormatError(f"line {i}: pair ({a}, {b}) out of range")
        if (a, b) in family:
            raise InputFormatError(f"line {i}: duplicate pair ({a}, {b})")
        family[(a, b)] = members
    for pair in all_pairs(n):
        if pair not in family:
            raise InputFormatError(f"missing pair {pair}")
    return family, n
