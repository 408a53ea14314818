"""Barcodes, rank functions and their staircase distances.

A bar is a closed interval [birth, death] (death may be +inf) counted with
multiplicity.  The rank at (a, b) counts bars containing [a, b]; the n-th
sublevel staircase is the closed region where the rank stays <= n, and the
erosion distance is the largest Hausdorff distance between matching
sublevel staircases.  Degree-0 persistence of a line-indexed filtration is
computed by the elder rule, and the bottleneck distance by bipartite
matching feasibility over the finite candidate set.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EmptyInterval, InvalidFiltration, ValidationError
from .filtration import RFiltration, validate_filtration
from .rat import INF, RatX, is_finite
from .staircase import INT, Staircase, hausdorff, staircase

Bar = tuple[Fraction, RatX]
Barcode = tuple[Bar, ...]


def barcode(bars) -> Barcode:
    """Canonical (sorted) barcode from an iterable of (birth, death)."""
    out = []
    for b, d in bars:
        if not b <= d:
            raise ValidationError(f"bar [{b}, {d}] has birth after death")
        out.append((b, d))
    return tuple(sorted(out))


def rank(bars: Barcode, a: Fraction, b: Fraction) -> int:
    """Number of bars [p, q] with p <= a and b <= q."""
    if not a < b:
        raise EmptyInterval(f"need a < b, got ({a}, {b})")
    return sum(1 for p, q in bars if p <= a and b <= q)


def _pick(lo: RatX, hi: RatX) -> Fraction:
    """Some rational strictly inside (lo, hi)."""
    if is_finite(lo) and is_finite(hi):
        return (lo + hi) / 2
    if is_finite(lo):
        return lo + 1
    if is_finite(hi):
        return hi - 1
    return Fraction(0)


def sublevel_staircase(bars: Barcode, n: int) -> Staircase:
    """Closure of the region where the rank is at most n.

    The rank is constant on the open cells of the grid refined by all
    births (a-axis) and finite deaths (b-axis); each low-rank cell emits
    the generator at its upper-left corner and normalization keeps the
    minimal ones.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    acoords = [-INF] + sorted({b for b, _ in bars}) + [INF]
    bcoords = [-INF] + sorted({d for _, d in bars if is_finite(d)}) + [INF]
    gens = []
    for i in range(len(acoords) - 1):
        for j in range(len(bcoords) - 1):
            alo, ahi = acoords[i], acoords[i + 1]
            blo, bhi = bcoords[j], bcoords[j + 1]
            if not alo < bhi:  # cell misses the a < b half-plane
                continue
            a = _pick(alo, min(ahi, bhi))
            b = _pick(max(blo, a), bhi)
            if rank(bars, a, b) <= n:
                gens.append((ahi, blo))
    return staircase(gens, INT)


def erosion_distance(b1: Barcode, b2: Barcode) -> RatX:
    """max over grades n of the Hausdorff distance between the n-th
    sublevel staircases; beyond the larger bar count both are full."""
    best: RatX = Fraction(0)
    for n in range(max(len(b1), len(b2))):
        d = hausdorff(sublevel_staircase(b1, n), sublevel_staircase(b2, n))
        if d > best:
            best = d
    return best


def h0_barcode(f: RFiltration) -> Barcode:
    """Degree-0 persistence by the elder rule.

    Vertices create components at their births; edges, in birth order,
    merge the younger component (larger (birth, vertex-index) creation
    record) into the older one, killing it.  Survivors live forever.
    """
    problem = validate_filtration(f)
    if problem is not None:
        raise InvalidFiltration(problem)
    idx = f.ground.index
    verts = sorted(
        (s for s in f.births if len(s) == 1), key=lambda s: idx[next(iter(s))]
    )
    record = {}  # root vertex -> (birth, vertex index)
    parent = {}
    for s in verts:
        v = next(iter(s))
        parent[v] = v
        record[v] = (f.births[s], idx[v])

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = sorted(
        (s for s in f.births if len(s) == 2),
        key=lambda s: (f.births[s], sorted(idx[v] for v in s)),
    )
    bars = []
    for s in edges:
        u, v = s
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        if record[ru] > record[rv]:
            ru, rv = rv, ru
        bars.append((record[rv][0], f.births[s]))  # the younger dies
        parent[rv] = ru
    for v in parent:
        if find(v) == v:
            bars.append((record[v][0], INF))
    return barcode(bars)


def _match_cost(p: Bar, q: Bar) -> RatX:
    if is_finite(p[1]) != is_finite(q[1]):
        return INF
    dd = Fraction(0) if not is_finite(p[1]) else abs(p[1] - q[1])
    return max(abs(p[0] - q[0]), dd)


def _deletion_cost(p: Bar) -> RatX:
    return (p[1] - p[0]) / 2 if is_finite(p[1]) else INF


def _perfect_matching_exists(adj: list[list[int]], nright: int) -> bool:
    """Kuhn's augmenting paths; adj maps each left node to allowed rights."""
    match_r = [-1] * nright

    def augment(i, seen):
        for j in adj[i]:
            if j in seen:
                continue
            seen.add(j)
            if match_r[j] == -1 or augment(match_r[j], seen):
                match_r[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(adj)))


def _bottleneck_feasible(b1: Barcode, b2: Barcode, eps: RatX) -> bool:
    """Partial matching with per-pair cost <= eps and all unmatched bars
    deletable at cost <= eps, via the standard diagonal-augmented perfect
    matching."""
    n1, n2 = len(b1), len(b2)
    # left: bars of b1 then diagonal slots for b2; right: bars of b2 then
    # diagonal slots for b1
    adj: list[list[int]] = []
    for i, p in enumerate(b1):
        row = [j for j, q in enumerate(b2) if _match_cost(p, q) <= eps]
        if _deletion_cost(p) <= eps:
            row.append(n2 + i)
        adj.append(row)
    for j, q in enumerate(b2):
        row = list(range(n2, n2 + n1))  # diagonal-to-diagonal is free
        if _deletion_cost(q) <= eps:
            row.insert(0, j)
        adj.append(row)
    return _perfect_matching_exists(adj, n1 + n2)


def bottleneck_distance(b1: Barcode, b2: Barcode) -> RatX:
    """Exact bottleneck distance.

    The optimum lies in the finite set of pairwise matching costs and
    half-lengths; binary search that set with matching feasibility.
    """
    cands: set[RatX] = {Fraction(0)}
    for p in b1:
        for q in b2:
            c = _match_cost(p, q)
            if is_finite(c):
                cands.add(c)
    for p in (*b1, *b2):
        c = _deletion_cost(p)
        if is_finite(c):
            cands.add(c)
    ordered = sorted(cands)
    lo, hi = 0, len(ordered)  # first feasible index, if any
    while lo < hi:
        mid = (lo + hi) // 2
        if _bottleneck_feasible(b1, b2, ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo] if lo < len(ordered) else INF
