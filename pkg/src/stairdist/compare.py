"""Distances that search over correspondences, and plane-indexed
clusterings.

A correspondence is a relation between two ground sets covering both; it
carries exactly the information of a tripod (the apex can be taken to be
the relation itself).  The searches are exact and guarded: exceeding the
guard raises instead of approximating.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import GroundSetMismatch, SizeGuardExceeded, ValidationError
from .formigram import Formigram, Ultrametric, all_pair_keys, cosheaf_code
from .lattice import GroundSet, SubPartition
from .rat import NEG_INF, INF, RatX
from .staircase import PLANE, Staircase, hausdorff, plane_generator

CORRESPONDENCE_GUARD = 12

Pair = tuple[str, str]
Correspondence = tuple[Pair, ...]


def enumerate_correspondences(
    x: GroundSet, y: GroundSet, guard: int = CORRESPONDENCE_GUARD
) -> Iterator[Correspondence]:
    """Every relation between x and y surjective on both factors, once.

    The guard is checked up front (not lazily on first iteration)."""
    nx, ny = len(x), len(y)
    if nx * ny > guard:
        raise SizeGuardExceeded(f"|X| * |Y| = {nx * ny} exceeds guard {guard}")
    return _iter_correspondences(x, y)


def _iter_correspondences(x: GroundSet, y: GroundSet) -> Iterator[Correspondence]:
    nx, ny = len(x), len(y)
    cells = [(a, b) for a in x.elements for b in y.elements]
    n = len(cells)
    for mask in range(1, 1 << n):
        chosen = [cells[i] for i in range(n) if mask >> i & 1]
        if len({a for a, _ in chosen}) == nx and len({b for _, b in chosen}) == ny:
            yield tuple(chosen)


def _min_max_over_pairs(
    x: GroundSet, y: GroundSet, cost, guard: int
) -> RatX:
    """min over correspondences of the max cost over pairs of related pairs."""
    best: RatX = INF
    for rel in enumerate_correspondences(x, y, guard):
        worst: RatX = Fraction(0)
        for (x1, y1), (x2, y2) in combinations_with_replacement(rel, 2):
            c = cost(x1, x2, y1, y2)
            if c > worst:
                worst = c
                if worst >= best:
                    break
        if worst < best:
            best = worst
            if best == 0:
                break
    return best


def gromov_hausdorff_formigrams(
    fx: Formigram, fy: Formigram, guard: int = CORRESPONDENCE_GUARD
) -> RatX:
    """Half the smallest worst mismatch, over correspondences, between the
    merge staircases of related pairs."""
    code_x = cosheaf_code(fx)
    code_y = cosheaf_code(fy)
    memo: dict[tuple[frozenset, frozenset], RatX] = {}

    def cost(x1, x2, y1, y2):
        key = (frozenset({x1, x2}), frozenset({y1, y2}))
        if key not in memo:
            memo[key] = hausdorff(code_x[key[0]], code_y[key[1]])
        return memo[key]

    return _min_max_over_pairs(fx.ground, fy.ground, cost, guard) / 2


def gromov_hausdorff_ultrametrics(
    ux: Ultrametric, uy: Ultrametric, guard: int = CORRESPONDENCE_GUARD
) -> RatX:
    """Half the smallest correspondence distortion between two ultrametric
    (or plain metric) matrices."""

    def cost(x1, x2, y1, y2):
        return abs(ux(x1, x2) - uy(y1, y2))

    return _min_max_over_pairs(ux.ground, uy.ground, cost, guard) / 2


@dataclass(frozen=True)
class GridClustering:
    """Plane-indexed clustering, constant on the open cells of a finite
    grid; cells[row][col] with row 0 the unbounded bottom strip and col 0
    the unbounded left strip.  Values on cut lines are taken from the
    upper-right cell, which the closure-insensitive distances never see."""

    ground: GroundSet
    x_cuts: tuple[Fraction, ...]
    y_cuts: tuple[Fraction, ...]
    cells: tuple[tuple[SubPartition, ...], ...]

    def __post_init__(self):
        for cuts in (self.x_cuts, self.y_cuts):
            if any(not a < b for a, b in zip(cuts, cuts[1:])):
                raise ValidationError("cuts must be strictly increasing")
        nrow, ncol = len(self.y_cuts) + 1, len(self.x_cuts) + 1
        if len(self.cells) != nrow or any(len(r) != ncol for r in self.cells):
            raise ValidationError(f"need {nrow} rows x {ncol} cols of cells")
        for row in self.cells:
            for v in row:
                if v.ground != self.ground:
                    raise GroundSetMismatch("cell value over a different ground set")
        for r in range(nrow):
            for c in range(ncol):
                v = self.cells[r][c]
                if r + 1 < nrow and not v.refines(self.cells[r + 1][c]):
                    raise ValidationError(f"not order-preserving at cell ({r},{c})->({r + 1},{c})")
                if c + 1 < ncol and not v.refines(self.cells[r][c + 1]):
                    raise ValidationError(f"not order-preserving at cell ({r},{c})->({r},{c + 1})")

    def value_at(self, p: tuple[Fraction, Fraction]) -> SubPartition:
        col = bisect_right(self.x_cuts, p[0])
        row = bisect_right(self.y_cuts, p[1])
        return self.cells[row][col]


def grid_upper_set(f: GridClustering, key: frozenset) -> Staircase:
    """Plane staircase of cells whose value merges the pair (or contains
    the element, for singleton keys)."""
    for v in key:
        if v not in f.ground:
            raise GroundSetMismatch(f"{v!r} not in the clustering ground set")
    x, y = (min(key), max(key))
    gens = []
    for r, row in enumerate(f.cells):
        for c, val in enumerate(row):
            hit = x in val if x == y else val.same_block(x, y)
            if hit:
                corner = (
                    f.x_cuts[c - 1] if c >= 1 else NEG_INF,
                    f.y_cuts[r - 1] if r >= 1 else NEG_INF,
                )
                gens.append(plane_generator(corner))
    return Staircase(PLANE, tuple(gens))


def grid_interleaving_distance(f: GridClustering, g: GridClustering) -> RatX:
    """Largest pairwise plane-staircase Hausdorff distance (the diagonal
    flow interleaving distance of the two clusterings)."""
    if f.ground != g.ground:
        raise GroundSetMismatch("clusterings over different ground sets")
    best: RatX = Fraction(0)
    for key in all_pair_keys(f.ground):
        d = hausdorff(grid_upper_set(f, key), grid_upper_set(g, key))
        if d > best:
            best = d
    return best
