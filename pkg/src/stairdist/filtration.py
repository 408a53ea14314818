"""Simplicial filtrations over the line or over the interval poset, and the
tripod distance between them.

A line-indexed filtration stores a birth time per simplex (absent simplices
are born at +inf); an interval-indexed filtration stores a staircase support
per simplex.  The tripod distance minimizes, over correspondences between
the vertex sets, the worst birth/support discrepancy over pulled-back
simplices; images of subsets of a correspondence are enumerated directly as
realizable pairs (A, B), which carries the same information as subsets of a
tripod apex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Mapping

from .errors import (
    EmptySimplex,
    GroundSetMismatch,
    NotOnePoint,
    ValidationError,
)
from .lattice import GroundSet, Surjection
from .rat import INF, RatX, is_finite
from .staircase import INT, Staircase, empty, hausdorff, staircase, subset

Simplex = frozenset


def _check_simplices(ground: GroundSet, keys) -> None:
    for s in keys:
        if not s:
            raise ValidationError("empty simplex in filtration")
        for v in s:
            if v not in ground:
                raise ValidationError(f"simplex vertex {v!r} not in ground set")


@dataclass(frozen=True)
class RFiltration:
    """Line-indexed filtration: finite-birth simplices only."""

    ground: GroundSet
    births: Mapping[Simplex, Fraction]

    def __post_init__(self):
        _check_simplices(self.ground, self.births)
        object.__setattr__(
            self, "births", {Simplex(s): b for s, b in self.births.items()}
        )

    def simplices(self) -> list[Simplex]:
        return sorted(self.births, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class IntFiltration:
    """Interval-indexed filtration: a staircase support per simplex."""

    ground: GroundSet
    supports: Mapping[Simplex, Staircase]

    def __post_init__(self):
        _check_simplices(self.ground, self.supports)
        for s, u in self.supports.items():
            if u.ambient != INT:
                raise ValidationError("supports must live in the interval ambient")
        object.__setattr__(
            self, "supports", {Simplex(s): u for s, u in self.supports.items()}
        )

    def simplices(self) -> list[Simplex]:
        return sorted(self.supports, key=lambda s: (len(s), sorted(s)))


def birth(f: RFiltration, simplex) -> RatX:
    """Stored birth time, +inf for absent simplices."""
    s = Simplex(simplex)
    if not s:
        raise EmptySimplex("birth of the empty simplex is undefined")
    for v in s:
        if v not in f.ground:
            raise GroundSetMismatch(f"vertex {v!r} not in the filtration ground set")
    return f.births.get(s, INF)


def support(f: IntFiltration, simplex) -> Staircase:
    """Stored support staircase, empty for absent simplices."""
    s = Simplex(simplex)
    if not s:
        raise EmptySimplex("support of the empty simplex is undefined")
    for v in s:
        if v not in f.ground:
            raise GroundSetMismatch(f"vertex {v!r} not in the filtration ground set")
    return f.supports.get(s, empty(INT))


def validate_filtration(f) -> str | None:
    """Face closure + monotonicity report (None when valid)."""
    if isinstance(f, RFiltration):
        for s, b in f.births.items():
            if len(s) == 1:
                continue
            for v in s:
                face = s - {v}
                if face not in f.births:
                    return f"face {sorted(face)} of simplex {sorted(s)} is absent"
                if not f.births[face] <= b:
                    return (
                        f"face {sorted(face)} born at {f.births[face]} after its "
                        f"coface {sorted(s)} born at {b}"
                    )
        return None
    if isinstance(f, IntFiltration):
        for s, u in f.supports.items():
            if len(s) == 1:
                continue
            for v in s:
                face = s - {v}
                if not subset(u, support(f, face)):
                    return (
                        f"support of simplex {sorted(s)} is not contained in the "
                        f"support of its face {sorted(face)}"
                    )
        return None
    raise TypeError(f"not a filtration: {f!r}")


def pullback_filtration(f, phi: Surjection):
    """Pull back along a vertex surjection: a simplex of the source is
    present exactly when its image is, with the image's birth/support."""
    if phi.target != f.ground:
        raise GroundSetMismatch("surjection target must equal the filtration ground")
    present = f.births if isinstance(f, RFiltration) else f.supports
    pulled = {}
    for tau in present:
        fiber = sorted({z for v in tau for z in phi.fibers[v]})
        for k in range(1, len(fiber) + 1):
            for sub in combinations(fiber, k):
                s = Simplex(sub)
                if s in pulled:
                    continue
                image = Simplex(phi(z) for z in s)
                if image in present:
                    pulled[s] = present[image]
    if isinstance(f, RFiltration):
        return RFiltration(phi.source, pulled)
    return IntFiltration(phi.source, pulled)


def to_int_indexed(f: RFiltration) -> IntFiltration:
    """Encode a line-indexed filtration over intervals: a simplex born at b
    is supported on every interval whose right end has passed b."""
    return IntFiltration(
        f.ground,
        {s: staircase([(INF, b)], INT) for s, b in f.births.items()},
    )


def _nonempty_subsets(elems: tuple[str, ...]) -> Iterator[frozenset[str]]:
    for k in range(1, len(elems) + 1):
        for c in combinations(elems, k):
            yield frozenset(c)


def _realizable_pairs(pairs) -> Iterator[tuple[frozenset[str], frozenset[str]]]:
    """Image pairs (A, B) of subsets of the correspondence: A and B are
    realizable iff the restriction of the relation to A x B still covers
    both of them."""
    xs = tuple(sorted({x for x, _ in pairs}))
    ys = tuple(sorted({y for _, y in pairs}))
    rows: dict[str, set[str]] = {x: set() for x in xs}
    cols: dict[str, set[str]] = {y: set() for y in ys}
    for x, y in pairs:
        rows[x].add(y)
        cols[y].add(x)
    for a in _nonempty_subsets(xs):
        for b in _nonempty_subsets(ys):
            if all(rows[x] & b for x in a) and all(cols[y] & a for y in b):
                yield a, b


def _min_over_correspondences(f, g, cost, guard: int) -> RatX:
    """min over correspondences of the max cost over realizable image pairs;
    `cost` maps (A, B) to a RatX with cost = 0 allowed to be skipped."""
    from .compare import enumerate_correspondences

    best: RatX = INF
    for pairs in enumerate_correspondences(f.ground, g.ground, guard):
        worst: RatX = Fraction(0)
        for a, b in _realizable_pairs(pairs):
            c = cost(a, b)
            if c > worst:
                worst = c
                if worst >= best:
                    break
        if worst < best:
            best = worst
            if best == 0:
                break
    return best


def tripod_distance_r(f: RFiltration, g: RFiltration, guard: int = 12) -> RatX:
    """Smallest worst birth discrepancy over correspondences.

    Simplices absent from both sides cost nothing; absent versus present is
    an infinite discrepancy.
    """
    memo: dict[tuple[frozenset, frozenset], RatX] = {}

    def cost(a, b):
        key = (a, b)
        if key not in memo:
            ba, bb = birth(f, a), birth(g, b)
            if is_finite(ba) != is_finite(bb):
                memo[key] = INF
            elif not is_finite(ba):
                memo[key] = Fraction(0)
            else:
                memo[key] = abs(ba - bb)
        return memo[key]

    return _min_over_correspondences(f, g, cost, guard)


def tripod_distance_int(f: IntFiltration, g: IntFiltration, guard: int = 12) -> RatX:
    """Interval-indexed tripod distance: worst support-staircase Hausdorff
    distance over realizable image pairs, minimized over correspondences."""
    memo: dict[tuple[frozenset, frozenset], RatX] = {}

    def cost(a, b):
        key = (a, b)
        if key not in memo:
            memo[key] = hausdorff(support(f, a), support(g, b))
        return memo[key]

    return _min_over_correspondences(f, g, cost, guard)


def one_point_tripod(f: IntFiltration, g: IntFiltration) -> RatX:
    """Tripod distance against a one-vertex filtration needs no search: it
    is the worst distance from any simplex support to the point's support."""
    if len(g.ground) != 1:
        raise NotOnePoint(f"second filtration has {len(g.ground)} vertices")
    star = support(g, Simplex(g.ground.elements))
    worst: RatX = Fraction(0)
    for a in _nonempty_subsets(f.ground.elements):
        d = hausdorff(support(f, a), star)
        if d > worst:
            worst = d
    return worst
