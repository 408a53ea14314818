"""Staircase-shaped upper sets and their exact Hausdorff distance.

A staircase lives in one of two ambients:

* ``"int"`` -- the poset of intervals {(a, b) : a < b} ordered by
  containment ((a,b) <= (a',b') iff a' <= a < b <= b'), stored as the
  closure, so the diagonal a = b clamps every region;
* ``"plane"`` -- the product order on R^2.  A plane point (p, q) is stored
  through the flip a := -p, b := q, which turns product-order up-sets into
  the same {a <= l, b >= r} corner regions, so one engine serves both.

A generator (l, r) denotes the closed corner region {(a,b): a <= l, b >= r}
(no constraint where a coordinate is infinite); a staircase is a finite
antichain of generators.  Along each flow line {a + b = c} the staircase is
an upward ray whose entry height is

    g(c) = min over generators of max(r, c - l [, c/2 when clamped]),

a non-decreasing piecewise-linear function with slopes in {0, 1/2, 1}.  The
Hausdorff distance in the sup-norm is sup_c |g_U(c) - g_V(c)|, evaluated
exactly at profile breakpoints plus a tail-slope comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatch, NegativeEpsilon, PointOutsideAmbient
from .rat import INF, NEG_INF, RatX, is_finite

INT, PLANE = "int", "plane"

Gen = tuple[RatX, RatX]


def _dominates(g: Gen, h: Gen) -> bool:
    """Region of g contains region of h."""
    return g[0] >= h[0] and g[1] <= h[1]


@dataclass(frozen=True)
class Staircase:
    """A finitely generated upper set, normalized to a generator antichain."""

    ambient: str
    gens: tuple[Gen, ...]

    def __post_init__(self):
        if self.ambient not in (INT, PLANE):
            raise ValueError(f"unknown ambient {self.ambient!r}")
        kept: list[Gen] = []
        for g in self.gens:
            if g[0] == NEG_INF or g[1] == INF:
                raise ValueError(f"generator {g} denotes an empty region")
            if any(_dominates(h, g) for h in kept):
                continue
            kept = [h for h in kept if not _dominates(g, h)]
            kept.append(g)
        kept.sort(key=lambda g: (g[0], g[1]))
        object.__setattr__(self, "gens", tuple(kept))

    @property
    def clamped(self) -> bool:
        return self.ambient == INT

    def is_empty(self) -> bool:
        return not self.gens

    def is_full(self) -> bool:
        return any(g == (INF, NEG_INF) for g in self.gens)


def staircase(gens, ambient: str = INT) -> Staircase:
    """Normalize a generator list (any iterable of (l, r) pairs)."""
    return Staircase(ambient, tuple((l, r) for l, r in gens))


def full(ambient: str = INT) -> Staircase:
    return Staircase(ambient, ((INF, NEG_INF),))


def empty(ambient: str = INT) -> Staircase:
    return Staircase(ambient, ())


def contains(u: Staircase, p: tuple[Fraction, Fraction]) -> bool:
    """Closed-region membership of an ambient point."""
    a, b = p
    if u.clamped and not a < b:
        raise PointOutsideAmbient(f"({a}, {b}) is not an interval: need a < b")
    return any(a <= l and b >= r for l, r in u.gens)


def plane_point(p: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Flip a product-order plane point into internal (a, b) coordinates."""
    return (-p[0], p[1])


def plane_generator(corner: tuple[RatX, RatX]) -> Gen:
    """Generator for the product-order up-set of a plane corner point."""
    px, py = corner
    return (INF if px == NEG_INF else -px, py)


def thicken(u: Staircase, eps: Fraction) -> Staircase:
    """Flow the staircase: points whose eps-shift lands inside.

    Generators move (l, r) -> (l + eps, r - eps); thickening by a then b
    equals thickening by a + b.
    """
    if eps < 0:
        raise NegativeEpsilon(f"eps = {eps} < 0")
    if eps == 0:
        return u
    return Staircase(
        u.ambient,
        tuple(
            (l if l == INF else l + eps, r if r == NEG_INF else r - eps)
            for l, r in u.gens
        ),
    )


def _g(u: Staircase, c: Fraction) -> RatX:
    """Entry height of the staircase on the flow line a + b = c.

    +inf for the empty staircase; -inf only for the full plane.
    """
    if not u.gens:
        return INF
    best = INF
    for l, r in u.gens:
        t = max(r, NEG_INF if l == INF else c - l)
        if u.clamped:
            t = max(t, c / 2)
        if t < best:
            best = t
    return best


def _breaks(u: Staircase) -> set[Fraction]:
    """Candidate kink positions: pairwise intersections of the constituent
    lines b = r_i, b = c - l_i and (clamped) b = c/2."""
    horiz = [r for _, r in u.gens if is_finite(r)]
    diag = [l for l, _ in u.gens if is_finite(l)]
    out: set[Fraction] = set()
    for r in horiz:
        for l in diag:
            out.add(r + l)
        if u.clamped:
            out.add(2 * r)
    if u.clamped:
        for l in diag:
            out.add(2 * l)
    return out


def _merged_breaks(u: Staircase, v: Staircase) -> list[Fraction]:
    cs = sorted(_breaks(u) | _breaks(v))
    return cs if cs else [Fraction(0)]


def _check_ambient(u: Staircase, v: Staircase):
    if u.ambient != v.ambient:
        raise AmbientMismatch(f"{u.ambient} vs {v.ambient}")


def hausdorff(u: Staircase, v: Staircase) -> RatX:
    """Exact sup-norm Hausdorff distance between two staircases.

    Returns a Fraction, or INF when one side is empty/full against the
    other's proper region, or when the entry profiles diverge in a tail.
    """
    _check_ambient(u, v)
    if u.is_empty() or v.is_empty():
        return Fraction(0) if u.is_empty() and v.is_empty() else INF
    if u.is_full() or v.is_full():
        if u.is_full() and v.is_full():
            return Fraction(0)
        if not u.clamped:
            return INF
        # clamped full Int still has the finite profile c/2: fall through
    cs = _merged_breaks(u, v)
    best = Fraction(0)
    for c in cs:
        d = abs(_g(u, c) - _g(v, c))
        if d > best:
            best = d
    # Beyond the extreme breakpoints both profiles are single lines: equal
    # slopes leave |g_u - g_v| at its endpoint value, anything else diverges.
    hi, lo = cs[-1], cs[0]
    if _g(u, hi + 1) - _g(u, hi) != _g(v, hi + 1) - _g(v, hi):
        return INF
    if _g(u, lo) - _g(u, lo - 1) != _g(v, lo) - _g(v, lo - 1):
        return INF
    return best


def subset(u: Staircase, v: Staircase) -> bool:
    """True iff u is contained in v, i.e. g_v <= g_u on every flow line."""
    _check_ambient(u, v)
    if u.is_empty():
        return True
    if v.is_empty():
        return False
    if v.is_full():
        return True
    if u.is_full() and not u.clamped:
        return False
    cs = _merged_breaks(u, v)
    f = {c: _g(u, c) - _g(v, c) for c in cs}
    if any(f[c] < 0 for c in cs):
        return False
    hi, lo = cs[-1], cs[0]
    if (_g(u, hi + 1) - _g(v, hi + 1)) - f[hi] < 0:
        return False
    if f[lo] - (_g(u, lo - 1) - _g(v, lo - 1)) > 0:
        return False
    return True


def upper_set_interleaved(u: Staircase, v: Staircase, eps: Fraction) -> bool:
    """eps-interleaving of upper sets: each inside the other's thickening."""
    if eps < 0:
        raise NegativeEpsilon(f"eps = {eps} < 0")
    return subset(u, thicken(v, eps)) and subset(v, thicken(u, eps))


@dataclass(frozen=True)
class StepProfile:
    """Piecewise-linear entry profile of a staircase, for dumping/plotting.

    ``pieces[i]`` covers (breakpoints[i-1], breakpoints[i]) with the listed
    slope; the first and last pieces are the unbounded tails.  ``values``
    are g at the breakpoints.  An empty staircase has ``empty`` set and no
    pieces.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]
    empty: bool = False


def profile(u: Staircase) -> StepProfile:
    """Exact entry profile; breakpoints are kept even where no slope change
    happens (they come from all pairwise line intersections)."""
    if u.is_empty():
        return StepProfile((), (), (), empty=True)
    if u.is_full() and not u.clamped:
        # full plane: the profile is identically -inf; represent as one piece
        return StepProfile((), (), (Fraction(0),))
    cs = sorted(_breaks(u))
    if not cs:
        cs = [Fraction(0)]
    vals = [_g(u, c) for c in cs]
    slopes = [_g(u, cs[0]) - _g(u, cs[0] - 1)]
    for c0, c1, v0, v1 in zip(cs, cs[1:], vals, vals[1:]):
        slopes.append((v1 - v0) / (c1 - c0))
    slopes.append(_g(u, cs[-1] + 1) - _g(u, cs[-1]))
    return StepProfile(tuple(cs), tuple(vals), tuple(slopes))
