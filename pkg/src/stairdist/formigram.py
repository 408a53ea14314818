"""Formigrams: piecewise-constant subpartition-valued maps on the line.

A formigram is stored by its critical points t_1 < ... < t_m and the 2m+1
values v_0, f(t_1), v_1, ..., f(t_m), v_m taken on the alternating open
intervals and critical points.  Local maximality (v_{k-1} <= f(t_k) >= v_k)
makes the induced map on open intervals well behaved; the constructor checks
structure only, `validate` reports maximality violations.

The interleaving distance is computed by decomposing a formigram into its
pair/singleton merge staircases (the cosheaf code) and taking the largest
staircase Hausdorff distance.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import (
    GroundSetMismatch,
    InvalidMetric,
    NegativeEpsilon,
    NotADendrogram,
    ValidationError,
)
from .lattice import GroundSet, SubPartition, Surjection, pullback
from .rat import INF, NEG_INF, RatX
from .staircase import INT, Staircase, hausdorff

PairKey = frozenset  # frozenset({x}) or frozenset({x, y})


@dataclass(frozen=True)
class Formigram:
    ground: GroundSet
    crit: tuple[Fraction, ...]
    values: tuple[SubPartition, ...]

    def __post_init__(self):
        m = len(self.crit)
        if any(not t1 < t2 for t1, t2 in zip(self.crit, self.crit[1:])):
            raise ValidationError("critical points must be strictly increasing")
        if len(self.values) != 2 * m + 1:
            raise ValidationError(
                f"need {2 * m + 1} values for {m} critical points, got {len(self.values)}"
            )
        for v in self.values:
            if v.ground != self.ground:
                raise GroundSetMismatch("formigram value over a different ground set")

    @classmethod
    def constant(cls, value: SubPartition) -> "Formigram":
        return cls(value.ground, (), (value,))

    @property
    def num_pieces(self) -> int:
        return 2 * len(self.crit) + 1

    def piece_value(self, i: int) -> SubPartition:
        return self.values[i]

    def _piece_of(self, t: Fraction) -> int:
        """Index of the piece containing t (odd = critical point)."""
        k = bisect_left(self.crit, t)
        if k < len(self.crit) and self.crit[k] == t:
            return 2 * k + 1
        return 2 * k

    def evaluate(self, t: Fraction) -> SubPartition:
        return self.values[self._piece_of(t)]

    def piece_bounds(self, i: int) -> tuple[RatX, RatX]:
        """Endpoints of piece i ((t, t) for the critical point pieces)."""
        if i % 2 == 1:
            t = self.crit[(i - 1) // 2]
            return (t, t)
        k = i // 2
        lo = self.crit[k - 1] if k >= 1 else NEG_INF
        hi = self.crit[k] if k < len(self.crit) else INF
        return (lo, hi)


def validate(f: Formigram) -> str | None:
    """None if locally maximal at every critical point, else a message
    naming the first violating critical index."""
    for k, t in enumerate(f.crit):
        point = f.values[2 * k + 1]
        if not f.values[2 * k].refines(point):
            return f"not locally maximal at critical point #{k} (t = {t}): left value exceeds point value"
        if not f.values[2 * k + 2].refines(point):
            return f"not locally maximal at critical point #{k} (t = {t}): right value exceeds point value"
    return None


def normalized(f: Formigram) -> Formigram:
    """Drop critical points whose removal does not change the function."""
    crit: list[Fraction] = []
    values: list[SubPartition] = [f.values[0]]
    for k, t in enumerate(f.crit):
        point, right = f.values[2 * k + 1], f.values[2 * k + 2]
        if point == values[-1] == right:
            continue
        crit.append(t)
        values.append(point)
        values.append(right)
    return Formigram(f.ground, tuple(crit), tuple(values))


def formigrams_equal(f: Formigram, g: Formigram) -> bool:
    """Equality as functions on the line."""
    return normalized(f) == normalized(g)


def _sample_points(*fs: Formigram) -> list[Fraction]:
    """Finitely many t covering every piece of all the given formigrams."""
    crits = sorted({t for f in fs for t in f.crit})
    if not crits:
        return [Fraction(0)]
    pts = [crits[0] - 1]
    for t0, t1 in zip(crits, crits[1:]):
        pts.append(t0)
        pts.append((t0 + t1) / 2)
    pts.append(crits[-1])
    pts.append(crits[-1] + 1)
    return pts


def pointwise_refines(f: Formigram, g: Formigram) -> bool:
    """f(t) <= g(t) for every t."""
    if f.ground != g.ground:
        raise GroundSetMismatch("formigrams over different ground sets")
    return all(f.evaluate(t).refines(g.evaluate(t)) for t in _sample_points(f, g))


def _join_over_closed(f: Formigram, a: Fraction, b: Fraction) -> SubPartition:
    """Join of f over the closed window [a, b]."""
    i = f._piece_of(a)
    j = f._piece_of(b)
    acc = f.values[i]
    for k in range(i + 1, j + 1):
        acc = acc.join(f.values[k])
    return acc


def smooth(f: Formigram, eps: Fraction) -> Formigram:
    """Flow the formigram: t -> join of f over [t - eps, t + eps].

    The result is again a formigram with critical points among
    {t_i - eps, t_i + eps}; smoothing by a then b equals smoothing by a+b.
    """
    if eps < 0:
        raise NegativeEpsilon(f"eps = {eps} < 0")
    if eps == 0 or not f.crit:
        return f
    cand = sorted({t + d for t in f.crit for d in (eps, -eps)})
    values = [f.values[0]]
    for k, c in enumerate(cand):
        values.append(_join_over_closed(f, c - eps, c + eps))
        mid = (c + cand[k + 1]) / 2 if k + 1 < len(cand) else c + 1
        values.append(_join_over_closed(f, mid - eps, mid + eps))
    return normalized(Formigram(f.ground, tuple(cand), tuple(values)))


def pullback_formigram(f: Formigram, phi: Surjection) -> Formigram:
    """Pointwise pullback along a surjection onto f's ground set."""
    if phi.target != f.ground:
        raise GroundSetMismatch("surjection target must equal the formigram ground")
    return Formigram(phi.source, f.crit, tuple(pullback(v, phi) for v in f.values))


class CosheafTable:
    """All joins of consecutive runs of pieces: cell(i, j) = v_i \\/ ... \\/ v_j.

    Built row by row with cell(i, j) = cell(i, j-1) \\/ v_j, i.e. O(P^2)
    single joins for P pieces.
    """

    def __init__(self, f: Formigram):
        self.formigram = f
        p = f.num_pieces
        self._rows: list[list[SubPartition]] = []
        for i in range(p):
            row = [f.values[i]]
            for j in range(i + 1, p):
                row.append(row[-1].join(f.values[j]))
            self._rows.append(row)

    @property
    def num_pieces(self) -> int:
        return self.formigram.num_pieces

    def cell(self, i: int, j: int) -> SubPartition:
        if not 0 <= i <= j < self.num_pieces:
            raise IndexError(f"cell ({i}, {j}) outside 0 <= i <= j < {self.num_pieces}")
        return self._rows[i][j - i]


def evaluate_cosheaf(f: Formigram, interval: tuple[Fraction, Fraction],
                     table: CosheafTable | None = None) -> SubPartition:
    """Join of f over the nonempty open interval (a, b)."""
    from .errors import EmptyInterval

    a, b = interval
    if not a < b:
        raise EmptyInterval(f"({a}, {b}) is not a nonempty open interval")
    i = f._piece_of(a)
    if i % 2 == 1:
        i += 1
    j = f._piece_of(b)
    if j % 2 == 1:
        j -= 1
    if table is not None:
        return table.cell(i, j)
    acc = f.values[i]
    for k in range(i + 1, j + 1):
        acc = acc.join(f.values[k])
    return acc


def _reach_left(f: Formigram, i: int) -> RatX:
    """Largest a-coordinate (closed) of intervals whose first piece is <= i."""
    if i % 2 == 1:
        return f.crit[(i - 1) // 2]
    k = i // 2
    return f.crit[k] if k < len(f.crit) else INF


def _reach_right(f: Formigram, j: int) -> RatX:
    """Smallest b-coordinate (closed) of intervals whose last piece is >= j."""
    if j % 2 == 1:
        return f.crit[(j - 1) // 2]
    k = j // 2
    return f.crit[k - 1] if k >= 1 else NEG_INF


def all_pair_keys(ground: GroundSet) -> list[PairKey]:
    return [frozenset(p) for p in combinations_with_replacement(ground.elements, 2)]


def cosheaf_code(f: Formigram, table: CosheafTable | None = None) -> dict[PairKey, Staircase]:
    """Merge staircase per unordered pair (singletons included).

    The staircase of {x, x'} is the closed set of intervals I on which x and
    x' share a block of the induced join; its generators come from the
    minimal runs of pieces that merge the pair, found with a monotone
    two-pointer sweep over the run-join table.
    """
    if table is None:
        table = CosheafTable(f)
    p = f.num_pieces
    out: dict[PairKey, Staircase] = {}
    for key in all_pair_keys(f.ground):
        x, y = (min(key), max(key))
        if x == y:
            def merged(cell, x=x):
                return x in cell
        else:
            def merged(cell, x=x, y=y):
                return cell.same_block(x, y)
        gens = []
        j = 0
        for i in range(p):
            if j < i:
                j = i
            while j < p and not merged(table.cell(i, j)):
                j += 1
            if j == p:
                break
            gens.append((_reach_left(f, i), _reach_right(f, j)))
        out[key] = Staircase(INT, tuple(gens))
    return out


def interleaving_distance_with_witness(
    f: Formigram, g: Formigram
) -> tuple[RatX, PairKey]:
    """Largest pairwise staircase Hausdorff distance, with an attaining pair."""
    if f.ground != g.ground:
        raise GroundSetMismatch("formigrams over different ground sets")
    code_f = cosheaf_code(f)
    code_g = cosheaf_code(g)
    best: RatX = Fraction(0)
    witness = frozenset({f.ground.elements[0]})
    for key in code_f:
        d = hausdorff(code_f[key], code_g[key])
        if d > best:
            best, witness = d, key
    return best, witness


def interleaving_distance(f: Formigram, g: Formigram) -> RatX:
    """The formigram interleaving distance (exact; INF when no interleaving
    exists)."""
    return interleaving_distance_with_witness(f, g)[0]


# ---------------------------------------------------------------------------
# dendrograms


def is_dendrogram(f: Formigram) -> str | None:
    """None if f is a dendrogram (empty before 0, partitions from 0 on,
    monotone, eventually one block, right-continuous); else a message."""
    if not f.crit or f.crit[0] != 0:
        return "first critical point must be 0"
    if f.values[0].blocks != ():
        return "value before time 0 must be the empty subpartition"
    for k in range(len(f.crit)):
        point, right = f.values[2 * k + 1], f.values[2 * k + 2]
        if point != right:
            return f"not right-continuous at critical point #{k}"
        if not point.is_partition():
            return f"value at critical point #{k} is not a partition of the ground set"
        if k >= 1 and not f.values[2 * k].refines(point):
            return f"not monotone at critical point #{k}"
    if len(f.values[-1].blocks) != 1:
        return "final value must be the one-block partition"
    return None


@dataclass(frozen=True)
class Ultrametric:
    """Symmetric matrix over a ground set satisfying the ultra-triangle
    inequality (checked by `violations`, not the constructor)."""

    ground: GroundSet
    entries: tuple[tuple[Fraction, ...], ...]

    def __call__(self, x: str, y: str) -> Fraction:
        i, j = self.ground.index[x], self.ground.index[y]
        return self.entries[i][j]

    def violations(self) -> list[tuple[str, str, str]]:
        out = []
        for x in self.ground:
            for y in self.ground:
                for z in self.ground:
                    if self(x, z) > max(self(x, y), self(y, z)):
                        out.append((x, y, z))
        return out


def _check_metric(ground: GroundSet, d: list[list[Fraction]]):
    n = len(ground)
    if len(d) != n or any(len(row) != n for row in d):
        raise InvalidMetric(f"need a {n}x{n} matrix")
    for i in range(n):
        if d[i][i] != 0:
            raise InvalidMetric("diagonal must be zero")
        for j in range(i + 1, n):
            if d[i][j] != d[j][i]:
                raise InvalidMetric("matrix must be symmetric")
            if d[i][j] <= 0:
                raise InvalidMetric("off-diagonal distances must be positive")


def single_linkage(ground: GroundSet, d: list[list[Fraction]]) -> Formigram:
    """Single-linkage dendrogram: at scale t, blocks are the components of
    the 'distance <= t' graph (transitive closure of the threshold relation)."""
    _check_metric(ground, d)
    n = len(ground)
    thresholds = sorted({d[i][j] for i in range(n) for j in range(i + 1, n)})
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def current_partition() -> SubPartition:
        comps: dict[int, list[str]] = {}
        for i in range(n):
            comps.setdefault(find(i), []).append(ground.elements[i])
        return SubPartition(ground, tuple(tuple(c) for c in comps.values()))

    crit: list[Fraction] = [Fraction(0)]
    start = SubPartition.singletons(ground)
    values: list[SubPartition] = [SubPartition.empty(ground), start, start]
    for t in thresholds:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                if d[i][j] <= t:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
                        changed = True
        if changed:
            part = current_partition()
            crit.append(t)
            values.append(part)
            values.append(part)
    return Formigram(ground, tuple(crit), tuple(values))


def ultrametric(f: Formigram) -> Ultrametric:
    """Merge-time matrix u(x, x') = min{t : x, x' share a block of f(t)}."""
    problem = is_dendrogram(f)
    if problem is not None:
        raise NotADendrogram(problem)
    n = len(f.ground)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x, y = f.ground.elements[i], f.ground.elements[j]
            for k, t in enumerate(f.crit):
                if f.values[2 * k + 1].same_block(x, y):
                    entries[i][j] = entries[j][i] = t
                    break
            else:
                raise NotADendrogram(f"{x} and {y} never merge")
    return Ultrametric(f.ground, tuple(tuple(row) for row in entries))
