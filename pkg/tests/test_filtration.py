"""Filtrations and tripod distances, including the interval-indexed form."""

from fractions import Fraction
from itertools import combinations
import random

import pytest

from stairdist import (
    EmptySimplex,
    GroundSet,
    GroundSetMismatch,
    INF,
    IntFiltration,
    NEG_INF,
    NotOnePoint,
    RFiltration,
    Surjection,
    birth,
    bottleneck_distance,
    full,
    h0_barcode,
    hausdorff,
    one_point_tripod,
    pullback_filtration,
    staircase,
    support,
    to_int_indexed,
    tripod_distance_int,
    tripod_distance_r,
    validate_filtration,
)
from stairdist.compare import enumerate_correspondences
from stairdist.filtration import Simplex
from conftest import ground, rand_fraction, rand_int_filtration, rand_r_filtration

F = Fraction


def fs(*xs):
    return frozenset(xs)


def oracle_tripod_r(f, g, guard=12):
    """Literal subset enumeration over each correspondence."""

    def cost(a, b):
        ba, bb = birth(f, a), birth(g, b)
        if ba == INF and bb == INF:
            return F(0)
        return INF if (ba == INF) != (bb == INF) else abs(ba - bb)

    return _oracle_tripod(f, g, cost, guard)


def oracle_tripod_int(f, g, guard=12):
    """Literal subset enumeration with support-staircase costs."""

    def cost(a, b):
        return hausdorff(support(f, a), support(g, b))

    return _oracle_tripod(f, g, cost, guard)


def _oracle_tripod(f, g, cost, guard):
    best = INF
    for rel in enumerate_correspondences(f.ground, g.ground, guard):
        worst = F(0)
        for k in range(1, len(rel) + 1):
            for sigma in combinations(rel, k):
                a = fs(*(x for x, _ in sigma))
                b = fs(*(y for _, y in sigma))
                worst = max(worst, cost(a, b))
        best = min(best, worst)
    return best


# --- validation / birth ---------------------------------------------------------


def test_validate_examples():
    g = GroundSet(("a",))
    ok = RFiltration(g, {fs("a"): F(0)})
    assert validate_filtration(ok) is None

    g2 = GroundSet(("a", "b"))
    late_vertex = RFiltration(
        g2, {fs("a"): F(0), fs("b"): F(3), fs("a", "b"): F(1)}
    )
    assert "born" in validate_filtration(late_vertex)

    missing_face = RFiltration(g2, {fs("a"): F(0), fs("a", "b"): F(1)})
    assert "absent" in validate_filtration(missing_face)


def test_vietoris_rips_is_valid():
    g = ground(3)
    d = {("a", "b"): F(1), ("a", "c"): F(2), ("b", "c"): F(3)}
    births = {fs(v): F(0) for v in g}
    for (u, v), t in d.items():
        births[fs(u, v)] = t
    births[fs("a", "b", "c")] = max(d.values())
    vr = RFiltration(g, births)
    assert validate_filtration(vr) is None


def test_birth_examples():
    g = GroundSet(("a", "b"))
    f = RFiltration(g, {fs("a"): F(0), fs("b"): F(1), fs("a", "b"): F(2)})
    assert birth(f, fs("a")) == 0
    assert birth(f, fs("a", "b")) == 2
    assert birth(f, fs("b")) <= birth(f, fs("a", "b"))
    assert birth(f, Simplex({"a"})) == 0
    with pytest.raises(EmptySimplex):
        birth(f, fs())
    with pytest.raises(GroundSetMismatch):
        birth(f, fs("zz"))


def test_int_filtration_validation():
    g = GroundSet(("a", "b"))
    vfull = full()
    e = staircase([(F(0), F(1))])
    ok = IntFiltration(g, {fs("a"): vfull, fs("b"): vfull, fs("a", "b"): e})
    assert validate_filtration(ok) is None
    bad = IntFiltration(g, {fs("a"): e, fs("b"): vfull, fs("a", "b"): vfull})
    assert validate_filtration(bad) is not None


# --- pullback ---------------------------------------------------------------------


def test_pullback_identity():
    rng = random.Random(83)
    f = rand_r_filtration(rng, ground(3))
    assert pullback_filtration(f, Surjection.identity(f.ground)) == f


def test_pullback_merged_vertices():
    x = GroundSet(("x",))
    z = GroundSet(("z1", "z2"))
    phi = Surjection(z, x, {"z1": "x", "z2": "x"})
    f = RFiltration(x, {fs("x"): F(3)})
    pulled = pullback_filtration(f, phi)
    assert birth(pulled, fs("z1", "z2")) == 3  # image is the single vertex
    assert birth(pulled, fs("z1")) == 3
    assert validate_filtration(pulled) is None


def test_pullback_birth_formula_random():
    rng = random.Random(89)
    for _ in range(15):
        x = ground(rng.randint(1, 3))
        znames = tuple(f"z{i}" for i in range(len(x) + rng.randint(0, 2)))
        z = GroundSet(znames)
        mapping = {}
        for i, zz in enumerate(znames):
            mapping[zz] = x.elements[i] if i < len(x) else rng.choice(x.elements)
        phi = Surjection(z, x, mapping)
        f = rand_r_filtration(rng, x)
        pulled = pullback_filtration(f, phi)
        assert validate_filtration(pulled) is None
        for k in range(1, len(znames) + 1):
            for sigma in combinations(znames, k):
                image = fs(*(phi(zz) for zz in sigma))
                assert birth(pulled, fs(*sigma)) == birth(f, image)


# --- line-indexed tripod distance ----------------------------------------------


def test_tripod_identity_zero():
    rng = random.Random(97)
    f = rand_r_filtration(rng, ground(3))
    assert tripod_distance_r(f, f) == 0


def test_tripod_time_shift():
    rng = random.Random(101)
    for _ in range(8):
        f = rand_r_filtration(rng, ground(rng.randint(1, 3)))
        c = abs(rand_fraction(rng, lo=0, hi=5)) + F(1, 3)
        shifted = RFiltration(f.ground, {s: b + c for s, b in f.births.items()})
        assert tripod_distance_r(f, shifted) == c == oracle_tripod_r(f, shifted)


def test_tripod_single_vertices():
    f = RFiltration(GroundSet(("p",)), {fs("p"): F(0)})
    g = RFiltration(GroundSet(("q",)), {fs("q"): F(5)})
    assert tripod_distance_r(f, g) == 5


def test_tripod_matches_subset_enumeration_oracle():
    rng = random.Random(103)
    for _ in range(10):
        f = rand_r_filtration(rng, ground(rng.randint(1, 3)), edge_prob=0.5)
        g = rand_r_filtration(rng, ground(rng.randint(1, 3)), edge_prob=0.5)
        assert tripod_distance_r(f, g) == oracle_tripod_r(f, g)


def test_tripod_metric_properties():
    rng = random.Random(107)
    for _ in range(8):
        f, g, h = (rand_r_filtration(rng, ground(rng.randint(1, 3))) for _ in range(3))
        dfg, dgf = tripod_distance_r(f, g), tripod_distance_r(g, f)
        assert dfg == dgf
        assert tripod_distance_r(f, h) <= dfg + tripod_distance_r(g, h)


def test_h0_lower_bound():
    rng = random.Random(109)
    for _ in range(12):
        f = rand_r_filtration(rng, ground(rng.randint(1, 3)))
        g = rand_r_filtration(rng, ground(rng.randint(1, 3)))
        lower = bottleneck_distance(h0_barcode(f), h0_barcode(g))
        assert lower <= tripod_distance_r(f, g)


# --- interval-indexed tripod distance --------------------------------------------


def test_tripod_int_identity():
    rng = random.Random(113)
    f = rand_int_filtration(rng, ground(2))
    assert tripod_distance_int(f, f) == 0


def test_tripod_int_full_supports():
    f = IntFiltration(GroundSet(("a",)), {fs("a"): full()})
    g = IntFiltration(GroundSet(("b",)), {fs("b"): full()})
    assert tripod_distance_int(f, g) == 0


def derived_two_vertex_instance(delta=F(1)):
    """Two always-present vertices whose edge appears only on intervals
    reaching past +-delta, against an always-present single point."""
    g2 = GroundSet(("x1", "x2"))
    edge = staircase([(-delta, NEG_INF), (INF, delta)])
    f = IntFiltration(
        g2, {fs("x1"): full(), fs("x2"): full(), fs("x1", "x2"): edge}
    )
    pt = IntFiltration(GroundSet(("p",)), {fs("p"): full()})
    return f, pt, edge


def test_tripod_int_two_vertex_instance():
    f, pt, edge = derived_two_vertex_instance()
    assert tripod_distance_int(f, pt) == 1
    assert one_point_tripod(f, pt) == 1
    assert hausdorff(edge, full()) == 1


def test_one_point_tripod():
    f, pt, _ = derived_two_vertex_instance()
    assert one_point_tripod(pt, pt) == 0
    lonely = IntFiltration(
        GroundSet(("u", "v")), {fs("u"): full(), fs("v"): full()}
    )
    # the pair {u, v} has empty support against the full point support
    assert one_point_tripod(lonely, pt) == INF
    with pytest.raises(NotOnePoint):
        one_point_tripod(pt, lonely)


def test_tripod_int_matches_subset_enumeration_oracle():
    rng = random.Random(211)
    seen_inf = seen_finite = 0
    for _ in range(8):
        f = rand_int_filtration(rng, ground(rng.randint(1, 2)))
        g = rand_int_filtration(rng, ground(rng.randint(1, 2)))
        d = tripod_distance_int(f, g)
        assert d == oracle_tripod_int(f, g)
        if d == INF:
            seen_inf += 1
        else:
            seen_finite += 1
    assert seen_inf + seen_finite == 8


def test_one_point_matches_general_route():
    rng = random.Random(127)
    pt = IntFiltration(GroundSet(("p",)), {fs("p"): full()})
    for _ in range(10):
        f = rand_int_filtration(rng, ground(rng.randint(1, 3)))
        assert one_point_tripod(f, pt) == tripod_distance_int(f, pt)


def test_int_encoding_matches_birth_formula():
    rng = random.Random(131)
    for _ in range(10):
        f = rand_r_filtration(rng, ground(rng.randint(1, 3)), edge_prob=0.5)
        g = rand_r_filtration(rng, ground(rng.randint(1, 3)), edge_prob=0.5)
        assert tripod_distance_r(f, g) == tripod_distance_int(
            to_int_indexed(f), to_int_indexed(g)
        )


def test_support_of_absent_simplex_is_empty():
    f, pt, _ = derived_two_vertex_instance()
    assert support(f, fs("x1", "x2")) is not None
    assert support(pt, fs("p")).is_full()
    lonely = IntFiltration(GroundSet(("u",)), {})
    assert support(lonely, fs("u")).is_empty()
