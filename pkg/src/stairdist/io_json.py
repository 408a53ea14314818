"""JSON codecs for every value the CLI reads or writes.

Numbers travel as canonical strings "p/q" (integers without "/1") or
"inf"/"-inf"; raw JSON integers are accepted on input.  Every emitted
object re-parses to an equal value.
"""

from __future__ import annotations

from fractions import Fraction

from .compare import GridClustering
from .errors import ValidationError
from .filtration import IntFiltration, RFiltration, Simplex
from .formigram import Formigram, Ultrametric
from .lattice import GroundSet, SubPartition
from .rat import fmt_rat, parse_rat
from .staircase import INT, PLANE, Staircase, profile


def _rat(obj, allow_infinite=True):
    try:
        return parse_rat(obj, allow_infinite=allow_infinite)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"bad number {obj!r}: {e}") from None


def _require(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise ValidationError(f"key {key!r} must be a {kind.__name__}")
    return val


def ground_from_json(names) -> GroundSet:
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise ValidationError("ground set must be a list of strings")
    return GroundSet(tuple(names))


def subpartition_from_json(obj, ground: GroundSet | None = None) -> SubPartition:
    if isinstance(obj, dict):
        if "ground" in obj:
            ground = ground_from_json(obj["ground"])
        blocks = _require(obj, "blocks", list)
    else:
        blocks = obj
    if ground is None:
        raise ValidationError("subpartition needs a ground set")
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise ValidationError("blocks must be a list of lists")
    return SubPartition(ground, tuple(tuple(b) for b in blocks))


def subpartition_to_json(p: SubPartition, with_ground: bool = True):
    blocks = [list(b) for b in p.blocks]
    if not with_ground:
        return blocks
    return {"ground": list(p.ground.elements), "blocks": blocks}


def staircase_from_json(obj) -> Staircase:
    ambient = _require(obj, "ambient", str)
    if ambient not in (INT, PLANE):
        raise ValidationError(f'ambient must be "int" or "plane", got {ambient!r}')
    gens = _require(obj, "generators", list)
    pairs = []
    for g in gens:
        if not isinstance(g, list) or len(g) != 2:
            raise ValidationError("each generator must be a [l, r] pair")
        pairs.append((_rat(g[0]), _rat(g[1])))
    return Staircase(ambient, tuple(pairs))


def staircase_to_json(u: Staircase):
    return {
        "ambient": u.ambient,
        "generators": [[fmt_rat(l), fmt_rat(r)] for l, r in u.gens],
    }


def profile_to_json(u: Staircase):
    if u.is_empty():
        return {"empty": True, "breakpoints": [], "pieces": []}
    if u.is_full() and u.ambient == PLANE:
        return {"full_plane": True, "breakpoints": [], "pieces": []}
    prof = profile(u)
    pieces = []
    for i, slope in enumerate(prof.slopes):
        piece = {"slope": fmt_rat(slope)}
        piece["value_at_left"] = fmt_rat(prof.values[i - 1]) if i >= 1 else None
        pieces.append(piece)
    return {
        "breakpoints": [fmt_rat(c) for c in prof.breakpoints],
        "pieces": pieces,
    }


def formigram_from_json(obj) -> Formigram:
    ground = ground_from_json(_require(obj, "ground", list))
    crit = tuple(_rat(t, allow_infinite=False) for t in _require(obj, "crit", list))
    values = tuple(
        subpartition_from_json(v, ground) for v in _require(obj, "values", list)
    )
    return Formigram(ground, crit, values)


def formigram_to_json(f: Formigram):
    return {
        "ground": list(f.ground.elements),
        "crit": [fmt_rat(t) for t in f.crit],
        "values": [subpartition_to_json(v, with_ground=False) for v in f.values],
    }


def metric_from_json(obj) -> tuple[GroundSet, list[list[Fraction]]]:
    ground = ground_from_json(_require(obj, "points", list))
    rows = _require(obj, "d", list)
    d = [[_rat(x, allow_infinite=False) for x in row] for row in rows]
    return ground, d


def ultrametric_to_json(u: Ultrametric):
    return {
        "points": list(u.ground.elements),
        "u": [[fmt_rat(x) for x in row] for row in u.entries],
    }


def grid_from_json(obj) -> GridClustering:
    ground = ground_from_json(_require(obj, "ground", list))
    x_cuts = tuple(_rat(c, allow_infinite=False) for c in _require(obj, "x_cuts", list))
    y_cuts = tuple(_rat(c, allow_infinite=False) for c in _require(obj, "y_cuts", list))
    rows = _require(obj, "cells", list)
    cells = tuple(
        tuple(subpartition_from_json(v, ground) for v in row) for row in rows
    )
    return GridClustering(ground, x_cuts, y_cuts, cells)


def grid_to_json(g: GridClustering):
    return {
        "ground": list(g.ground.elements),
        "x_cuts": [fmt_rat(c) for c in g.x_cuts],
        "y_cuts": [fmt_rat(c) for c in g.y_cuts],
        "cells": [
            [subpartition_to_json(v, with_ground=False) for v in row]
            for row in g.cells
        ],
    }


def r_filtration_from_json(obj) -> RFiltration:
    ground = ground_from_json(_require(obj, "vertices", list))
    births = {}
    for entry in _require(obj, "simplices", list):
        s = Simplex(_require(entry, "verts", list))
        births[s] = _rat(_require(entry, "birth"), allow_infinite=False)
    return RFiltration(ground, births)


def r_filtration_to_json(f: RFiltration):
    return {
        "vertices": list(f.ground.elements),
        "simplices": [
            {"verts": sorted(s), "birth": fmt_rat(f.births[s])}
            for s in f.simplices()
        ],
    }


def int_filtration_from_json(obj) -> IntFiltration:
    ground = ground_from_json(_require(obj, "vertices", list))
    supports = {}
    for entry in _require(obj, "simplices", list):
        s = Simplex(_require(entry, "verts", list))
        supports[s] = staircase_from_json(_require(entry, "support", dict))
    return IntFiltration(ground, supports)


def int_filtration_to_json(f: IntFiltration):
    return {
        "vertices": list(f.ground.elements),
        "simplices": [
            {"verts": sorted(s), "support": staircase_to_json(f.supports[s])}
            for s in f.simplices()
        ],
    }


def barcode_from_json(obj):
    from .persistence import barcode

    bars = _require(obj, "bars", list)
    out = []
    for bar in bars:
        if not isinstance(bar, list) or len(bar) != 2:
            raise ValidationError("each bar must be a [birth, death] pair")
        b = _rat(bar[0], allow_infinite=False)
        d = _rat(bar[1])
        out.append((b, d))
    return barcode(out)


def barcode_to_json(bars):
    return {"bars": [[fmt_rat(b), fmt_rat(d)] for b, d in bars]}


def distance_to_json(d):
    return {"distance": fmt_rat(d)}
