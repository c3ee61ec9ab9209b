"""Schoenflies point-group classification of sphere maps.

The automorphism group of a plane map is realised as a finite group of
isometries of the sphere.  It is identified combinatorially:

* the orientation-preserving subgroup ``H`` (order ``r``) is cyclic when it
  contains an element of order ``r``, tetrahedral when ``r = 12`` and no
  element has order 6, and dihedral otherwise;
* each orientation-reversing involution is a *reflection* when it maps some
  vertex, edge or face onto itself (its mirror circle must cross a cell),
  and the central *inversion* otherwise;
* the number of reflections then separates ``Cnv / Cnh / S2n``,
  ``Dnh / Dnd`` and ``Td / Th``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .map_core import PlanarMap, automorphisms, compose


class UnsupportedGroup(ValueError):
    """Raised for rotation groups that cannot occur here (O, I, ...)."""


GROUP_NAMES = (
    "C1", "Cs", "Ci", "C2", "C2v", "C2h", "C3", "C3v", "C3h", "S4", "S6",
    "D2", "D2d", "D2h", "D3", "D3d", "D3h", "D6", "D6h", "T", "Th", "Td",
)


@dataclass(frozen=True)
class PointGroup:
    name: str
    order: int
    rotation_order: int
    witnesses: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    def __str__(self) -> str:
        return self.name


def element_order(f: Sequence[int]) -> int:
    """Order of a permutation (lcm of its cycle lengths)."""
    from math import lcm

    seen = [False] * len(f)
    out = 1
    for s in range(len(f)):
        if seen[s]:
            continue
        ln = 0
        d = s
        while not seen[d]:
            seen[d] = True
            d = f[d]
            ln += 1
        out = lcm(out, ln)
    return out


def is_reflection(m: PlanarMap, f: Sequence[int]) -> bool:
    """True when the orientation-reversing involution ``f`` fixes a cell.

    Orientation reversal swaps sides, so the face on the right of ``d`` is
    sent to the face on the left of ``f(d)``.
    """
    for d in range(m.dart_count):
        e = f[d]
        if e == d or e == m.twin[d]:
            return True
        if m.vertex_of[e] == m.vertex_of[d] or m.face_of[m.twin[e]] == m.face_of[d]:
            return True
    return False


def _classify(m: PlanarMap, auts) -> PointGroup:
    rotations = [f for f, s in auts if s > 0]
    improper = [f for f, s in auts if s < 0]
    r = len(rotations)
    orders = {f: element_order(f) for f in rotations}
    max_ord = max(orders.values())
    top = max(rotations, key=lambda f: (orders[f], f))
    if max_ord == r:
        kind, n = "C", r
    elif r == 12 and max_ord == 3:
        kind, n = "T", 3
    elif max_ord * 2 == r:
        kind, n = "D", max_ord
    else:
        raise UnsupportedGroup(f"rotation group of order {r} with maximal element order {max_ord}")
    ident = tuple(range(m.dart_count))
    witnesses = [top] if top != ident else []
    if not improper:
        name = {"C": f"C{n}", "D": f"D{n}", "T": "T"}[kind]
        return PointGroup(name, r, r, tuple(witnesses))
    refl = [f for f in improper if compose(f, f) == ident and is_reflection(m, f)]
    rho = len(refl)
    witnesses.append(refl[0] if refl else improper[0])
    if kind == "C":
        if n == 1:
            name = "Cs" if rho == 1 else "Ci"
        elif rho == n:
            name = f"C{n}v"
        elif rho == 1:
            name = f"C{n}h"
        elif rho == 0:
            name = f"S{2 * n}"
        else:
            raise UnsupportedGroup(f"cyclic group with {rho} reflections")
    elif kind == "D":
        if rho == n + 1:
            name = f"D{n}h"
        elif rho == n:
            name = f"D{n}d"
        else:
            raise UnsupportedGroup(f"dihedral group with {rho} reflections")
    else:
        if rho == 6:
            name = "Td"
        elif rho == 3:
            name = "Th"
        else:
            raise UnsupportedGroup(f"tetrahedral group with {rho} reflections")
    return PointGroup(name, 2 * r, r, tuple(witnesses))


def point_group(m: PlanarMap) -> PointGroup:
    """Schoenflies point group of the automorphism group of ``m``."""
    return _classify(m, automorphisms(m))


def group_census(records: Iterable, p1: Optional[int] = None) -> Dict[str, int]:
    """Observed group names with the minimal vertex count of each.

    ``records`` yields objects with ``n``, ``p1`` and ``group`` attributes
    (e.g. :class:`~sixspheres.records.GraphRecord`); only records with the
    given ``p1`` are considered when it is not ``None``.
    """
    first: Dict[str, int] = {}
    for rec in records:
        if p1 is not None and rec.p1 != p1:
            continue
        name = str(rec.group)
        if name not in first or rec.n < first[name]:
            first[name] = rec.n
    return dict(sorted(first.items(), key=lambda kv: (kv[1], kv[0])))


def group_counts(records: Iterable) -> Dict[Tuple[int, str], int]:
    """Number of records per (p1, group name)."""
    out: Dict[Tuple[int, str], int] = defaultdict(int)
    for rec in records:
        out[(rec.p1, str(rec.group))] += 1
    return dict(out)
