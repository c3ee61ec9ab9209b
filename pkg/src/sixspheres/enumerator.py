"""Exhaustive enumeration of ({1,2,3},6)-spheres.

Pipeline
--------
A ({1,2,3},6)-sphere ``G`` with ``n`` vertices reduces to a triangulation
``T`` on the same ``n`` vertices with degrees in {3,4,5,6}:

* every 1-gon sits (generically) inside a 3-gon ``v v w``; deleting the
  loop and one of the two parallel ``vw`` edges removes 3 from the degree
  of ``v`` and 1 from the degree of ``w`` (the *unigon gadget*, reversed);
* every 2-gon is a pair of parallel edges; deleting one copy removes 1
  from both ends (the *digon insertion*, reversed).

The dual of ``T`` is a ({3,4,5,6},3)-sphere with ``n`` faces.  So the
enumerator generates those cubic bases, and on the dual triangulation
places ``i`` unigon gadgets (on darts leaving degree-3 vertices) and
``6 - 2i`` digons (extra parallel copies of edges) so that every degree
becomes 6.  Spheres that do not reduce this way (a 1-gon whose outer face
is a 2-gon, or tiny spheres without a triangulation underneath) are
supplied by :mod:`sixspheres.named_graphs`.

An independent brute-force oracle glues darts of ``n`` 6-valent vertices
directly and is used to validate the pipeline.
"""

from __future__ import annotations

import builtins
import itertools
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ._search import search_maps
from .map_core import PlanarMap, canonical_code, dual, from_rotation

MAX_ORACLE_N = 12


class BoundTooLarge(ValueError):
    """The brute-force oracle was asked for too many vertices."""


@dataclass(frozen=True)
class EnumerationRequest:
    max_n: int
    p1_filter: Optional[int] = None
    dedup_mirror: bool = True
    min_n: int = 1
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if self.p1_filter is not None and self.p1_filter not in (0, 1, 2, 3):
            raise ValueError("p1 must be 0, 1, 2 or 3")

    def p1_values(self) -> Tuple[int, ...]:
        return (self.p1_filter,) if self.p1_filter is not None else (0, 1, 2, 3)


def _regular_sigma(degree: int, n_darts: int) -> List[int]:
    return [(d // degree) * degree + (d % degree + 1) % degree for d in range(n_darts)]


def _is_plane(m: PlanarMap) -> bool:
    return m.n_vertices - m.n_edges + m.n_faces == 2


# -- base ({3,4,5,6},3)-spheres -----------------------------------------------

def enumerate_base(n_faces: int, include_mirror: bool = True) -> List[PlanarMap]:
    """All ({3,4,5,6},3)-spheres with ``n_faces`` faces, sorted by code.

    With ``include_mirror`` a chiral sphere is listed once; otherwise both
    enantiomers are listed.
    """
    if n_faces < 4:
        return []
    n_vertices = 2 * n_faces - 4
    found: Dict[bytes, PlanarMap] = {}
    for twin in search_maps(3, n_vertices, (3, 4, 5, 6)):
        m = PlanarMap(twin, _regular_sigma(3, len(twin)))
        if not _is_plane(m):
            continue
        found.setdefault(canonical_code(m, include_mirror), m)
        if not include_mirror:
            mm = m.mirror()
            found.setdefault(canonical_code(mm, False), mm)
    return [found[c] for c in sorted(found)]


# -- expansion of a triangulation ----------------------------------------------

def expand(tri: PlanarMap, copies: Dict[int, int], gadgets: Iterable[int]) -> PlanarMap:
    """Apply digons and unigon gadgets to a triangulation.

    ``copies[e]`` (keyed by the smaller dart of an edge) extra parallel
    copies are added to edge ``e``.  Each dart ``d`` in ``gadgets`` (leaving
    the vertex that receives the loop) doubles its edge and puts a loop,
    bounding a 1-gon, between the two copies.  Parallel copies are listed
    counterclockwise at one end and in reverse order at the other, so
    consecutive copies bound 2-gons.
    """
    gadget_set = set(gadgets)
    rotation: List[List[object]] = []
    for v in tri.vertices:
        ring: List[object] = []
        for d in v:
            t = tri.twin[d]
            e = min(d, t)
            if d in gadget_set:
                ring += [("e", e, 0), ("L", d), ("L", d), ("e", e, 1)]
                continue
            if t in gadget_set:
                ring += [("e", e, 1), ("e", e, 0)]
                continue
            k = copies.get(e, 0) + 1
            order = range(k) if d == e else range(k - 1, -1, -1)
            ring += [("e", e, c) for c in order]
        rotation.append(ring)
    return from_rotation(rotation)


def _assignments(tri: PlanarMap, gadgets: Sequence[int], budget: int) -> Iterator[Dict[int, int]]:
    """All edge multiplicities making every degree 6 after the gadgets."""
    deficit = [6 - len(v) for v in tri.vertices]
    blocked = set()
    for d in gadgets:
        deficit[tri.vertex_of[d]] -= 3
        deficit[tri.vertex_of[tri.twin[d]]] -= 1
        blocked.add(min(d, tri.twin[d]))
    if any(x < 0 for x in deficit) or sum(deficit) != 2 * budget:
        return
    edges = [d for d in range(tri.dart_count)
             if d < tri.twin[d] and d not in blocked]
    ends = [(tri.vertex_of[d], tri.vertex_of[tri.twin[d]]) for d in edges]
    # last edge index touching each vertex: its deficit must be zero after it
    last: Dict[int, int] = {}
    for i, (a, b) in builtins.enumerate(ends):
        last[a] = i
        last[b] = i
    if any(deficit[v] and v not in last for v in range(len(deficit))):
        return
    chosen: Dict[int, int] = {}

    def rec(i: int) -> Iterator[Dict[int, int]]:
        if i == len(edges):
            if not any(deficit):
                yield dict(chosen)
            return
        a, b = ends[i]
        hi = min(deficit[a], deficit[b])
        for x in range(hi, -1, -1):
            deficit[a] -= x
            deficit[b] -= x
            if (last[a] != i or deficit[a] == 0) and (last[b] != i or deficit[b] == 0):
                if x:
                    chosen[edges[i]] = x
                yield from rec(i + 1)
                chosen.pop(edges[i], None)
            deficit[a] += x
            deficit[b] += x

    yield from rec(0)


def insert_digons(base: PlanarMap) -> Dict[bytes, PlanarMap]:
    """All ({2,3},6)-spheres obtained from a ({3,4,5,6},3)-sphere.

    Adding ``x_e`` degree-2 vertices on the base edges so that every face
    becomes a hexagon and dualizing is the same as adding ``x_e`` parallel
    copies to the corresponding edges of the dual triangulation.
    """
    return insert_unigons(dual(base), 0)


def insert_unigons(tri: PlanarMap, i: int, include_mirror: bool = True) -> Dict[bytes, PlanarMap]:
    """Spheres with ``p1 = i`` obtained from a triangulation by the gadgets.

    ``tri`` is the dual of a ({3,4,5,6},3)-sphere.  Returns a code-keyed
    dict; ``i = 0`` is plain digon insertion.
    """
    if i not in (0, 1, 2, 3):
        raise ValueError("i must be 0, 1, 2 or 3")
    if any(len(v) > 6 for v in tri.vertices):
        return {}
    slots = [d for d in range(tri.dart_count) if len(tri.vertices[tri.vertex_of[d]]) == 3]
    out: Dict[bytes, PlanarMap] = {}
    for gadgets in itertools.combinations(slots, i):
        if len({tri.vertex_of[d] for d in gadgets}) < i:
            continue
        for copies in _assignments(tri, gadgets, 6 - 2 * i):
            m = expand(tri, copies, gadgets)
            if include_mirror:
                out.setdefault(canonical_code(m, True), m)
            else:
                out.setdefault(canonical_code(m, False), m)
                mm = m.mirror()
                out.setdefault(canonical_code(mm, False), mm)
    return out


# -- brute-force oracle ----------------------------------------------------------

def brute_force_oracle(n: int, p1: int, include_mirror: bool = True,
                       bound: int = MAX_ORACLE_N) -> Dict[bytes, PlanarMap]:
    """All ({1,2,3},6)-spheres with ``n`` vertices and ``p1`` 1-gons.

    Exhaustive gluing of the darts of ``n`` 6-valent vertices with face
    sizes in {1,2,3}, independent of the reduction used by the pipeline.
    """
    if n > bound:
        raise BoundTooLarge(f"oracle limited to n <= {bound}")
    if n < 1 or p1 not in (0, 1, 2, 3):
        return {}
    out: Dict[bytes, PlanarMap] = {}
    for twin in search_maps(6, n, (1, 2, 3), {1: p1, 2: 6 - 2 * p1}):
        m = PlanarMap(twin, _regular_sigma(6, len(twin)))
        if not _is_plane(m) or m.p(1) != p1:
            continue
        if include_mirror:
            out.setdefault(canonical_code(m, True), m)
        else:
            out.setdefault(canonical_code(m, False), m)
            mm = m.mirror()
            out.setdefault(canonical_code(mm, False), mm)
    return out


# -- full census -------------------------------------------------------------------

def _pipeline_cell(n: int, bases: Sequence[PlanarMap], p1: int, include_mirror: bool) -> Dict[bytes, PlanarMap]:
    from . import named_graphs

    out: Dict[bytes, PlanarMap] = {}
    for b in bases:
        tri = dual(b)
        out.update(insert_unigons(tri, p1, include_mirror))
    for m in named_graphs.exceptional_spheres(n, p1):
        for mm in ((m,) if include_mirror else (m, m.mirror())):
            out.setdefault(canonical_code(mm, include_mirror), mm)
    return out


def census_maps(n: int, p1_values: Sequence[int] = (0, 1, 2, 3),
                include_mirror: bool = True, threads: int = 1) -> Dict[int, Dict[bytes, PlanarMap]]:
    """Pipeline census for one vertex count: ``{p1: {code: map}}``."""
    bases = enumerate_base(n, include_mirror=True)
    cells: Dict[int, Dict[bytes, PlanarMap]] = {}
    if threads > 1 and len(bases) > 1:
        chunks = [bases[k::threads] for k in range(threads)]
        with ThreadPoolExecutor(threads) as pool:
            for p1 in p1_values:
                merged: Dict[bytes, PlanarMap] = {}
                for part in pool.map(lambda c: _pipeline_cell(n, c, p1, include_mirror), chunks):
                    for code, m in part.items():
                        merged.setdefault(code, m)
                cells[p1] = merged
    else:
        for p1 in p1_values:
            cells[p1] = _pipeline_cell(n, bases, p1, include_mirror)
    return {p1: {c: cells[p1][c] for c in sorted(cells[p1])} for p1 in p1_values}


def enumerate_spheres(req: EnumerationRequest) -> Iterator[Tuple[int, int, bytes, PlanarMap]]:
    """Stream ``(n, p1, code, map)`` for every sphere, sorted by (n, p1, code)."""
    for n in range(req.min_n, req.max_n + 1):
        cells = census_maps(n, req.p1_values(), req.dedup_mirror, req.threads)
        for p1 in req.p1_values():
            for code, m in cells[p1].items():
                yield n, p1, code, m


def enumerate(req: EnumerationRequest) -> Iterator["GraphRecord"]:  # noqa: A001
    """Stream analysed :class:`~sixspheres.records.GraphRecord` objects."""
    from .records import analyze

    for n, p1, code, m in enumerate_spheres(req):
        yield analyze(m, provenance="census", code=code)


def count_table(req: EnumerationRequest) -> Dict[int, Tuple[int, ...]]:
    """``{n: (N_p1 for p1 in the requested values)}``."""
    table: Dict[int, List[int]] = defaultdict(lambda: [0] * len(req.p1_values()))
    idx = {p: k for k, p in builtins.enumerate(req.p1_values())}
    for n in range(req.min_n, req.max_n + 1):
        table[n]
    for n, p1, _, _ in enumerate_spheres(req):
        table[n][idx[p1]] += 1
    return {n: tuple(v) for n, v in sorted(table.items())}

