"""Named ({1,2,3},6)-spheres and infinite series.

Fixed spheres
    ``6xK2`` (n=2, D6h), ``3xK3`` (n=3, D3h), ``Trifolium`` (n=1, C3v),
    ``K2xTetrahedron`` (n=4, Td) and ``T2`` (n=3, C3h), the oriented
    tripling of the Trifolium.

Series (each member is an explicit rotation system or is obtained from the
previous member by inserting a ring of 3-gons along a short simple central
circuit, see :func:`sixspheres.circuits.insert_c_railroad`)

    ``A(i)``   p1=2, n=i, (1,0)-tube; C2v for odd i, C2h for even i.
    ``B(i)``   p1=2, n=i, chain capped by two 1-gons; Cs/Ci.
    ``C(i)``   p1=2, n=i, the chiral variant of ``B``; C2.
    ``R(i)``   p1=1, n=2i+1, Cs.
    ``S(i)``   p1=2, n=2i (i>=2), (2,0)-tube; C2h for even i, C2 for odd i.
    ``Sv(k)``  p1=2, n=4k, (2,0)-tube with a half-twist; C2v.
    ``Ti(i)``  p1=3, n=3^(i-1), iterated oriented tripling of the Trifolium.

Together with the maps produced by the enumeration scheme these complete
the census (checked against the brute-force oracle).
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, List, Tuple

from .map_core import PlanarMap, canonical_code, from_rotation


class BadParameter(ValueError):
    """Series index out of range or unknown name."""


# -- fixed spheres ---------------------------------------------------------------

_FIXED_ROTATIONS: Dict[str, List[List[int]]] = {
    "Trifolium": [[0, 0, 1, 1, 2, 2]],
    "6xK2": [[0, 1, 2, 3, 4, 5], [0, 5, 4, 3, 2, 1]],
    "3xK3": [[0, 1, 2, 3, 4, 5], [0, 6, 7, 8, 2, 1], [3, 8, 7, 6, 5, 4]],
}

# explicit first members of the series
_A1 = [[0, 0, 1, 2, 2, 1]]
_R1 = [[0, 0, 1, 2, 3, 4], [1, 4, 5, 6, 7, 8], [2, 8, 7, 6, 5, 3]]
_S2 = [[0, 0, 1, 2, 3, 4], [1, 4, 5, 6, 7, 8], [2, 8, 9, 10, 5, 3], [6, 10, 11, 11, 9, 7]]
_SV1 = [[0, 0, 1, 2, 3, 4], [1, 4, 5, 6, 7, 8], [2, 8, 9, 10, 5, 3], [6, 10, 9, 7, 11, 11]]


def six_k2() -> PlanarMap:
    """Two vertices joined by six parallel edges (D6h)."""
    return from_rotation(_FIXED_ROTATIONS["6xK2"])


def three_k3() -> PlanarMap:
    """A triangle with every edge tripled (D3h)."""
    return from_rotation(_FIXED_ROTATIONS["3xK3"])


def trifolium() -> PlanarMap:
    """One vertex with three loops (C3v)."""
    return from_rotation(_FIXED_ROTATIONS["Trifolium"])


def k2_tetrahedron() -> PlanarMap:
    """The tetrahedron with every edge doubled (Td)."""
    rot = []
    others = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}
    for v, nb in others.items():
        ring = []
        for w in nb:
            e = (min(v, w), max(v, w))
            order = (0, 1) if v < w else (1, 0)
            ring += [(e, c) for c in order]
        rot.append(ring)
    return from_rotation(rot)


def chain(n: int, end: str) -> PlanarMap:
    """A chain of ``n`` vertices capped by a 1-gon at each end.

    ``end='ref'`` closes the far end mirror-symmetrically (series ``B``),
    ``end='rot'`` closes it with a half turn (series ``C``).
    """
    if n < 2:
        raise BadParameter("chain needs n >= 2")
    rot: List[List[object]] = []
    for t in range(n):
        rot.append([("c", t - 2), ("q", t - 1), ("p", t), ("c", t), ("q", t), ("p", t - 1)])
    rot[0] = [("L", 0), ("L", 0), ("p", 0), ("c", 0), ("q", 0), ("x", 0)]
    rot[1][0] = ("x", 0)
    last = rot[n - 1]
    if end == "rot":
        last[2:5] = [("x", 1), ("L", 1), ("L", 1)]
    elif end == "ref":
        last[2:5] = [("L", 1), ("L", 1), ("x", 1)]
    else:
        raise BadParameter("end must be 'ref' or 'rot'")
    rot[n - 2][3] = ("x", 1)
    return from_rotation(rot)


def _insert_along(m: PlanarMap, length: int, shift: int = 0) -> PlanarMap:
    from .circuits import central_circuits, insert_c_railroad

    for c in central_circuits(m).circuits:
        if c.length == length and len({m.vertex_of[d] for d in c.darts}) == length:
            return insert_c_railroad(m, c.darts, shift)
    raise BadParameter(f"no simple central circuit of length {length}")


def _check(i: int, lo: int, name: str) -> None:
    if not isinstance(i, int) or i < lo:
        raise BadParameter(f"{name}(i) needs an integer i >= {lo}")


@lru_cache(maxsize=None)
def series_a(i: int) -> PlanarMap:
    _check(i, 1, "A")
    if i == 1:
        return from_rotation(_A1)
    return _insert_along(series_a(i - 1), 1)


def series_b(i: int) -> PlanarMap:
    _check(i, 2, "B")
    return chain(i, "ref")


def series_c(i: int) -> PlanarMap:
    _check(i, 2, "C")
    return chain(i, "rot")


@lru_cache(maxsize=None)
def series_r(i: int) -> PlanarMap:
    _check(i, 1, "R")
    if i == 1:
        return from_rotation(_R1)
    return _insert_along(series_r(i - 1), 2)


@lru_cache(maxsize=None)
def series_s(i: int) -> PlanarMap:
    _check(i, 2, "S")
    if i == 2:
        return from_rotation(_S2)
    # from an odd member the two gluings differ: shift 1 keeps the tube
    # centrosymmetric (C2h), shift 0 gives the mirror-symmetric Sv member
    return _insert_along(series_s(i - 1), 2, shift=1 if i % 2 == 0 else 0)


@lru_cache(maxsize=None)
def series_sv(k: int) -> PlanarMap:
    _check(k, 1, "Sv")
    if k == 1:
        return from_rotation(_SV1)
    return _insert_along(series_s(2 * k - 1), 2, shift=0)


@lru_cache(maxsize=None)
def series_t(i: int) -> PlanarMap:
    """``T_1`` is the Trifolium, ``T_{i+1}`` the oriented tripling of ``T_i``."""
    from .goldberg_coxeter import oriented_tripling
    from .map_core import face_bipartition

    _check(i, 1, "Ti")
    if i == 1:
        return trifolium()
    prev = series_t(i - 1)
    color = face_bipartition(prev)
    loop_class = next(color[f] for f, face in enumerate(prev.faces) if len(face) == 1)
    return oriented_tripling(prev, loop_class)


_SERIES = {
    "A": series_a, "B": series_b, "C": series_c, "R": series_r,
    "S": series_s, "SV": series_sv, "T": series_t, "TI": series_t,
}

_ALIASES = {
    "6xk2": "6xK2", "sixk2": "6xK2", "6k2": "6xK2",
    "3xk3": "3xK3", "threek3": "3xK3", "3k3": "3xK3",
    "trifolium": "Trifolium", "t1": "Trifolium",
    "k2xtetrahedron": "K2xTetrahedron", "k2tetrahedron": "K2xTetrahedron",
    "k2xtet": "K2xTetrahedron", "t2": "T2",
}


def names() -> List[str]:
    return ["6xK2", "3xK3", "Trifolium", "T2", "K2xTetrahedron",
            "A(i)", "B(i)", "C(i)", "R(i)", "S(i)", "Sv(k)", "Ti(i)"]


def named_graph(name) -> PlanarMap:
    """Look up a named sphere: ``"6xK2"``, ``"Trifolium"``, ``"A(5)"``, ``("R", 3)``...

    Raises:
        BadParameter: unknown name or bad series index.
    """
    if isinstance(name, tuple):
        key, idx = name
        fn = _SERIES.get(str(key).upper())
        if fn is None:
            raise BadParameter(f"unknown series {key!r}")
        return fn(int(idx))
    text = str(name).strip()
    mt = re.fullmatch(r"([A-Za-z]+)\s*[(_]?\s*(\d+)\s*\)?", text)
    alias = _ALIASES.get(text.lower().replace("_", "").replace("-", "").replace(" ", "").replace("×", "x"))
    if alias is not None:
        if alias == "6xK2":
            return six_k2()
        if alias == "3xK3":
            return three_k3()
        if alias == "Trifolium":
            return trifolium()
        if alias == "K2xTetrahedron":
            return k2_tetrahedron()
        if alias == "T2":
            return series_t(2)
    if mt and mt.group(1).upper() in _SERIES:
        return _SERIES[mt.group(1).upper()](int(mt.group(2)))
    raise BadParameter(f"unknown named graph {name!r}")


def exceptional_spheres(n: int, p1: int) -> List[PlanarMap]:
    """Spheres with ``n`` vertices and ``p1`` 1-gons outside the reduction scheme.

    These are the spheres without an underlying ({3,4,5,6},3)-sphere
    (tiny cases, or a 1-gon nested in a 2-gon), i.e. exactly the members
    of the series above together with the small fixed spheres.
    """
    out: List[PlanarMap] = []
    if p1 == 0:
        if n == 2:
            out.append(six_k2())
        elif n == 3:
            out.append(three_k3())
    elif p1 == 1:
        if n >= 3 and n % 2:
            out.append(series_r((n - 1) // 2))
    elif p1 == 2:
        out.append(series_a(n))
        if n >= 2:
            out += [series_b(n), series_c(n)]
        if n >= 4 and n % 2 == 0:
            out.append(series_s(n // 2))
        if n % 4 == 0:
            out.append(series_sv(n // 4))
    elif p1 == 3:
        if n == 1:
            out.append(trifolium())
        elif n == 3:
            out.append(series_t(2))
    return out


def catalog() -> Dict[str, Tuple[int, int]]:
    """Fixed named spheres with their (n, p1)."""
    return {"6xK2": (2, 0), "3xK3": (3, 0), "Trifolium": (1, 3), "T2": (3, 3), "K2xTetrahedron": (4, 0)}
