"""Goldberg-Coxeter construction for 3- and 6-regular plane maps.

The 3-regular engine :func:`gc3_cubic` works on the dual triangulation:
every vertex ``v`` of the cubic map is a big triangle with corners
``0, z, z*j`` in the Eisenstein lattice (``z = k + l*j``), subdivided into
unit lattice triangles and glued across edges by half turns.  The
6-regular construction goes through the truncation: subdivide ``Tr(G)``,
3-color the faces, then shrink one color class back to vertices.

Handedness: ``(k, l)`` places the second corner of every triangle at
``k + l*j`` measured counterclockwise, so ``(l, k)`` yields the mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import eisenstein as eis
from .map_core import (OddVertexDegree, PlanarMap, canonical_code, dual,
                       face_bipartition, from_twin_phi, truncate)


class BadParameter(ValueError):
    pass


class OddFace(ValueError):
    pass


class UnsupportedSeed(ValueError):
    pass


# -- lattice helpers (pairs (a, b) meaning a + b*j) ------------------------------

def _rot60(p):
    a, b = p
    return (-b, a + b)


def _rot120(p):
    a, b = p
    return (-a - b, a)


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def _coords(p, zbar):
    """(X, Y) with p / z = (X + Y j) / N."""
    a, b = p
    c, d = zbar
    return a * c - b * d, a * d + b * c + b * d


class _Frames:
    """Point bookkeeping on the glued big triangles of one cubic map.

    A point is ``(dart, p)``: lattice point ``p`` (doubled coordinates) in
    the frame of the triangle at the origin of ``dart``, with that dart's
    edge on the bottom side ``0 -> Z``.
    """

    def __init__(self, m: PlanarMap, z):
        self.m = m
        self.Z = (2 * z[0], 2 * z[1])
        self.Zbar = eis.EisensteinInt(*self.Z).conj()
        self.NZ = eis.norm(self.Z)
        self.ZJ = _rot60(self.Z)
        self.canon = [min(v) for v in m.vertices]
        self.inv = m.sigma_inv()

    def R(self, p):
        # rotation by 120 degrees about the centroid, doubled frame
        return _add(_rot120(p), self.Z)

    def normalize(self, d: int, p):
        m = self.m
        for _ in range(64):
            X, Y = _coords(p, self.Zbar)
            W = self.NZ - X - Y
            bad = (X < 0) + (Y < 0) + (W < 0)
            if bad == 0:
                return d, p, X, Y, W
            if bad > 1:
                raise AssertionError("lattice point left the triangle through a corner")
            if Y < 0:
                d, p = m.twin[d], _sub(self.Z, p)
            elif X < 0:
                d, p = m.twin[self.inv[d]], _sub(self.Z, self.R(p))
            else:
                d, p = m.twin[m.sigma[d]], _sub(self.Z, self.R(self.R(p)))
        raise AssertionError("point normalization did not terminate")

    def key(self, d: int, p):
        m = self.m
        d, p, X, Y, W = self.normalize(d, p)
        if X == 0 and Y == 0:
            return ("c", m.face_of[d])
        if Y == 0 and W == 0:
            return ("c", m.face_of[m.twin[d]])
        if X == 0 and W == 0:
            return ("c", m.face_of[self.inv[d]])
        if X == 0:
            d, p = self.inv[d], self.R(p)
            Y = 0
        elif W == 0:
            d, p = m.sigma[d], self.R(self.R(p))
            Y = 0
        if Y == 0:
            a = (d, p)
            b = (m.twin[d], _sub(self.Z, p))
            return ("e",) + min(a, b)
        c = self.canon[m.vertex_of[d]]
        if d == m.sigma[c]:
            p = self.R(p)
        elif d != c:
            p = self.R(self.R(p))
        return ("i", c, p)


def _small_triangles(z) -> List[Tuple[tuple, tuple, tuple]]:
    """Unit lattice triangles (ccw) owned by the big triangle ``0, z, z*j``.

    Ownership: centroid strictly inside, or on a side at less than half its
    length from the side's start (each side read from its own frame).
    """
    zj = _rot60(z)
    N = eis.norm(z)
    zbar = eis.EisensteinInt(*z).conj()
    xs = [0, z[0], zj[0]]
    ys = [0, z[1], zj[1]]
    out = []
    N3 = 3 * N
    for a in range(min(xs) - 2, max(xs) + 3):
        for b in range(min(ys) - 2, max(ys) + 3):
            p = (a, b)
            for tri in (((a, b), (a + 1, b), (a, b + 1)),
                        ((a + 1, b), (a + 1, b + 1), (a, b + 1))):
                P = (tri[0][0] + tri[1][0] + tri[2][0], tri[0][1] + tri[1][1] + tri[2][1])
                X, Y = _coords(P, zbar)
                W = N3 - X - Y
                if X < 0 or Y < 0 or W < 0:
                    continue
                zeros = (X == 0) + (Y == 0) + (W == 0)
                if zeros == 0:
                    out.append(tri)
                elif zeros == 1:
                    if Y == 0 and 2 * X < N3:
                        out.append(tri)
                    elif X == 0 and 2 * Y > N3:
                        out.append(tri)
                    elif W == 0 and 2 * Y < N3:
                        out.append(tri)
    return out


@dataclass
class Subdivision:
    """Result of subdividing the dual triangulation of a cubic map."""
    cubic: PlanarMap                # GC_{k,l} of the input cubic map
    face_key: List[tuple]           # per face of ``cubic``: ("c", f) for old face f, etc.


def gc3_subdivision(m: PlanarMap, k: int, l: int) -> Subdivision:
    if (k, l) == (0, 0):
        raise BadParameter("(k, l) = (0, 0)")
    if any(len(v) != 3 for v in m.vertices):
        raise BadParameter("gc3_cubic needs a 3-regular map")
    z = (k, l)
    fr = _Frames(m, z)
    tris = _small_triangles(z)
    twin: List[int] = []
    phi: List[int] = []
    origin: List[tuple] = []
    edge_darts: Dict[tuple, List[int]] = {}
    for v in m.vertices:
        c = min(v)
        for a, b, cc in tris:
            base = len(phi)
            # clockwise face walk of the ccw triangle (a, b, c): a->c, c->b, b->a
            for s, t in ((a, cc), (cc, b), (b, a)):
                ok = fr.key(c, (2 * s[0], 2 * s[1]))
                ek = fr.key(c, (s[0] + t[0], s[1] + t[1]))
                origin.append(ok)
                edge_darts.setdefault(ek, []).append(len(phi))
                phi.append(0)
            phi[base], phi[base + 1], phi[base + 2] = base + 1, base + 2, base
    twin = [0] * len(phi)
    for ek, ds in edge_darts.items():
        if len(ds) != 2:
            raise AssertionError(f"edge {ek} glued {len(ds)} times")
        x, y = ds
        twin[x], twin[y] = y, x
    tri_map = from_twin_phi(twin, phi)
    for vert in tri_map.vertices:
        if len({origin[d] for d in vert}) != 1:
            raise AssertionError("inconsistent vertex identification")
    cubic = dual(tri_map)
    face_key = [origin[f[0]] for f in cubic.faces]
    return Subdivision(cubic, face_key)


def gc3_cubic(m: PlanarMap, k: int, l: int) -> PlanarMap:
    """Goldberg-Coxeter construction GC_{k,l} of a 3-regular plane map."""
    return gc3_subdivision(m, k, l).cubic


# -- three-colorings and shrinking -------------------------------------------------

def three_color(m: PlanarMap, white_face: int = 0) -> List[int]:
    """Proper face 3-coloring (0 = white, 1 = red, 2 = blue) of a cubic map.

    ``white_face`` receives color 0.  The coloring is unique up to swapping
    red and blue.

    Raises:
        OddFace: some face has odd size.
        BadParameter: the map is not 3-regular.
    """
    if any(len(v) != 3 for v in m.vertices):
        raise BadParameter("three_color needs a 3-regular map")
    if any(len(f) % 2 for f in m.faces):
        raise OddFace("three_color needs all faces of even size")
    color = [-1] * m.n_faces
    color[white_face] = 0
    d0 = m.faces[white_face][0]
    color[m.face_of[m.twin[d0]]] = 1
    changed = True
    while changed:
        changed = False
        for v in m.vertices:
            fs = [m.face_of[d] for d in v]
            cs = [color[f] for f in fs]
            known = [c for c in cs if c >= 0]
            if len(known) == 2 and len(set(known)) == 2:
                missing = 3 - sum(known)
                for f, c in zip(fs, cs):
                    if c < 0:
                        color[f] = missing
                        changed = True
    if min(color) < 0:
        raise AssertionError("coloring did not propagate")
    for v in m.vertices:
        if len({color[m.face_of[d]] for d in v}) != 3:
            raise OddFace("faces are not properly 3-colorable")
    return color


def shrink(m: PlanarMap, color: Sequence[int], target: int) -> PlanarMap:
    """Contract every face of color ``target`` to a vertex."""
    keep = [d for d in range(m.dart_count)
            if color[m.face_of[d]] != target and color[m.face_of[m.twin[d]]] != target]
    idx = {d: i for i, d in enumerate(keep)}
    twin = [idx[m.twin[d]] for d in keep]
    phi = [idx[m.phi[m.phi[d]]] for d in keep]
    return from_twin_phi(twin, phi)


# -- oriented tripling ---------------------------------------------------------------

def oriented_tripling(m: PlanarMap, face_class: int) -> PlanarMap:
    """Oriented tripling Or_C for the face class ``face_class`` in {0, 1}.

    Classes refer to :func:`face_bipartition`.  Faces of class C are read
    counterclockwise, orienting every edge; each edge gives one new vertex
    at its tail.  Every head of an edge gives a new triangle; old vertices
    become triangles and old faces keep their size.
    """
    if any(len(v) % 2 for v in m.vertices):
        raise OddVertexDegree("oriented tripling needs even degrees")
    if any(len(v) != 6 for v in m.vertices):
        raise BadParameter("oriented tripling needs a 6-regular map")
    col = face_bipartition(m)
    in_class = [col[m.face_of[d]] == face_class for d in range(m.dart_count)]
    # dart b is an in-dart (head side) when its right face lies in class C
    heads = [b for b in range(m.dart_count) if in_class[b]]
    hid = {b: i for i, b in enumerate(heads)}
    inv = m.sigma_inv()
    twin_m, sigma = m.twin, m.sigma
    # six darts per head b: blue side of e_R, e_v, e_L then white sides
    BR, BV, BL, WR, WV, WL = range(6)

    def dart(b: int, kind: int) -> int:
        return 6 * hid[b] + kind

    n = 6 * len(heads)
    twin = [0] * n
    phi = [0] * n
    for b in heads:
        for kb, kw in ((BR, WR), (BV, WV), (BL, WL)):
            twin[dart(b, kb)] = dart(b, kw)
            twin[dart(b, kw)] = dart(b, kb)
        phi[dart(b, BR)] = dart(b, BV)
        phi[dart(b, BV)] = dart(b, BL)
        phi[dart(b, BL)] = dart(b, BR)
        phi[dart(b, WV)] = dart(inv[inv[b]], WV)
        phi[dart(b, WR)] = dart(m.phi[b], WR)
        phi[dart(b, WL)] = dart(twin_m[sigma[b]], WL)
    return from_twin_phi(twin, phi)


def oriented_triplings(m: PlanarMap) -> Tuple[PlanarMap, PlanarMap]:
    return oriented_tripling(m, 0), oriented_tripling(m, 1)


# -- 6-regular construction ------------------------------------------------------------

@dataclass
class GCResult:
    members: List[PlanarMap]
    parameter: eis.EisensteinInt
    seed_code: bytes

    def codes(self, include_mirror: bool = False) -> set:
        return {canonical_code(x, include_mirror) for x in self.members}


def _truncation_coloring(m: PlanarMap, k: int, l: int):
    tr = truncate(m)
    vertex_faces = {tr.face_of[3 * d + 2] for d in range(m.dart_count)}
    sub = gc3_subdivision(tr, k, l)
    t = sub.cubic
    white = next(i for i, key in enumerate(sub.face_key)
                 if key[0] == "c" and key[1] in vertex_faces)
    color = three_color(t, white)
    return tr, sub, color, vertex_faces


def gc(m: PlanarMap, k: int, l: int) -> GCResult:
    """GC_{k,l} of a 6-regular map through the truncation route.

    Returns one member for parameters of class B or Bj and two (possibly
    isomorphic) members for class A.
    """
    if (k, l) == (0, 0):
        raise BadParameter("(k, l) = (0, 0)")
    if any(len(v) != 6 for v in m.vertices):
        raise BadParameter("gc needs a 6-regular map")
    tr, sub, color, vertex_faces = _truncation_coloring(m, k, l)
    t = sub.cubic
    cls = eis.lattice_class((k, l))
    if cls == "A":
        members = [shrink(t, color, 1), shrink(t, color, 2)]
    else:
        members = [shrink(t, color, 0)]
    return GCResult(members, eis.EisensteinInt(k, l), canonical_code(m, False))


def gc_member(m: PlanarMap, k: int, l: int, which: int = 0) -> PlanarMap:
    return gc(m, k, l).members[which]


def gc_seed_family(seed, norm_bound: int) -> Iterator[Tuple[eis.EisensteinInt, PlanarMap]]:
    """All GC images of a seed with parameter norm <= ``norm_bound``.

    Parameters run over 0 <= l <= k together with their mirrors (l, k);
    images are deduplicated by canonical code (orientation-preserving).
    """
    from . import named_graphs as ng
    if isinstance(seed, PlanarMap):
        m = seed
    else:
        try:
            m = ng.named_graph(seed)
        except ng.BadParameter as exc:
            raise UnsupportedSeed(str(exc)) from exc
    if any(len(v) != 6 for v in m.vertices):
        raise UnsupportedSeed("seed must be 6-regular")
    seen = set()
    params = []
    for n in range(1, norm_bound + 1):
        for k, l in eis.representations(n):
            params.append((k, l))
            if l not in (0, k):
                params.append((l, k))
    for k, l in params:
        for g in gc(m, k, l).members:
            c = canonical_code(g, False)
            if c not in seen:
                seen.add(c)
                yield eis.EisensteinInt(k, l), g
