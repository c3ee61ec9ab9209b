"""Dart-based combinatorial maps of plane multigraphs.

A map on ``2E`` darts is given by two permutations:

* ``twin`` -- the fixed-point-free involution pairing the two darts of an edge;
* ``sigma`` -- the rotation, sending a dart to the next dart counterclockwise
  around its origin vertex.

The face permutation is ``phi = sigma o twin``: ``phi[d] = sigma[twin[d]]``.
Each face is traversed clockwise, i.e. the face of ``d`` is the face lying on
the right of ``d``.  Loops and parallel edges are allowed; a 1-gon is a dart
with ``phi[d] == d``.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class MapError(ValueError):
    """Base class for invalid map input."""


class NotInvolution(MapError):
    pass


class NotPermutation(MapError):
    pass


class Disconnected(MapError):
    pass


class GenusNotZero(MapError):
    pass


class OddVertexDegree(MapError):
    pass


def _orbits(perm: Sequence[int]) -> Tuple[List[int], List[List[int]]]:
    """Return (orbit index of each element, list of orbits)."""
    label = [-1] * len(perm)
    orbits: List[List[int]] = []
    for start in range(len(perm)):
        if label[start] >= 0:
            continue
        idx = len(orbits)
        cyc = []
        d = start
        while label[d] < 0:
            label[d] = idx
            cyc.append(d)
            d = perm[d]
        orbits.append(cyc)
    return label, orbits


class PlanarMap:
    """Immutable combinatorial map of a connected plane multigraph.

    Use :func:`build_map` (validating) rather than the constructor.
    """

    __slots__ = (
        "twin", "sigma", "phi", "vertex_of", "vertices", "face_of", "faces",
        "_code_cache", "_auts",
    )

    def __init__(self, twin: Sequence[int], sigma: Sequence[int]):
        self.twin = tuple(twin)
        self.sigma = tuple(sigma)
        self.phi = tuple(self.sigma[t] for t in self.twin)
        self.vertex_of, self.vertices = _orbits(self.sigma)
        self.face_of, self.faces = _orbits(self.phi)
        self._code_cache: Dict[bool, bytes] = {}
        self._auts = None

    # -- basic counts -------------------------------------------------------
    @property
    def dart_count(self) -> int:
        return len(self.twin)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.twin) // 2

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def degrees(self) -> List[int]:
        return [len(v) for v in self.vertices]

    def face_sizes(self) -> List[int]:
        return [len(f) for f in self.faces]

    def p_vector(self) -> Dict[int, int]:
        """Face-size census ``{size: count}``."""
        return dict(sorted(Counter(self.face_sizes()).items()))

    def p(self, k: int) -> int:
        return sum(1 for f in self.faces if len(f) == k)

    def left_face(self, d: int) -> int:
        """Face on the left of dart ``d``."""
        return self.face_of[self.twin[d]]

    def sigma_inv(self) -> List[int]:
        inv = [0] * len(self.sigma)
        for d, s in enumerate(self.sigma):
            inv[s] = d
        return inv

    def is_sphere_123_6(self) -> bool:
        """True for a ({1,2,3},6)-sphere: 6-regular, faces of size 1..3."""
        if any(len(v) != 6 for v in self.vertices):
            return False
        sizes = Counter(len(f) for f in self.faces)
        if any(k not in (1, 2, 3) for k in sizes):
            return False
        return sum(c * (3 - k) for k, c in sizes.items()) == 6

    def mirror(self) -> "PlanarMap":
        """The reflected map (rotation reversed)."""
        return PlanarMap(self.twin, self.sigma_inv())

    def relabel(self, perm: Sequence[int]) -> "PlanarMap":
        """Isomorphic copy with dart ``d`` renamed to ``perm[d]``."""
        size = len(perm)
        twin = [0] * size
        sigma = [0] * size
        for d in range(size):
            twin[perm[d]] = perm[self.twin[d]]
            sigma[perm[d]] = perm[self.sigma[d]]
        return PlanarMap(twin, sigma)

    def __repr__(self) -> str:
        pv = ",".join(f"{k}:{c}" for k, c in self.p_vector().items())
        return f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces}, p={{{pv}}})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return self.twin == other.twin and self.sigma == other.sigma

    def __hash__(self) -> int:
        return hash((self.twin, self.sigma))

    # -- canonical form ------------------------------------------------------
    def code(self, include_mirror: bool = True) -> bytes:
        return canonical_code(self, include_mirror)


def _check_perm(arr: Sequence[int], name: str) -> None:
    n = len(arr)
    seen = [False] * n
    for x in arr:
        if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
            raise NotPermutation(f"{name} is not a permutation of range({n})")
        seen[x] = True


def build_map(twin: Sequence[int], sigma: Sequence[int]) -> PlanarMap:
    """Validate dart data and return a :class:`PlanarMap`.

    Raises:
        NotPermutation: an array is not a permutation or lengths differ.
        NotInvolution: ``twin`` has a fixed point or is not an involution.
        Disconnected: the darts do not form one connected map.
        GenusNotZero: ``V - E + F != 2``.
    """
    twin = [int(x) for x in twin]
    sigma = [int(x) for x in sigma]
    if len(twin) != len(sigma) or len(twin) % 2:
        raise NotPermutation("twin and sigma must have equal even length")
    _check_perm(twin, "twin")
    _check_perm(sigma, "sigma")
    for d, t in enumerate(twin):
        if t == d or twin[t] != d:
            raise NotInvolution(f"twin is not a fixed-point-free involution at dart {d}")
    if not twin:
        raise Disconnected("empty map")
    seen = [False] * len(twin)
    seen[0] = True
    stack = [0]
    while stack:
        d = stack.pop()
        for e in (twin[d], sigma[d]):
            if not seen[e]:
                seen[e] = True
                stack.append(e)
    if not all(seen):
        raise Disconnected("map is not connected")
    m = PlanarMap(twin, sigma)
    if m.n_vertices - m.n_edges + m.n_faces != 2:
        raise GenusNotZero(
            f"Euler characteristic {m.n_vertices - m.n_edges + m.n_faces} != 2")
    return m


def from_twin_phi(twin: Sequence[int], phi: Sequence[int]) -> PlanarMap:
    """Build a map from its edge pairing and face permutation.

    ``sigma = phi o twin`` since ``twin`` is an involution.
    """
    sigma = [phi[twin[d]] for d in range(len(twin))]
    return build_map(twin, sigma)


def from_rotation(rotation: Sequence[Sequence[object]]) -> PlanarMap:
    """Build a map from per-vertex counterclockwise lists of edge labels.

    Every edge label must occur exactly twice overall (twice at one vertex
    for a loop).  Darts are numbered in reading order.
    """
    twin: List[int] = []
    sigma: List[int] = []
    where: Dict[object, List[int]] = {}
    d = 0
    for ring in rotation:
        k = len(ring)
        for i, lab in enumerate(ring):
            sigma.append(d - i + (i + 1) % k)
            where.setdefault(lab, []).append(d + 0)
            d += 1
    twin = [0] * d
    for lab, ds in where.items():
        if len(ds) != 2:
            raise NotInvolution(f"edge label {lab!r} occurs {len(ds)} times")
        a, b = ds
        twin[a], twin[b] = b, a
    return build_map(twin, sigma)


def dual(m: PlanarMap) -> PlanarMap:
    """Dual map on the same darts.

    Convention: the dual keeps ``twin`` and uses ``sigma* = sigma^-1 o twin``,
    so its face permutation is ``sigma^-1``: the faces of the dual are
    exactly the vertex orbits of ``m`` (same dart sets), and the vertex of
    dart ``d`` in the dual is the face of ``twin[d]`` in ``m``.
    """
    inv = m.sigma_inv()
    return PlanarMap(m.twin, [inv[t] for t in m.twin])


def truncate(m: PlanarMap) -> PlanarMap:
    """Truncation: every degree-k vertex becomes a k-gon.

    Dart ``d`` of ``m`` yields a vertex with darts ``3d`` (along the old edge),
    ``3d+1`` (towards the corner of ``sigma[d]``) and ``3d+2`` (towards
    ``sigma^-1[d]``).  The face of ``3d+2`` is the polygon replacing the
    origin of ``d``; the face of ``3d+1`` is the old face left of ``d``.
    """
    inv = m.sigma_inv()
    size = 3 * m.dart_count
    twin = [0] * size
    sigma = [0] * size
    for d in range(m.dart_count):
        b = 3 * d
        sigma[b], sigma[b + 1], sigma[b + 2] = b + 1, b + 2, b
        twin[b] = 3 * m.twin[d]
        twin[b + 1] = 3 * m.sigma[d] + 2
        twin[b + 2] = 3 * inv[d] + 1
    return PlanarMap(twin, sigma)


def face_bipartition(m: PlanarMap) -> List[int]:
    """Proper 2-coloring of the faces (list indexed by face id).

    Face 0's class is 0; the other valid coloring is the complement.

    Raises:
        OddVertexDegree: some vertex has odd degree (no such coloring).
    """
    if any(len(v) % 2 for v in m.vertices):
        raise OddVertexDegree("face 2-coloring needs all vertex degrees even")
    color = [-1] * m.n_faces
    color[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for d in m.faces[f]:
            g = m.face_of[m.twin[d]]
            if color[g] < 0:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise OddVertexDegree("faces are not 2-colorable")
    return color


# -- canonical codes -----------------------------------------------------------

def _bfs_code(twin: Sequence[int], sigma: Sequence[int], start: int,
              best: Optional[List[int]]) -> Optional[List[int]]:
    """Code of the BFS labeling rooted at ``start``.

    Darts are numbered in discovery order; for each dart in label order the
    labels of its twin and of its rotation successor are written.  Returns
    None as soon as the partial code exceeds ``best``.
    """
    n = len(twin)
    label = {start: 0}
    order = [start]
    code: List[int] = []
    pos = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (twin[d], sigma[d]):
            lab = label.get(e)
            if lab is None:
                lab = len(order)
                label[e] = lab
                order.append(e)
            if best is not None:
                b = best[pos]
                if lab > b:
                    return None
                if lab < b:
                    best = None
            code.append(lab)
            pos += 1
    return code


def _root_keys(m: PlanarMap) -> List[tuple]:
    fs = [len(f) for f in m.faces]
    deg = [len(v) for v in m.vertices]
    return [(deg[m.vertex_of[d]], deg[m.vertex_of[m.twin[d]]],
             fs[m.face_of[d]], fs[m.face_of[m.twin[d]]])
            for d in range(m.dart_count)]


def _pack(key: tuple, codes: List[int], n: int) -> bytes:
    width = 1 if n < 256 else 2 if n < 65536 else 4
    head = n.to_bytes(4, "big") + bytes(min(x, 255) for x in key)
    return head + b"".join(x.to_bytes(width, "big") for x in codes)


def canonical_code(m: PlanarMap, include_mirror: bool = True) -> bytes:
    """Byte string equal for two maps iff they are isomorphic.

    With ``include_mirror`` the isomorphism may reverse orientation.  Roots
    are restricted to darts with the minimal local invariant (degrees of
    both ends, sizes of both incident faces); the code is the minimum BFS
    code over those roots, prefixed by the invariant.
    """
    cached = m._code_cache.get(include_mirror)
    if cached is not None:
        return cached
    if include_mirror:
        out = min(canonical_code(m, False), canonical_code(m.mirror(), False))
    else:
        keys = _root_keys(m)
        lo = min(keys)
        best: Optional[List[int]] = None
        for s in range(m.dart_count):
            if keys[s] != lo:
                continue
            c = _bfs_code(m.twin, m.sigma, s, best)
            if c is not None and (best is None or c < best):
                best = c
        out = _pack(lo, best, m.dart_count)
    m._code_cache[include_mirror] = out
    return out


def decode_code(code: bytes) -> PlanarMap:
    """Rebuild a map from :func:`canonical_code` output (the BFS labeling)."""
    n = int.from_bytes(code[:4], "big")
    width = 1 if n < 256 else 2 if n < 65536 else 4
    body = code[8:]
    if len(body) != 2 * n * width:
        raise MapError("malformed canonical code")
    vals = [int.from_bytes(body[i:i + width], "big") for i in range(0, len(body), width)]
    return build_map(vals[0::2], vals[1::2])


def is_isomorphic(a: PlanarMap, b: PlanarMap, include_mirror: bool = True) -> bool:
    return canonical_code(a, include_mirror) == canonical_code(b, include_mirror)


def is_chiral(m: PlanarMap) -> bool:
    """True if the map has no orientation-reversing automorphism."""
    return canonical_code(m, False) != canonical_code(m.mirror(), False)


# -- automorphisms -------------------------------------------------------------

def _extend(m: PlanarMap, src: int, dst: int, target_sigma: Sequence[int]) -> Optional[List[int]]:
    """Extend ``src -> dst`` to a dart bijection f with
    ``f(twin d) = twin f(d)`` and ``f(sigma d) = target_sigma f(d)``."""
    n = m.dart_count
    f = [-1] * n
    used = [False] * n
    f[src] = dst
    used[dst] = True
    stack = [src]
    twin, sigma = m.twin, m.sigma
    while stack:
        d = stack.pop()
        img = f[d]
        for nd, ni in ((twin[d], twin[img]), (sigma[d], target_sigma[img])):
            cur = f[nd]
            if cur < 0:
                if used[ni]:
                    return None
                f[nd] = ni
                used[ni] = True
                stack.append(nd)
            elif cur != ni:
                return None
    return f


def automorphisms(m: PlanarMap) -> List[Tuple[Tuple[int, ...], int]]:
    """All automorphisms as ``(dart permutation, parity)`` pairs.

    ``parity`` is +1 for orientation-preserving and -1 for
    orientation-reversing elements.  An orientation-reversing automorphism
    satisfies ``f(sigma d) = sigma^-1 f(d)``.  Identity comes first.
    """
    if m._auts is not None:
        return m._auts
    out: List[Tuple[Tuple[int, ...], int]] = []
    inv = m.sigma_inv()
    keys = _root_keys(m)
    src = keys.index(min(keys))
    key = _local_key(m, src)
    for parity, tsig in ((1, m.sigma), (-1, inv)):
        for dst in range(m.dart_count):
            if _local_key(m, dst, parity < 0) != key:
                continue
            f = _extend(m, src, dst, tsig)
            if f is not None:
                out.append((tuple(f), parity))
    out.sort(key=lambda t: (t[1] < 0, t[0]))
    m._auts = out
    return out


def _local_key(m: PlanarMap, d: int, mirrored: bool = False) -> tuple:
    fr = len(m.faces[m.face_of[d]])
    fl = len(m.faces[m.face_of[m.twin[d]]])
    if mirrored:
        fr, fl = fl, fr
    return (len(m.vertices[m.vertex_of[d]]), len(m.vertices[m.vertex_of[m.twin[d]]]), fr, fl)


def compose(f: Sequence[int], g: Sequence[int]) -> Tuple[int, ...]:
    """``(f o g)(d) = f[g[d]]``."""
    return tuple(f[x] for x in g)


def p_vector_ok(m: PlanarMap) -> bool:
    """Euler census check for 6-regular maps: sum p_k (3-k) == 6."""
    return sum(c * (3 - k) for k, c in m.p_vector().items()) == 6


def induced_vertex_perm(m: PlanarMap, f: Sequence[int]) -> List[int]:
    return [m.vertex_of[f[v[0]]] for v in m.vertices]


def induced_face_perm(m: PlanarMap, f: Sequence[int], parity: int = 1) -> List[int]:
    """Face permutation of an automorphism.

    An orientation-reversing automorphism sends the face on the right of a
    dart to the face on the left of its image.
    """
    if parity > 0:
        return [m.face_of[f[fc[0]]] for fc in m.faces]
    return [m.face_of[m.twin[f[fc[0]]]] for fc in m.faces]


def edge_ids(m: PlanarMap) -> List[int]:
    """Edge index of every dart (edges numbered by smaller dart)."""
    eid = [-1] * m.dart_count
    k = 0
    for d in range(m.dart_count):
        if eid[d] < 0:
            eid[d] = eid[m.twin[d]] = k
            k += 1
    return eid


def iter_edges(m: PlanarMap) -> Iterable[Tuple[int, int]]:
    for d in range(m.dart_count):
        if d < m.twin[d]:
            yield d, m.twin[d]
