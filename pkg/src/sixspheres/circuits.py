"""Zigzags, central circuits, intersection types, railroads and tightness.

Conventions (see :mod:`sixspheres.map_core`): ``phi = sigma o twin`` walks
a face with the face on the right of every dart.

* A **zigzag** (Petrie walk) leaves each vertex by the edge next to the
  entering one, alternately on the right (``sigma``) and on the left
  (``sigma^-1``), so two consecutive edges share a face and three do not.
  It is stored as its sequence of darts; lengths sum to ``2E`` because
  every edge is traversed twice overall.
* A **central circuit** leaves each vertex of degree ``2k`` by the
  opposite edge ``sigma^k(twin d)``; lengths sum to ``E``.

Intersection types: two oriented zigzag passages through an edge are of
type I when they traverse it in opposite directions and of type II when in
the same direction.  Two oriented central-circuit passages through a
vertex of degree 6 are of type I when their outgoing darts are 60 degrees
apart and of type II when 120 degrees apart.

The *canonical orientation* orients every edge clockwise around the faces
of one bipartition class, i.e. along the dart whose right face lies in
that class; every circuit is consistently oriented by it and then all
intersections are of type II.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .map_core import OddVertexDegree, PlanarMap, build_map, face_bipartition, from_rotation


class IrregularPatch(ValueError):
    """A patch boundary does not satisfy the regularity condition."""


ZIGZAG = "zigzag"
CENTRAL = "central"


@dataclass(frozen=True)
class CircuitSymbol:
    length: int
    alpha1: int = 0
    alpha2: int = 0

    def render(self, multiplicity: int = 1) -> str:
        s = str(self.length)
        if self.alpha1 or self.alpha2:
            s += "_{%d,%d}" % (self.alpha1, self.alpha2)
        if multiplicity > 1:
            s += "^%d" % multiplicity
        return s


@dataclass
class Circuit:
    kind: str
    darts: Tuple[int, ...]
    symbol: CircuitSymbol

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def is_simple(self) -> bool:
        return self.symbol.alpha1 == 0 and self.symbol.alpha2 == 0


@dataclass
class CircuitSet:
    kind: str
    circuits: List[Circuit]
    matrix: List[List[Tuple[int, int]]] = field(default_factory=list)

    @property
    def vector(self) -> Counter:
        return Counter(c.symbol for c in self.circuits)

    def render(self) -> str:
        return render_vector(self.vector)

    def lengths(self) -> List[int]:
        return sorted(c.length for c in self.circuits)

    def __len__(self) -> int:
        return len(self.circuits)


def render_vector(vec: Dict[CircuitSymbol, int]) -> str:
    """Render a z- or c-vector, e.g. ``10^3, 11_{0,1}^3, 22_{0,3}^3``."""
    items = sorted(vec.items(), key=lambda kv: (kv[0].length, kv[0].alpha1, kv[0].alpha2))
    return ", ".join(sym.render(mult) for sym, mult in items)


def parse_vector(text: str) -> Counter:
    """Inverse of :func:`render_vector`."""
    import re

    pattern = re.compile(r"\s*(\d+)(?:_\{(\d+),(\d+)\})?(?:\^(\d+))?\s*(?:,|$)")
    out: Counter = Counter()
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = pattern.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"bad circuit symbol at {text[pos:]!r}")
        sym = CircuitSymbol(int(mt.group(1)), int(mt.group(2) or 0), int(mt.group(3) or 0))
        out[sym] += int(mt.group(4) or 1)
        pos = mt.end()
    return out


# -- tracing --------------------------------------------------------------------

def _zigzag_orbits(m: PlanarMap) -> List[Tuple[int, ...]]:
    """One dart sequence per zigzag (one of its two directions)."""
    inv = m.sigma_inv()
    seen = set()
    out = []
    for d0 in range(m.dart_count):
        for s0 in (1, -1):
            if (d0, s0) in seen:
                continue
            seq = []
            states = []
            d, s = d0, s0
            while (d, s) not in seen:
                seen.add((d, s))
                states.append((d, s))
                seq.append(d)
                t = m.twin[d]
                d = m.sigma[t] if s > 0 else inv[t]
                s = -s
            # mark the reverse traversal as seen
            # reverse of state (d, s): walk backwards with darts twinned
            for (d1, s1) in states:
                # the reverse walk traverses twin(d1); the turn taken before
                # d1 (with sign -s1) becomes the turn after twin(d1)
                seen.add((m.twin[d1], s1))
            out.append(tuple(seq))
    return out


def _central_orbits(m: PlanarMap) -> List[Tuple[int, ...]]:
    if any(len(v) % 2 for v in m.vertices):
        raise OddVertexDegree("central circuits need all vertex degrees even")
    seen = set()
    out = []
    for d0 in range(m.dart_count):
        if d0 in seen:
            continue
        seq = []
        d = d0
        while d not in seen:
            seen.add(d)
            seq.append(d)
            t = m.twin[d]
            k = len(m.vertices[m.vertex_of[t]]) // 2
            for _ in range(k):
                t = m.sigma[t]
            d = t
        for x in seq:
            seen.add(m.twin[x])
        out.append(tuple(seq))
    return out


def _position(m: PlanarMap) -> List[int]:
    pos = [0] * m.dart_count
    for v in m.vertices:
        for i, d in enumerate(v):
            pos[d] = i
    return pos


def _edge(m: PlanarMap, d: int) -> int:
    return min(d, m.twin[d])


def _zigzag_passages(m: PlanarMap, orbits) -> Dict[int, List[Tuple[int, int]]]:
    """edge -> list of (circuit index, dart used)."""
    out: Dict[int, List[Tuple[int, int]]] = {}
    for ci, seq in enumerate(orbits):
        for d in seq:
            out.setdefault(_edge(m, d), []).append((ci, d))
    return out


def _central_passages(m: PlanarMap, orbits) -> Dict[int, List[Tuple[int, int]]]:
    """vertex -> list of (circuit index, outgoing dart)."""
    out: Dict[int, List[Tuple[int, int]]] = {}
    for ci, seq in enumerate(orbits):
        for d in seq:
            out.setdefault(m.vertex_of[d], []).append((ci, d))
    return out


def _pair_type(m: PlanarMap, kind: str, a: int, b: int, pos) -> int:
    """1 or 2: intersection type of two oriented passages (darts a, b)."""
    if kind == ZIGZAG:
        return 2 if a == b else 1
    deg = len(m.vertices[m.vertex_of[a]])
    delta = (pos[b] - pos[a]) % deg
    delta = min(delta, deg - delta)
    return 1 if delta % 2 else 2


def _analyze(m: PlanarMap, kind: str, orbits, orientation: Optional[Sequence[bool]] = None) -> CircuitSet:
    """Build the circuit set; ``orientation[i]`` reverses circuit ``i``."""
    if orientation is not None:
        orbits = [tuple(reversed([m.twin[d] for d in seq])) if rev else seq
                  for seq, rev in zip(orbits, orientation)]
    pos = _position(m)
    passages = _zigzag_passages(m, orbits) if kind == ZIGZAG else _central_passages(m, orbits)
    k = len(orbits)
    counts = [[[0, 0] for _ in range(k)] for _ in range(k)]
    for plist in passages.values():
        for i in range(len(plist)):
            for j in range(i + 1, len(plist)):
                ci, a = plist[i]
                cj, b = plist[j]
                t = _pair_type(m, kind, a, b, pos)
                counts[ci][cj][t - 1] += 1
                if ci != cj:
                    counts[cj][ci][t - 1] += 1
    circuits = []
    for ci, seq in enumerate(orbits):
        a1, a2 = counts[ci][ci]
        circuits.append(Circuit(kind, tuple(seq), CircuitSymbol(len(seq), a1, a2)))
    matrix = [[(counts[i][j][0], counts[i][j][1]) for j in range(k)] for i in range(k)]
    return CircuitSet(kind, circuits, matrix)


def zigzags(m: PlanarMap, oriented: bool = True) -> CircuitSet:
    """All zigzags; canonically oriented when the map is Eulerian."""
    orbits = _zigzag_orbits(m)
    if oriented and not any(len(v) % 2 for v in m.vertices):
        return _analyze(m, ZIGZAG, orbits, _canonical_flags(m, orbits))
    return _analyze(m, ZIGZAG, orbits)


def central_circuits(m: PlanarMap, oriented: bool = True) -> CircuitSet:
    """All central circuits, canonically oriented."""
    orbits = _central_orbits(m)
    if oriented:
        return _analyze(m, CENTRAL, orbits, _canonical_flags(m, orbits))
    return _analyze(m, CENTRAL, orbits)


def _forward(m: PlanarMap, face_class: int = 0) -> List[bool]:
    color = face_bipartition(m)
    return [color[m.face_of[d]] == face_class for d in range(m.dart_count)]


def _canonical_flags(m: PlanarMap, orbits, face_class: int = 0) -> List[bool]:
    fwd = _forward(m, face_class)
    flags = []
    for seq in orbits:
        votes = {fwd[d] for d in seq}
        if len(votes) != 1:
            raise AssertionError("circuit is not consistently oriented")
        flags.append(not fwd[seq[0]])
    return flags


def canonical_orientation(m: PlanarMap, kind: str = CENTRAL, face_class: int = 0) -> CircuitSet:
    """Circuits oriented clockwise around the faces of one bipartition class.

    Raises:
        OddVertexDegree: some vertex has odd degree.
    """
    orbits = _zigzag_orbits(m) if kind == ZIGZAG else _central_orbits(m)
    return _analyze(m, kind, orbits, _canonical_flags(m, orbits, face_class))


def reorient(m: PlanarMap, cs: CircuitSet, flip: Sequence[int]) -> CircuitSet:
    """Recompute the set after reversing the circuits whose indices are given."""
    flags = [i in set(flip) for i in range(len(cs.circuits))]
    return _analyze(m, cs.kind, [c.darts for c in cs.circuits], flags)


def intersection_matrix(cs: CircuitSet) -> List[List[Tuple[int, int]]]:
    """Entry (i, j) = (type-I count, type-II count); diagonal = self-intersections."""
    return cs.matrix


def intersection_sizes(cs: CircuitSet) -> List[List[int]]:
    return [[a + b for a, b in row] for row in cs.matrix]


# -- sides, railroads, tightness -----------------------------------------------------

def _sides(m: PlanarMap, c: Circuit) -> Tuple[List[int], List[int]]:
    """Faces along the right and the left of a circuit, one per edge passage."""
    right = [m.face_of[d] for d in c.darts]
    left = [m.face_of[m.twin[d]] for d in c.darts]
    return right, left


def _phi(m: PlanarMap, d: int) -> int:
    return m.sigma[m.twin[d]]


def _face_len(m: PlanarMap, d: int) -> int:
    return len(m.faces[m.face_of[d]])


def _c_partner(m: PlanarMap, seq: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Central circuit parallel to ``seq`` on its left through a ring of 3-gons."""
    s = m.sigma
    L = len(seq)
    beta = []
    for k, c in enumerate(seq):
        r1 = s[c]
        r2 = s[r1]
        nxt = seq[(k + 1) % L]
        if _face_len(m, r1) != 3 or _face_len(m, r2) != 3:
            return None
        # triangle (a_k, b_{k+1}, a_{k+1}) left of c_k
        if _phi(m, _phi(m, r1)) != m.twin[c]:
            return None
        if _phi(m, r1) != m.twin[s[s[nxt]]]:
            return None
        b = _phi(m, r2)
        if _phi(m, b) != m.twin[r1]:
            return None
        beta.append(b)
    for k, b in enumerate(beta):
        t = m.twin[b]
        t = s[s[s[t]]]
        if t != beta[(k + 1) % L]:
            return None
    if set(beta) & set(seq) or set(m.twin[b] for b in beta) & set(seq):
        return None
    return tuple(beta)


def _z_partner(m: PlanarMap, seq: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Edges of a zigzag parallel to ``seq`` on its left through a ring of 3-gons.

    Consecutive zigzag edges share a face alternately on the left and on the
    right.  Each left face must be a 3-gon; across its third edge lies
    another 3-gon whose two remaining edges belong to the parallel zigzag.
    The returned darts are checked against the real zigzags by the caller.
    """
    L = len(seq)
    if L % 2:
        return None
    left = [m.face_of[m.twin[d]] for d in seq]
    for off in (0, 1):
        if all(left[(i + off) % L] == left[(i + off + 1) % L] for i in range(0, L, 2)):
            break
    else:
        return None
    out: List[int] = []
    for i in range(off, off + L, 2):
        a = m.twin[seq[i % L]]
        f = m.face_of[a]
        if len(m.faces[f]) != 3:
            return None
        used = {a, m.twin[seq[(i + 1) % L]]}
        third = [d for d in m.faces[f] if d not in used]
        if len(third) != 1:
            return None
        t = m.twin[third[0]]
        if _face_len(m, t) != 3:
            return None
        x = _phi(m, t)
        out += [x, _phi(m, x)]
    return tuple(out)


@dataclass
class Railroad:
    kind: str
    circuit: int
    partner: int
    length: int


def railroads(m: PlanarMap, kind: str = CENTRAL, cs: Optional[CircuitSet] = None) -> List[Railroad]:
    """All pairs of circuits bounding a ring of 3-gons."""
    cs = cs or (central_circuits(m) if kind == CENTRAL else zigzags(m))
    edge_sets = {}
    for i, c in enumerate(cs.circuits):
        edge_sets.setdefault(tuple(sorted(_edge(m, d) for d in c.darts)), []).append(i)
    found = set()
    out = []
    for i, c in enumerate(cs.circuits):
        for seq in (c.darts, tuple(reversed([m.twin[d] for d in c.darts]))):
            partner = _c_partner(m, seq) if kind == CENTRAL else _z_partner(m, seq)
            if partner is None:
                continue
            key = tuple(sorted(_edge(m, d) for d in partner))
            for j in edge_sets.get(key, []):
                if j == i:
                    continue
                pair = (min(i, j), max(i, j))
                if pair not in found:
                    found.add(pair)
                    out.append(Railroad(kind, pair[0], pair[1], c.length))
    return out


@dataclass
class TightnessReport:
    kind: str
    status: str
    railroads: List[Railroad]
    s_value: int
    n_circuits: int

    @property
    def tight(self) -> bool:
        return self.status == "tight"

    @property
    def weakly_tight(self) -> bool:
        return self.status in ("tight", "weakly_tight")


def is_tight(m: PlanarMap, cs: CircuitSet) -> bool:
    """Every circuit has a 1-gon or 2-gon along each of its two sides."""
    for c in cs.circuits:
        right, left = _sides(m, c)
        if not any(len(m.faces[f]) < 3 for f in right):
            return False
        if not any(len(m.faces[f]) < 3 for f in left):
            return False
    return True


def tightness(m: PlanarMap, kind: str = CENTRAL) -> TightnessReport:
    cs = central_circuits(m) if kind == CENTRAL else zigzags(m)
    rr = railroads(m, kind, cs)
    s_value = m.p(1) + 2 * m.p(2)
    if is_tight(m, cs):
        status = "tight"
    elif not rr:
        status = "weakly_tight"
    else:
        status = "neither"
    if status == "tight" and rr:
        raise AssertionError("a tight sphere cannot have a railroad")
    return TightnessReport(kind, status, rr, s_value, len(cs))


def is_knotted(cs: CircuitSet) -> bool:
    return len(cs.circuits) == 1


# -- railroad insertion (used by the series constructors) ------------------------------

def insert_c_railroad(m: PlanarMap, seq: Sequence[int], shift: int = 0) -> PlanarMap:
    """Insert a ring of 3-gons along a simple central circuit of a 6-regular map.

    Every vertex of the circuit is split into two; the old circuit becomes
    two parallel circuits joined by ``2 L`` new 3-gons.  ``shift`` rotates
    the gluing of the far side along the circuit by that many steps.
    """
    L = len(seq)
    vs = [m.vertex_of[d] for d in seq]
    if len(set(vs)) < L:
        raise ValueError("railroad insertion needs a simple central circuit")
    pos = {v: k for k, v in enumerate(vs)}

    def lab(d: int):
        return ("e", min(d, m.twin[d]))

    rot: List[List[object]] = []
    s = m.sigma
    for vi, v in enumerate(m.vertices):
        if vi not in pos:
            rot.append([lab(d) for d in v])
            continue
        k = pos[vi]
        c = seq[k]
        s1 = s[c]
        s2 = s[s1]
        s4 = s[s[s2]]
        s5 = s[s4]
        rot.append([("ca", k), lab(s1), lab(s2), ("ca", (k - 1) % L), ("r", k, 0), ("r", k, 1)])
        rot.append([("cb", k), ("r", (k - shift) % L, 0), ("r", (k - shift - 1) % L, 1),
                    ("cb", (k - 1) % L), lab(s4), lab(s5)])
    return from_rotation(rot)


# -- local Euler formula ------------------------------------------------------------------

@dataclass
class PatchReport:
    t_ob: int
    t_ac: int
    p2: int
    holds: bool


def patch_euler_check(t_ob: int, t_ac: int, p2: int, p1: int = 0) -> PatchReport:
    """Check ``6 - t_ob - 2 t_ac = 2 p2' `` for a regular patch.

    ``t_ob`` / ``t_ac`` count the obtuse / acute corners of the boundary and
    ``p2'`` is the weighted count of small faces inside (a 1-gon weighs 2,
    a 2-gon 1, so ``p2' = p2 + 2 p1``).
    """
    if t_ob < 0 or t_ac < 0 or p2 < 0 or p1 < 0:
        raise IrregularPatch("negative corner or face counts")
    if t_ob + 2 * t_ac > 6:
        raise IrregularPatch("a regular patch has total corner weight at most 6")
    weighted = p2 + 2 * p1
    return PatchReport(t_ob, t_ac, weighted, 6 - t_ob - 2 * t_ac == 2 * weighted)


def circuit_interior(m: PlanarMap, c: Circuit, side: str = "left") -> Tuple[int, int]:
    """(p1, p2) of the faces on one side of a simple circuit.

    The two sides of a simple circuit are discs; the faces of a side are
    found by flooding from the side faces without crossing circuit edges.
    """
    cut = {_edge(m, d) for d in c.darts}
    start = [m.face_of[m.twin[d]] if side == "left" else m.face_of[d] for d in c.darts]
    seen = set(start)
    stack = list(start)
    while stack:
        f = stack.pop()
        for d in m.faces[f]:
            if _edge(m, d) in cut:
                continue
            g = m.face_of[m.twin[d]]
            if g not in seen:
                seen.add(g)
                stack.append(g)
    sizes = Counter(len(m.faces[f]) for f in seen)
    return sizes[1], sizes[2]


# -- corpus classification ------------------------------------------------------------------

TIGHT_BOUNDS = {0: 6, 1: 4, 2: 3, 3: 1}
WEAK_BOUNDS_STATED = {0: 12, 1: 9, 2: 6, 3: 3}
WEAK_BOUNDS_REFINED = {0: 9, 1: 7, 2: 5, 3: 3}


@dataclass
class CorpusReport:
    maxima: Dict[Tuple[int, str, str], int]
    knotted: Dict[Tuple[int, str], int]
    violations: List[str]


def classify_corpus(records: Iterable) -> CorpusReport:
    """Maxima of circuit counts per (p1, kind, tightness status).

    ``records`` yields objects with ``p1``, ``n_zigzags``,
    ``n_central``, ``tight_z`` and ``tight_c`` attributes (GraphRecord).
    """
    maxima: Dict[Tuple[int, str, str], int] = {}
    knotted: Dict[Tuple[int, str], int] = Counter()
    violations: List[str] = []
    for r in records:
        for kind, count, status in (("z", r.n_zigzags, r.tight_z), ("c", r.n_central, r.tight_c)):
            key = (r.p1, kind, status)
            maxima[key] = max(maxima.get(key, 0), count)
            if count == 1:
                knotted[(r.p1, kind)] += 1
            if status == "tight" and count > TIGHT_BOUNDS[r.p1]:
                violations.append(f"{r.code_hex()} tight {kind} count {count} > {TIGHT_BOUNDS[r.p1]}")
            if status in ("tight", "weakly_tight") and count > WEAK_BOUNDS_STATED[r.p1]:
                violations.append(f"{r.code_hex()} weakly tight {kind} count {count} > {WEAK_BOUNDS_STATED[r.p1]}")
    return CorpusReport(maxima, dict(knotted), violations)


# -- vector transformation under GC_{m,0} ------------------------------------------------

def gc_vector_prediction(z_vec: Dict[CircuitSymbol, int], c_vec: Dict[CircuitSymbol, int],
                         u: int) -> Tuple[Counter, Counter]:
    """The transformed (z, c) vectors of the stated vector theorem.

    Zigzag ``l^a`` gives ``(l t)^{a(1+u)}`` and ``(l t / 2)^{u a}``; central
    circuit ``k^b`` gives ``(2 k t)^{2 u b}`` and ``(k t)^{b(1+2u)}``, where
    ``t = 1 + 3u``; intersection indices are unchanged.
    """
    t = 1 + 3 * u
    z: Counter = Counter()
    c: Counter = Counter()
    for s, a in z_vec.items():
        z[CircuitSymbol(s.length * t, s.alpha1, s.alpha2)] += a * (1 + u)
        if (s.length * t) % 2:
            raise ValueError("odd transformed length")
        c[CircuitSymbol(s.length * t // 2, s.alpha1, s.alpha2)] += u * a
    for s, b in c_vec.items():
        z[CircuitSymbol(2 * s.length * t, s.alpha1, s.alpha2)] += 2 * u * b
        c[CircuitSymbol(s.length * t, s.alpha1, s.alpha2)] += b * (1 + 2 * u)
    return z, c


@dataclass
class GCVectorCheck:
    seed_n: int
    u: int
    parameter: Tuple[int, int]
    predicted_z: str
    predicted_c: str
    actual_z: str
    actual_c: str
    predicted_vertices: int
    actual_vertices: int

    @property
    def matches(self) -> bool:
        return self.predicted_z == self.actual_z and self.predicted_c == self.actual_c

    @property
    def sums_consistent(self) -> bool:
        """Predicted vectors sum to 6n and 3n for the actual vertex count."""
        return self.predicted_vertices == self.actual_vertices


def gc_vector_theorem_check(m: PlanarMap, u: int, k: int) -> GCVectorCheck:
    """Compare the predicted vectors with those of ``GC_{k,0}(m)``."""
    from .goldberg_coxeter import gc

    zp, cp = gc_vector_prediction(zigzags(m).vector, central_circuits(m).vector, u)
    g = gc(m, k, 0).members[0]
    zsum = sum(s.length * a for s, a in zp.items())
    return GCVectorCheck(
        seed_n=m.n_vertices, u=u, parameter=(k, 0),
        predicted_z=render_vector(zp), predicted_c=render_vector(cp),
        actual_z=zigzags(g).render(), actual_c=central_circuits(g).render(),
        predicted_vertices=zsum // 6, actual_vertices=g.n_vertices)


def gc_vector_theorem_report(m: PlanarMap, us: Sequence[int] = (1, 2)) -> List[GCVectorCheck]:
    """Checks of the vector theorem against both parameter readings.

    For each ``u`` the stated parameter ``(1+4u, 0)`` and the parameter
    ``(1+3u, 0)`` that the predicted sums imply are both tested.
    """
    out = []
    for u in us:
        out.append(gc_vector_theorem_check(m, u, 1 + 4 * u))
        out.append(gc_vector_theorem_check(m, u, 1 + 3 * u))
    return out
