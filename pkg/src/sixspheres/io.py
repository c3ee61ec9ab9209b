"""File formats, the census store and SVG rendering.

* **dartlist** (native): one map per line,
  ``n_darts twin_0 .. twin_{n-1} sigma_0 .. sigma_{n-1}``, decimal and
  space-separated.  It represents loops and multiple edges exactly.
* **planarcode**: the standard binary ``>>planar_code<<`` format (export
  only, loop-free maps only): per map the vertex count and, for each
  vertex, its neighbours (1-based) in clockwise order followed by 0.
* **jsonl**: one :class:`~sixspheres.records.GraphRecord` per line.  The
  :class:`Store` keeps an index file ``<path>.idx.json`` mapping
  ``"n,p1"`` to the byte offsets of the records of that cell.
"""

from __future__ import annotations

import json
import math
import os
from typing import Dict, IO, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .map_core import MapError, PlanarMap, build_map

PLANAR_CODE_HEADER = b">>planar_code<<"


class FormatError(ValueError):
    """Malformed input, or a map the format cannot represent."""


# -- dart list ---------------------------------------------------------------------

def to_dartlist(m: PlanarMap) -> str:
    return " ".join(map(str, [m.dart_count, *m.twin, *m.sigma]))


def from_dartlist(line: str) -> PlanarMap:
    try:
        vals = [int(x) for x in line.split()]
    except ValueError as exc:
        raise FormatError(f"non-integer token in dart list: {exc}") from exc
    if not vals or len(vals) != 1 + 2 * vals[0]:
        raise FormatError("dart list length does not match its dart count")
    n = vals[0]
    try:
        return build_map(vals[1:1 + n], vals[1 + n:])
    except MapError as exc:
        raise FormatError(str(exc)) from exc


def read_dartlist(fh: IO[str]) -> Iterator[PlanarMap]:
    for line in fh:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_dartlist(line)


# -- planar code -------------------------------------------------------------------------

def to_planar_code(m: PlanarMap) -> bytes:
    """Entry for one map (without the file header).

    Neighbours are listed clockwise, i.e. in reversed rotation order.
    """
    if any(m.vertex_of[d] == m.vertex_of[m.twin[d]] for d in range(m.dart_count)):
        raise FormatError("planar_code cannot represent loops")
    n = m.n_vertices
    width = 1 if n < 256 else 2
    out = bytearray()
    if width == 2:
        out += b"\x00"
    out += n.to_bytes(width, "little")
    for v in m.vertices:
        for d in reversed(v):
            out += (m.vertex_of[m.twin[d]] + 1).to_bytes(width, "little")
        out += (0).to_bytes(width, "little")
    return bytes(out)


def write_planar_code(maps: Iterable[PlanarMap], fh: IO[bytes]) -> int:
    fh.write(PLANAR_CODE_HEADER)
    count = 0
    for m in maps:
        fh.write(to_planar_code(m))
        count += 1
    return count


# -- jsonl store ---------------------------------------------------------------------------

class Store:
    """Append-only JSON-lines store keyed by canonical code."""

    def __init__(self, path: str):
        self.path = path
        self.index_path = path + ".idx.json"
        self.index: Dict[str, List[int]] = {}
        self.codes = set()
        if os.path.exists(self.index_path):
            with open(self.index_path) as fh:
                self.index = json.load(fh)
        if os.path.exists(path):
            from .records import GraphRecord

            with open(path) as fh:
                for line in fh:
                    if line.strip():
                        self.codes.add(GraphRecord.from_json(line).canonical_code)

    def add(self, records: Iterable) -> int:
        """Append records not yet stored; returns the number written."""
        written = 0
        with open(self.path, "ab") as fh:
            for r in records:
                if r.canonical_code in self.codes:
                    continue
                offset = fh.tell()
                fh.write((r.to_json() + "\n").encode())
                self.index.setdefault(f"{r.n},{r.p1}", []).append(offset)
                self.codes.add(r.canonical_code)
                written += 1
        with open(self.index_path, "w") as fh:
            json.dump(self.index, fh, sort_keys=True)
        return written

    def has_cell(self, n: int, p1: int) -> bool:
        return f"{n},{p1}" in self.index

    def mark_cell(self, n: int, p1: int) -> None:
        self.index.setdefault(f"{n},{p1}", [])

    def cell(self, n: int, p1: int) -> List:
        from .records import GraphRecord

        out = []
        with open(self.path, "rb") as fh:
            for off in self.index.get(f"{n},{p1}", []):
                fh.seek(off)
                out.append(GraphRecord.from_json(fh.readline().decode()))
        return out

    def __iter__(self):
        from .records import GraphRecord

        if not os.path.exists(self.path):
            return iter(())
        with open(self.path) as fh:
            return iter([GraphRecord.from_json(l) for l in fh if l.strip()])


# -- SVG rendering -----------------------------------------------------------------------------

def _sphere_layout(m: PlanarMap, seed: int = 0, iterations: int = 400) -> np.ndarray:
    """Vertex positions on the unit sphere by a spring/repulsion relaxation."""
    rng = np.random.default_rng(seed)
    n = m.n_vertices
    pos = rng.normal(size=(n, 3))
    pos /= np.linalg.norm(pos, axis=1, keepdims=True)
    if n == 1:
        return pos
    edges = np.array([(m.vertex_of[d], m.vertex_of[m.twin[d]])
                      for d in range(m.dart_count)
                      if d < m.twin[d] and m.vertex_of[d] != m.vertex_of[m.twin[d]]], dtype=int)
    step = 0.1
    for _ in range(iterations):
        diff = pos[:, None, :] - pos[None, :, :]
        dist2 = (diff ** 2).sum(-1) + np.eye(n)
        force = (diff / dist2[..., None] ** 1.5).sum(1) * 0.05
        if len(edges):
            e = pos[edges[:, 1]] - pos[edges[:, 0]]
            np.add.at(force, edges[:, 0], e)
            np.add.at(force, edges[:, 1], -e)
        pos += step * force
        pos /= np.linalg.norm(pos, axis=1, keepdims=True)
    return pos


def render_svg(m: PlanarMap, title: str = "", size: int = 400, seed: int = 0) -> str:
    """Best-effort drawing: sphere layout projected stereographically.

    Multiple edges are drawn as arcs bent by their rank among the parallel
    copies and loops as small circles; the drawing is for inspection only.
    """
    pos = _sphere_layout(m, seed)
    pole = -pos.mean(0)
    if np.linalg.norm(pole) < 1e-9:
        pole = np.array([0.0, 0.0, 1.0])
    pole /= np.linalg.norm(pole)
    # rotate so that the pole is (0,0,1), then project from it
    z = pole
    x = np.cross(z, [1.0, 0, 0] if abs(z[0]) < 0.9 else [0, 1.0, 0])
    x /= np.linalg.norm(x)
    y = np.cross(z, x)
    local = pos @ np.stack([x, y, z], axis=1)
    xy = local[:, :2] / (1 - np.minimum(local[:, 2:3], 0.999))
    lo, hi = xy.min(0), xy.max(0)
    span = max((hi - lo).max(), 1e-9)
    pad = size * 0.12
    pts = (xy - lo) / span * (size - 2 * pad) + pad
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" '
             f'viewBox="0 0 {size} {size + 30}">', '<rect width="100%" height="100%" fill="white"/>']
    rank: Dict[Tuple[int, int], int] = {}
    for d in range(m.dart_count):
        t = m.twin[d]
        if d > t:
            continue
        a, b = m.vertex_of[d], m.vertex_of[t]
        key = (min(a, b), max(a, b))
        k = rank.get(key, 0)
        rank[key] = k + 1
        (x1, y1), (x2, y2) = pts[a], pts[b]
        if a == b:
            r = 12 + 6 * k
            ang = 2 * math.pi * m.vertices[a].index(d) / len(m.vertices[a])
            cx, cy = x1 + r * math.cos(ang), y1 + r * math.sin(ang)
            parts.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{r:.1f}" fill="none" stroke="black"/>')
            continue
        bend = (k + 1) // 2 * (1 if k % 2 else -1) * 14
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        nx, ny = -(y2 - y1), x2 - x1
        ln = math.hypot(nx, ny) or 1.0
        qx, qy = mx + bend * nx / ln, my + bend * ny / ln
        parts.append(f'<path d="M{x1:.1f},{y1:.1f} Q{qx:.1f},{qy:.1f} {x2:.1f},{y2:.1f}" '
                     f'fill="none" stroke="black"/>')
    for i, (px, py) in enumerate(pts):
        parts.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="4" fill="black"/>')
    if title:
        parts.append(f'<text x="10" y="{size + 20}" font-family="sans-serif" font-size="14">{title}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
