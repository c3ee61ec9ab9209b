"""Exhaustive twin-pairing search for regular plane maps with bounded faces.

Vertices are created lazily; vertex ``i`` owns darts ``D*i .. D*i+D-1``
with the rotation fixed to the cyclic order.  The search repeatedly takes
the open face path with the most known darts and tries every partner for
its last dart, so faces close as early as possible.  A new vertex is only
ever entered through its dart 0, which removes relabelings of untouched
vertices.  Every map is produced once per root dart (up to symmetry);
callers deduplicate by canonical code.
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Sequence


def search_maps(degree: int, n_vertices: int, sizes: Sequence[int],
                size_caps: Optional[Dict[int, int]] = None) -> Iterator[List[int]]:
    """Yield complete twin arrays of connected ``degree``-regular maps.

    Only face sizes in ``sizes`` are allowed; ``size_caps`` bounds the
    number of faces of a given size.  Genus is not checked here.
    """
    D = degree
    total = D * n_vertices
    max_size = max(sizes)
    allowed = [False] * (max_size + 1)
    for s in sizes:
        allowed[s] = True
    caps = [10 ** 9] * (max_size + 1)
    for s, c in (size_caps or {}).items():
        if s <= max_size:
            caps[s] = c
    closed = [0] * (max_size + 1)
    twin = [-1] * total
    sig = [(d // D) * D + (d % D + 1) % D for d in range(total)]
    sig_inv = [(d // D) * D + (d % D - 1) % D for d in range(total)]
    state = {"used": 1, "paired": 0}

    def face_ok(d: int) -> bool:
        """Check the face through dart d after a pairing."""
        # walk forward
        cnt = 1
        e = d
        while True:
            t = twin[e]
            if t < 0:
                break
            e = sig[t]
            if e == d:
                if cnt > max_size or not allowed[cnt]:
                    return False
                return True
            cnt += 1
            if cnt > max_size:
                return False
        # open: walk backward from d
        e = d
        while True:
            p = twin[sig_inv[e]]
            if p < 0:
                break
            e = p
            cnt += 1
            if cnt > max_size:
                return False
        return True

    def closed_size(d: int) -> int:
        cnt = 1
        e = d
        while True:
            t = twin[e]
            if t < 0:
                return 0
            e = sig[t]
            if e == d:
                return cnt
            cnt += 1

    def pick() -> int:
        best = -1
        best_len = -1
        for x in range(state["used"] * D):
            if twin[x] >= 0:
                continue
            # length of known chain ending at x (its right face)
            ln = 0
            e = x
            while True:
                p = twin[sig_inv[e]]
                if p < 0 or p == x:
                    break
                e = p
                ln += 1
            if ln > best_len:
                best, best_len = x, ln
        return best

    def rec() -> Iterator[List[int]]:
        used = state["used"]
        if state["paired"] == used * D:
            if used == n_vertices:
                yield list(twin)
            return
        x = pick()
        cands = [y for y in range(used * D) if twin[y] < 0 and y != x]
        if used < n_vertices:
            cands.append(used * D)
        for y in cands:
            new_vertex = y == used * D
            if new_vertex:
                state["used"] = used + 1
            twin[x] = y
            twin[y] = x
            state["paired"] += 2
            ok = face_ok(x) and face_ok(y)
            if ok:
                # faces through phi(x) / phi(y) are the same as those through
                # sigma(y) / sigma(x): check them and count new closed faces
                ok = face_ok(sig[y]) and face_ok(sig[x])
            bumped = []
            if ok:
                for d in {x, y}:
                    s = closed_size(d)
                    if s:
                        bumped.append(s)
                # a face closed through both x and y is counted once
                if len(bumped) == 2 and _same_face(x, y, twin, sig):
                    bumped.pop()
                for s in bumped:
                    closed[s] += 1
                if all(closed[s] <= caps[s] for s in bumped):
                    yield from rec()
                for s in bumped:
                    closed[s] -= 1
            state["paired"] -= 2
            twin[x] = -1
            twin[y] = -1
            if new_vertex:
                state["used"] = used

    yield from rec()


def _same_face(x: int, y: int, twin, sig) -> bool:
    e = x
    while True:
        e = sig[twin[e]]
        if e == y:
            return True
        if e == x:
            return False
