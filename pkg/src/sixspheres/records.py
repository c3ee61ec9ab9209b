"""Analysed sphere records (the unit of the census store)."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional

from .circuits import central_circuits, tightness, zigzags, CENTRAL, ZIGZAG
from .map_core import PlanarMap, canonical_code, decode_code
from .symmetry import point_group


@dataclass
class GraphRecord:
    canonical_code: bytes
    n: int
    p_vector: Dict[int, int]
    group: str
    z_vector: str
    c_vector: str
    tight_z: str
    tight_c: str
    n_zigzags: int
    n_central: int
    simple_z: bool
    simple_c: bool
    provenance: str = ""
    extra: Dict[str, object] = field(default_factory=dict)

    @property
    def p1(self) -> int:
        return self.p_vector.get(1, 0)

    @property
    def p2(self) -> int:
        return self.p_vector.get(2, 0)

    def code_hex(self) -> str:
        return self.canonical_code.hex()

    def to_map(self) -> PlanarMap:
        return decode_code(self.canonical_code)

    def to_json(self) -> str:
        d = asdict(self)
        d["canonical_code"] = self.code_hex()
        d["p_vector"] = {str(k): v for k, v in sorted(self.p_vector.items())}
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "GraphRecord":
        d = json.loads(line)
        d["canonical_code"] = bytes.fromhex(d["canonical_code"])
        d["p_vector"] = {int(k): v for k, v in d["p_vector"].items()}
        return cls(**d)


def analyze(m: PlanarMap, provenance: str = "", code: Optional[bytes] = None) -> GraphRecord:
    """Compute the full record (group, circuit vectors, tightness) of a map."""
    code = code if code is not None else canonical_code(m, True)
    z = zigzags(m)
    c = central_circuits(m)
    tz = tightness(m, ZIGZAG)
    tc = tightness(m, CENTRAL)
    return GraphRecord(
        canonical_code=code,
        n=m.n_vertices,
        p_vector={k: v for k, v in sorted(m.p_vector().items())},
        group=point_group(m).name,
        z_vector=z.render(),
        c_vector=c.render(),
        tight_z=tz.status,
        tight_c=tc.status,
        n_zigzags=len(z),
        n_central=len(c),
        simple_z=all(x.is_simple for x in z.circuits),
        simple_c=all(x.is_simple for x in c.circuits),
        provenance=provenance,
    )
