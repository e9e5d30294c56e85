"""JSON problem files: ``{"ring": ..., "algebra": ..., "map": {"images": ...}}``.

Validation happens before any computation and every error names the
offending JSON path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .algebra import AlgebraSpec, algebra_from_json
from .errors import InputError
from .linmap import LinearMap, make_map
from .ring import RingSpec, ring_from_json


@dataclass
class ProblemFile:
    ring: RingSpec
    algebra: AlgebraSpec
    map: Optional[LinearMap] = None
    expect: dict = field(default_factory=dict)
    name: str = ""

    def to_json(self) -> dict:
        out = {"ring": self.ring.to_json(), "algebra": self.algebra.to_json()}
        if self.map is not None:
            out["map"] = self.map.to_json()
        if self.expect:
            out["expect"] = self.expect
        return out


def _int(v, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{path}: expected an integer, got {v!r}")
    return v


def map_from_json(obj, algebra: AlgebraSpec, path: str = "map") -> LinearMap:
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object")
    images = obj.get("images")
    if not isinstance(images, list):
        raise InputError(f"{path}.images: expected a list of coordinate rows")
    d = algebra.dim
    if len(images) != d:
        raise InputError(f"{path}.images: expected {d} rows, got {len(images)}")
    rows = []
    for k, row in enumerate(images):
        if not isinstance(row, list) or len(row) != d:
            raise InputError(f"{path}.images[{k}]: expected a list of {d} integers")
        rows.append([_int(v, f"{path}.images[{k}][{m}]") for m, v in enumerate(row)])
    return make_map(algebra, rows)


def elem_coords_from_json(obj, algebra: AlgebraSpec, path: str):
    if not isinstance(obj, list) or len(obj) != algebra.dim:
        raise InputError(f"{path}: expected a list of {algebra.dim} integers")
    return algebra.element([_int(v, f"{path}[{m}]") for m, v in enumerate(obj)])


def problem_from_json(obj, require_map: bool = False, name: str = "") -> ProblemFile:
    if not isinstance(obj, dict):
        raise InputError("$: expected a JSON object")
    if "ring" not in obj:
        raise InputError("ring: missing")
    if "algebra" not in obj:
        raise InputError("algebra: missing")
    ring = ring_from_json(obj["ring"], "ring")
    algebra = algebra_from_json(obj["algebra"], ring, "algebra")
    D = None
    if "map" in obj:
        D = map_from_json(obj["map"], algebra, "map")
    elif require_map:
        raise InputError("map: missing")
    expect = obj.get("expect", {})
    if not isinstance(expect, dict):
        raise InputError("expect: expected an object")
    return ProblemFile(ring, algebra, D, expect, name)


def load_problem(source: Union[str, Path], require_map: bool = False) -> ProblemFile:
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return problem_from_json(obj, require_map, path.stem)


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2)
