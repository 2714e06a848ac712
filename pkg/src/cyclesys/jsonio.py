"""JSON form of difference families and cycle systems.

    {"kind": "df" | "system", "m": .., "n": .., "ell": .., "v": ..,
     "base_cycles": [[...], ...], "orbits": [{"stabilizer": .., "length": ..}, ...]}

"orbits" is present only for systems.  Field order is fixed and the text ends
with a newline, so export -> import -> export is byte-identical.
"""

from __future__ import annotations

import json

from .zmod import CycleSystem, DifferenceFamily, Orbit, normalize


def _header(kind: str, m: int, n: int, ell: int) -> dict:
    return {"kind": kind, "m": m, "n": n, "ell": ell, "v": m * n}


def to_dict(obj: DifferenceFamily | CycleSystem) -> dict:
    v = obj.m * obj.n
    if isinstance(obj, DifferenceFamily):
        d = _header("df", obj.m, obj.n, obj.ell)
        d["base_cycles"] = [list(normalize(c, v)) for c in obj.base_cycles]
        return d
    d = _header("system", obj.m, obj.n, obj.ell)
    d["base_cycles"] = [list(normalize(o.base, v)) for o in obj.orbits]
    d["orbits"] = [{"stabilizer": o.stabilizer, "length": o.length} for o in obj.orbits]
    return d


def dumps(obj: DifferenceFamily | CycleSystem) -> str:
    return json.dumps(to_dict(obj)) + "\n"


def _int(d: dict, key: str, lo: int) -> int:
    x = d.get(key)
    if not isinstance(x, int) or isinstance(x, bool) or x < lo:
        raise ValueError(f"field {key!r} must be an integer >= {lo}")
    return x


def from_dict(d) -> DifferenceFamily | CycleSystem:
    if not isinstance(d, dict):
        raise ValueError("top level must be an object")
    kind = d.get("kind")
    if kind not in ("df", "system"):
        raise ValueError("kind must be 'df' or 'system'")
    m, n, ell = _int(d, "m", 1), _int(d, "n", 1), _int(d, "ell", 1)
    if d.get("v", m * n) != m * n:
        raise ValueError("v must equal m*n")
    raw = d.get("base_cycles")
    if not isinstance(raw, list) or not all(isinstance(c, list) for c in raw):
        raise ValueError("base_cycles must be a list of lists")
    for c in raw:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in c):
            raise ValueError("cycle vertices must be integers")
    cycles = tuple(tuple(c) for c in raw)
    if kind == "df":
        return DifferenceFamily(m, n, ell, cycles)
    orbits = d.get("orbits")
    if not isinstance(orbits, list) or len(orbits) != len(cycles):
        raise ValueError("orbits must list one entry per base cycle")
    out = []
    for c, o in zip(cycles, orbits):
        if not isinstance(o, dict):
            raise ValueError("orbit entries must be objects")
        out.append(Orbit(c, _int(o, "stabilizer", 1), _int(o, "length", 1)))
    return CycleSystem(m, n, ell, tuple(out))


def loads(text: str) -> DifferenceFamily | CycleSystem:
    """Parse; raises ValueError on malformed input."""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return from_dict(d)
