"""Canonical JSON rendering shared by the CLI and the HTTP service.

Floats are formatted with 12 significant digits and dict insertion order is
preserved, so identical payloads serialize to identical bytes and a
parse/re-render round trip is byte-stable.
"""

import json


def _format_float(x: float) -> str:
    if x != x:
        raise ValueError("NaN is not representable in canonical JSON")
    s = format(x, ".12g")
    return s


def dumps_canonical(obj) -> str:
    """Serialize with fixed float formatting and insertion-ordered keys."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps_canonical(x) for x in obj) + "]"
    if isinstance(obj, dict):
        parts = []
        for key, value in obj.items():
            if not isinstance(key, str):
                key = str(key)
            parts.append(json.dumps(key) + ":" + dumps_canonical(value))
        return "{" + ",".join(parts) + "}"
    raise TypeError(f"cannot canonically serialize {type(obj).__name__}")
