"""Text rendering of the JSON reports."""

from __future__ import annotations

from typing import Any


def _scalar(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _is_flat(items: list) -> bool:
    return all(not isinstance(v, (dict, list)) for v in items)


def _is_pairs(items: list) -> bool:
    return all(
        isinstance(v, list) and len(v) == 2 and all(isinstance(x, float) for x in v) for v in items
    )


def _complex(pair: list) -> str:
    re, im = pair
    return f"{re:.6g}{im:+.6g}i"


def _lines(payload: Any, indent: int) -> list[str]:
    pad = "  " * indent
    out: list[str] = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict) and value:
                out.append(f"{pad}{key}:")
                out.extend(_lines(value, indent + 1))
            elif isinstance(value, list) and value and not (_is_flat(value) or _is_pairs(value)):
                out.append(f"{pad}{key}:")
                out.extend(_lines(value, indent + 1))
            else:
                out.append(f"{pad}{key}: {_inline(value)}")
        return out
    if isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_flat_like(item):
                out.append(f"{pad}-")
                out.extend(_lines(item, indent + 1))
            else:
                out.append(f"{pad}- {_inline(item)}")
        return out
    return [f"{pad}{_scalar(payload)}"]


def _is_flat_like(item: Any) -> bool:
    return isinstance(item, list) and (_is_flat(item) or _is_pairs(item))


def _inline(value: Any) -> str:
    if isinstance(value, list):
        if value and _is_pairs(value):
            return "[" + ", ".join(_complex(v) for v in value) + "]"
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return _scalar(value)


def render_text(payload: Any) -> str:
    return "\n".join(_lines(payload, 0)) + "\n"
