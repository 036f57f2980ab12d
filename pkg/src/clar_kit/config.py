"""Enumeration caps and kernel selection, read from the environment.

``CLAR_KIT_CAPS`` overrides the caps as ``vertices:hexagons`` (default ``60:8``).
``CLAR_KIT_JIT=0`` disables numba compilation of the matching kernels.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import InvalidArgument

DEFAULT_VERTEX_CAP = 60
DEFAULT_HEXAGON_CAP = 8
MIS_NODE_CAP = 30
FAMILY_B_CAP = 13


@dataclass(frozen=True)
class Caps:
    vertices: int = DEFAULT_VERTEX_CAP
    hexagons: int = DEFAULT_HEXAGON_CAP


def parse_caps(text: str | None) -> Caps:
    if not text:
        return Caps()
    try:
        vertices, hexagons = (int(part) for part in text.split(":"))
    except ValueError:
        raise InvalidArgument(
            f"CLAR_KIT_CAPS must look like 'vertices:hexagons', got {text!r}"
        ) from None
    if vertices < 1 or hexagons < 1:
        raise InvalidArgument("caps must be positive")
    return Caps(vertices, hexagons)


def caps() -> Caps:
    """Current caps; re-read on every call so tests can monkeypatch the env."""
    return parse_caps(os.environ.get("CLAR_KIT_CAPS"))


def jit_requested() -> bool:
    return os.environ.get("CLAR_KIT_JIT", "1").strip().lower() not in {"0", "false", "no", "off"}
