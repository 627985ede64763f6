"""Bit-mask helpers shared across the package.

Bit a-1 of a mask stands for the 1-based vertex/qubit label a.  Masks are
an internal representation only; every public surface (labels, files,
reports) speaks 1-based integer sets.
"""

from __future__ import annotations

from typing import Iterable


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack 1-based vertex labels into a mask, validating the range."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} outside 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> frozenset[int]:
    """Unpack a mask into the frozenset of 1-based labels it encodes."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)
