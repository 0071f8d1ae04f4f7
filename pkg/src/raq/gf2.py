"""GF(2) linear algebra on rows packed into Python integers."""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Tuple


def rank(rows: Iterable[int]) -> int:
    """Rank of the span of ``rows`` over GF(2)."""
    return len(Echelon(rows))


class Echelon:
    """Incremental echelon basis keyed by leading bit.

    Every stored row carries a tag: an integer bitmask recording which
    inserted vectors it is the sum of (or any caller-chosen label that should
    be XOR-ed along with the row).
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: Dict[int, Tuple[int, int]] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: int, tag: int = 0) -> Tuple[int, int]:
        """Reduce ``vec`` until its leading bit is not a pivot; return (rest, tag)."""
        pivots = self.pivots
        while vec:
            lead = vec.bit_length() - 1
            hit = pivots.get(lead)
            if hit is None:
                break
            vec ^= hit[0]
            tag ^= hit[1]
        return vec, tag

    def add(self, vec: int, tag: int = 0) -> Optional[Tuple[int, int]]:
        """Insert ``vec``; return ``None`` if it is independent, else the zero
        residue's accumulated tag as ``(0, tag)``."""
        vec, tag = self.reduce(vec, tag)
        if vec:
            self.pivots[vec.bit_length() - 1] = (vec, tag)
            return None
        return 0, tag

    def contains(self, vec: int) -> bool:
        return self.reduce(vec)[0] == 0


def kernel_basis(columns: List[int]) -> List[int]:
    """Basis of the kernel of the map sending basis vector ``i`` to ``columns[i]``.

    Kernel vectors are returned as bitmasks over the source basis.
    """
    ech = Echelon()
    out = []
    for i, col in enumerate(columns):
        dep = ech.add(col, 1 << i)
        if dep is not None:
            out.append(dep[1])
    return out


def bits(x: int) -> List[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out
