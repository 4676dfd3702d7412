"""GF(2) linear algebra over Python-int bit vectors."""
from __future__ import annotations

import bisect


class XorBasis:
    """Row basis with distinct leading bits, kept in decreasing order.

    Each inserted vector can carry a tag; reductions track the XOR of tags so
    that membership queries can report which inserted vectors combine to the
    queried one.
    """

    def __init__(self):
        self._rows: list[int] = []  # decreasing
        self._tags: list[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, v: int, tag: int = 0) -> tuple[int, int]:
        for i, b in enumerate(self._rows):
            w = v ^ b
            if w < v:
                v = w
                tag ^= self._tags[i]
        return v, tag

    def insert(self, v: int, tag: int = 0) -> bool:
        """Insert; returns True if v was independent of the current basis."""
        v, tag = self._reduce(v, tag)
        if v == 0:
            return False
        pos = bisect.bisect_left([-r for r in self._rows], -v)
        self._rows.insert(pos, v)
        self._tags.insert(pos, tag)
        return True

    def contains(self, v: int) -> bool:
        return self._reduce(v)[0] == 0

    def decompose(self, v: int) -> int | None:
        """Tag-XOR expressing v in terms of inserted vectors, or None."""
        v, tag = self._reduce(v)
        return tag if v == 0 else None


def rank(rows) -> int:
    basis = XorBasis()
    return sum(basis.insert(r) for r in rows)
