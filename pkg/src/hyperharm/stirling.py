"""r-Stirling numbers of both kinds and the r-Stirling transform.

Entries follow the shifted indexing convention: ``stirling1_r(n, k, r)``
is the coefficient of x^k in the rising factorial (x+r)(x+r+1)...(x+r+n-1),
written [n+r, k+r]_r, and ``stirling2_r(n, k, r)`` is the matching
second-kind number {n+r, k+r}_r with exponential generating function
(e^z - 1)^k e^{rz} / k!.  First-kind values are unsigned; identities that
need signs carry explicit (-1)^... factors.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .rationals import RationalLike, as_rational


class StirlingKind(Enum):
    FIRST = "first"
    SECOND = "second"


class StirlingTable:
    """Memoized triangle of r-Stirling numbers for one kind and one shift r.

    Rows are grown on demand under a lock; a fully built row is immutable,
    so lookups after growth are safe to share across threads.
    """

    def __init__(self, kind: StirlingKind, r: int):
        if r < 0:
            raise ValueError("shift r must be >= 0")
        self.kind = kind
        self.r = r
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1  # completed rows cover sizes 0..m
                prev = self._rows[m]
                row = []
                for k in range(m + 2):
                    left = prev[k] if k <= m else 0
                    diag = prev[k - 1] if 1 <= k <= m + 1 else 0
                    if self.kind is StirlingKind.FIRST:
                        row.append((m + self.r) * left + diag)
                    else:
                        row.append((k + self.r) * left + diag)
                self._rows.append(tuple(row))

    def value(self, n: int, k: int) -> int:
        """Entry for row size n and index k; 0 outside the triangle."""
        if n < 0:
            raise ValueError("row index n must be >= 0")
        if k < 0 or k > n:
            return 0
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n]


_tables: dict[tuple[StirlingKind, int], StirlingTable] = {}
_tables_lock = threading.Lock()


def table(kind: StirlingKind, r: int) -> StirlingTable:
    """Shared memo table for the given kind and shift."""
    key = (kind, r)
    tab = _tables.get(key)
    if tab is None:
        with _tables_lock:
            tab = _tables.setdefault(key, StirlingTable(kind, r))
    return tab


def stirling1_r(n: int, k: int, r: int) -> int:
    """Unsigned r-Stirling number of the first kind [n+r, k+r]_r."""
    return table(StirlingKind.FIRST, r).value(n, k)


def stirling2_r(n: int, k: int, r: int) -> int:
    """r-Stirling number of the second kind {n+r, k+r}_r."""
    return table(StirlingKind.SECOND, r).value(n, k)


def stirling1(n: int, k: int) -> int:
    """Ordinary unsigned Stirling number of the first kind [n, k]."""
    return stirling1_r(n, k, 0)


def stirling2(n: int, k: int) -> int:
    """Ordinary Stirling number of the second kind {n, k}."""
    return stirling2_r(n, k, 0)


def r_stirling_transform(
    sequence: Sequence[RationalLike], r: int, inverse: bool = False
) -> list[Fraction]:
    """Apply the r-Stirling transform b_n = sum_k [n+r, k+r]_r a_k.

    With ``inverse=True`` applies the inverse transform
    a_n = sum_k (-1)^(n-k) {n+r, k+r}_r b_k; the two are mutually inverse.
    """
    if not sequence:
        raise ValueError("sequence must be non-empty")
    values = [as_rational(v) for v in sequence]
    out = []
    for n in range(len(values)):
        total = Fraction(0)
        for k in range(n + 1):
            if inverse:
                term = (-1) ** (n - k) * stirling2_r(n, k, r) * values[k]
            else:
                term = stirling1_r(n, k, r) * values[k]
            total += term
        out.append(total)
    return out
