"""Reference algorithms: the simple quadratic palindromic-length computation
and a self-contained brute-force oracle used to cross-check everything else.

The quadratic routine carries the set of palindromic-suffix start positions
forward one position at a time. The oracle instead materializes the full
palindrome table and runs a textbook DP over it, deliberately sharing no
code with the incremental set maintenance.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import PLSequence, Text

ORACLE_CAP_DEFAULT = 4096


class OracleCapError(ValueError):
    """Input too long for the quadratic-memory oracle."""


def is_palindrome(t: Text, i: int, j: int) -> bool:
    """True iff t[i..j] reads the same in both directions (1-based, inclusive).

    i > j denotes the empty substring, which is a palindrome.
    """
    n = t.n
    if i > j:
        if 1 <= i <= n + 1 and 0 <= j <= n:
            return True
        raise IndexError(f"positions ({i},{j}) out of range 1..{n}")
    if i < 1 or j > n:
        raise IndexError(f"positions ({i},{j}) out of range 1..{n}")
    seg = t._sym[i - 1 : j]
    return seg == seg[::-1]


def suffix_palindrome_starts(t: Text, j: int) -> list:
    """All start positions i <= j with t[i..j] a palindrome, ascending.

    Always contains j itself (a single symbol is a palindrome).
    """
    if not 1 <= j <= t.n:
        raise IndexError(f"position {j} out of range 1..{t.n}")
    sym = t._sym
    out = []
    for i in range(1, j + 1):
        seg = sym[i - 1 : j]
        if seg == seg[::-1]:
            out.append(i)
    return out


class QuadraticRun(NamedTuple):
    """Quadratic-algorithm result plus its instrumentation."""

    records: PLSequence
    suffix_counts: list  # number of palindromic suffixes at each round 1..n

    @property
    def elements_processed(self) -> int:
        """Positions examined by the per-round minimization scans."""
        return sum(self.suffix_counts)


def pl_quadratic_instrumented(t: Text) -> QuadraticRun:
    """Palindromic length of every prefix by incremental suffix-set updates.

    Round j turns the start-position set for round j-1 into the one for
    round j (drop starts whose preceding symbol does not match the new
    symbol, shift the rest left by one, add the length-2 and length-1
    candidates), then scans it for the minimum. The set is kept as an
    ascending list; every insertion point arrives in order, so updates
    are plain appends.
    """
    sym = t._sym
    n = len(sym)
    pl = [0]
    last = [0]
    suffix_counts = []
    starts: list = []
    for j in range(1, n + 1):
        cj = sym[j - 1]
        nxt = []
        for i in starts:
            if i > 1 and sym[i - 2] == cj:
                nxt.append(i - 1)
        if j > 1 and sym[j - 2] == cj:
            nxt.append(j - 1)
        nxt.append(j)
        starts = nxt
        best = j
        best_len = 1
        for i in starts:
            cand = pl[i - 1] + 1
            if cand < best:
                best = cand
                best_len = j - i + 1
        suffix_counts.append(len(starts))
        pl.append(best)
        last.append(best_len)
    return QuadraticRun(PLSequence(pl, last), suffix_counts)


def pl_quadratic(t: Text) -> PLSequence:
    """Palindromic length of every prefix of ``t`` (index 0..n)."""
    return pl_quadratic_instrumented(t).records


class PalTable:
    """Dense palindrome predicate over all substrings of one text.

    pal(i, j) is true iff t[i..j] is a palindrome; the empty substring
    (i > j) counts as one. Built bottom-up from the recurrence
    pal(i, j) = (t[i] == t[j]) and pal(i+1, j-1). Quadratic memory.
    """

    __slots__ = ("n", "_pal")

    def __init__(self, t: Text):
        sym = t._sym
        n = len(sym)
        self.n = n
        w = n + 2
        pal = bytearray(w * w)
        for i in range(1, n + 1):
            pal[i * w + i] = 1
            pal[(i + 1) * w + i] = 1  # empty substrings
        for length in range(2, n + 1):
            for i in range(1, n - length + 2):
                j = i + length - 1
                if sym[i - 1] == sym[j - 1] and pal[(i + 1) * w + (j - 1)]:
                    pal[i * w + j] = 1
        self._pal = pal

    def query(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            if i > j:
                return True
            raise IndexError(f"positions ({i},{j}) out of range 1..{self.n}")
        if i > j:
            return True
        return bool(self._pal[i * (self.n + 2) + j])


def pl_oracle(t: Text, cap: int = ORACLE_CAP_DEFAULT) -> PLSequence:
    """Brute-force palindromic length of every prefix via the full table.

    Independent referee for the other algorithms: no incremental set
    tricks, just pal(i, j) lookups and the direct DP. Quadratic memory,
    hence the cap.
    """
    n = t.n
    if n > cap:
        raise OracleCapError(
            f"input length {n} exceeds the oracle cap {cap} (quadratic memory)"
        )
    table = PalTable(t)
    w = n + 2
    pal = table._pal
    pl = [0]
    last = [0]
    for j in range(1, n + 1):
        best = j + 1
        best_len = 0
        for i in range(1, j + 1):
            if pal[i * w + j]:
                cand = pl[i - 1] + 1
                if cand < best:
                    best = cand
                    best_len = j - i + 1
        pl.append(best)
        last.append(best_len)
    return PLSequence(pl, last)
