"""Recover a witness factorization from the per-prefix records, and check one.

The checker is deliberately primitive: it reads the text directly and
compares symbols pairwise, sharing nothing with the algorithms it judges.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .core import PLSequence, Text


class Part(NamedTuple):
    start: int
    length: int


class Factorization(NamedTuple):
    """Contiguous palindromic parts tiling positions 1..n."""

    parts: tuple

    def __len__(self) -> int:
        return len(self.parts)


def factorize(t: Text, records: PLSequence) -> Factorization:
    """Walk the last-palindrome lengths back from position n to 0.

    ``records`` must come from a palindromic-length run over ``t``; the
    number of parts equals the recorded palindromic length of the whole
    text. A backpointer that does not cut off a palindrome means the
    records do not belong to this text and raises ValueError.
    """
    n = t.n
    if len(records) != n + 1:
        raise ValueError(f"records cover {len(records) - 1} positions, text has {n}")
    sym = t._sym
    parts = []
    j = n
    while j > 0:
        length = records[j].last_len
        if length < 1 or length > j:
            raise ValueError(f"corrupt backpointer at position {j}: last_len={length}")
        seg = sym[j - length : j]
        if seg != seg[::-1]:
            raise ValueError(
                f"corrupt backpointer at position {j}: t[{j - length + 1}..{j}] is no palindrome"
            )
        parts.append(Part(j - length + 1, length))
        j -= length
    parts.reverse()
    f = Factorization(tuple(parts))
    if len(f) != records[n].pl:
        raise ValueError(
            f"walk produced {len(f)} parts but records claim {records[n].pl}"
        )
    return f


def verify_factorization(t: Text, f: Factorization, claimed_pl: int) -> bool:
    """True iff the parts tile t exactly, each part is a palindrome, and the
    part count matches the claim. Symbol-by-symbol; no shared helpers."""
    pos = 1
    for start, length in f.parts:
        if start != pos or length < 1:
            return False
        lo = start
        hi = start + length - 1
        if hi > t.n:
            return False
        while lo < hi:
            if t._sym[lo - 1] != t._sym[hi - 1]:
                return False
            lo += 1
            hi -= 1
        pos = start + length
    if pos != t.n + 1:
        return False
    return len(f.parts) == claimed_pl


def parts_as_symbols(t: Text, f: Factorization) -> list:
    """The parts as symbol segments, for display."""
    return [t.segment(start, start + length - 1) for start, length in f.parts]
