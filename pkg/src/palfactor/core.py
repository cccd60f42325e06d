"""Shared domain types for palindromic-length computation.

All public position arguments are 1-based and inclusive on both ends.
Implementations may index 0-based internally, but nothing 0-based leaks
out of a public signature.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence, Union

Symbol = Union[str, int]
SymbolSeq = Union[str, bytes, Sequence[int], Sequence[str]]


class Text:
    """Immutable 1-indexed sequence of symbols.

    Symbols only need equality, so ``str``, ``bytes`` and integer
    sequences all work (bytes index as ints, which is what the CLI and
    the benchmark families use).
    """

    __slots__ = ("_sym",)

    def __init__(self, symbols: SymbolSeq = ()):
        if isinstance(symbols, (str, bytes)):
            self._sym = symbols
        else:
            self._sym = tuple(symbols)

    @property
    def n(self) -> int:
        return len(self._sym)

    def at(self, i: int) -> Symbol:
        """Symbol at 1-based position ``i``."""
        if not 1 <= i <= len(self._sym):
            raise IndexError(f"position {i} out of range 1..{len(self._sym)}")
        return self._sym[i - 1]

    def segment(self, i: int, j: int) -> SymbolSeq:
        """Symbols at positions ``i..j`` inclusive; empty when i > j."""
        if not (1 <= i <= len(self._sym) + 1 and 0 <= j <= len(self._sym)):
            raise IndexError(f"segment {i}..{j} out of range 1..{len(self._sym)}")
        return self._sym[i - 1 : j]

    def __len__(self) -> int:
        return len(self._sym)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._sym)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Text) and tuple(self._sym) == tuple(other._sym)

    def __hash__(self) -> int:
        return hash(tuple(self._sym))

    def __repr__(self) -> str:
        return f"Text({self._sym!r})"


class GapTriple(NamedTuple):
    """Arithmetic progression ``start, start+gap, ..., start+(count-1)*gap``
    of palindromic-suffix start positions sharing one gap value.

    A gap larger than the round it belongs to marks the first triple of a
    list, the one holding only the start of the longest palindromic
    suffix (there is no predecessor, so no finite gap applies).
    """

    start: int
    gap: int
    count: int


class GapList(NamedTuple):
    """All palindromic-suffix start positions of one prefix, as gap triples
    in strictly decreasing gap order."""

    triples: tuple
    round: int


class PLRecord(NamedTuple):
    """Palindromic length of a prefix plus the length of the last palindrome
    in one minimum factorization of it (0 for the empty prefix)."""

    pl: int
    last_len: int


class GPLSlot(NamedTuple):
    """Memoized partition minimum, with the round and gap of its last write
    so reuse can be cross-checked at read time."""

    value: PLRecord
    written_at_round: int
    written_gap: int


class PLSequence(Sequence):
    """Per-prefix palindromic lengths, indexed 0..n.

    Backed by two flat int lists so million-symbol runs do not build a
    record object per position; indexing materializes a PLRecord.
    """

    __slots__ = ("_pl", "_last")

    def __init__(self, pl: list, last_len: list):
        if len(pl) != len(last_len):
            raise ValueError("pl and last_len lengths differ")
        self._pl = pl
        self._last = last_len

    def __len__(self) -> int:
        return len(self._pl)

    def __getitem__(self, j):
        if isinstance(j, slice):
            return [PLRecord(p, l) for p, l in zip(self._pl[j], self._last[j])]
        return PLRecord(self._pl[j], self._last[j])

    @property
    def final(self) -> PLRecord:
        return PLRecord(self._pl[-1], self._last[-1])

    def pl_list(self) -> list:
        """Plain list of the pl values, index 0..n."""
        return list(self._pl)

    def last_len_list(self) -> list:
        return list(self._last)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PLSequence):
            return self._pl == other._pl and self._last == other._last
        return NotImplemented

    def __repr__(self) -> str:
        return f"PLSequence(pl={self._pl!r}, last_len={self._last!r})"


class ValidationReport(NamedTuple):
    """Outcome of a gap-list check: ``ok`` plus the first violation found."""

    ok: bool
    violation: str = ""

    def __bool__(self) -> bool:
        return self.ok


def decode_gap_list(g: GapList) -> list:
    """Expand a gap list into the explicit sorted position list it encodes.

    Raises ValueError for a malformed triple (count < 1, gap < 1, or a
    decoded position < 1).
    """
    positions = set()
    for start, gap, count in g.triples:
        if count < 1:
            raise ValueError(f"triple ({start},{gap},{count}): count must be >= 1")
        if gap < 1:
            raise ValueError(f"triple ({start},{gap},{count}): gap must be >= 1")
        if start < 1:
            raise ValueError(f"triple ({start},{gap},{count}): decodes position {start} < 1")
        positions.update(range(start, start + count * gap, gap))
    return sorted(positions)


def validate_gap_list(g: GapList, t: Text) -> ValidationReport:
    """Check a gap list against the text prefix it claims to describe.

    Verifies, in order: (a) gaps strictly decrease across triples,
    (b) the decoded position set equals the brute-force set of
    palindromic-suffix start positions of t[1..round], and (c) the first
    triple holds a single position with a gap too large to be real
    (the longest-suffix-palindrome marker). Reports the first violation
    instead of raising.
    """
    from .naive import suffix_palindrome_starts

    if g.round > t.n:
        raise ValueError(f"round {g.round} exceeds text length {t.n}")

    gaps = [gap for _, gap, _ in g.triples]
    for prev, cur in zip(gaps, gaps[1:]):
        if cur >= prev:
            return ValidationReport(False, f"gaps not strictly decreasing: {prev} then {cur}")

    try:
        decoded = decode_gap_list(g)
    except ValueError as exc:
        return ValidationReport(False, f"malformed triple: {exc}")
    expected = suffix_palindrome_starts(t, g.round) if g.round >= 1 else []
    if decoded != expected:
        return ValidationReport(
            False, f"decoded {decoded} != palindromic-suffix starts {expected} at round {g.round}"
        )

    if g.triples:
        start, gap, count = g.triples[0]
        if count != 1:
            return ValidationReport(False, f"first triple has count {count}, expected 1")
        if gap <= g.round:
            return ValidationReport(
                False, f"first triple gap {gap} not above round {g.round}"
            )
    return ValidationReport(True)
