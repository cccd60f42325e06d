"""Per-round maintenance of the compact gap-triple representation.

Appending one symbol turns the triple list for prefix j-1 into the one
for prefix j in three stages:

  extend    - keep each triple whose positions still start palindromes
              after the append (one shared symbol test per triple) and
              shift its start left by one; drop the rest.
  normalize - gaps may now be stale: where a triple's predecessor changed,
              split off its first position with the recomputed gap, then
              append the new length-2 palindrome (if any) and the length-1
              palindrome.
  merge     - coalesce adjacent triples that ended up with the same gap.

Start-of-list bookkeeping uses the running variable r, the largest
position emitted so far, seeded to -j so that the first triple's
recomputed gap (start - r = start + j) exceeds every real gap at round j.
That oversized value is the infinity marker for "no predecessor"; it
stays put on later rounds because start + round is invariant under
extension (start drops by one as the round grows by one).

The raw ``*_triples`` functions work on plain (start, gap, count) lists
and carry no validation; the public wrappers speak GapList.
"""

from __future__ import annotations

from .core import GapList, GapTriple, Text


def _extend_triples(triples: list, sym, cj) -> list:
    out = []
    for i, d, k in triples:
        if i > 1 and sym[i - 2] == cj:
            out.append((i - 1, d, k))
    return out


def _normalize_triples(ext: list, sym, j: int) -> list:
    out = []
    r = -j
    for i, d, k in ext:
        if i - r != d:
            out.append((i, i - r, 1))
            if k > 1:
                out.append((i + d, d, k - 1))
        else:
            out.append((i, d, k))
        r = i + (k - 1) * d
    if j > 1 and sym[j - 2] == sym[j - 1]:
        out.append((j - 1, j - 1 - r, 1))
        r = j - 1
    out.append((j, j - r, 1))
    return out


def _merge_triples(norm: list) -> list:
    it = iter(norm)
    ci, cd, ck = next(it)
    out = []
    for i, d, k in it:
        if d == cd:
            ck += k
        else:
            out.append((ci, cd, ck))
            ci, cd, ck = i, d, k
    out.append((ci, cd, ck))
    return out


def _as_triples(g: GapList) -> list:
    return [tuple(t) for t in g.triples]


def _wrap(triples: list, rnd: int) -> GapList:
    return GapList(tuple(GapTriple(*t) for t in triples), rnd)


def extend(g_prev: GapList, t: Text, j: int) -> GapList:
    """Stage one: surviving triples of round j-1, starts shifted left.

    A triple survives iff the symbol before its first position equals the
    appended symbol; either all its positions remain palindrome starts or
    none do, so the test is per triple, not per position.
    """
    if g_prev.round != j - 1:
        raise ValueError(f"gap list describes round {g_prev.round}, expected {j - 1}")
    if not 1 <= j <= t.n:
        raise IndexError(f"round {j} out of range 1..{t.n}")
    return _wrap(_extend_triples(_as_triples(g_prev), t._sym, t._sym[j - 1]), j)


def normalize(g_ext: GapList, t: Text, j: int) -> GapList:
    """Stage two: recompute stale first-element gaps, add short palindromes.

    Output decodes to exactly the palindromic-suffix starts of t[1..j];
    only the triple boundaries may still be unmerged.
    """
    if g_ext.round != j:
        raise ValueError(f"extended list describes round {g_ext.round}, expected {j}")
    return _wrap(_normalize_triples(_as_triples(g_ext), t._sym, j), j)


def merge(g_norm: GapList) -> GapList:
    """Stage three: coalesce adjacent equal-gap triples by summing counts."""
    if not g_norm.triples:
        return g_norm
    return _wrap(_merge_triples(_as_triples(g_norm)), g_norm.round)


def update(g_prev: GapList, t: Text, j: int) -> GapList:
    """One full round: gap list for t[1..j] from the one for t[1..j-1]."""
    return merge(normalize(extend(g_prev, t, j), t, j))


def empty_gap_list() -> GapList:
    """The state before the first round (no prefix described yet)."""
    return GapList((), 0)
