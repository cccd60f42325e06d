"""Per-symbol palindromic-length computation over the compact gap lists.

Each round updates the gap-triple list, then takes one minimum per triple:
the newest (largest) position of a triple is priced directly from the pl
array, and for multi-position triples the rest of the progression is
covered by a memo slot written when the same progression (one position
shorter) was processed exactly ``gap`` rounds earlier. Slots live in an
array indexed by ``start - gap`` (the progression's predecessor position),
which no other progression touches in between; every read re-checks that
the slot was written at round ``j - gap`` with the same gap, so any
violation of that reuse discipline trips an assertion instead of silently
corrupting a minimum.

Cost accounting: ``triples_processed`` grows by one for every triple
examined by any of the four per-round passes (extend, normalize, merge,
minimize). That counter, not wall time, is what the scaling experiments
measure.
"""

from __future__ import annotations

from .core import GapList, GapTriple, GPLSlot, PLRecord, PLSequence, Text
from .gaplist import _extend_triples, _merge_triples, _normalize_triples

_UNWRITTEN = 1 << 62


class FastState:
    """Single-owner online session; push symbols, read lengths back.

    Not safe for concurrent mutation; run one session per thread. The
    completed result (``records()``) is an independent immutable snapshot.
    """

    __slots__ = (
        "_sym",
        "_triples",
        "_pl",
        "_last",
        "_gplv",
        "_gpll",
        "_gplr",
        "_gplg",
        "triples_processed",
        "gpl_reads",
    )

    def __init__(self, expected_n: int = 0):
        self._sym: list = []
        self._triples: list = []
        self._pl = [0]
        self._last = [0]
        size = expected_n + 1 if expected_n > 0 else 1
        self._gplv = [_UNWRITTEN] * size
        self._gpll = [0] * size
        self._gplr = [0] * size
        self._gplg = [0] * size
        self.triples_processed = 0
        self.gpl_reads = 0

    @property
    def round(self) -> int:
        return len(self._sym)

    @property
    def pl_last(self) -> int:
        """Palindromic length of everything pushed so far (constant time)."""
        return self._pl[-1]

    @property
    def gap_size(self) -> int:
        """Number of triples describing the current round."""
        return len(self._triples)

    @property
    def suffix_palindromes(self) -> int:
        """Number of palindromic suffixes of the current prefix."""
        return sum(k for _, _, k in self._triples)

    @property
    def text(self) -> Text:
        return Text(tuple(self._sym))

    def gap_list(self) -> GapList:
        return GapList(tuple(GapTriple(*t) for t in self._triples), len(self._sym))

    def records(self) -> PLSequence:
        return PLSequence(list(self._pl), list(self._last))

    def gpl_slot(self, index: int) -> GPLSlot:
        return GPLSlot(
            PLRecord(self._gplv[index], self._gpll[index]),
            self._gplr[index],
            self._gplg[index],
        )

    def push(self, symbol) -> int:
        """Append one symbol; returns the new prefix's palindromic length."""
        sym = self._sym
        sym.append(symbol)
        j = len(sym)
        if len(self._gplv) <= j:
            self._gplv.append(_UNWRITTEN)
            self._gpll.append(0)
            self._gplr.append(0)
            self._gplg.append(0)
        prev = self._triples
        ext = _extend_triples(prev, sym, symbol)
        norm = _normalize_triples(ext, sym, j)
        cur = _merge_triples(norm)
        self._triples = cur
        self.triples_processed += len(prev) + len(ext) + len(norm)
        return pl_step(self, j).pl


def pl_step(state: FastState, j: int) -> PLRecord:
    """Minimization pass for round j; the gap list must already describe j.

    One candidate per triple: the pl value before the triple's largest
    position, plus one; multi-position triples also consult their memo
    slot, which by the reuse discipline holds the minimum over the rest of
    the progression. First minimal candidate wins, in triple order, with
    the direct term beating the memo term on ties.
    """
    if state.round != j or len(state._pl) != j:
        raise ValueError(
            f"step for round {j} but session holds {state.round} symbols "
            f"and {len(state._pl) - 1} finished rounds"
        )
    triples = state._triples
    pl = state._pl
    gplv = state._gplv
    gpll = state._gpll
    gplr = state._gplr
    gplg = state._gplg
    best = j
    best_len = 1
    reads = 0
    for i, d, k in triples:
        r = i + (k - 1) * d
        m = pl[r - 1] + 1
        mlen = j - r + 1
        if k > 1:
            idx = i - d
            assert idx >= 1, f"memo read below position 1 (triple ({i},{d},{k}) at round {j})"
            assert gplr[idx] == j - d and gplg[idx] == d, (
                f"memo slot {idx} written at round {gplr[idx]} gap {gplg[idx]}, "
                f"read at round {j} expecting round {j - d} gap {d}"
            )
            reads += 1
            gv = gplv[idx]
            if gv < m:
                m = gv
                mlen = gpll[idx] + d
        if d <= i:
            idx = i - d
            assert idx >= 1, f"memo write below position 1 (triple ({i},{d},{k}) at round {j})"
            gplv[idx] = m
            gpll[idx] = mlen
            gplr[idx] = j
            gplg[idx] = d
        if m < best:
            best = m
            best_len = mlen
    state.triples_processed += len(triples)
    state.gpl_reads += reads
    pl.append(best)
    state._last.append(best_len)
    return PLRecord(best, best_len)


def online_push(state: FastState, symbol) -> int:
    """Feed one symbol to a session; returns the updated palindromic length."""
    return state.push(symbol)


def pl_fast(t: Text) -> PLSequence:
    """Palindromic length of every prefix of ``t`` (index 0..n)."""
    state = FastState(expected_n=t.n)
    push = state.push
    for c in t._sym:
        push(c)
    return PLSequence(state._pl, state._last)
