"""Input families: ruler-sequence words, seeded random texts, degenerate runs.

The ruler word is the limit of w_0 = empty, w_i = w_{i-1} i w_{i-1};
its symbol at position p is 1 + (number of trailing zero bits of p),
so arbitrarily long prefixes stream in constant space. The doubling
construction is kept (small) as an oracle for tests.

Random texts use splitmix64, pinned here so that (seed, n, sigma) is
bit-reproducible everywhere, independent of any stdlib generator changes.
"""

from __future__ import annotations

from .core import Text

RNG_ALGORITHM = "splitmix64"

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """Tiny deterministic 64-bit generator with cheap independent splits."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound

    def split(self) -> "SplitMix64":
        """Independent child generator; the parent advances once."""
        return SplitMix64(self.next_u64())


def zimin_prefix(n: int) -> Text:
    """First n symbols of the ruler word 1,2,1,3,1,2,1,4,... as integers."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    return Text(tuple((p & -p).bit_length() for p in range(1, n + 1)))


def zimin_recursive(level: int) -> Text:
    """Doubling construction of the full level-``level`` word (test oracle).

    Length 2**level - 1; exponential, so keep the level small.
    """
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    word: list = []
    for i in range(1, level + 1):
        word = word + [i] + word
    return Text(tuple(word))


def bitcount(n: int) -> int:
    """Number of 1-bits in the binary representation of n."""
    if n < 0:
        raise ValueError(f"bitcount of negative {n}")
    return n.bit_count()


def random_text(n: int, sigma: int, seed: int) -> Text:
    """n i.i.d. uniform symbols from {0..sigma-1}, reproducible from the seed."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    if sigma < 1:
        raise ValueError(f"alphabet size must be >= 1, got {sigma}")
    if sigma == 1:
        return Text((0,) * n)
    rng = SplitMix64(seed)
    next_below = rng.next_below
    return Text(tuple(next_below(sigma) for _ in range(n)))


def repeated_symbol(n: int, symbol=0) -> Text:
    """The degenerate single-symbol text (quadratic worst case for the
    incremental reference algorithm)."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    return Text((symbol,) * n)


def text_to_decimal(t: Text) -> str:
    """Space-separated decimal serialization of integer symbols."""
    return " ".join(str(int(c)) for c in t)


def decimal_to_text(s: str) -> Text:
    """Parse the space-separated decimal form back into a Text."""
    return Text(tuple(int(tok) for tok in s.split()))
