"""Instrumented experiment runner for the scaling behaviour of the engines.

The currency of every measurement is the deterministic triple counter (or,
for the reference engine, the scanned-element counter), never wall time;
elapsed milliseconds ride along for smoke value only. Two one-parameter
models, c*n and c*n*log2(n), are fitted in log space to decide which
growth law a family follows.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, List, NamedTuple, Optional

from .core import Text
from .fast import FastState
from .generators import (
    RNG_ALGORITHM,
    random_text,
    repeated_symbol,
    zimin_prefix,
)
from .naive import pl_quadratic_instrumented

FAMILIES = ("zimin", "random", "file", "repeated")


@dataclass(frozen=True)
class FamilySpec:
    """Which input to run: a generator family or a file of raw bytes."""

    kind: str
    n: int = 0
    sigma: int = 2
    seed: int = 0
    path: Optional[str] = None

    def label(self) -> str:
        if self.kind == "zimin":
            return f"zimin(n={self.n})"
        if self.kind == "random":
            return f"random(n={self.n},sigma={self.sigma},seed={self.seed})"
        if self.kind == "repeated":
            return f"repeated(n={self.n})"
        return f"file({self.path})"


def make_text(spec: FamilySpec) -> Text:
    if spec.kind == "zimin":
        return zimin_prefix(spec.n)
    if spec.kind == "random":
        return random_text(spec.n, spec.sigma, spec.seed)
    if spec.kind == "repeated":
        return repeated_symbol(spec.n)
    if spec.kind == "file":
        if spec.path is None:
            raise ValueError("file family needs a path")
        with open(spec.path, "rb") as fh:
            return Text(fh.read())
    raise ValueError(f"unknown family {spec.kind!r}; expected one of {FAMILIES}")


class RoundStats(NamedTuple):
    """Per-position measurement emitted while an instrumented run advances."""

    j: int
    gap_triples: int
    triples_processed: int
    suffix_palindromes: int


@dataclass
class RunSummary:
    """One instrumented run, reduced to the numbers the experiments need."""

    family: str
    algorithm: str
    n: int
    seed: Optional[int]
    total_triples: int
    mean_suffix_palindromes: float
    final_pl: int
    wall_clock_millis: float
    rng: str = RNG_ALGORITHM

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


RoundSink = Callable[[RoundStats], None]


def run_instrumented(
    spec: FamilySpec,
    algorithm: str = "fast",
    round_sink: Optional[RoundSink] = None,
) -> RunSummary:
    """Execute one family input under counters; stream per-round stats if asked.

    For the fast engine the counter unit is triples examined; for the
    quadratic reference it is set elements scanned by the minimization
    pass. Identical (family, seed) inputs always produce identical counts.
    """
    t = make_text(spec)
    seed = spec.seed if spec.kind == "random" else None
    started = time.perf_counter()
    if algorithm == "fast":
        state = FastState(expected_n=t.n)
        push = state.push
        suffix_total = 0
        done = 0
        for j, c in enumerate(t._sym, start=1):
            push(c)
            suffix = state.suffix_palindromes
            suffix_total += suffix
            if round_sink is not None:
                delta = state.triples_processed - done
                round_sink(RoundStats(j, state.gap_size, delta, suffix))
                done = state.triples_processed
        total = state.triples_processed
        final_pl = state.pl_last
    elif algorithm == "quadratic":
        run = pl_quadratic_instrumented(t)
        if round_sink is not None:
            for j, count in enumerate(run.suffix_counts, start=1):
                round_sink(RoundStats(j, 0, count, count))
        total = run.elements_processed
        suffix_total = total
        final_pl = run.records.final.pl
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected fast or quadratic")
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return RunSummary(
        family=spec.label(),
        algorithm=algorithm,
        n=t.n,
        seed=seed,
        total_triples=total,
        mean_suffix_palindromes=(suffix_total / t.n) if t.n else 0.0,
        final_pl=final_pl,
        wall_clock_millis=elapsed_ms,
    )


def csv_header(spec: FamilySpec, algorithm: str) -> str:
    meta = f"# family={spec.label()} algorithm={algorithm} rng={RNG_ALGORITHM}"
    return meta + "\nj,gap_triples,triples_processed"


def csv_row(stats: RoundStats) -> str:
    return f"{stats.j},{stats.gap_triples},{stats.triples_processed}"


@dataclass
class ScalingReport:
    """Two-model comparison over a family of run sizes."""

    winner: str  # "linear" or "nlogn"
    coef_linear: float
    coef_nlogn: float
    residual_linear: float
    residual_nlogn: float
    ratios: List[dict] = field(default_factory=list)

    def format_table(self) -> str:
        lines = ["n,total_triples,per_n,per_nlog2n"]
        for row in self.ratios:
            lines.append(
                f"{row['n']},{row['total_triples']},{row['per_n']:.4f},{row['per_nlogn']:.4f}"
            )
        lines.append(
            f"model linear: coef={self.coef_linear:.4f} residual={self.residual_linear:.6f}"
        )
        lines.append(
            f"model nlogn: coef={self.coef_nlogn:.4f} residual={self.residual_nlogn:.6f}"
        )
        lines.append(f"winner: {self.winner}")
        return "\n".join(lines)


def _log_fit(xs: List[float], ys: List[float]):
    """One-parameter fit y = c*x in log space; returns (c, residual).

    Log space gives every size equal weight, which is what a geometric
    ladder of sizes wants; a plain least-squares fit would let the largest
    size drown out the rest.
    """
    logs = [math.log(y) - math.log(x) for x, y in zip(xs, ys)]
    mean = sum(logs) / len(logs)
    residual = sum((v - mean) ** 2 for v in logs)
    return math.exp(mean), residual


def fit_scaling(summaries: List[RunSummary]) -> ScalingReport:
    """Decide whether counts grow like n or like n*log2(n).

    Needs at least four distinct sizes (a geometric ladder in practice);
    refuses otherwise. Repeated sizes (several seeds) are averaged first.
    """
    by_n: dict = {}
    for s in summaries:
        by_n.setdefault(s.n, []).append(s.total_triples)
    sizes = sorted(n for n in by_n if n >= 2)
    if len(sizes) < 4:
        raise ValueError(
            f"need at least 4 distinct sizes (>= 2) to fit scaling, got {len(sizes)}"
        )
    ys = [sum(by_n[n]) / len(by_n[n]) for n in sizes]
    xs_lin = [float(n) for n in sizes]
    xs_nlogn = [n * math.log2(n) for n in sizes]
    coef_lin, resid_lin = _log_fit(xs_lin, ys)
    coef_nlogn, resid_nlogn = _log_fit(xs_nlogn, ys)
    ratios = [
        {
            "n": n,
            "total_triples": y,
            "per_n": y / n,
            "per_nlogn": y / (n * math.log2(n)),
        }
        for n, y in zip(sizes, ys)
    ]
    winner = "linear" if resid_lin <= resid_nlogn else "nlogn"
    return ScalingReport(
        winner=winner,
        coef_linear=coef_lin,
        coef_nlogn=coef_nlogn,
        residual_linear=resid_lin,
        residual_nlogn=resid_nlogn,
        ratios=ratios,
    )
