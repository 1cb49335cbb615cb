"""Error aggregation, lattice sweeps, depth sweeps, and timing runs."""

from __future__ import annotations

import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .baselines import cordic_atan, cordic_rotate, taylor_cos
from .dyadic import normalize
from .errors import DomainError
from .forward import TrigKind, forward
from .inverse import DEFAULT_CONFIG, InverseConfig, InverseKind, inverse


@dataclass(frozen=True)
class ErrorStats:
    rms: float
    mxm: float
    count: int


@dataclass(frozen=True)
class SweepRow:
    fn: str
    k: int
    n: int
    value: float
    reference: float
    abs_err: float
    depth: int | None = None
    ns_per_call: float | None = None


def error_stats(pairs: Iterable[tuple[float, float]]) -> ErrorStats:
    """Root-mean-square and maximum of (target - expect) over the pairs."""
    diffs = [target - expect for target, expect in pairs]
    if not diffs:
        raise DomainError("error_stats needs at least one pair")
    rms = math.sqrt(math.fsum(d * d for d in diffs) / len(diffs))
    mxm = max(abs(d) for d in diffs)
    return ErrorStats(rms, mxm, len(diffs))


_FORWARD_PARTNER = {
    InverseKind.ACOS: TrigKind.COS,
    InverseKind.ASIN: TrigKind.SIN,
    InverseKind.ATAN: TrigKind.TAN,
    InverseKind.ACOT: TrigKind.COT,
}


def _libm_reference(kind: TrigKind, n: int, k: int) -> float:
    angle = n * math.pi / (1 << (k + 1))
    if kind is TrigKind.COS:
        return math.cos(angle)
    if kind is TrigKind.SIN:
        return math.sin(angle)
    if kind is TrigKind.TAN:
        return math.tan(angle)
    if kind is TrigKind.COT:
        return 1.0 / math.tan(angle)
    if kind is TrigKind.COS2:
        return math.cos(angle) ** 2
    if kind is TrigKind.SIN2:
        return math.sin(angle) ** 2
    if kind is TrigKind.TAN2:
        return math.tan(angle) ** 2
    return 1.0 / math.tan(angle) ** 2


def _is_pole(kind: TrigKind, n: int, k: int) -> bool:
    if kind in (TrigKind.TAN, TrigKind.TAN2):
        return n == (1 << k)
    if kind in (TrigKind.COT, TrigKind.COT2):
        return n == 0
    return False


def sweep(
    kind: TrigKind | InverseKind,
    k: int,
    reference: str | None = None,
    depth: int | None = None,
) -> list[SweepRow]:
    """Evaluate every lattice point n / 2**k (poles excluded) against a reference.

    Forward kinds compare to the platform math library at the angle
    n*pi / 2**(k+1) (tag "libm"); inverse kinds feed the matching forward
    value back through the inverse and compare to the exact lattice point
    (tag "roundtrip").  `depth` caps the inverse search and shows up as the
    optional CSV column.
    """
    if not 1 <= k <= 20:
        raise DomainError(f"sweep needs k in [1, 20], got {k}")
    is_inverse = isinstance(kind, InverseKind)
    expected_tag = "roundtrip" if is_inverse else "libm"
    if reference is not None and reference != expected_tag:
        raise DomainError(f"{kind.value} sweeps use the {expected_tag!r} reference, got {reference!r}")
    if depth is not None and not is_inverse:
        raise DomainError("depth limits apply to inverse sweeps only")

    rows: list[SweepRow] = []
    if is_inverse:
        partner = _FORWARD_PARTNER[kind]
        cfg = InverseConfig(max_depth=depth) if depth is not None else DEFAULT_CONFIG
        for n in range(0, (1 << k) + 1):
            if _is_pole(partner, n, k):
                continue
            x = normalize(n, k)
            got = inverse(kind, forward(partner, x), cfg)
            value = float(got.value)
            ref = n / (1 << k)
            rows.append(SweepRow(kind.value, k, n, value, ref, abs(value - ref), depth=depth))
    else:
        for n in range(0, (1 << k) + 1):
            if _is_pole(kind, n, k):
                continue
            x = normalize(n, k)
            value = forward(kind, x)
            ref = _libm_reference(kind, n, k)
            rows.append(SweepRow(kind.value, k, n, value, ref, abs(value - ref)))
    return rows


def _sample_inputs(kind: InverseKind, count: int, rng: random.Random) -> list[tuple[float, float]]:
    """(v, reference angle in quarter turns) pairs drawn uniformly in angle."""
    samples = []
    for _ in range(count):
        t = rng.random()
        if kind is InverseKind.ACOS:
            v = math.cos(t * math.pi / 2)
            ref = math.acos(v) / (math.pi / 2)
        elif kind is InverseKind.ASIN:
            v = math.sin(t * math.pi / 2)
            ref = math.asin(v) / (math.pi / 2)
        elif kind is InverseKind.ATAN:
            v = math.tan(t * math.pi / 2)
            ref = math.atan(v) / (math.pi / 2)
        else:
            tangent = math.tan(t * math.pi / 2)
            v = 1.0 / tangent if tangent else math.inf
            ref = math.atan2(1.0, v) / (math.pi / 2)
        samples.append((v, ref))
    return samples


def depth_sweep(
    kind: InverseKind,
    depths: Sequence[int],
    sample_count: int,
    seed: int = 0,
) -> list[tuple[int, ErrorStats]]:
    """Error statistics of the depth-limited inverse over one fixed batch of
    random in-domain samples, one entry per requested depth limit."""
    if any(d < 1 or d > 61 for d in depths):
        raise DomainError("depth limits must lie in [1, 61]")
    if sample_count < 1:
        raise DomainError("sample_count must be positive")
    rng = random.Random(seed)
    samples = _sample_inputs(kind, sample_count, rng)
    out = []
    for d in depths:
        cfg = InverseConfig(max_depth=d)
        pairs = [(float(inverse(kind, v, cfg).value), ref) for v, ref in samples]
        out.append((d, error_stats(pairs)))
    return out


def _bench_workload(tag: str, k: int):
    """One benchmark tag over the k-lattice.

    Returns (indexed_args, call, reference) where indexed_args pairs each
    lattice index n with the prepared call argument and reference maps an
    index to the comparison value.
    """
    points = range(0, (1 << k) + 1)
    try:
        kind = TrigKind(tag)
    except ValueError:
        kind = None
    if kind is not None:
        indexed = [(n, normalize(n, k)) for n in points if not _is_pole(kind, n, k)]
        return indexed, lambda x: forward(kind, x), lambda n: _libm_reference(kind, n, k)
    try:
        ikind = InverseKind(tag)
    except ValueError:
        ikind = None
    if ikind is not None:
        partner = _FORWARD_PARTNER[ikind]
        indexed = [(n, forward(partner, normalize(n, k)))
                   for n in points if not _is_pole(partner, n, k)]
        return indexed, lambda v: float(inverse(ikind, v).value), lambda n: n / (1 << k)
    angle = lambda n: n * math.pi / (1 << (k + 1))
    baselines = {
        "libm-cos": (points, angle, math.cos, math.cos),
        "libm-sin": (points, angle, math.sin, math.sin),
        "libm-tan": (range(1 << k), angle, math.tan, math.tan),
        "taylor-cos": (points, angle, lambda a: taylor_cos(a, 10), math.cos),
        "cordic-cos": (points, angle, lambda a: cordic_rotate(a, 52)[0], math.cos),
        "cordic-atan": (range(1 << k), lambda n: math.tan(angle(n)), lambda v: cordic_atan(v, 45), math.atan),
    }
    if tag not in baselines:
        raise DomainError(f"unknown bench target {tag!r}")
    ns, prep, call, ref = baselines[tag]
    indexed = [(n, prep(n)) for n in ns]
    return indexed, call, lambda n: ref(dict(indexed)[n])


BENCH_TAGS = tuple(kind.value for kind in TrigKind) + tuple(kind.value for kind in InverseKind) + (
    "libm-cos",
    "libm-sin",
    "libm-tan",
    "taylor-cos",
    "cordic-cos",
    "cordic-atan",
)


def bench(kind: TrigKind | InverseKind | str, k: int, reps: int) -> SweepRow:
    """Median nanoseconds per call over the k-lattice, after one warmup pass.

    Timing is strictly single-threaded.  The returned row keys the deepest
    odd lattice point n = 2**k - 1 and carries that point's value, reference
    and error next to the measured median.
    """
    if reps < 1:
        raise DomainError(f"reps must be positive, got {reps}")
    if not 1 <= k <= 20:
        raise DomainError(f"bench needs k in [1, 20], got {k}")
    tag = kind.value if isinstance(kind, (TrigKind, InverseKind)) else str(kind)
    indexed, fn, ref_of = _bench_workload(tag, k)
    args = [a for _, a in indexed]
    for a in args:  # warmup
        fn(a)
    per_rep = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        for a in args:
            fn(a)
        per_rep.append((time.perf_counter_ns() - t0) / len(args))
    ns = statistics.median(per_rep)

    # representative row: the deepest odd lattice point (never a pole)
    n_rep = (1 << k) - 1
    rep_arg = dict(indexed)[n_rep]
    value = fn(rep_arg)
    ref = ref_of(n_rep)
    return SweepRow(tag, k, n_rep, value, ref, abs(value - ref), ns_per_call=ns)


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    """Fixed-schema CSV: 17 significant digits, LF line endings."""
    with_depth = any(r.depth is not None for r in rows)
    with_ns = any(r.ns_per_call is not None for r in rows)
    header = "fn,k,n,value,reference,abs_err"
    if with_depth:
        header += ",depth"
    if with_ns:
        header += ",ns_per_call"
    lines = [header]
    for r in rows:
        fields = [
            r.fn,
            str(r.k),
            str(r.n),
            format(r.value, ".17g"),
            format(r.reference, ".17g"),
            format(r.abs_err, ".17g"),
        ]
        if with_depth:
            fields.append("" if r.depth is None else str(r.depth))
        if with_ns:
            fields.append("" if r.ns_per_call is None else format(r.ns_per_call, ".17g"))
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"
