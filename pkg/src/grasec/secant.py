"""Secant variety dimensions via randomized tangent-frame ranks.

The dimension of the s-th secant variety equals the rank of the stacked
tangent frames at s generic points, minus one.  Evaluating at random
points over a large prime field gives a certified lower bound for the
generic (characteristic-0) dimension: specialization can only drop the
rank.  When the computed value reaches the expected dimension the bound
is an equality certificate; a strict gap across all trials and both
default primes is reported as defective with high confidence.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field as dc_field

from . import field, varieties
from .errors import InconsistencyError, SamplingError

DEFAULT_TRIALS = 3
_MAX_POINT_RESAMPLES = 5


@dataclass(frozen=True)
class SecantReport:
    """Result of one secant-dimension computation."""

    spec: str
    s: int
    dim: int
    expected_dim: int
    fills_ambient: bool
    trials_used: int
    primes_used: tuple[int, ...]
    seed: int
    propagated: bool = False

    @property
    def defect(self) -> int:
        return self.expected_dim - self.dim

    @property
    def certification(self) -> str:
        if self.dim == self.expected_dim:
            return "exact (matches parameter count)"
        return "certified lower bound; defective (high confidence)"

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "s": self.s,
            "dim": self.dim,
            "expected_dim": self.expected_dim,
            "defect": self.defect,
            "fills_ambient": self.fills_ambient,
            "trials_used": self.trials_used,
            "primes_used": list(self.primes_used),
            "seed": self.seed,
            "propagated": self.propagated,
            "certification": self.certification,
        }


def expected_secant_dim(spec: varieties.SegreVeroneseSpec, s: int) -> int:
    """min(s*(n+1) - 1, r): the parameter-count prediction."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return min(s * (spec.dim + 1) - 1, spec.ambient_dim)


def subseed(seed: int, trial: int, prime: int) -> int:
    """Stable per-(trial, prime) sub-seed, independent of PYTHONHASHSEED."""
    digest = hashlib.blake2b(f"{seed}:{trial}:{prime}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def _sample_frame(
    spec: varieties.SegreVeroneseSpec, rng: random.Random, p: int
) -> list[list[int]]:
    for _ in range(_MAX_POINT_RESAMPLES):
        point = varieties.random_parameter_point(spec, rng, p)
        try:
            return varieties.tangent_frame(spec, point, p)
        except SamplingError:
            continue
    raise SamplingError(f"repeated degenerate tangent frames on {spec}")


def terracini_rank(
    spec: varieties.SegreVeroneseSpec, s: int, rng: random.Random, p: int
) -> int:
    """Rank of the s stacked tangent frames at random points, minus one."""
    rows: list[list[int]] = []
    for _ in range(s):
        rows.extend(_sample_frame(spec, rng, p))
    return field.matrix_rank(rows, p) - 1


def secant_dim(
    spec: varieties.SegreVeroneseSpec,
    s: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> SecantReport:
    """Dimension of the s-th secant variety: max over trials and primes.

    The maximum is sound because the rank at any special point only
    under-estimates the generic rank.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    expected = expected_secant_dim(spec, s)
    dim = -1
    for p in primes:
        for t in range(trials):
            rng = random.Random(subseed(seed, t, p))
            dim = max(dim, terracini_rank(spec, s, rng, p))
            if dim == expected:
                break
        if dim == expected:
            break
    if dim > expected:
        raise InconsistencyError(
            f"computed dimension {dim} exceeds the expected dimension {expected}"
        )
    return SecantReport(
        spec=str(spec),
        s=s,
        dim=dim,
        expected_dim=expected,
        fills_ambient=(dim == spec.ambient_dim),
        trials_used=trials,
        primes_used=tuple(primes),
        seed=seed,
    )


def generic_rank(
    spec: varieties.SegreVeroneseSpec,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> int:
    """Least s with the s-th secant variety filling the ambient space.

    The search ascends from the information-theoretic bound
    ceil((r+1)/(n+1)); sigma_{r+1} always fills, so the loop terminates.
    """
    r = spec.ambient_dim
    s = max(1, math.ceil((r + 1) / (spec.dim + 1)))
    while s <= r + 1:
        if secant_dim(spec, s, trials=trials, seed=seed, primes=primes).fills_ambient:
            return s
        s += 1
    raise InconsistencyError(f"no filling secant variety found for {spec} up to s = r + 1")


def _propagated(
    spec: varieties.SegreVeroneseSpec,
    s: int,
    dim: int,
    seed: int,
    primes: tuple[int, ...],
) -> SecantReport:
    return SecantReport(
        spec=str(spec),
        s=s,
        dim=dim,
        expected_dim=expected_secant_dim(spec, s),
        fills_ambient=(dim == spec.ambient_dim),
        trials_used=0,
        primes_used=tuple(primes),
        seed=seed,
        propagated=True,
    )


def classify_secant_range(
    spec: varieties.SegreVeroneseSpec,
    s_max: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> list[SecantReport]:
    """Reports for s = 1..s_max, computing only what monotonicity cannot fill in.

    Two propagation rules: once some secant variety fills the ambient
    space, all larger ones fill; once some secant variety attains the
    unconstrained maximum s*(n+1) - 1, all smaller ones do too.
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    n, r = spec.dim, spec.ambient_dim
    reports: dict[int, SecantReport] = {}

    def compute(s: int) -> SecantReport:
        rep = secant_dim(spec, s, trials=trials, seed=seed, primes=primes)
        reports[s] = rep
        return rep

    s_pivot = min(s_max, max(1, math.ceil((r + 1) / (n + 1))))
    pivot = compute(s_pivot)

    propagate_down = pivot.dim == s_pivot * (n + 1) - 1
    for t in range(s_pivot - 1, 0, -1):
        if propagate_down:
            reports[t] = _propagated(spec, t, t * (n + 1) - 1, seed, primes)
        else:
            propagate_down = compute(t).dim == t * (n + 1) - 1

    fills = pivot.fills_ambient
    for t in range(s_pivot + 1, s_max + 1):
        if fills:
            reports[t] = _propagated(spec, t, r, seed, primes)
        else:
            fills = compute(t).fills_ambient

    return [reports[s] for s in range(1, s_max + 1)]
