"""Grassmann secant variety dimensions, computed two independent ways.

GS_X(k, s) is the closure, inside the Grassmannian of k-planes of the
ambient space of X, of the planes lying in the span of s independent
points of X.  Its dimension is computed here both

* through the slice map: dim GS_X(w, s) =
  dim sigma_s(Seg(P^k x X)) - (w+1)(k+1) + 1 with w = min(k, s-1), and
* directly, as the Jacobian rank of the parameterization
  (points, coefficient matrix) -> Pluecker coordinates of the spanned
  w-plane, minus one (the image is a cone, so the scaling direction is
  already in the column span).

Agreement of the two values on every instance is the package's central
executable identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import field, secant, varieties
from .errors import SamplingError

_MAX_RESAMPLES = 5


@dataclass(frozen=True)
class GrassmannSecantReport:
    spec: str
    k: int
    s: int
    w: int
    dim_phi: int
    dim_direct: int
    expected_dim: int
    cross_check: bool
    seg_dim: int
    seg_expected_dim: int
    defect_transfer: bool | None
    trials_used: int
    primes_used: tuple[int, ...]
    seed: int

    @property
    def defect(self) -> int:
        return self.expected_dim - self.dim_direct

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "k": self.k,
            "s": self.s,
            "w": self.w,
            "dim_phi": self.dim_phi,
            "dim_direct": self.dim_direct,
            "expected_dim": self.expected_dim,
            "defect": self.defect,
            "cross_check": "pass" if self.cross_check else "fail",
            "seg_dim": self.seg_dim,
            "seg_expected_dim": self.seg_expected_dim,
            "defect_transfer": self.defect_transfer,
            "trials_used": self.trials_used,
            "primes_used": list(self.primes_used),
            "seed": self.seed,
        }


def expected_gs_dim(n: int, k: int, s: int, r: int) -> int:
    """min(s*n + (k+1)(s-1-k), (k+1)(r-k)): the parameter-count prediction."""
    if not 0 <= k <= s - 1 <= r:
        raise ValueError(f"need 0 <= k <= s-1 <= r, got k={k}, s={s}, r={r}")
    return min(s * n + (k + 1) * (s - 1 - k), (k + 1) * (r - k))


def gs_dim_phi(
    spec: varieties.SegreVeroneseSpec,
    k: int,
    s: int,
    trials: int = secant.DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> int:
    """dim GS_X(w, s) from the secant dimension of Seg(P^k x X)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if s - 1 > spec.ambient_dim:
        raise ValueError("the slice-map formula requires s - 1 <= r")
    if k == 0:
        return secant.secant_dim(spec, s, trials=trials, seed=seed, primes=primes).dim
    w = min(k, s - 1)
    seg = varieties.prepend_projective_factor(spec, k)
    seg_dim = secant.secant_dim(seg, s, trials=trials, seed=seed, primes=primes).dim
    return seg_dim - (w + 1) * (k + 1) + 1


def _direct_rank(
    spec: varieties.SegreVeroneseSpec,
    k: int,
    s: int,
    rng: random.Random,
    p: int,
) -> int:
    w = min(k, s - 1)
    r = spec.ambient_dim
    for _ in range(_MAX_RESAMPLES):
        points = [varieties.random_parameter_point(spec, rng, p) for _ in range(s)]
        P = field.as_matrix([varieties.embed(spec, u, p) for u in points], p)
        lam = field.as_matrix(
            [[rng.randrange(p) for _ in range(s)] for _ in range(w + 1)], p
        )
        M = field.matmul_mod(lam, P, p)
        if field.matrix_rank(M, p) == w + 1:
            break
    else:
        raise SamplingError(f"degenerate coefficient matrix for GS on {spec}")

    columns: list[list[int]] = []

    def minors_derivative(dM: np.ndarray) -> list[int]:
        rows = [
            [field.Dual(int(M[a, j]), int(dM[a, j]) % p, p) for j in range(r + 1)]
            for a in range(w + 1)
        ]
        return [d.b for d in field.maximal_minors(rows)]

    # s*n point parameters: affine-chart directions as in the tangent frames
    for i, u in enumerate(points):
        for direction in varieties.tangent_directions(spec, u):
            _, deriv = varieties.embed_dual(spec, u, direction, p)
            dM = np.outer(lam[:, i], np.array(deriv, dtype=np.int64)) % p
            columns.append(minors_derivative(dM))
    # (w+1)*s coefficient-matrix parameters
    for a in range(w + 1):
        for b in range(s):
            dM = np.zeros_like(M)
            dM[a] = P[b]
            columns.append(minors_derivative(dM))

    jacobian = np.array(columns, dtype=np.int64).T
    return field.matrix_rank(jacobian, p) - 1


def gs_dim_direct(
    spec: varieties.SegreVeroneseSpec,
    k: int,
    s: int,
    trials: int = secant.DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> int:
    """dim GS_X(w, s) as the Jacobian rank of the Pluecker parameterization."""
    if k < 0 or s < 1:
        raise ValueError("need k >= 0 and s >= 1")
    w = min(k, s - 1)
    if s - 1 > spec.ambient_dim:
        raise ValueError(f"need s - 1 <= r, got s={s}, r={spec.ambient_dim}")
    bound = expected_gs_dim(spec.dim, w, s, spec.ambient_dim)
    dim = -1
    for p in primes:
        for t in range(trials):
            rng = random.Random(secant.subseed(seed, t, p))
            dim = max(dim, _direct_rank(spec, k, s, rng, p))
            if dim == bound:
                break
        if dim == bound:
            break
    return dim


def gs_report(
    spec: varieties.SegreVeroneseSpec,
    k: int,
    s: int,
    trials: int = secant.DEFAULT_TRIALS,
    seed: int = 0,
    primes: tuple[int, ...] = field.DEFAULT_PRIMES,
) -> GrassmannSecantReport:
    """Both dimension computations plus expected dimension and defect checks.

    ``defect_transfer`` verifies, when k <= s-1 < r, that the Grassmann
    secant defect equals the secant defect of Seg(P^k x X).
    """
    n, r = spec.dim, spec.ambient_dim
    w = min(k, s - 1)
    dim_direct = gs_dim_direct(spec, k, s, trials=trials, seed=seed, primes=primes)
    if k == 0:
        seg_report = secant.secant_dim(spec, s, trials=trials, seed=seed, primes=primes)
    else:
        seg = varieties.prepend_projective_factor(spec, k)
        seg_report = secant.secant_dim(seg, s, trials=trials, seed=seed, primes=primes)
    dim_phi = seg_report.dim - ((w + 1) * (k + 1) - 1)
    expected = expected_gs_dim(n, w, s, r)

    defect_transfer: bool | None = None
    if k <= s - 1 < r:
        defect_transfer = (expected - dim_direct) == seg_report.defect

    return GrassmannSecantReport(
        spec=str(spec),
        k=k,
        s=s,
        w=w,
        dim_phi=dim_phi,
        dim_direct=dim_direct,
        expected_dim=expected,
        cross_check=(dim_phi == dim_direct),
        seg_dim=seg_report.dim,
        seg_expected_dim=seg_report.expected_dim,
        defect_transfer=defect_transfer,
        trials_used=trials,
        primes_used=tuple(primes),
        seed=seed,
    )
