"""Segre-Veronese varieties: embeddings and tangent frames.

A variety is described by an ordered list of factors (n_i, d_i): the image
of P^{n_1} x ... x P^{n_t} under the complete linear system of multidegree
(d_1, ..., d_t).  Coordinates on the ambient space are all monomials of
that multidegree, ordered first-factor-major with degree-lexicographic
ordering inside each factor (largest exponent on the first variable
first).  With this ordering, prepending a degree-one factor P^k turns the
ambient vector into k+1 consecutive slices of length r+1.

Parameter points are plain nested tuples: one coordinate tuple of length
n_i + 1 per factor, each nonzero.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import field
from .errors import SamplingError

ParameterPoint = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SegreVeroneseSpec:
    """Factors (n_i, d_i) of a Segre-Veronese variety."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("at least one factor is required")
        for n, d in self.factors:
            if n < 1 or d < 1:
                raise ValueError(f"invalid factor ({n}, {d}): need n >= 1 and d >= 1")

    @property
    def dim(self) -> int:
        """Dimension of the variety (sum of the factor dimensions)."""
        return sum(n for n, _ in self.factors)

    @property
    def ambient_dim(self) -> int:
        """Projective dimension r of the ambient space."""
        count = 1
        for n, d in self.factors:
            count *= math.comb(n + d, n)
        return count - 1

    @property
    def arity(self) -> int:
        """Length of the concatenated affine parameter vector."""
        return sum(n + 1 for n, _ in self.factors)

    def factor_offsets(self) -> list[int]:
        """Start index of each factor inside the concatenated parameter vector."""
        offsets = [0]
        for n, _ in self.factors[:-1]:
            offsets.append(offsets[-1] + n + 1)
        return offsets

    @classmethod
    def parse(cls, text: str) -> "SegreVeroneseSpec":
        """Parse the shared spec string: comma-separated ``n`` or ``n:d`` tokens."""
        factors = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ValueError(f"empty factor token in spec string {text!r}")
            if ":" in token:
                n_str, d_str = token.split(":", 1)
                factors.append((int(n_str), int(d_str)))
            else:
                factors.append((int(token), 1))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return ",".join(f"{n}" if d == 1 else f"{n}:{d}" for n, d in self.factors)


def prepend_projective_factor(spec: SegreVeroneseSpec, k: int) -> SegreVeroneseSpec:
    """Spec of the Segre product P^k x X, as factor (k, 1) in front of X."""
    if k < 1:
        raise ValueError("k must be >= 1 (k = 0 is the identity and is left to the caller)")
    return SegreVeroneseSpec(((k, 1),) + spec.factors)


def _degree_monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in _degree_monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


@functools.lru_cache(maxsize=None)
def monomials(spec: SegreVeroneseSpec) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of all ambient coordinates, in the fixed ordering.

    Exponents run over the concatenated parameter vector; the first factor
    is the major index (itertools.product varies the last factor fastest).
    """
    per_factor = [_degree_monomials(n + 1, d) for n, d in spec.factors]
    out = []
    for combo in itertools.product(*per_factor):
        exps: tuple[int, ...] = ()
        for part in combo:
            exps += part
        out.append(exps)
    return tuple(out)


def coordinate_map(spec: SegreVeroneseSpec) -> field.PolynomialMap:
    """The embedding as a polynomial map (one unit monomial per coordinate)."""
    return [[(1, exps)] for exps in monomials(spec)]


def _flatten(spec: SegreVeroneseSpec, point: ParameterPoint) -> list[int]:
    if len(point) != len(spec.factors):
        raise ValueError("parameter point has the wrong number of factors")
    flat: list[int] = []
    for (n, _), coords in zip(spec.factors, point):
        if len(coords) != n + 1:
            raise ValueError("factor coordinate vector has the wrong length")
        if not any(coords):
            raise ValueError("factor coordinate vector is zero")
        flat.extend(int(c) for c in coords)
    return flat


def embed(spec: SegreVeroneseSpec, point: ParameterPoint, p: int) -> list[int]:
    """Ambient coordinates of the embedded point, length r + 1."""
    flat = _flatten(spec, point)
    values, _ = field.dual_evaluate(coordinate_map(spec), flat, [0] * len(flat), p)
    return values


def embed_dual(
    spec: SegreVeroneseSpec,
    point: ParameterPoint,
    direction: Sequence[int],
    p: int,
) -> tuple[list[int], list[int]]:
    """Embedding value and exact directional derivative along ``direction``.

    ``direction`` is a vector over the concatenated parameter coordinates.
    """
    flat = _flatten(spec, point)
    return field.dual_evaluate(coordinate_map(spec), flat, list(direction), p)


def tangent_directions(spec: SegreVeroneseSpec, point: ParameterPoint) -> list[list[int]]:
    """The n affine-chart directions at ``point``.

    Per factor: the coordinate directions complementary to the pivot (first
    nonzero) coordinate, so projective rescaling never degenerates the frame.
    """
    offsets = spec.factor_offsets()
    arity = spec.arity
    dirs = []
    for (n, _), coords, off in zip(spec.factors, point, offsets):
        pivot = next(i for i, c in enumerate(coords) if c)
        for j in range(n + 1):
            if j == pivot:
                continue
            v = [0] * arity
            v[off + j] = 1
            dirs.append(v)
    return dirs


def tangent_frame(spec: SegreVeroneseSpec, point: ParameterPoint, p: int) -> list[list[int]]:
    """n + 1 ambient vectors spanning the tangent space to the cone at embed(point).

    Raises SamplingError if the frame is degenerate (rank < n + 1), which
    signals the caller to resample.
    """
    frame = [embed(spec, point, p)]
    for direction in tangent_directions(spec, point):
        _, deriv = embed_dual(spec, point, direction, p)
        frame.append(deriv)
    if field.matrix_rank(frame, p) < spec.dim + 1:
        raise SamplingError(f"degenerate tangent frame on {spec} at {point}")
    return frame


def random_parameter_point(
    spec: SegreVeroneseSpec, rng: random.Random, p: int
) -> ParameterPoint:
    """Uniform parameter point with every factor vector nonzero."""
    point = []
    for n, _ in spec.factors:
        while True:
            coords = tuple(rng.randrange(p) for _ in range(n + 1))
            if any(coords):
                break
        point.append(coords)
    return tuple(point)


def enumerate_parameter_points(spec: SegreVeroneseSpec, q: int) -> Iterator[ParameterPoint]:
    """All F_q-rational parameter points, one canonical representative each.

    Projective normalization: first nonzero coordinate equal to 1.
    """
    def factor_points(n: int) -> list[tuple[int, ...]]:
        pts = []
        for pivot in range(n + 1):
            free = n - pivot
            for tail in itertools.product(range(q), repeat=free):
                pts.append((0,) * pivot + (1,) + tail)
        return pts

    per_factor = [factor_points(n) for n, _ in spec.factors]
    yield from itertools.product(*per_factor)
