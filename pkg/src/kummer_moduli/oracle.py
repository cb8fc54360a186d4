"""Brute-force search layer validating the closed-form arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .lattice import SplitClass, divisibility_split, gram_matrix, square_split
from .moduli import component_count


@dataclass(frozen=True)
class SearchBounds:
    max_a: int
    max_b: int
    max_dhat_abs: int

    def __post_init__(self) -> None:
        if self.max_a < 1 or self.max_b < 0 or self.max_dhat_abs < 0:
            raise ValueError(f"bounds out of range: {self}")


def enumerate_primitive_classes(
    n: int, d: int, t: int, bounds: SearchBounds
) -> list[SplitClass]:
    """All primitive split classes of square 2d and divisibility t in the box.

    The square equation pins d_hat = (d + (n+1)b^2) / a^2 for a >= 1, so
    the scan is over (a, b) only; the degenerate a=0 classes (pure
    multiples of delta) are included when they hit the target square.
    """
    if n < 2 or d < 1 or t < 1:
        raise ValueError(f"need n >= 2, d >= 1, t >= 1, got ({n}, {d}, {t})")
    found: list[SplitClass] = []
    for b in (-1, 1):  # a=0 forces b=+-1 by primitivity
        if bounds.max_b >= 1:
            c = SplitClass(n, 0, b, 0)
            if square_split(c) == 2 * d and divisibility_split(c) == t:
                found.append(c)
    for a in range(1, bounds.max_a + 1):
        for b in range(-bounds.max_b, bounds.max_b + 1):
            if gcd(a, b) != 1:
                continue
            numerator = d + (n + 1) * b * b
            if numerator % (a * a) != 0:
                continue
            d_hat = numerator // (a * a)
            if abs(d_hat) > bounds.max_dhat_abs:
                continue
            c = SplitClass(n, a, b, d_hat)
            if square_split(c) == 2 * d and divisibility_split(c) == t:
                found.append(c)
    return found


def divisibility_crosscheck(
    n: int, coord_bound: int
) -> list[tuple[tuple[int, ...], int, int]]:
    """Compare the pairing-ideal divisibility with the split formula.

    Scans every nonzero vector with coordinates in [-coord_bound,
    coord_bound]: the gcd of its pairings against the basis must equal
    gcd(content(u), 2(n+1)|b|), where u is the unimodular part and b the
    delta coordinate.  Returns the mismatches (expected: none).
    """
    if coord_bound < 1:
        raise ValueError(f"coord_bound must be >= 1, got {coord_bound}")
    gram = np.array(gram_matrix(n), dtype=np.int64)
    vals = np.arange(-coord_bound, coord_bound + 1, dtype=np.int64)
    vectors = np.stack(np.meshgrid(*([vals] * 7), indexing="ij"), axis=-1).reshape(-1, 7)
    vectors = vectors[np.any(vectors != 0, axis=1)]
    pairings = vectors @ gram
    ideal_gcd = np.gcd.reduce(np.abs(pairings), axis=1)
    content = np.gcd.reduce(np.abs(vectors[:, :6]), axis=1)
    formula = np.gcd(content, 2 * (n + 1) * np.abs(vectors[:, 6]))
    bad = np.nonzero(ideal_gcd != formula)[0]
    return [
        (tuple(int(x) for x in vectors[i]), int(ideal_gcd[i]), int(formula[i]))
        for i in bad
    ]


def _ceil_sqrt_ratio(d: int, parts: int) -> int:
    # smallest m >= 0 with m*m*parts >= d
    m = isqrt(d // parts)
    while m * m * parts < d:
        m += 1
    return m


def default_bounds(n: int, d: int, t: int) -> SearchBounds:
    """Desk-scale bounds wide enough to rediscover every witness shape."""
    max_b = _ceil_sqrt_ratio(d, n + 1) + 3
    return SearchBounds(
        max_a=2 * n + 2 + t,
        max_b=max_b,
        max_dhat_abs=d + (n + 1) * max_b * max_b,
    )


def nonemptiness_crosscheck(
    n: int, d_max: int, bounds: SearchBounds | None = None
) -> list[tuple[int, int, int]]:
    """Triples the count theorem calls non-empty but the search cannot hit.

    One-directional: theorem-non-empty must imply a lattice class exists.
    Bounds default to :func:`default_bounds` per triple.  Returns
    violations (expected: none).
    """
    if n not in (2, 3, 4):
        raise ValueError(f"nonemptiness_crosscheck needs n in {{2,3,4}}, got {n}")
    violations = []
    for d in range(1, d_max + 1):
        for t in range(1, 2 * n + 3):
            if (2 * n + 2) % t != 0:
                continue
            if component_count(n, d, t).count == 0:
                continue
            box = bounds if bounds is not None else default_bounds(n, d, t)
            if not enumerate_primitive_classes(n, d, t, box):
                violations.append((n, d, t))
    return violations
