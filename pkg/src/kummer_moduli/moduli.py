"""Non-emptiness and component counts for the polarized moduli spaces.

Inputs are the half-dimension n >= 2 and polarization invariants
(square 2d, divisibility t).  The count is driven entirely by the
derived integers

    d1 = 2d / gcd(2d, 2n+2)      n1 = (2n+2) / gcd(2d, 2n+2)
    g  = gcd(2d, 2n+2) / t       w  = gcd(g, t)
    g1 = g / w                   t1 = t / w

through a four-way case split.  Cases are evaluated in their listed
order and the first match wins; the tag of the matching case is
reported alongside the count so tables stay auditable.

The multiplicative count for the t > 2 cases is

    w_plus(t1) * phi(w_minus(t1)) * 2^(rho(l) - 1)

with l = t1 in case (1) and l = t1/2 in case (2).  When rho(l) = 0 the
power is the exact rational 1/2; the product is provably integral under
each case's hypotheses, and this module evaluates it exactly (asserting
integrality) rather than rounding.  Defining the power as 1 instead
produces two-component verdicts inside the connectedness range (e.g.
n=3, d=12, t=4), which the corollary scan rejects.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import (
    distinct_prime_count,
    euler_phi,
    is_quadratic_residue,
    mod_inverse,
    split_w,
)

EMPTY_TAGS = ("4-empty", "precondition-empty")


@dataclass(frozen=True)
class ModuliInvariants:
    d1: int
    n1: int
    g: int
    w: int
    g1: int
    t1: int


@dataclass(frozen=True)
class CountResult:
    count: int
    case_tag: str


def _check_params(n: int, d: int, t: int) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")


def invariants(n: int, d: int, t: int) -> ModuliInvariants:
    """Derived integers (d1, n1, g, w, g1, t1); requires t | gcd(2d, 2n+2)."""
    _check_params(n, d, t)
    big = gcd(2 * d, 2 * n + 2)
    if big % t != 0:
        raise ValueError(
            f"t={t} does not divide gcd(2d, 2n+2)={big}; the moduli space is empty"
        )
    g = big // t
    w = gcd(g, t)
    return ModuliInvariants(
        d1=2 * d // big,
        n1=(2 * n + 2) // big,
        g=g,
        w=w,
        g1=g // w,
        t1=t // w,
    )


def _neg_ratio(d1: int, denom: int, modulus: int) -> int:
    """(-d1 / denom) reduced mod modulus, via the modular inverse."""
    return (-d1 * mod_inverse(denom, modulus)) % modulus if modulus > 1 else 0


def _halved_power_count(w: int, t1: int, l: int) -> int:
    """w_plus(t1) * phi(w_minus(t1)) * 2^(rho(l)-1), evaluated exactly."""
    ws = split_w(w, t1)
    doubled = ws.w_plus * euler_phi(ws.w_minus) * 2 ** distinct_prime_count(l)
    if doubled % 2 != 0:
        raise ArithmeticError(
            f"non-integral component count for w={w}, t1={t1}, l={l}"
        )
    return doubled // 2


def component_count(n: int, d: int, t: int) -> CountResult:
    """Number of components of the moduli space, with the matching case tag."""
    _check_params(n, d, t)
    if gcd(2 * d, 2 * n + 2) % t != 0:
        return CountResult(0, "precondition-empty")
    inv = invariants(n, d, t)
    d1, n1, w, g1, t1 = inv.d1, inv.n1, inv.w, inv.g1, inv.t1

    coprime_t1 = gcd(d1, t1) == 1
    coprime_2t1 = coprime_t1 and gcd(n1, 2 * t1) == 1

    if t > 2:
        if (
            g1 % 2 == 0
            and coprime_t1
            and gcd(n1, t1) == 1
            and is_quadratic_residue(_neg_ratio(d1, n1, t1), t1)
        ):
            return CountResult(_halved_power_count(w, t1, t1), "1a")
        if (
            g1 % 2 == 1
            and t1 % 2 == 1
            and d1 % 2 == 1
            and coprime_2t1
            and is_quadratic_residue(_neg_ratio(d1, n1, 2 * t1), 2 * t1)
        ):
            return CountResult(_halved_power_count(w, t1, t1), "1b")
        if (
            g1 % 2 == 1
            and t1 % 2 == 1
            and w % 2 == 1
            and d1 % 2 == 0
            and coprime_2t1
            and is_quadratic_residue(_neg_ratio(d1, 4 * n1, t1), t1)
        ):
            return CountResult(_halved_power_count(w, t1, t1), "1c")
        if (
            g1 % 2 == 1
            and t1 % 2 == 0
            and coprime_2t1
            and is_quadratic_residue(_neg_ratio(d1, n1, 2 * t1), 2 * t1)
        ):
            return CountResult(_halved_power_count(w, t1, t1 // 2), "2")
        return CountResult(0, "4-empty")

    # t <= 2: a matching case always yields a single component
    if (
        g1 % 2 == 0
        and coprime_t1
        and gcd(n1, t1) == 1
        and is_quadratic_residue(_neg_ratio(d1, n1, t1), t1)
    ):
        return CountResult(1, "3a")
    if (
        g1 % 2 == 1
        and t1 % 2 == 1
        and d1 % 2 == 1
        and coprime_2t1
        and is_quadratic_residue(_neg_ratio(d1, n1, 2 * t1), 2 * t1)
    ):
        return CountResult(1, "3b")
    # unlike its t > 2 analogue, this case carries no parity condition on d1
    if (
        g1 % 2 == 1
        and t1 % 2 == 1
        and w % 2 == 1
        and coprime_2t1
        and is_quadratic_residue(_neg_ratio(d1, 4 * n1, t1), t1)
    ):
        return CountResult(1, "3c")
    if (
        g1 % 2 == 1
        and coprime_2t1
        and is_quadratic_residue(_neg_ratio(d1, n1, 2 * t1), 2 * t1)
    ):
        return CountResult(1, "3d")
    return CountResult(0, "4-empty")


def is_nonempty(n: int, d: int, t: int) -> bool:
    return component_count(n, d, t).count > 0


def connectedness_report(n: int, d_max: int, t_max: int) -> list[tuple[int, int, int, int]]:
    """All (n, d, t, count) with d <= d_max, t <= t_max and count not in {0, 1}.

    Expected to be empty for n in {2, 3, 4}.
    """
    if n not in (2, 3, 4):
        raise ValueError(f"connectedness is only asserted for n in {{2,3,4}}, got {n}")
    violations = []
    for d in range(1, d_max + 1):
        for t in range(1, t_max + 1):
            count = component_count(n, d, t).count
            if count not in (0, 1):
                violations.append((n, d, t, count))
    return violations
