"""Orbifold signatures, exact Euler characteristics, admissible covering orders.

A closed orientable 2-orbifold is described by its signature: a genus g >= 0
together with the multiplicities alpha_1, ..., alpha_n >= 2 of its cone
points.  Everything here is exact integer/rational arithmetic.  The orbifold
Euler characteristic is

    chi = 2 - 2g - n + sum_j 1/alpha_j,

and the orbifold is of hyperbolic type exactly when chi < 0.  The unit
tangent bundle of a hyperbolic orbifold admits a connected fibrewise r-fold
covering (an r-th root, or r-spin structure) if and only if r is coprime to
every alpha_j and divides the integer alpha_1 * ... * alpha_n * chi.  Both
conditions are decided here without ever leaving exact arithmetic.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Any

from .errors import NotHyperbolic


@dataclass(frozen=True)
class OrbifoldSignature:
    """Genus plus cone-point multiplicities of a closed orientable 2-orbifold.

    Cone points are recorded only through their multiplicities.  Their order
    is kept for labelling, but no derived quantity depends on it.
    """

    genus: int
    cone_multiplicities: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "cone_multiplicities", tuple(int(a) for a in self.cone_multiplicities)
        )
        if not isinstance(self.genus, numbers.Integral) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        object.__setattr__(self, "genus", int(self.genus))
        for a in self.cone_multiplicities:
            if a < 2:
                raise ValueError(f"cone multiplicities must be >= 2, got {a}")

    @property
    def num_cone_points(self) -> int:
        return len(self.cone_multiplicities)

    def to_json(self) -> dict[str, Any]:
        return {"genus": self.genus, "cone_points": list(self.cone_multiplicities)}

    @classmethod
    def from_json(cls, data: Any) -> "OrbifoldSignature":
        if not isinstance(data, dict) or "genus" not in data or "cone_points" not in data:
            raise ValueError('signature JSON must be {"genus": g, "cone_points": [...]}')
        cones = data["cone_points"]
        if not isinstance(cones, (list, tuple)):
            raise ValueError("cone_points must be a list of integers >= 2")
        return cls(data["genus"], tuple(cones))


def chi_orb(sig: OrbifoldSignature) -> Fraction:
    """Exact orbifold Euler characteristic 2 - 2g - n + sum(1/alpha_j)."""
    value = Fraction(2 - 2 * sig.genus - sig.num_cone_points)
    for a in sig.cone_multiplicities:
        value += Fraction(1, a)
    return value


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return chi_orb(sig) < 0


def assert_hyperbolic(sig: OrbifoldSignature) -> None:
    """Raise :class:`NotHyperbolic` unless chi(sig) < 0."""
    chi = chi_orb(sig)
    if chi >= 0:
        raise NotHyperbolic(chi)


def multiplicity_product_chi(sig: OrbifoldSignature) -> int:
    """The integer alpha_1 * ... * alpha_n * chi (empty product = 1).

    Expanding the formula for chi shows the product clears every
    denominator, so the result is an exact integer; this is asserted.
    """
    product = 1
    for a in sig.cone_multiplicities:
        product *= a
    value = product * chi_orb(sig)
    assert value.denominator == 1, f"expected an integer, got {value}"
    return value.numerator


def root_order_admissible(sig: OrbifoldSignature, r: int) -> bool:
    """Whether a connected fibrewise covering of order r exists.

    True iff gcd(r, alpha_j) = 1 for every cone point and r divides the
    integer alpha_1*...*alpha_n*chi (divisibility of a negative integer
    means divisibility of its absolute value).
    """
    assert_hyperbolic(sig)
    if not isinstance(r, numbers.Integral) or r < 1:
        raise ValueError(f"covering order must be a positive integer, got {r!r}")
    r = int(r)
    if any(gcd(r, a) != 1 for a in sig.cone_multiplicities):
        return False
    return abs(multiplicity_product_chi(sig)) % r == 0


def admissible_root_orders(sig: OrbifoldSignature) -> tuple[int, ...]:
    """All covering orders admitting a root, in ascending order.

    The list is finite: every admissible r divides the fixed nonzero
    integer alpha_1*...*alpha_n*chi.
    """
    assert_hyperbolic(sig)
    bound = abs(multiplicity_product_chi(sig))
    return tuple(r for r in divisors(bound) if root_order_admissible(sig, r))


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of |n| in ascending order (n must be nonzero)."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("zero has no finite divisor list")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])
