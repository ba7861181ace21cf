"""Root tuples: coordinates for the set of order-r fibrewise coverings.

A connected fibrewise covering of order r corresponds to a homomorphism from
the fundamental group of the unit tangent bundle into Z_r sending the fibre
class to 1.  Such a homomorphism takes arbitrary values on the 2g handle
generators and is determined everywhere else: the fibre class maps to 1 and
the j-th exceptional generator to k_j mod r.  A :class:`RootTuple` stores
only the free part, the tuple (s_1, t_1, ..., s_g, t_g) in Z_r^{2g}; the
full homomorphism is reconstructed on demand from a :class:`RootContext`.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator

from .errors import CountOverflow
from .seifert import RootContext

DEFAULT_STATE_CAP = 1 << 24


@dataclass(frozen=True)
class RootTuple:
    """An element of Z_r^{2g}; entries are reduced mod r on construction."""

    order: int
    coords: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.order, numbers.Integral) or self.order < 1:
            raise ValueError(f"order must be a positive integer, got {self.order!r}")
        object.__setattr__(self, "order", int(self.order))
        for c in self.coords:
            if not isinstance(c, numbers.Integral):
                raise ValueError(f"coordinates must be integers, got {c!r}")
        if len(self.coords) % 2 != 0:
            raise ValueError("a root tuple has an even number of coordinates")
        object.__setattr__(self, "coords", tuple(int(c) % self.order for c in self.coords))

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    def to_json(self) -> dict[str, Any]:
        return {"r": self.order, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data: Any) -> "RootTuple":
        if not isinstance(data, dict) or not {"r", "coords"} <= set(data):
            raise ValueError('root tuple JSON must be {"r": r, "coords": [...]}')
        return cls(data["r"], tuple(data["coords"]))


def enumerate_roots(ctx: RootContext, cap: int | None = DEFAULT_STATE_CAP) -> Iterator[RootTuple]:
    """Yield all r^{2g} root tuples once each, in lexicographic order.

    Raises :class:`CountOverflow` up front when the full enumeration would
    exceed ``cap`` states; pass ``cap=None`` to stream without the guard.
    """
    r, g = ctx.order, ctx.genus
    total = r ** (2 * g)
    if cap is not None and total > cap:
        raise CountOverflow(f"{total} roots exceed the state cap {cap}")
    return (RootTuple(r, combo) for combo in product(range(r), repeat=2 * g))


def determined_values(ctx: RootContext) -> tuple[int, tuple[int, ...]]:
    """The forced values of a root homomorphism: 1 mod r on the fibre class
    and k_j mod r on each exceptional generator."""
    r = ctx.order
    return 1 % r, tuple(k % r for k in ctx.twist_integers)
