"""The Dehn-twist action on root tuples: canonical forms and witnesses.

Orientation-preserving diffeomorphisms of the base orbifold act on the set
of order-r coverings.  On the coordinate tuple (s_1, t_1, ..., s_g, t_g) the
basic right-handed twists act by

    along u_i:          t_i  <-  t_i - s_i
    along v_i:          s_i  <-  s_i + t_i
    along w_{i,i+1}:    t_i  <-  t_i - omega,   t_{i+1}  <-  t_{i+1} + omega

where w_{i,i+1} is the curve separating handles i and i+1, on which a root
takes the value omega = s_i - s_{i+1} + 1.  Left-handed twists invert the
signs.  A power m iterates the unit twist m times; since each formula fixes
the entries it reads, iteration just scales the shift by m.

The u/v twists realise the Euclidean algorithm on each handle pair, the
w twists merge handle values, and together they drive every tuple to one of
a short list of standard forms: the empty tuple (genus 0), (0, d) with d a
divisor of r (genus 1, with d = r encoding the zero class), and for genus
at least 2 either (0, ..., 0, 0) or (0, ..., 0, 1) -- a single form when r
is odd, two forms distinguished by an Arf-type parity

    A = sum_i (s_i + 1)(t_i + 1)  mod 2

when r is even (the parity is well defined only for even r and is preserved
by every twist).  ``reduce_with_witness`` returns the canonical form of a
tuple together with an explicit twist word whose replay lands exactly on
the canonical representative.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from math import gcd
from typing import Any, Iterable

from .errors import OddOrder
from .roots import RootTuple

KIND_GENUS0 = "genus0"
KIND_GENUS1 = "genus1"
KIND_ALL_ZERO = "all_zero"
KIND_LAST_ONE = "last_one"

_FAMILIES = ("U", "V", "W")


@dataclass(frozen=True)
class TwistGenerator:
    """A power of one basic Dehn twist.

    ``family`` is "U"/"V" (twist along u_i/v_i, index i in [1, g]) or "W"
    (twist along w_{i,i+1}, index i in [1, g-1]); positive powers are
    right-handed.
    """

    family: str
    index: int
    power: int = 1

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"family must be one of {_FAMILIES}, got {self.family!r}")
        if not isinstance(self.index, numbers.Integral) or self.index < 1:
            raise ValueError(f"index must be a positive integer, got {self.index!r}")
        if not isinstance(self.power, numbers.Integral) or self.power == 0:
            raise ValueError(f"power must be a nonzero integer, got {self.power!r}")
        object.__setattr__(self, "index", int(self.index))
        object.__setattr__(self, "power", int(self.power))

    def inverse(self) -> "TwistGenerator":
        return TwistGenerator(self.family, self.index, -self.power)

    def to_json(self) -> dict[str, Any]:
        return {"family": self.family, "index": self.index, "power": self.power}

    @classmethod
    def from_json(cls, data: Any) -> "TwistGenerator":
        if not isinstance(data, dict) or not {"family", "index", "power"} <= set(data):
            raise ValueError('generator JSON must be {"family": ..., "index": ..., "power": ...}')
        return cls(data["family"], data["index"], data["power"])


@dataclass(frozen=True)
class TwistWord:
    """A finite composition of twist generators, applied left to right."""

    word: tuple[TwistGenerator, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple(g.inverse() for g in reversed(self.word)))

    def to_json(self) -> list[dict[str, Any]]:
        return [g.to_json() for g in self.word]

    @classmethod
    def from_json(cls, data: Any) -> "TwistWord":
        if not isinstance(data, list):
            raise ValueError("twist word JSON must be a list of generators")
        return cls(tuple(TwistGenerator.from_json(g) for g in data))


def _apply_inplace(coords: list[int], r: int, genus: int, family: str, index: int, power: int) -> None:
    i = index - 1
    if family == "U":
        if not 1 <= index <= genus:
            raise ValueError(f"u-twist index {index} out of range for genus {genus}")
        coords[2 * i + 1] = (coords[2 * i + 1] - power * coords[2 * i]) % r
    elif family == "V":
        if not 1 <= index <= genus:
            raise ValueError(f"v-twist index {index} out of range for genus {genus}")
        coords[2 * i] = (coords[2 * i] + power * coords[2 * i + 1]) % r
    else:
        if not 1 <= index <= genus - 1:
            raise ValueError(f"w-twist index {index} out of range for genus {genus}")
        # the shift depends only on s-entries, which the twist fixes, so a
        # power m moves the t-entries by m*shift
        shift = coords[2 * i] - coords[2 * i + 2] + 1
        coords[2 * i + 1] = (coords[2 * i + 1] - power * shift) % r
        coords[2 * i + 3] = (coords[2 * i + 3] + power * shift) % r


def apply_generator(root: RootTuple, gen: TwistGenerator) -> RootTuple:
    """Act on a root tuple by one (power of a) basic Dehn twist."""
    coords = list(root.coords)
    _apply_inplace(coords, root.order, root.genus, gen.family, gen.index, gen.power)
    return RootTuple(root.order, tuple(coords))


def apply_word(root: RootTuple, word: TwistWord | Iterable[TwistGenerator]) -> RootTuple:
    """Fold :func:`apply_generator` over a word; the empty word is the identity."""
    generators = word.word if isinstance(word, TwistWord) else tuple(word)
    coords = list(root.coords)
    for gen in generators:
        _apply_inplace(coords, root.order, root.genus, gen.family, gen.index, gen.power)
    return RootTuple(root.order, tuple(coords))


def w_value(root: RootTuple, i: int) -> int:
    """The value s_i - s_{i+1} + 1 mod r taken on the separating curve
    between handles i and i+1 (1 <= i <= g-1)."""
    if not 1 <= i <= root.genus - 1:
        raise ValueError(f"separating-curve index {i} out of range for genus {root.genus}")
    return (root.coords[2 * (i - 1)] - root.coords[2 * i] + 1) % root.order


def a_invariant(root: RootTuple) -> int:
    """Arf-type parity sum((s_i + 1)(t_i + 1)) mod 2; defined for even r only.

    Any integer representatives of the residues give the same parity when r
    is even, so the reduced coordinates may be used directly.
    """
    if root.order % 2 != 0:
        raise OddOrder(f"the parity invariant is undefined for odd order {root.order}")
    total = 0
    for i in range(root.genus):
        total += (root.coords[2 * i] + 1) * (root.coords[2 * i + 1] + 1)
    return total % 2


@dataclass(frozen=True)
class StandardForm:
    """Canonical label of a twist orbit, together with its ambient (r, g).

    ``kind`` is one of "genus0", "genus1" (with a divisor d of r, d = r
    encoding the zero class), "all_zero" or "last_one".
    """

    kind: str
    order: int
    genus: int
    d: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (KIND_GENUS0, KIND_GENUS1, KIND_ALL_ZERO, KIND_LAST_ONE):
            raise ValueError(f"unknown standard form kind {self.kind!r}")
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.kind == KIND_GENUS0 and self.genus != 0:
            raise ValueError("genus0 form requires genus 0")
        if self.kind == KIND_GENUS1:
            if self.genus != 1:
                raise ValueError("genus1 form requires genus 1")
            if self.d is None or not 1 <= self.d <= self.order or self.order % self.d != 0:
                raise ValueError(f"d must be a divisor of {self.order} in [1, {self.order}]")
        else:
            if self.d is not None:
                raise ValueError("d is only meaningful for genus1 forms")
        if self.kind in (KIND_ALL_ZERO, KIND_LAST_ONE) and self.genus < 2:
            raise ValueError(f"{self.kind} form requires genus >= 2")
        if self.kind == KIND_LAST_ONE and self.order % 2 != 0:
            raise ValueError("last_one form occurs only for even order")

    def canonical_coords(self) -> tuple[int, ...]:
        if self.kind == KIND_GENUS0:
            return ()
        if self.kind == KIND_GENUS1:
            return (0, self.d % self.order)
        coords = [0] * (2 * self.genus)
        if self.kind == KIND_LAST_ONE:
            coords[-1] = 1
        return tuple(coords)

    def canonical_root(self) -> RootTuple:
        return RootTuple(self.order, self.canonical_coords())

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind}
        if self.kind == KIND_GENUS1:
            data["d"] = self.d
        return data

    @classmethod
    def from_json(cls, data: Any, order: int, genus: int) -> "StandardForm":
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError('standard form JSON must be {"kind": ..., "d": ...?}')
        return cls(data["kind"], order, genus, data.get("d"))


def canonical_form(root: RootTuple) -> StandardForm:
    """The complete orbit invariant of a root tuple under the twist action.

    genus 0: a single class.  genus 1: the divisor d = gcd(s_1, t_1, r)
    normalised into (0, r] (zero tuple -> d = r).  genus >= 2: a single
    class for odd r; for even r the class is decided by the Arf-type
    parity, which equals g mod 2 exactly on the all-zero class.
    """
    r, g = root.order, root.genus
    if g == 0:
        return StandardForm(KIND_GENUS0, r, 0)
    if g == 1:
        d = gcd(root.coords[0], root.coords[1], r)
        return StandardForm(KIND_GENUS1, r, 1, d)
    if r % 2 == 1:
        return StandardForm(KIND_ALL_ZERO, r, g)
    if a_invariant(root) == g % 2:
        return StandardForm(KIND_ALL_ZERO, r, g)
    return StandardForm(KIND_LAST_ONE, r, g)


def _signed_residue(x: int, r: int) -> int:
    """Least-absolute-value representative of x mod r (ties go positive)."""
    x %= r
    return x - r if 2 * x > r else x


def _nearest_quotient(a: int, b: int) -> int:
    """Round a/b to the nearest integer, exactly (|a - q*b| <= |b|/2)."""
    if b < 0:
        return -_nearest_quotient(a, -b)
    q, rem = divmod(a, b)
    if 2 * rem > b:
        q += 1
    return q


def reduce_with_witness(root: RootTuple) -> tuple[StandardForm, TwistWord]:
    """Canonical form plus a twist word replaying the reduction.

    The returned word w satisfies apply_word(root, w) == canonical tuple.
    Strategy: a signed Euclidean algorithm with u/v twists turns each handle
    pair into (0, d_i) with d_i the normalised divisor gcd(s_i, t_i, r);
    for genus >= 2, w twists (whose shift is 1 once all s-entries vanish)
    merge the d_i into the last slot, and a w/flip/w sequence steps the last
    entry by +-2 until it reaches its canonical value (0, or 1 for even r
    and odd parity; steps of 2 generate all of Z_r when r is odd).
    """
    form = canonical_form(root)
    r, g = root.order, root.genus
    state = list(root.coords)
    word: list[TwistGenerator] = []

    def emit(family: str, index: int, power: int) -> None:
        # the action of a power only depends on it mod r; keep words short
        power = _signed_residue(power, r)
        if power == 0:
            return
        gen = TwistGenerator(family, index, power)
        _apply_inplace(state, r, g, family, index, power)
        word.append(gen)

    def reduce_handle(i: int) -> None:
        # signed Euclid until one slot of handle i (0-based) vanishes mod r;
        # work on the coordinate with the larger least-absolute representative,
        # preferring the t-slot on ties
        while True:
            s = _signed_residue(state[2 * i], r)
            t = _signed_residue(state[2 * i + 1], r)
            if s == 0 or t == 0:
                break
            if abs(s) > abs(t):
                emit("V", i + 1, -_nearest_quotient(s, t))
            else:
                emit("U", i + 1, _nearest_quotient(t, s))
        if state[2 * i + 1] == 0 and state[2 * i] != 0:
            emit("U", i + 1, -1)  # (s, 0) -> (s, s)
            emit("V", i + 1, -1)  # (s, s) -> (0, s)
        t = state[2 * i + 1]
        if t != 0:
            d = gcd(t, r)
            if t != d:
                # t/d is a unit mod r/d, so a*t = d (mod r) is solvable
                a = pow(t // d, -1, r // d)
                emit("V", i + 1, a)  # (0, t) -> (d, t)
                emit("U", i + 1, t // d)  # (d, t) -> (d, 0)
                emit("U", i + 1, -1)  # (d, 0) -> (d, d)
                emit("V", i + 1, -1)  # (d, d) -> (0, d)

    def flip_t_sign(i: int) -> None:
        # (0, t) -> (0, -t) on handle i (0-based)
        emit("V", i + 1, -1)
        emit("U", i + 1, -2)
        emit("V", i + 1, -1)

    for i in range(g):
        reduce_handle(i)

    if g >= 2:
        # all s-entries vanish here, so every separating-curve value is 1 and
        # a w-power moves handle values verbatim into the next slot
        for i in range(g - 1):
            m = state[2 * i + 1]
            if m:
                emit("W", i + 1, m)
        last = state[2 * g - 1]
        target = 0 if r % 2 == 1 else last % 2
        up = (target - last) % r
        down = (last - target) % r
        if r % 2 == 0:
            steps, direction = (up // 2, 1) if up <= down else (down // 2, -1)
        elif up % 2 == 0:
            steps, direction = up // 2, 1
        else:
            steps, direction = down // 2, -1
        for _ in range(steps):
            emit("W", g - 1, direction)
            flip_t_sign(g - 2)
            emit("W", g - 1, direction)

    if tuple(state) != form.canonical_coords():
        raise RuntimeError("witness replay did not reach the canonical representative")
    return form, TwistWord(tuple(word))
