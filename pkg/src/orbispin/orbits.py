"""Brute-force orbit enumeration of the twist action on Z_r^{2g}.

States are packed into mixed-radix integers (base r, big-endian, so index
order is lexicographic order of tuples) and the search works on numpy index
arrays: each generator image of a whole frontier is computed by vectorised
digit arithmetic, so no per-state Python objects are created.  Orbits are
discovered in ascending order of their lexicographically minimal member,
which therefore serves as the representative.

The closed-form counts implemented alongside: for genus >= 2 and even r the
action has exactly two orbits, of sizes r^{2g} (2^g + 1) / 2^{g+1} and
r^{2g} (2^g - 1) / 2^{g+1} (even/odd Arf-type parity); for odd r it is
transitive.  For genus 1 the orbit of (0, d) consists of the pairs
generating the same ideal of Z_r as the divisor d, counted directly (the
count equals the Jordan totient J_2(r/d), kept as an internal cross-check).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import CountOverflow
from .roots import DEFAULT_STATE_CAP, RootTuple
from .seifert import RootContext
from .twists import (
    KIND_ALL_ZERO,
    StandardForm,
    TwistGenerator,
    canonical_form,
)


@dataclass(frozen=True)
class OrbitRecord:
    representative: RootTuple
    size: int
    label: StandardForm


@dataclass(frozen=True)
class OrbitPartition:
    """The full orbit decomposition of Z_r^{2g} under a twist generator set."""

    order: int
    genus: int
    orbits: tuple[OrbitRecord, ...]

    def __post_init__(self) -> None:
        total = sum(rec.size for rec in self.orbits)
        if total != self.order ** (2 * self.genus):
            raise ValueError(f"orbit sizes sum to {total}, expected r^(2g)")
        labels = [rec.label for rec in self.orbits]
        if len(set(labels)) != len(labels):
            raise ValueError("orbit labels must be pairwise distinct")

    def sizes(self) -> tuple[int, ...]:
        return tuple(rec.size for rec in self.orbits)

    def to_json(self) -> dict[str, Any]:
        return {
            "r": self.order,
            "g": self.genus,
            "orbits": [
                {
                    "rep": list(rec.representative.coords),
                    "size": rec.size,
                    "label": rec.label.to_json(),
                }
                for rec in self.orbits
            ],
        }


def standard_generators(genus: int) -> tuple[TwistGenerator, ...]:
    """The unit twists u_1, v_1, ..., u_g, v_g, w_1, ..., w_{g-1}."""
    gens: list[TwistGenerator] = []
    for i in range(1, genus + 1):
        gens.append(TwistGenerator("U", i))
        gens.append(TwistGenerator("V", i))
    for i in range(1, genus):
        gens.append(TwistGenerator("W", i))
    return tuple(gens)


def _weights(r: int, genus: int) -> list[int]:
    return [r ** (2 * genus - 1 - a) for a in range(2 * genus)]


def _validate_generator(gen: TwistGenerator, genus: int) -> None:
    limit = genus if gen.family in ("U", "V") else genus - 1
    if not 1 <= gen.index <= limit:
        raise ValueError(f"{gen.family}-twist index {gen.index} out of range for genus {genus}")


def _apply_indices(idx: np.ndarray, r: int, genus: int, gen: TwistGenerator) -> np.ndarray:
    """Vectorised generator image of packed states."""
    w = _weights(r, genus)
    i = gen.index - 1
    m = gen.power
    if gen.family == "U":
        ws, wt = w[2 * i], w[2 * i + 1]
        s = (idx // ws) % r
        t = (idx // wt) % r
        return idx + (((t - m * s) % r) - t) * wt
    if gen.family == "V":
        ws, wt = w[2 * i], w[2 * i + 1]
        s = (idx // ws) % r
        t = (idx // wt) % r
        return idx + (((s + m * t) % r) - s) * ws
    ws1, wt1, ws2, wt2 = w[2 * i], w[2 * i + 1], w[2 * i + 2], w[2 * i + 3]
    s1 = (idx // ws1) % r
    t1 = (idx // wt1) % r
    s2 = (idx // ws2) % r
    t2 = (idx // wt2) % r
    shift = s1 - s2 + 1
    d1 = ((t1 - m * shift) % r) - t1
    d2 = ((t2 + m * shift) % r) - t2
    return idx + d1 * wt1 + d2 * wt2


def _decode(index: int, r: int, genus: int) -> tuple[int, ...]:
    coords = []
    for w in _weights(r, genus):
        coords.append((index // w) % r)
    return tuple(coords)


def _encode(coords: Sequence[int], r: int) -> int:
    index = 0
    for c in coords:
        index = index * r + (c % r)
    return index


def _signed_pairs(
    generators: Iterable[TwistGenerator], genus: int
) -> tuple[TwistGenerator, ...]:
    out: list[TwistGenerator] = []
    for gen in generators:
        _validate_generator(gen, genus)
        out.append(gen)
        out.append(gen.inverse())
    return tuple(out)


def _component(
    seed: int,
    visited: np.ndarray,
    r: int,
    genus: int,
    gens_pm: tuple[TwistGenerator, ...],
) -> np.ndarray:
    """All states reachable from seed; marks them in ``visited``."""
    visited[seed] = True
    chunks = [np.array([seed], dtype=np.int64)]
    frontier = chunks[0]
    while frontier.size:
        if gens_pm:
            images = np.concatenate([_apply_indices(frontier, r, genus, g) for g in gens_pm])
            fresh = np.unique(images)
            fresh = fresh[~visited[fresh]]
        else:
            fresh = frontier[:0]
        visited[fresh] = True
        if fresh.size:
            chunks.append(fresh)
        frontier = fresh
    return np.concatenate(chunks)


def _check_state_count(r: int, genus: int, cap: int | None) -> int:
    total = r ** (2 * genus)
    if cap is not None and total > cap:
        raise CountOverflow(f"state space of size {total} exceeds the cap {cap}")
    return total


def orbit_of(
    root: RootTuple,
    cap: int | None = DEFAULT_STATE_CAP,
    generators: Iterable[TwistGenerator] | None = None,
) -> set[RootTuple]:
    """Closure of one root under the twist generators and their inverses."""
    r, g = root.order, root.genus
    _check_state_count(r, g, cap)
    gens = standard_generators(g) if generators is None else tuple(generators)
    gens_pm = _signed_pairs(gens, g)
    visited = np.zeros(r ** (2 * g), dtype=bool)
    members = _component(_encode(root.coords, r), visited, r, g, gens_pm)
    return {RootTuple(r, _decode(int(ix), r, g)) for ix in members}


def partition_orbits(
    ctx: RootContext,
    cap: int | None = DEFAULT_STATE_CAP,
    generators: Iterable[TwistGenerator] | None = None,
) -> OrbitPartition:
    """Full orbit decomposition of Z_r^{2g}, labelled by canonical forms.

    Each orbit is labelled by the canonical form of its representative (the
    lexicographically least member), and the whole orbit is checked to share
    that form; a mixed orbit would raise RuntimeError.
    """
    r, g = ctx.order, ctx.genus
    total = _check_state_count(r, g, cap)
    gens = standard_generators(g) if generators is None else tuple(generators)
    gens_pm = _signed_pairs(gens, g)
    visited = np.zeros(total, dtype=bool)
    records: list[OrbitRecord] = []
    while True:
        remaining = np.flatnonzero(~visited)
        if remaining.size == 0:
            break
        seed = int(remaining[0])
        members = _component(seed, visited, r, g, gens_pm)
        rep = RootTuple(r, _decode(seed, r, g))
        label = canonical_form(rep)
        _assert_uniform_label(members, r, g, label)
        records.append(OrbitRecord(rep, int(members.size), label))
    return OrbitPartition(r, g, tuple(records))


def _assert_uniform_label(members: np.ndarray, r: int, genus: int, label: StandardForm) -> None:
    if genus == 0 or (genus >= 2 and r % 2 == 1):
        return  # only one possible label
    w = _weights(r, genus)
    if genus == 1:
        s = (members // w[0]) % r
        t = (members // w[1]) % r
        d = np.gcd(np.gcd(s, t), r)
        if not np.all(d == label.d):
            raise RuntimeError("orbit mixes distinct genus-1 divisor classes")
        return
    parity = np.zeros(members.shape, dtype=np.int64)
    for i in range(genus):
        s = (members // w[2 * i]) % r
        t = (members // w[2 * i + 1]) % r
        parity += (s + 1) * (t + 1)
    parity %= 2
    expected = genus % 2 if label.kind == KIND_ALL_ZERO else (genus + 1) % 2
    if not np.all(parity == expected):
        raise RuntimeError("orbit mixes distinct parity classes")


def orbit_count_closed_form(genus: int, r: int) -> int | tuple[int, int]:
    """Orbit sizes for genus >= 2 without enumeration.

    Odd r: the action is transitive, one orbit of size r^{2g}.  Even r: the
    pair (even-type count, odd-type count) = r^{2g} (2^g +- 1) / 2^{g+1},
    computed in exact integer arithmetic.
    """
    if genus < 2:
        raise ValueError("closed-form counts apply to genus >= 2 only")
    if r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    total = r ** (2 * genus)
    if r % 2 == 1:
        return total
    denom = 2 ** (genus + 1)
    even_count, rem = divmod(total * (2**genus + 1), denom)
    assert rem == 0
    odd_count, rem = divmod(total * (2**genus - 1), denom)
    assert rem == 0
    return even_count, odd_count


def genus_one_orbit_size(r: int, d: int) -> int:
    """Number of pairs (s, t) in Z_r^2 generating the same ideal as d.

    Counted directly over Z_r^2, with gcd(s, t, r) normalised so the zero
    pair belongs to d = r.  Cross-checked against the Jordan totient
    J_2(r/d).
    """
    if r < 1:
        raise ValueError(f"order must be a positive integer, got {r!r}")
    if d < 1 or r % d != 0:
        raise ValueError(f"{d} does not divide {r}")
    count = 0
    for s in range(r):
        for t in range(r):
            if gcd(s, t, r) == d:
                count += 1
    assert count == _jordan_totient_2(r // d)
    return count


def _jordan_totient_2(m: int) -> int:
    """J_2(m) = m^2 * prod over primes p | m of (1 - 1/p^2), exactly."""
    result = m * m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            result = result // (p * p) * (p * p - 1)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result = result // (n * n) * (n * n - 1)
    return result
