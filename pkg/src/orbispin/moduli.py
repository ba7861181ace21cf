"""Component/sheet census for the moduli space of taut contact circles.

For a Seifert manifold that is an order-r covering of the unit tangent
bundle of a hyperbolic orbifold, the moduli space of taut contact circles is
a (possibly branched) covering of the moduli space of hyperbolic metrics on
the base.  Its connected components correspond to twist orbits of root
tuples and the sheet count of each component is the orbit length, so the
census is purely combinatorial:

    genus 0:            one component, one sheet;
    genus 1:            one component per divisor d of r, with as many
                        sheets as there are pairs generating the ideal (d);
    genus >= 2, r odd:  one component with r^{2g} sheets;
    genus >= 2, r even: two components with r^{2g} (2^g +- 1) / 2^{g+1}
                        sheets.

Whenever the state space fits under the cap, the report is verified against
the brute-force orbit partition and construction fails loudly on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .orbifold import divisors
from .orbits import genus_one_orbit_size, orbit_count_closed_form, partition_orbits
from .roots import DEFAULT_STATE_CAP
from .seifert import RootContext
from .twists import (
    KIND_ALL_ZERO,
    KIND_GENUS0,
    KIND_GENUS1,
    KIND_LAST_ONE,
    StandardForm,
)

BASE_NOTE = (
    "possibly branched covering of the moduli space of hyperbolic metrics "
    "on the base orbifold"
)


@dataclass(frozen=True)
class ModuliReport:
    """Census of connected components and sheet counts for one covering."""

    context: RootContext
    components: tuple[tuple[StandardForm, int], ...]
    base_note: str = BASE_NOTE

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        total = self.context.order ** (2 * self.context.genus)
        sheets = sum(n for _, n in self.components)
        if sheets != total:
            raise ValueError(f"sheet counts sum to {sheets}, expected r^(2g) = {total}")
        labels = [label for label, _ in self.components]
        if len(set(labels)) != len(labels):
            raise ValueError("component labels must be pairwise distinct")
        for _, n in self.components:
            if n < 1:
                raise ValueError("sheet counts must be positive")

    def total_sheets(self) -> int:
        return sum(n for _, n in self.components)

    def to_json(self) -> dict[str, Any]:
        return {
            "context": self.context.to_json(),
            "components": [
                {"label": label.to_json(), "sheets": n} for label, n in self.components
            ],
            "base_note": self.base_note,
        }

    def render_text(self) -> str:
        sig = self.context.signature
        lines = [
            f"moduli census for signature {sig.to_json()} at fibre index r = {self.context.order}:"
        ]
        for label, n in self.components:
            tag = label.kind if label.d is None else f"{label.kind} d={label.d}"
            lines.append(f"  component [{tag}]: {n} sheet{'s' if n != 1 else ''}")
        lines.append(f"  total sheets: {self.total_sheets()} = r^(2g)")
        lines.append(f"  base: {self.base_note}")
        return "\n".join(lines)


def moduli_report(ctx: RootContext, state_cap: int | None = DEFAULT_STATE_CAP) -> ModuliReport:
    """Assemble the component/sheet census for a covering datum.

    When r^{2g} does not exceed ``state_cap`` the census is cross-checked
    against the brute-force orbit partition; a mismatch raises RuntimeError.
    """
    r, g = ctx.order, ctx.genus
    total = r ** (2 * g)
    components: list[tuple[StandardForm, int]]
    if g == 0:
        components = [(StandardForm(KIND_GENUS0, r, 0), 1)]
    elif g == 1:
        components = [
            (StandardForm(KIND_GENUS1, r, 1, d), genus_one_orbit_size(r, d))
            for d in divisors(r)
        ]
    elif r % 2 == 1:
        components = [(StandardForm(KIND_ALL_ZERO, r, g), total)]
    else:
        even_count, odd_count = orbit_count_closed_form(g, r)
        # the all-zero class has even parity exactly when g is even
        all_zero = even_count if g % 2 == 0 else odd_count
        last_one = odd_count if g % 2 == 0 else even_count
        components = [
            (StandardForm(KIND_ALL_ZERO, r, g), all_zero),
            (StandardForm(KIND_LAST_ONE, r, g), last_one),
        ]
    report = ModuliReport(ctx, tuple(components))
    if state_cap is not None and total <= state_cap:
        partition = partition_orbits(ctx, cap=state_cap)
        expected = {label: n for label, n in report.components}
        observed = {rec.label: rec.size for rec in partition.orbits}
        if expected != observed:
            raise RuntimeError(
                f"census disagrees with brute-force orbits: {expected} vs {observed}"
            )
    return report
