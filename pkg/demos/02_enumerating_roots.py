#!/usr/bin/env python3
# Roots of a fixed order form a copy of Z_r^{2g}: free values on the handle
# generators, forced values everywhere else.  This script enumerates them
# and prints the fundamental-group presentations attached to one root.

from orbispin import (
    MODE_ORBIFOLD,
    MODE_ROOT,
    MODE_UNIT_TANGENT,
    OrbifoldSignature,
    RootTuple,
    determined_values,
    enumerate_roots,
    root_group_presentation,
    solve_raymond_vasquez,
)

ctx = solve_raymond_vasquez(OrbifoldSignature(1, (3,)), 2)
print(f"context: {ctx.to_json()}")

h_value, q_values = determined_values(ctx)
print(f"forced values: fibre class -> {h_value}, exceptional generators -> {q_values}")

print()
print("all roots in lexicographic order:")
for root in enumerate_roots(ctx):
    print(" ", root.coords)

# the count is always r^(2g); genus 0 has exactly one root
trivial = solve_raymond_vasquez(OrbifoldSignature(0, (2, 3, 7)), 1)
print()
print(f"genus-0 roots: {[r.coords for r in enumerate_roots(trivial)]}")

print()
print("=== presentations attached to the root (0, 0) ===")
root = RootTuple(2, (0, 0))
for mode in (MODE_ORBIFOLD, MODE_UNIT_TANGENT, MODE_ROOT):
    pres = root_group_presentation(ctx, root, mode=mode)
    print(f"[{pres.kind}]")
    print(pres.render_text())
    print()
