#!/usr/bin/env python3
# Orbit counting two ways: breadth-first search over all of Z_r^{2g} versus
# the closed-form counts, followed by the component/sheet census of the
# moduli space of taut contact circles.

from orbispin import (
    OrbifoldSignature,
    divisors,
    genus_one_orbit_size,
    moduli_report,
    orbit_count_closed_form,
    partition_orbits,
    solve_raymond_vasquez,
)

print("=== genus >= 2: two orbits for even orders, one for odd ===")
for sig, r in [
    (OrbifoldSignature(2), 2),
    (OrbifoldSignature(2, (3,)), 4),
    (OrbifoldSignature(2, (2, 2)), 3),
    (OrbifoldSignature(3), 2),
]:
    ctx = solve_raymond_vasquez(sig, r)
    partition = partition_orbits(ctx)
    found = {rec.label.kind: rec.size for rec in partition.orbits}
    print(f"g = {sig.genus}, r = {r}: BFS found {found}, "
          f"closed form gives {orbit_count_closed_form(sig.genus, r)}")

print()
print("=== genus 1: one orbit per divisor of r ===")
r = 12
ctx = solve_raymond_vasquez(OrbifoldSignature(1, (13,)), r)
partition = partition_orbits(ctx)
for rec in partition.orbits:
    print(f"  d = {rec.label.d}: orbit size {rec.size} "
          f"(pairs generating the ideal ({rec.label.d}): "
          f"{genus_one_orbit_size(r, rec.label.d)})")
print(f"  divisors of {r}: {divisors(r)}; sizes sum to {sum(partition.sizes())} = r^2")

print()
print("=== moduli census ===")
for sig, r in [
    (OrbifoldSignature(0, (2, 3, 7)), 1),
    (OrbifoldSignature(1, (3,)), 2),
    (OrbifoldSignature(2), 2),
    (OrbifoldSignature(2, (2, 2)), 3),
]:
    report = moduli_report(solve_raymond_vasquez(sig, r))
    print(report.render_text())
    print()
