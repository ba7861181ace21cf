#!/usr/bin/env python3
# Which covering orders does a hyperbolic orbifold admit, and what Seifert
# data does each covering carry?  Everything below is exact arithmetic.

from orbispin import (
    OrbifoldSignature,
    SeifertInvariants,
    admissible_root_orders,
    chi_orb,
    multiplicity_product_chi,
    recognize_fibre_index,
    solve_raymond_vasquez,
    unit_tangent_bundle,
)

examples = [
    OrbifoldSignature(2),                # genus-2 surface, no cone points
    OrbifoldSignature(3),                # genus 3
    OrbifoldSignature(0, (2, 3, 7)),     # the (2,3,7) triangle orbifold
    OrbifoldSignature(1, (3,)),          # torus with one cone point
    OrbifoldSignature(1, (7, 7)),        # torus with two cone points
]

print("=== admissible covering orders ===")
for sig in examples:
    chi = chi_orb(sig)
    print(f"{sig.to_json()}: chi = {chi}, "
          f"alpha-product * chi = {multiplicity_product_chi(sig)}, "
          f"orders = {admissible_root_orders(sig)}")

# The (2,3,7) orbifold is extremal: the integer alpha-product * chi is -1,
# so only the trivial covering exists.

print()
print("=== unit tangent bundles (order 1) ===")
for sig in examples[:3]:
    ctx = unit_tangent_bundle(sig)
    print(f"{sig.to_json()}: b = {ctx.invariants.obstruction}, "
          f"pairs = {ctx.invariants.multiple_fibres}, e = {ctx.euler_number}")

print()
print("=== solving the covering relations ===")
sig = OrbifoldSignature(1, (7, 7))
for r in admissible_root_orders(sig):
    ctx = solve_raymond_vasquez(sig, r)
    print(f"r = {r}: b = {ctx.invariants.obstruction}, "
          f"pairs = {ctx.invariants.multiple_fibres}, k = {ctx.twist_integers}, "
          f"e = {ctx.euler_number}  (r*e = {r * ctx.euler_number} = chi)")

print()
print("=== recognizing a fibre index from raw Seifert invariants ===")
inv = SeifertInvariants(genus=2, obstruction=1, multiple_fibres=((3, 1),))
ctx = recognize_fibre_index(inv)
print(f"{inv.to_json()} is the order-{ctx.order} covering over "
      f"{ctx.signature.to_json()} with e = {ctx.euler_number}")
