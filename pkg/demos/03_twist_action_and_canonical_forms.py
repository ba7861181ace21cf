#!/usr/bin/env python3
# The diffeomorphism group acts on roots through Dehn twists.  This script
# shows the basic transformation formulas, the Arf-type parity they
# preserve, and the reduction of arbitrary tuples to standard forms with an
# explicit, replayable twist word.

from orbispin import (
    RootTuple,
    TwistGenerator,
    a_invariant,
    apply_generator,
    apply_word,
    canonical_form,
    reduce_with_witness,
    w_value,
)

print("=== the three twist families ===")
root = RootTuple(5, (2, 3))
print(f"start {root.coords} (r = 5)")
print(f"  twist along u1: {apply_generator(root, TwistGenerator('U', 1)).coords}")
print(f"  twist along v1: {apply_generator(root, TwistGenerator('V', 1)).coords}")

root = RootTuple(4, (0, 0, 0, 0))
moved = apply_generator(root, TwistGenerator('W', 1))
print(f"start {root.coords} (r = 4): twist along w12 gives {moved.coords}")
print(f"  the separating curve carries the value {w_value(root, 1)}")

print()
print("=== parity: the even/odd type of a root (even orders only) ===")
for coords in [(0, 0, 0, 0), (0, 0, 0, 1), (1, 1, 1, 1)]:
    print(f"  A{coords} = {a_invariant(RootTuple(2, coords))}")

print()
print("=== canonical forms with witnesses ===")
cases = [
    RootTuple(6, (4, 2)),          # genus 1: divisor class gcd(4, 2, 6) = 2
    RootTuple(6, (0, 0)),          # genus 1: the zero class, d = 6
    RootTuple(3, (0, 1, 0, 1)),    # genus 2, odd order: single class
    RootTuple(2, (1, 0, 1, 1)),    # genus 2, even order: parity decides
]
for root in cases:
    form, witness = reduce_with_witness(root)
    replay = apply_word(root, witness)
    tag = form.kind if form.d is None else f"{form.kind} d={form.d}"
    print(f"{root.coords} (r = {root.order}) -> {tag}")
    print(f"  witness of {len(witness)} twists replays to {replay.coords}")
    assert replay == form.canonical_root()
    assert canonical_form(root) == form
