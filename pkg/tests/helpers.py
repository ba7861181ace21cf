"""Shared test utilities: signature grids and independent oracles.

The brute-force solvability oracle below deliberately avoids the library's
modular-inverse shortcut: it searches the normalised beta ranges directly
and checks divisibility, so it can act as an independent referee for the
admissibility test and the relation solver.
"""

from itertools import combinations_with_replacement, product

from orbispin import OrbifoldSignature, is_hyperbolic


def hyperbolic_grid(max_genus=3, max_cones=3, max_multiplicity=9):
    sigs = []
    for g in range(max_genus + 1):
        for n in range(max_cones + 1):
            for alphas in combinations_with_replacement(range(2, max_multiplicity + 1), n):
                sig = OrbifoldSignature(g, alphas)
                if is_hyperbolic(sig):
                    sigs.append(sig)
    return sigs


def rv_solvable_bruteforce(sig, r):
    """Search integers b, k_j and beta_j in [1, alpha_j - 1] with
    r*beta_j = alpha_j - 1 + k_j*alpha_j and r*b = 2g - 2 - sum(k_j)."""
    per_cone_ks = []
    for a in sig.cone_multiplicities:
        choices = []
        for beta in range(1, a):
            numerator = r * beta - a + 1
            if numerator % a == 0:
                choices.append(numerator // a)
        if not choices:
            return False
        per_cone_ks.append(choices)
    for ks in product(*per_cone_ks):
        if (2 * sig.genus - 2 - sum(ks)) % r == 0:
            return True
    return False


# hyperbolic signatures admitting the listed order, for orbit census checks
CENSUS_SIGNATURES = {
    (2, 2): OrbifoldSignature(2),
    (2, 3): OrbifoldSignature(2, (2, 2)),
    (2, 4): OrbifoldSignature(2, (3,)),
    (2, 5): OrbifoldSignature(2, (2,)),
    (2, 6): OrbifoldSignature(2, (5, 5)),
    (3, 2): OrbifoldSignature(3),
    (3, 3): OrbifoldSignature(3, (2,)),
    (3, 4): OrbifoldSignature(3),
}


def genus_one_signature(r):
    """A single cone of multiplicity r + 1 always admits order r."""
    return OrbifoldSignature(1, (r + 1,))
