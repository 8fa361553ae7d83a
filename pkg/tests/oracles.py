"""Independent reference implementations used to cross-check the package.

Each oracle recomputes a quantity from first principles along a different
algorithmic route than the library: alternating Weyl-orbit sums check
character data, a quadratic-time Euler product checks the pentagonal-number
expansion, and a convolve-and-peel decomposition checks the tensor-product
path.  They are deliberately slow and simple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Sequence, Tuple

from lieconf.liealg import SimpleAlgebra
from lieconf.reps import freudenthal_weights

Coords = Tuple[int, ...]


def alternating_orbit_sum(
    alg: SimpleAlgebra, mu: Coords, point: Sequence[Fraction]
) -> Fraction:
    """Sum of sign(s) * point**s(mu) over the Weyl orbit of mu.

    ``mu`` must be strictly dominant (all coordinates positive), so the orbit
    is free and each element's sign is the parity of any word reaching it.
    ``point**w`` means the product of point[i]**w[i].
    """
    if any(c <= 0 for c in mu):
        raise ValueError("alternating sums need a strictly dominant weight")
    n = alg.rank
    # column i of the Cartan matrix = fundamental-weight coordinates of alpha_i
    cols = [tuple(alg.cartan[t][i] for t in range(n)) for i in range(n)]
    signs: Dict[Coords, int] = {tuple(mu): 1}
    frontier = [tuple(mu)]
    while frontier:
        nxt = []
        for w in frontier:
            sgn = signs[w]
            for i in range(n):
                if w[i] != 0:
                    img = tuple(w[t] - w[i] * cols[i][t] for t in range(n))
                    if img not in signs:
                        signs[img] = -sgn
                        nxt.append(img)
        frontier = nxt
    total = Fraction(0)
    for w, sgn in signs.items():
        value = Fraction(1)
        for x, e in zip(point, w):
            value *= Fraction(x) ** e
        total += sgn * value
    return total


def character_value(alg: SimpleAlgebra, entries: Dict[Coords, int], point) -> Fraction:
    """Evaluate a weight multiset as a character at an exact point."""
    total = Fraction(0)
    for w, mult in entries.items():
        value = Fraction(1)
        for x, e in zip(point, w):
            value *= Fraction(x) ** e
        total += mult * value
    return total


def check_character(alg: SimpleAlgebra, lam: Coords, entries: Dict[Coords, int]) -> None:
    """Assert the Weyl character identity: A_rho * ch_lam == A_(lam+rho).

    Evaluated exactly at two generic points, this pins the full multiset: a
    wrong multiplicity would have to vanish at both to slip through.
    """
    for point in ((Fraction(2), Fraction(3), Fraction(5), Fraction(7)),
                  (Fraction(3, 2), Fraction(5, 3), Fraction(7, 2), Fraction(11, 3))):
        point = point[: alg.rank]
        rho = alg.rho
        lam_rho = tuple(a + b for a, b in zip(lam, rho))
        denom = alternating_orbit_sum(alg, rho, point)
        numer = alternating_orbit_sum(alg, lam_rho, point)
        assert denom != 0, "degenerate evaluation point"
        assert character_value(alg, entries, point) * denom == numer


def naive_euler_product(order: int) -> Dict[int, int]:
    """Coefficients of prod_{n>=1} (1 - q^n) below q^order, term by term."""
    coeffs = {0: 1}
    for n in range(1, order):
        updated = dict(coeffs)
        for e, c in coeffs.items():
            if e + n < order:
                updated[e + n] = updated.get(e + n, 0) - c
        coeffs = {e: c for e, c in updated.items() if c}
    return coeffs


def peel_tensor(alg: SimpleAlgebra, lam: Coords, mu: Coords) -> Dict[Coords, int]:
    """Tensor-product decomposition by convolving weight multisets and
    repeatedly peeling the maximal weight; independent of the Klimyk route."""
    a = freudenthal_weights(alg, lam).entries
    b = freudenthal_weights(alg, mu).entries
    prod: Dict[Coords, int] = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            prod[w] = prod.get(w, 0) + m1 * m2
    components: Dict[Coords, int] = {}
    while prod:
        top = max(prod, key=lambda t: (alg.inner_product(t, alg.rho), t))
        mult = prod[top]
        assert mult > 0 and alg.is_dominant(top), "not a genuine character"
        components[top] = components.get(top, 0) + mult
        for w, m in freudenthal_weights(alg, top).entries.items():
            rest = prod.get(w, 0) - mult * m
            if rest:
                prod[w] = rest
            else:
                prod.pop(w, None)
    return components
