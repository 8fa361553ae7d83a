"""Finite-dimensional irreducible representations over exact rationals.

Dimensions via the Weyl formula, weight multiplicities via the Freudenthal
recursion, tensor products via the Klimyk algorithm, exterior/symmetric squares
via pair counting on weight multisets, and a greedy peel-off decomposer for
arbitrary character multisets over products of simple algebras.

Weights of a product algebra are concatenated coordinate tuples; decomposition
components are tuples of per-factor highest weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from .liealg import Coords, LieError, Rational, SimpleAlgebra, sub_weights

DEFAULT_CAP = 100_000


class SizeError(LieError):
    """A computation would exceed the configured dimension cap."""


class NotACharacter(LieError):
    """A weight multiset is not the character of a finite-dimensional module."""


# ---------------------------------------------------------------------------
# per-algebra cached tables


@lru_cache(maxsize=None)
def _weyl_data(alg: SimpleAlgebra) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer-scaled positive-root functionals for the Weyl dimension formula.

    Each root alpha contributes the linear form lam -> sum_i (6 d_i a_i) lam_i;
    the returned denominator is the product of the forms evaluated at rho.
    """
    rows = []
    denom = 1
    for a in alg.positive_roots_alpha:
        row = tuple(int(6 * alg.d[i] * ai) for i, ai in enumerate(a))
        rows.append(row)
        denom *= sum(row)
    return tuple(rows), denom


@lru_cache(maxsize=None)
def _height_form(alg: SimpleAlgebra) -> tuple[Fraction, ...]:
    """Linear form lam -> (lam, 2 rho), as coefficients on omega-coordinates."""
    return tuple(2 * sum(alg.form[i]) for i in range(alg.rank))


def _check_dominant(alg: SimpleAlgebra, lam: Sequence[Rational]) -> Coords:
    lam = alg.check_weight(lam)
    if any((not isinstance(x, int) and Fraction(x).denominator != 1) or x < 0 for x in lam):
        raise LieError(f"{lam} is not a dominant integral weight of {alg.type}")
    return tuple(int(x) for x in lam)


# ---------------------------------------------------------------------------
# scalar invariants


def weyl_dim(alg: SimpleAlgebra, lam: Sequence[Rational]) -> int:
    """Dimension of the irreducible module with highest weight lam."""
    lam = _check_dominant(alg, lam)
    return _weyl_dim_cached(alg, lam)


@lru_cache(maxsize=None)
def _weyl_dim_cached(alg: SimpleAlgebra, lam: Coords) -> int:
    rows, denom = _weyl_data(alg)
    shifted = tuple(x + 1 for x in lam)
    num = 1
    for row in rows:
        num *= sum(r * s for r, s in zip(row, shifted))
    q, r = divmod(num, denom)
    if r:
        raise LieError(f"non-integral Weyl dimension for {lam} of {alg.type}")
    return q


def casimir(alg: SimpleAlgebra, lam: Sequence[Rational]) -> Fraction:
    """Quadratic Casimir eigenvalue (lam, lam + 2 rho) under the normalized form."""
    lam = alg.check_weight(lam)
    shifted = tuple(x + 2 for x in lam)
    return alg.inner_product(lam, shifted)


def dynkin_index(alg: SimpleAlgebra, lam: Sequence[Rational], convention: str = "normalized") -> Fraction:
    """Index of the module: trace form of the representation against a fixed form.

    'normalized' measures against the form with (theta, theta) = 2; 'killing'
    against the Killing form, which is the dual Coxeter number times smaller.
    """
    if convention not in ("normalized", "killing"):
        raise LieError(f"unknown index convention {convention!r}")
    lam = _check_dominant(alg, lam)
    norm = Fraction(weyl_dim(alg, lam) * casimir(alg, lam), 2 * alg.dim)
    return norm / alg.dual_coxeter if convention == "killing" else norm


def dual_weight(alg: SimpleAlgebra, lam: Sequence[Rational]) -> Coords:
    """Highest weight of the dual module: the dominant representative of -lam."""
    lam = _check_dominant(alg, lam)
    dom, _ = alg.to_dominant(tuple(-x for x in lam))
    return dom


# ---------------------------------------------------------------------------
# weight systems


@dataclass
class WeightSystem:
    """Weight multiset of a module over a (product of) simple algebra(s).

    Keys are concatenated fundamental-weight coordinate tuples; values are
    positive multiplicities.
    """

    algebras: Tuple[SimpleAlgebra, ...]
    entries: Dict[Coords, int]

    def total(self) -> int:
        return sum(self.entries.values())


@lru_cache(maxsize=None)
def _weight_system(alg: SimpleAlgebra, lam: Coords) -> Dict[Coords, int]:
    """Full weight multiset of the irreducible module with highest weight lam."""
    n = alg.rank
    cols = alg.cartan_columns
    inv = alg.cartan_inv

    def depth_coords(w: Coords) -> tuple[Fraction, ...]:
        diff = sub_weights(lam, w)
        return tuple(sum(inv[i][j] * diff[j] for j in range(n)) for i in range(n))

    # Collect the weight set: walk down by simple roots; a candidate belongs to
    # the module iff its dominant representative mu satisfies lam - mu in the
    # non-negative integer span of the simple roots.
    weights: set[Coords] = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                w2 = tuple(w[k] - cols[i][k] for k in range(n))
                if w2 in weights:
                    continue
                dom, _ = alg.to_dominant(w2)
                if all(x >= 0 for x in depth_coords(dom)):
                    weights.add(w2)
                    nxt.append(w2)
        frontier = nxt

    dominants = sorted(
        (w for w in weights if alg.is_dominant(w)),
        key=lambda w: sum(depth_coords(w)),
    )

    rho = alg.rho
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = alg.inner_product(lam_rho, lam_rho)
    roots = list(zip(alg.positive_roots_alpha, alg.positive_roots_omega))

    mult: Dict[Coords, int] = {}
    for mu in dominants:
        if mu == lam:
            mult[mu] = 1
            continue
        mu_rho = tuple(x + 1 for x in mu)
        denom = norm_top - alg.inner_product(mu_rho, mu_rho)
        acc = Fraction(0)
        for a_coords, a_omega in roots:
            t = 1
            while True:
                nu = tuple(mu[k] + t * a_omega[k] for k in range(n))
                if nu not in weights:
                    break
                dom, _ = alg.to_dominant(nu)
                acc += mult[dom] * alg.pair_root(nu, a_coords)
                t += 1
        m = 2 * acc / denom
        if m.denominator != 1 or m <= 0:
            raise LieError(f"Freudenthal recursion failed at {mu} for {lam} of {alg.type}")
        mult[mu] = int(m)

    out = {w: mult[alg.to_dominant(w)[0]] for w in weights}
    if sum(out.values()) != _weyl_dim_cached(alg, lam):
        raise LieError(f"weight-multiset size mismatch for {lam} of {alg.type}")
    return out


def freudenthal_weights(alg: SimpleAlgebra, lam: Sequence[Rational], cap: int = DEFAULT_CAP) -> WeightSystem:
    """Weight multiset of the irreducible module with highest weight lam."""
    lam = _check_dominant(alg, lam)
    d = weyl_dim(alg, lam)
    if d > cap:
        raise SizeError(f"dim {d} exceeds the cap {cap}")
    return WeightSystem((alg,), dict(_weight_system(alg, lam)))


# ---------------------------------------------------------------------------
# product algebras


def split_coords(algs: Sequence[SimpleAlgebra], w: Coords) -> tuple[Coords, ...]:
    parts = []
    pos = 0
    for a in algs:
        parts.append(tuple(w[pos:pos + a.rank]))
        pos += a.rank
    if pos != len(w):
        raise LieError(f"coordinate tuple of length {len(w)} does not match total rank {pos}")
    return tuple(parts)


def join_coords(parts: Sequence[Coords]) -> Coords:
    out: list = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def product_dim(algs: Sequence[SimpleAlgebra], module: Sequence[Coords]) -> int:
    return _prod(weyl_dim(a, w) for a, w in zip(algs, module))


def _prod(it) -> int:
    out = 1
    for x in it:
        out *= x
    return out


def product_weight_system(
    algs: Sequence[SimpleAlgebra], module: Sequence[Coords], cap: int = DEFAULT_CAP
) -> Dict[Coords, int]:
    """Weight multiset of an outer tensor product, keyed by concatenated coordinates."""
    if len(algs) != len(module):
        raise LieError("one highest weight per factor is required")
    if product_dim(algs, module) > cap:
        raise SizeError(f"product dimension exceeds the cap {cap}")
    acc: Dict[Coords, int] = {(): 1}
    for a, w in zip(algs, module):
        factor = _weight_system(a, _check_dominant(a, w))
        acc = {
            base + wf: mb * mf
            for base, mb in acc.items()
            for wf, mf in factor.items()
        }
    return acc


# ---------------------------------------------------------------------------
# decompositions


@dataclass
class Decomposition:
    """Multiset of irreducible components over a product of simple algebras.

    Keys are tuples of per-factor highest weights; values are multiplicities.
    """

    algebras: Tuple[SimpleAlgebra, ...]
    components: Dict[Tuple[Coords, ...], int]

    def dim(self) -> int:
        return sum(m * product_dim(self.algebras, comp) for comp, m in self.components.items())

    def single(self) -> Dict[Coords, int]:
        if len(self.algebras) != 1:
            raise LieError("single() requires a one-factor decomposition")
        return {comp[0]: m for comp, m in self.components.items()}

    def sorted_items(self) -> list[tuple[Tuple[Coords, ...], int]]:
        forms = [_height_form(a) for a in self.algebras]

        def height(comp: Tuple[Coords, ...]) -> Fraction:
            return sum(
                (c * t for part, form in zip(comp, forms) for c, t in zip(part, form)),
                Fraction(0),
            )

        return sorted(self.components.items(), key=lambda kv: (-height(kv[0]), kv[0]))


def tensor_decompose(
    alg: SimpleAlgebra, lam: Sequence[Rational], mu: Sequence[Rational], cap: int = DEFAULT_CAP
) -> Decomposition:
    """Decompose L(lam) (x) L(mu) into irreducibles by the Klimyk algorithm."""
    lam = _check_dominant(alg, lam)
    mu = _check_dominant(alg, mu)
    dl, dm = weyl_dim(alg, lam), weyl_dim(alg, mu)
    if dl * dm > cap:
        raise SizeError(f"tensor dimension {dl * dm} exceeds the cap {cap}")
    if dl < dm:
        lam, mu = mu, lam
    n = alg.rank
    system = _weight_system(alg, mu)
    acc: Dict[Coords, int] = {}
    for nu, m in system.items():
        xi = tuple(lam[k] + 1 + nu[k] for k in range(n))
        dom, sign = alg.to_dominant(xi)
        if 0 in dom:
            continue
        key = tuple(x - 1 for x in dom)
        acc[key] = acc.get(key, 0) + sign * m
    comps = {(k,): v for k, v in acc.items() if v}
    if any(v < 0 for v in comps.values()):
        raise LieError("Klimyk accumulation produced a negative multiplicity")
    result = Decomposition((alg,), comps)
    if result.dim() != dl * dm:
        raise LieError("tensor decomposition does not preserve dimension")
    return result


def pair_weights(ws: Dict[Coords, int], part: str) -> Dict[Coords, int]:
    """Weight multiset of the exterior ('alt') or symmetric ('sym') square.

    Unordered pairs of distinct basis vectors contribute to both; equal pairs
    contribute C(m,2) to the exterior and C(m+1,2) to the symmetric square.
    """
    if part not in ("alt", "sym"):
        raise LieError(f"part must be 'alt' or 'sym', got {part!r}")
    items = sorted(ws.items())
    out: Dict[Coords, int] = {}
    for i, (w1, m1) in enumerate(items):
        diag = m1 * (m1 - 1) // 2 if part == "alt" else m1 * (m1 + 1) // 2
        if diag:
            key = tuple(2 * x for x in w1)
            out[key] = out.get(key, 0) + diag
        for w2, m2 in items[i + 1:]:
            key = tuple(x + y for x, y in zip(w1, w2))
            out[key] = out.get(key, 0) + m1 * m2
    return {k: v for k, v in out.items() if v}


def decompose_weight_system(
    alg_product: Sequence[SimpleAlgebra], ws, cap: int = DEFAULT_CAP
) -> Decomposition:
    """Greedy peel-off of a character multiset into irreducible components.

    Repeatedly selects the maximal weight (largest (w, 2 rho), ties broken by
    lexicographically largest coordinates), which must be dominant, and
    subtracts the full character of the corresponding irreducible.
    """
    algs = tuple(alg_product)
    entries = dict(ws.entries if isinstance(ws, WeightSystem) else ws)
    if sum(entries.values()) > cap:
        raise SizeError(f"multiset size exceeds the cap {cap}")
    form = join_coords([_height_form(a) for a in algs])

    def height(w: Coords) -> Fraction:
        return sum((c * t for c, t in zip(w, form)), Fraction(0))

    comps: Dict[Tuple[Coords, ...], int] = {}
    remaining = {k: v for k, v in entries.items() if v}
    while remaining:
        top = max(remaining, key=lambda k: (height(k), k))
        m = remaining[top]
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at {top}")
        parts = split_coords(algs, top)
        if not all(a.is_dominant(p) for a, p in zip(algs, parts)):
            raise NotACharacter(f"maximal weight {top} is not dominant")
        comps[parts] = m
        char = product_weight_system(algs, parts, cap=cap)
        for w, cm in char.items():
            new = remaining.get(w, 0) - m * cm
            if new:
                remaining[w] = new
            else:
                remaining.pop(w, None)
    return Decomposition(algs, comps)


def square_decompose(
    alg_product: Sequence[SimpleAlgebra],
    module: Sequence[Coords],
    part: str,
    cap: int = DEFAULT_CAP,
) -> Decomposition:
    """Decompose the exterior or symmetric square of an outer-tensor module."""
    algs = tuple(alg_product)
    ws = product_weight_system(algs, module, cap=cap)
    v = sum(ws.values())
    pair_count = v * (v - 1) // 2 if part == "alt" else v * (v + 1) // 2
    if pair_count > cap:
        raise SizeError(f"square dimension {pair_count} exceeds the cap {cap}")
    result = decompose_weight_system(algs, pair_weights(ws, part), cap=cap)
    if result.dim() != pair_count:
        raise LieError("square decomposition does not preserve dimension")
    return result


def irreps_of_dim(alg: SimpleAlgebra, v: int) -> list[Coords]:
    """All dominant weights whose irreducible module has dimension exactly v.

    Complete: the Weyl dimension is strictly increasing in every coordinate,
    so the depth-first scan stops raising a coordinate as soon as the
    dimension (with the remaining coordinates at zero) exceeds v.
    """
    n = alg.rank
    found: list[Coords] = []

    def rec(prefix: tuple[int, ...]) -> None:
        i = len(prefix)
        if i == n:
            if _weyl_dim_cached(alg, prefix) == v:
                found.append(prefix)
            return
        tail = (0,) * (n - i - 1)
        c = 0
        while True:
            cand = prefix + (c,)
            if _weyl_dim_cached(alg, cand + tail) > v:
                break
            rec(cand)
            c += 1

    rec(())
    return sorted(found)
