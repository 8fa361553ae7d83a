"""Root systems and invariant bilinear forms of the finite-dimensional simple Lie algebras.

Everything is exact: Cartan data over integers, the normalized invariant form
(long roots of squared length 2) over `fractions.Fraction`.  Weights and roots
are plain tuples of coordinates in the fundamental-weight basis; the owning
algebra is always passed explicitly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

Coords = tuple
Rational = Union[int, Fraction]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*([0-9]+)$")


class LieError(ValueError):
    """Domain error: unknown algebra type, malformed weight, or size-bound violation."""


@dataclass(frozen=True, order=True)
class AlgebraType:
    """A simple-algebra label: family letter A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam not in _MIN_RANK:
            raise LieError(f"unknown family {fam!r} (expected one of A..G)")
        lo, hi = _MIN_RANK[fam], _MAX_RANK.get(fam, 10 ** 9)
        if not lo <= n <= hi:
            raise LieError(f"rank {n} invalid for family {fam} (allowed {lo}..{hi})")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise LieError(f"cannot parse algebra type {text!r} (expected e.g. 'B3', 'E8')")
        return cls(m.group(1).upper(), int(m.group(2)))


def _dynkin_data(fam: str, n: int) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Per-node half-squared-lengths d_i and the bond list of the Dynkin diagram (0-indexed)."""
    one = Fraction(1)
    half = Fraction(1, 2)
    if fam == "A":
        return [one] * n, [(i, i + 1) for i in range(n - 1)]
    if fam == "B":
        return [one] * (n - 1) + [half], [(i, i + 1) for i in range(n - 1)]
    if fam == "C":
        return [half] * (n - 1) + [one], [(i, i + 1) for i in range(n - 1)]
    if fam == "D":
        bonds = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return [one] * n, bonds
    if fam == "E":
        bonds = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        bonds += [(i, i + 1) for i in range(5, n - 1)]
        return [one] * n, bonds
    if fam == "F":
        return [one, one, half, half], [(0, 1), (1, 2), (2, 3)]
    if fam == "G":
        return [Fraction(1, 3), one], [(0, 1)]
    raise LieError(f"unknown family {fam!r}")


def _invert(matrix: Sequence[Sequence[Rational]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a small nonsingular matrix.

    Integer matrices whose leading principal minors are all non-zero (Cartan
    matrices qualify) take a fraction-free elimination path: every
    intermediate value is an integer minor, so no gcd reduction happens until
    the final division.  Other inputs fall back to rational Gauss-Jordan.
    """
    n = len(matrix)
    ints = all(Fraction(x).denominator == 1 for row in matrix for x in row)
    if ints:
        result = _invert_integer([[int(x) for x in row] for row in matrix])
        if result is not None:
            return result
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _invert_integer(matrix: list[list[int]]) -> Optional[list[list[Fraction]]]:
    """Fraction-free Gauss-Jordan (Bareiss/Montante) inverse of an integer
    matrix, or None when a zero pivot requires the pivoting fallback.

    Each elimination step computes ``(pivot * a_ij - a_ik * a_kj) / prev``
    where the division by the previous pivot is exact (Sylvester's identity),
    so intermediate values stay small integers.  The run leaves the left half
    diagonal, with each augmented row i holding ``aug[i][i]`` times row i of
    the true inverse.
    """
    n = len(matrix)
    aug = [row + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    prev = 1
    for k in range(n):
        pivot = aug[k][k]
        if pivot == 0:
            return None
        row_k = aug[k]
        for i in range(n):
            if i == k:
                continue
            row_i = aug[i]
            factor = row_i[k]
            for j in range(2 * n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
        prev = pivot
    return [
        [Fraction(aug[i][n + j], aug[i][i]) for j in range(n)]
        for i in range(n)
    ]


class SimpleAlgebra:
    """A simple Lie algebra with its root system and normalized invariant form.

    Attributes
    ----------
    cartan : rows C[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i); column j holds
        the fundamental-weight coordinates of the simple root alpha_j.
    form : Gram matrix F[i][j] = (omega_i, omega_j) of the fundamental weights.
    positive_roots_omega / positive_roots_alpha : aligned coordinate lists.
    theta / theta_short : highest root and highest short root (equal when simply laced).
    """

    def __init__(self, typ: AlgebraType):
        self.type = typ
        self.family = typ.family
        self.rank = n = typ.rank
        d, bonds = _dynkin_data(typ.family, n)
        self.d = tuple(d)

        pairing = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            pairing[i][i] = 2 * d[i]
        for i, j in bonds:
            val = -d[i] if d[i] == d[j] else Fraction(-1)
            pairing[i][j] = pairing[j][i] = val
        cartan = [[pairing[i][j] / d[i] for j in range(n)] for i in range(n)]
        if any(x.denominator != 1 for row in cartan for x in row):
            raise LieError(f"non-integral Cartan matrix for {typ}")
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.cartan_columns = tuple(tuple(self.cartan[i][j] for i in range(n)) for j in range(n))
        inv = _invert(self.cartan)
        self.cartan_inv = tuple(tuple(row) for row in inv)
        # F = D * C^{-1}: (omega_i, omega_j), symmetric by construction.
        self.form = tuple(tuple(d[i] * inv[i][j] for j in range(n)) for i in range(n))
        self.rho = (1,) * n

        self._close_roots()

        self.num_positive = len(self.positive_roots_alpha)
        self.dim = n + 2 * self.num_positive
        hv = self.inner_product(self.rho, self.theta) + 1
        if hv.denominator != 1:
            raise LieError(f"non-integral dual Coxeter number for {typ}")
        self.dual_coxeter = int(hv)
        self.iso_note = "isomorphic to A3" if (typ.family, n) == ("D", 3) else None

    # -- construction ------------------------------------------------------

    def _close_roots(self) -> None:
        """Build all positive roots by closing the simple roots under root addition.

        For a root a and simple root alpha_i, a + alpha_i is a root iff
        p - <a, alpha_i^vee> >= 1 where p is the length of the alpha_i-string
        below a; <a, alpha_i^vee> is the i-th fundamental-weight coordinate.
        """
        n = self.rank
        cols = self.cartan_columns
        # omega doubles as the root coordinate cache and the "seen" set; the
        # omega coordinates of a + alpha_i follow the parent's incrementally.
        omega: dict[tuple[int, ...], tuple[int, ...]] = {}
        by_height: list[list[tuple[int, ...]]] = [[]]
        simples = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            simples.append(e)
            omega[e] = cols[i]
        by_height.append(simples)
        h = 1
        while by_height[h]:
            nxt: list[tuple[int, ...]] = []
            for a in by_height[h]:
                w = omega[a]
                for i in range(n):
                    p = 0
                    probe = list(a)
                    while True:
                        probe[i] -= 1
                        if probe[i] < 0 or tuple(probe) not in omega:
                            break
                        p += 1
                    if p - w[i] >= 1:
                        up = list(a)
                        up[i] += 1
                        t = tuple(up)
                        if t not in omega:
                            omega[t] = tuple(x + y for x, y in zip(w, cols[i]))
                            nxt.append(t)
            by_height.append(nxt)
            h += 1

        alphas: list[tuple[int, ...]] = []
        for level in by_height:
            alphas.extend(sorted(level))
        self.positive_roots_alpha = tuple(alphas)
        self.positive_roots_omega = tuple(omega[a] for a in alphas)

        top = by_height[h - 1]
        if len(top) != 1:
            raise LieError(f"highest root not unique for {self.type}")
        self.theta = omega[top[0]]

        # (a, a) < 2 tested integrally: 6*d_i is an integer for every family.
        d6 = [int(6 * di) for di in self.d]
        shorts = [
            (sum(a), a)
            for a in alphas
            if sum(d6[j] * a[j] * omega[a][j] for j in range(n)) < 12
        ]
        if shorts:
            ht, a = max(shorts)
            self.theta_short = omega[a]
        else:
            self.theta_short = self.theta

    def _alpha_to_omega(self, a: Sequence[int]) -> tuple[int, ...]:
        cols = self.cartan_columns
        n = self.rank
        return tuple(sum(a[j] * cols[j][i] for j in range(n)) for i in range(n))

    # -- basic operations ---------------------------------------------------

    def check_weight(self, lam: Sequence[Rational]) -> Coords:
        if len(lam) != self.rank:
            raise LieError(
                f"weight {tuple(lam)} has {len(lam)} coordinates; {self.type} has rank {self.rank}")
        return tuple(lam)

    def inner_product(self, lam: Sequence[Rational], mu: Sequence[Rational]) -> Fraction:
        """Normalized invariant form (lam, mu), both in fundamental-weight coordinates."""
        self.check_weight(lam)
        self.check_weight(mu)
        F = self.form
        total = Fraction(0)
        for i, li in enumerate(lam):
            if li:
                row = F[i]
                total += li * sum(row[j] * mj for j, mj in enumerate(mu) if mj)
        return total

    def pair_root(self, lam: Sequence[Rational], alpha_coords: Sequence[int]) -> Fraction:
        """(lam, alpha) for a root given by simple-root coordinates: sum_i lam_i d_i a_i."""
        d = self.d
        return sum(d[i] * a * lam[i] for i, a in enumerate(alpha_coords) if a)

    def reflect(self, w: Sequence[Rational], i: int) -> Coords:
        """Simple reflection s_i acting in fundamental-weight coordinates."""
        wi = w[i]
        if wi == 0:
            return tuple(w)
        col = self.cartan_columns[i]
        return tuple(w[k] - wi * col[k] for k in range(self.rank))

    def to_dominant(self, w: Sequence[Rational]) -> tuple[Coords, int]:
        """Dominant representative of the Weyl orbit of w, with the sign (-1)^length."""
        cur = tuple(w)
        sign = 1
        cols = self.cartan_columns
        n = self.rank
        while True:
            for i in range(n):
                if cur[i] < 0:
                    wi = cur[i]
                    col = cols[i]
                    cur = tuple(cur[k] - wi * col[k] for k in range(n))
                    sign = -sign
                    break
            else:
                return cur, sign

    def is_dominant(self, w: Sequence[Rational]) -> bool:
        return all(x >= 0 for x in w)

    def root_lattice_coords(self, lam: Sequence[Rational]) -> tuple[Fraction, ...]:
        """Coordinates of lam in the simple-root basis (columns of the Cartan matrix)."""
        self.check_weight(lam)
        inv = self.cartan_inv
        n = self.rank
        return tuple(sum(inv[i][j] * lam[j] for j in range(n)) for i in range(n))

    def in_root_lattice(self, lam: Sequence[Rational]) -> bool:
        return all(Fraction(x).denominator == 1 for x in self.root_lattice_coords(lam))

    # -- identity -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"SimpleAlgebra({self.type})"

    def __str__(self) -> str:
        return str(self.type)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleAlgebra) and other.type == self.type

    def __hash__(self) -> int:
        return hash(self.type)


@lru_cache(maxsize=None)
def _build(typ: AlgebraType) -> SimpleAlgebra:
    return SimpleAlgebra(typ)


def build_algebra(typ: Union[str, AlgebraType, SimpleAlgebra]) -> SimpleAlgebra:
    """Construct (and cache) the simple algebra for a type label like 'B3' or AlgebraType('B', 3)."""
    if isinstance(typ, SimpleAlgebra):
        return typ
    if isinstance(typ, str):
        typ = AlgebraType.parse(typ)
    return _build(typ)


def inner_product(alg: SimpleAlgebra, lam: Sequence[Rational], mu: Sequence[Rational]) -> Fraction:
    return alg.inner_product(lam, mu)


def positive_roots(alg: SimpleAlgebra) -> list[Coords]:
    return list(alg.positive_roots_omega)


def in_root_lattice(alg: SimpleAlgebra, lam: Sequence[Rational]) -> bool:
    return alg.in_root_lattice(lam)


def constructible_types(max_rank: int = 8) -> list[AlgebraType]:
    """Every valid (family, rank) combination with rank <= max_rank, sorted."""
    out = []
    for fam, lo in sorted(_MIN_RANK.items()):
        hi = min(_MAX_RANK.get(fam, max_rank), max_rank)
        out.extend(AlgebraType(fam, n) for n in range(lo, hi + 1))
    return out


def fundamental(alg: SimpleAlgebra, i: int) -> Coords:
    """The i-th fundamental weight (1-indexed) as a coordinate tuple."""
    if not 1 <= i <= alg.rank:
        raise LieError(f"fundamental-weight index {i} out of range for {alg.type}")
    return tuple(int(j == i - 1) for j in range(alg.rank))


def zero_weight(alg: SimpleAlgebra) -> Coords:
    return (0,) * alg.rank


def add_weights(a: Iterable[Rational], b: Iterable[Rational]) -> Coords:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Iterable[Rational], b: Iterable[Rational]) -> Coords:
    return tuple(x - y for x, y in zip(a, b))
