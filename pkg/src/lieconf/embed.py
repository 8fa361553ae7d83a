"""Semisimple subalgebras of simple Lie algebras and their adjoint branchings.

A :class:`BranchingCase` records an ambient algebra, the simple factors of a
subalgebra k (each with its embedding index), and the decomposition of the
orthocomplement p of k inside the ambient adjoint module.  Cases come from
three sources: the classical dual-pair constructions built in code
(:func:`dual_pair_branching`), a handful of single-factor constructions, and
a JSON catalog of exceptional cases shipped with the package
(:func:`load_catalog`).

Wherever the restriction of a small faithful ambient module is known, the
stated branching is re-derived from scratch (exterior/symmetric squares or
V (x) V* for the adjoint) and compared component by component; every case is
additionally required to satisfy the dimension identity
dim(ambient) = sum dim(factors) + dim(p).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .liealg import (
    AlgebraType,
    Coords,
    LieError,
    SimpleAlgebra,
    build_algebra,
    fundamental,
    zero_weight,
)
from .reps import (
    DEFAULT_CAP,
    Decomposition,
    decompose_weight_system,
    dynkin_index,
    pair_weights,
    product_dim,
    product_weight_system,
    weyl_dim,
)
from .surd import parse_rational

__all__ = [
    "SubalgebraSpec",
    "BranchingCase",
    "Catalog",
    "dual_pair_branching",
    "embedding_index",
    "defining_weight",
    "load_catalog",
    "resolve_case",
    "builtin_labels",
    "DUAL_PAIR_FAMILIES",
]

# Cases whose faithful-module restriction has dimension at most this are
# re-derived by brute force on construction.
VERIFY_DIM_LIMIT = 64


# ---------------------------------------------------------------------------
# core types


@dataclass(frozen=True)
class SubalgebraSpec:
    """Simple factors of a semisimple subalgebra, each with its embedding index."""

    factors: Tuple[Tuple[AlgebraType, Fraction], ...]
    label: str = ""

    def __post_init__(self) -> None:
        for typ, idx in self.factors:
            if idx <= 0:
                raise LieError(f"embedding index must be positive, got {idx} for {typ}")

    @property
    def algebras(self) -> Tuple[SimpleAlgebra, ...]:
        return tuple(build_algebra(t) for t, _ in self.factors)

    @property
    def indices(self) -> Tuple[Fraction, ...]:
        return tuple(idx for _, idx in self.factors)

    def describe(self) -> str:
        parts = []
        for typ, idx in self.factors:
            parts.append(str(typ) if idx == 1 else f"{typ}^{idx}")
        return " x ".join(parts)


@dataclass(frozen=True, eq=False)
class BranchingCase:
    """An adjoint branching g = (+)_j k_j (+) p with embedding data.

    ``slot_groups`` partitions the factor slots into physical factors: an
    so(4) factor is presented as two sl(2) slots but is a single group.  None
    means every slot is its own group.
    """

    ambient: AlgebraType
    sub: SubalgebraSpec
    p_components: Decomposition
    source: str = ""
    level: Optional[Fraction] = None
    slot_groups: Optional[Tuple[Tuple[int, ...], ...]] = None

    @property
    def label(self) -> str:
        return self.sub.label

    def check_dimensions(self) -> None:
        total = sum(build_algebra(t).dim for t, _ in self.sub.factors)
        total += self.p_components.dim()
        ambient_dim = build_algebra(self.ambient).dim
        if total != ambient_dim:
            raise LieError(
                f"case {self.label or self.sub.describe()!r}: factor and p dimensions "
                f"sum to {total}, ambient {self.ambient} has dimension {ambient_dim}"
            )


class Catalog:
    """An immutable label-keyed collection of branching cases."""

    def __init__(self, cases: Iterable[BranchingCase]):
        self._cases: Dict[str, BranchingCase] = {}
        for case in cases:
            if not case.label:
                raise LieError("catalog cases must carry a label")
            if case.label in self._cases:
                raise LieError(f"duplicate label {case.label!r}")
            self._cases[case.label] = case

    def __getitem__(self, label: str) -> BranchingCase:
        try:
            return self._cases[label]
        except KeyError:
            raise LieError(f"unknown case label {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._cases

    def __iter__(self) -> Iterator[BranchingCase]:
        return iter(self._cases.values())

    def __len__(self) -> int:
        return len(self._cases)

    def labels(self) -> List[str]:
        return list(self._cases)


# ---------------------------------------------------------------------------
# small-rank orthogonal and symplectic factor data
#
# so(3) and so(4) are not members of the B/D families; they enter as sl(2)
# factors.  The pieces below present, for each so(m), the simple factors the
# orthogonal algebra contributes, the scale relating an so(m)-level to the
# level of each listed factor, and the weights of the vector module, the
# adjoint module, and the traceless symmetric square.


@dataclass(frozen=True)
class _SoPieces:
    types: Tuple[AlgebraType, ...]
    scales: Tuple[int, ...]
    vector: Tuple[Coords, ...]
    adjoint: Tuple[Tuple[Coords, ...], ...]
    sym2: Tuple[Coords, ...]
    dim: int


def _so_pieces(m: int) -> _SoPieces:
    if m < 3:
        raise LieError(f"an orthogonal factor so({m}) is not semisimple")
    a1 = AlgebraType("A", 1)
    if m == 3:
        return _SoPieces((a1,), (2,), ((2,),), (((2,),),), ((4,),), 3)
    if m == 4:
        return _SoPieces(
            (a1, a1), (1, 1), ((1,), (1,)),
            (((2,), (0,)), ((0,), (2,))),
            ((2,), (2,)), 6,
        )
    typ = AlgebraType("B", (m - 1) // 2) if m % 2 else AlgebraType("D", m // 2)
    alg = build_algebra(typ)
    e1 = fundamental(alg, 1)
    return _SoPieces((typ,), (1,), (e1,), ((alg.theta,),), (tuple(2 * x for x in e1),), alg.dim)


def _sp_type(n: int) -> AlgebraType:
    if n < 1:
        raise LieError(f"a symplectic factor sp({2 * n}) needs n >= 1")
    return AlgebraType("A", 1) if n == 1 else AlgebraType("C", n)


def _so_ambient(size: int) -> AlgebraType:
    """Type of a simple so(size) ambient; so(6) is realized as D3."""
    if size < 5:
        raise LieError(f"ambient so({size}) is not a simple B/D type")
    return AlgebraType("B", (size - 1) // 2) if size % 2 else AlgebraType("D", size // 2)


def defining_weight(alg: SimpleAlgebra) -> Coords:
    """Highest weight of the defining module for classical types, adjoint otherwise."""
    if alg.family in "ABCD":
        return fundamental(alg, 1)
    return alg.theta


# ---------------------------------------------------------------------------
# brute-force verification of stated branchings


def _dual_system(ws: Dict[Coords, int]) -> Dict[Coords, int]:
    return {tuple(-x for x in w): m for w, m in ws.items()}


def _convolve(a: Dict[Coords, int], b: Dict[Coords, int]) -> Dict[Coords, int]:
    out: Dict[Coords, int] = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            key = tuple(x + y for x, y in zip(w1, w2))
            out[key] = out.get(key, 0) + m1 * m2
    return {k: v for k, v in out.items() if v}


def _merge_systems(systems: Iterable[Dict[Coords, int]]) -> Dict[Coords, int]:
    out: Dict[Coords, int] = {}
    for ws in systems:
        for w, m in ws.items():
            new = out.get(w, 0) + m
            if new:
                out[w] = new
            else:
                out.pop(w, None)
    return out


def _verify_adjoint_branching(
    algs: Sequence[SimpleAlgebra],
    ambient_kind: str,
    module_components: Sequence[Tuple[Coords, ...]],
    p_components: Dict[Tuple[Coords, ...], int],
    cap: int,
) -> bool:
    """Re-derive an adjoint branching from a faithful-module restriction.

    ``ambient_kind`` selects how the ambient adjoint sits over its defining
    module V: 'gl' for V (x) V* minus a trivial summand, 'alt' for the
    exterior square, 'sym' for the symmetric square.  Returns False when V is
    too large to check; raises on a mismatch.
    """
    vdim = sum(product_dim(algs, comp) for comp in module_components)
    if vdim > VERIFY_DIM_LIMIT:
        return False
    v_ws = _merge_systems(
        product_weight_system(algs, comp, cap=cap) for comp in module_components
    )
    if ambient_kind == "gl":
        adj_ws = _convolve(v_ws, _dual_system(v_ws))
        zero = tuple(0 for _ in next(iter(adj_ws)))
        adj_ws[zero] -= 1
        if not adj_ws[zero]:
            del adj_ws[zero]
    elif ambient_kind in ("alt", "sym"):
        adj_ws = pair_weights(v_ws, ambient_kind)
    else:
        raise LieError(f"unknown ambient kind {ambient_kind!r}")
    derived = decompose_weight_system(algs, adj_ws, cap=cap)
    expected: Dict[Tuple[Coords, ...], int] = {}
    for slot, alg in enumerate(algs):
        comp = tuple(
            alg.theta if j == slot else zero_weight(a)
            for j, a in enumerate(algs)
        )
        expected[comp] = expected.get(comp, 0) + 1
    for comp, mult in p_components.items():
        expected[comp] = expected.get(comp, 0) + mult
    if derived.components != expected:
        raise LieError(
            "stated branching disagrees with the recomputed decomposition: "
            f"derived {derived.components}, stated {expected}"
        )
    return True


def _build_case(
    ambient: AlgebraType,
    factors: Sequence[Tuple[AlgebraType, Fraction]],
    p_list: Sequence[Tuple[Coords, ...]],
    label: str,
    source: str,
    ambient_kind: str,
    module_components: Sequence[Tuple[Coords, ...]],
    level: Optional[Fraction] = None,
    cap: int = DEFAULT_CAP,
    slot_groups: Optional[Tuple[Tuple[int, ...], ...]] = None,
) -> BranchingCase:
    sub = SubalgebraSpec(tuple((t, Fraction(j)) for t, j in factors), label)
    algs = sub.algebras
    components: Dict[Tuple[Coords, ...], int] = {}
    for comp in p_list:
        components[comp] = components.get(comp, 0) + 1
    p_decomp = Decomposition(algs, components)
    case = BranchingCase(ambient, sub, p_decomp, source, level, slot_groups)
    case.check_dimensions()
    _verify_adjoint_branching(algs, ambient_kind, module_components, components, cap)
    return case


# ---------------------------------------------------------------------------
# dual-pair constructions

DUAL_PAIR_FAMILIES = ("slsl", "spsp", "soso", "spso", "BB", "CC", "OO")


def _block_groups(*sizes: int) -> Tuple[Tuple[int, ...], ...]:
    """Consecutive slot blocks of the given sizes, as a slot-group partition."""
    groups = []
    start = 0
    for size in sizes:
        groups.append(tuple(range(start, start + size)))
        start += size
    return tuple(groups)


def dual_pair_branching(family: str, n: int, m: int, cap: int = DEFAULT_CAP) -> BranchingCase:
    """Adjoint branching for a classical dual pair or direct-sum pair.

    Tensor-product pairs (V = V1 (x) V2):
      slsl: sl(n) x sl(m) in sl(nm), n, m >= 2
      spsp: sp(2n) x sp(2m) in so(4nm)
      soso: so(n) x so(m) in so(nm), n, m >= 3
      spso: sp(2n) x so(m) in sp(2nm), m >= 3
    Direct-sum pairs (V = V1 (+) V2):
      BB: so(2n+1) x so(2m+1) in so(2(n+m+1))
      CC: sp(2n) x sp(2m) in sp(2(n+m))
      OO: so(n) x so(m) in so(n+m), n, m >= 3 (any parity; BB delegates here)
    """
    if family not in DUAL_PAIR_FAMILIES:
        raise LieError(f"unknown dual-pair family {family!r}")
    if family != "BB" and (n < 1 or m < 1):
        raise LieError("dual-pair parameters must be positive")
    label = f"{family}:{n},{m}"

    if family == "slsl":
        if n < 2 or m < 2:
            raise LieError("slsl needs n, m >= 2")
        t1, t2 = AlgebraType("A", n - 1), AlgebraType("A", m - 1)
        a1, a2 = build_algebra(t1), build_algebra(t2)
        return _build_case(
            AlgebraType("A", n * m - 1),
            [(t1, Fraction(m)), (t2, Fraction(n))],
            [(a1.theta, a2.theta)],
            label,
            f"tensor dual pair sl({n}) x sl({m}) in sl({n * m})",
            "gl",
            [(defining_weight(a1), defining_weight(a2))],
            cap=cap,
        )

    if family == "spsp":
        if 2 * n * m < 3:
            raise LieError("spsp needs so(4nm) of rank >= 3")
        t1, t2 = _sp_type(n), _sp_type(m)
        a1, a2 = build_algebra(t1), build_algebra(t2)
        p_list = []
        if m >= 2:
            p_list.append((a1.theta, fundamental(a2, 2)))
        if n >= 2:
            p_list.append((fundamental(a1, 2), a2.theta))
        return _build_case(
            _so_ambient(4 * n * m),
            [(t1, Fraction(m)), (t2, Fraction(n))],
            p_list,
            label,
            f"tensor dual pair sp({2 * n}) x sp({2 * m}) in so({4 * n * m})",
            "alt",
            [(defining_weight(a1), defining_weight(a2))],
            cap=cap,
        )

    if family == "soso":
        p1, p2 = _so_pieces(n), _so_pieces(m)
        factors = [(t, Fraction(m * s)) for t, s in zip(p1.types, p1.scales)]
        factors += [(t, Fraction(n * s)) for t, s in zip(p2.types, p2.scales)]
        p_list = [adj + p2.sym2 for adj in p1.adjoint]
        p_list += [p1.sym2 + adj for adj in p2.adjoint]
        return _build_case(
            _so_ambient(n * m),
            factors,
            p_list,
            label,
            f"tensor dual pair so({n}) x so({m}) in so({n * m})",
            "alt",
            [p1.vector + p2.vector],
            cap=cap,
            slot_groups=_block_groups(len(p1.types), len(p2.types)),
        )

    if family == "spso":
        t1 = _sp_type(n)
        a1 = build_algebra(t1)
        p2 = _so_pieces(m)
        factors = [(t1, Fraction(m))]
        factors += [(t, Fraction(4 * n * s)) for t, s in zip(p2.types, p2.scales)]
        p_list = [(a1.theta,) + p2.sym2]
        if n >= 2:
            p_list += [(fundamental(a1, 2),) + adj for adj in p2.adjoint]
        return _build_case(
            AlgebraType("C", n * m),
            factors,
            p_list,
            label,
            f"tensor dual pair sp({2 * n}) x so({m}) in sp({2 * n * m})",
            "sym",
            [(defining_weight(a1),) + p2.vector],
            cap=cap,
            slot_groups=_block_groups(1, len(p2.types)),
        )

    if family == "BB":
        if n < 1 or m < 1:
            raise LieError("BB needs n, m >= 1")
        case = dual_pair_branching("OO", 2 * n + 1, 2 * m + 1, cap=cap)
        sub = SubalgebraSpec(case.sub.factors, label)
        return BranchingCase(
            case.ambient, sub, case.p_components, case.source, case.level, case.slot_groups
        )

    if family == "CC":
        t1, t2 = _sp_type(n), _sp_type(m)
        a1, a2 = build_algebra(t1), build_algebra(t2)
        z1, z2 = zero_weight(a1), zero_weight(a2)
        return _build_case(
            AlgebraType("C", n + m),
            [(t1, Fraction(1)), (t2, Fraction(1))],
            [(defining_weight(a1), defining_weight(a2))],
            label,
            f"direct-sum pair sp({2 * n}) x sp({2 * m}) in sp({2 * (n + m)})",
            "sym",
            [(defining_weight(a1), z2), (z1, defining_weight(a2))],
            cap=cap,
        )

    # OO
    p1, p2 = _so_pieces(n), _so_pieces(m)
    factors = [(t, Fraction(s)) for t, s in zip(p1.types, p1.scales)]
    factors += [(t, Fraction(s)) for t, s in zip(p2.types, p2.scales)]
    zeros1 = tuple((0,) * t.rank for t in p1.types)
    zeros2 = tuple((0,) * t.rank for t in p2.types)
    return _build_case(
        _so_ambient(n + m),
        factors,
        [p1.vector + p2.vector],
        label,
        f"direct-sum pair so({n}) x so({m}) in so({n + m})",
        "alt",
        [p1.vector + zeros2, zeros1 + p2.vector],
        cap=cap,
        slot_groups=_block_groups(len(p1.types), len(p2.types)),
    )


# ---------------------------------------------------------------------------
# single-factor built-in cases


def _single_case(
    ambient: AlgebraType,
    factor: AlgebraType,
    p_weights: Sequence[Coords],
    label: str,
    source: str,
    ambient_kind: str,
    module_weight: Coords,
    level: Fraction,
    cap: int = DEFAULT_CAP,
) -> BranchingCase:
    return _build_case(
        ambient,
        [(factor, Fraction(1))],
        [(w,) for w in p_weights],
        label,
        source,
        ambient_kind,
        [(module_weight,)],
        level=level,
        cap=cap,
    )


def _spsl_case(n: int, cap: int = DEFAULT_CAP) -> BranchingCase:
    if n < 2:
        raise LieError("spsl needs n >= 2")
    t = AlgebraType("C", n)
    alg = build_algebra(t)
    return _single_case(
        AlgebraType("A", 2 * n - 1),
        t,
        [fundamental(alg, 2)],
        f"spsl:{n}",
        f"sp({2 * n}) in sl({2 * n}) via the defining module",
        "gl",
        defining_weight(alg),
        Fraction(-1),
        cap=cap,
    )


def _g2_b3_case(cap: int = DEFAULT_CAP) -> BranchingCase:
    t = AlgebraType("G", 2)
    alg = build_algebra(t)
    return _single_case(
        AlgebraType("B", 3),
        t,
        [fundamental(alg, 1)],
        "G2-in-B3",
        "G2 in so(7) via the 7-dimensional module",
        "alt",
        fundamental(alg, 1),
        Fraction(-2),
        cap=cap,
    )


def _b3_d4_case(cap: int = DEFAULT_CAP) -> BranchingCase:
    t = AlgebraType("B", 3)
    alg = build_algebra(t)
    return _single_case(
        AlgebraType("D", 4),
        t,
        [fundamental(alg, 1)],
        "B3-in-D4",
        "so(7) in so(8) via the 8-dimensional spin module",
        "alt",
        fundamental(alg, 3),
        Fraction(-2),
        cap=cap,
    )


# ---------------------------------------------------------------------------
# embedding index


def embedding_index(
    ambient: Union[SimpleAlgebra, AlgebraType, str],
    sub_factor: Union[SimpleAlgebra, AlgebraType, str],
    restriction: Union[Decomposition, Dict[Coords, int]],
    ambient_module: Optional[Coords] = None,
) -> Fraction:
    """Dynkin index of an embedding from the restriction of a faithful module.

    ``restriction`` gives the decomposition of an ambient module as a
    ``sub_factor``-module (trivial summands allowed, weight 0).  The index is
    the ratio of total normalized Dynkin indices, sub over ambient.  By
    default the ambient module is the defining module of a classical ambient
    and the adjoint otherwise; pass ``ambient_module`` to override.
    """
    amb = build_algebra(ambient)
    sub = build_algebra(sub_factor)
    if ambient_module is None:
        ambient_module = defining_weight(amb)
    if isinstance(restriction, Decomposition):
        comps = {key[0]: mult for key, mult in restriction.components.items()}
    else:
        comps = dict(restriction)
    if not comps:
        raise LieError("restriction must contain at least one component")
    restricted_dim = sum(mult * weyl_dim(sub, w) for w, mult in comps.items())
    module_dim = weyl_dim(amb, ambient_module)
    if restricted_dim != module_dim:
        raise LieError(
            f"restriction has dimension {restricted_dim}, "
            f"ambient module has dimension {module_dim}"
        )
    total = sum(
        (mult * dynkin_index(sub, w) for w, mult in comps.items()), Fraction(0)
    )
    return total / dynkin_index(amb, ambient_module)


# ---------------------------------------------------------------------------
# the shipped catalog


def _parse_weight_rows(label: str, factors: Sequence[SimpleAlgebra], rows) -> Tuple[Coords, ...]:
    if not isinstance(rows, list) or len(rows) != len(factors):
        raise LieError(f"case {label!r}: expected one weight array per factor")
    out = []
    for alg, row in zip(factors, rows):
        if (
            not isinstance(row, list)
            or len(row) != alg.rank
            or not all(isinstance(x, int) and x >= 0 for x in row)
        ):
            raise LieError(
                f"case {label!r}: weight {row!r} is not a dominant "
                f"integral weight of {alg.type} in omega coordinates"
            )
        out.append(tuple(row))
    return tuple(out)


def _case_from_document(entry) -> BranchingCase:
    if not isinstance(entry, dict):
        raise LieError("catalog entries must be objects")
    label = entry.get("label")
    if not isinstance(label, str) or not label:
        raise LieError("catalog entry lacks a label")
    required = {"label", "ambient", "factors", "level", "p"}
    missing = required - set(entry)
    if missing:
        raise LieError(f"case {label!r}: missing fields {sorted(missing)}")
    try:
        ambient = AlgebraType.parse(entry["ambient"])
    except (LieError, TypeError) as exc:
        raise LieError(f"case {label!r}: bad ambient: {exc}") from None
    raw_factors = entry["factors"]
    if not isinstance(raw_factors, list) or not raw_factors:
        raise LieError(f"case {label!r}: factors must be a non-empty list")
    factors = []
    for item in raw_factors:
        if not isinstance(item, dict) or "type" not in item or "index" not in item:
            raise LieError(f"case {label!r}: each factor needs 'type' and 'index'")
        try:
            typ = AlgebraType.parse(item["type"])
            idx = parse_rational(item["index"])
        except (LieError, ValueError, TypeError) as exc:
            raise LieError(f"case {label!r}: bad factor: {exc}") from None
        factors.append((typ, idx))
    try:
        level = parse_rational(entry["level"])
    except (ValueError, TypeError) as exc:
        raise LieError(f"case {label!r}: bad level: {exc}") from None
    sub = SubalgebraSpec(tuple(factors), label)
    algs = sub.algebras
    raw_p = entry["p"]
    if not isinstance(raw_p, list) or not raw_p:
        raise LieError(f"case {label!r}: p must be a non-empty list of components")
    components: Dict[Tuple[Coords, ...], int] = {}
    for item in raw_p:
        if not isinstance(item, dict) or "weights" not in item:
            raise LieError(f"case {label!r}: each p component needs 'weights'")
        mult = item.get("mult", 1)
        if not isinstance(mult, int) or mult < 1:
            raise LieError(f"case {label!r}: bad multiplicity {mult!r}")
        key = _parse_weight_rows(label, algs, item["weights"])
        components[key] = components.get(key, 0) + mult
    case = BranchingCase(
        ambient,
        sub,
        Decomposition(algs, components),
        str(entry.get("source", "")),
        level,
    )
    case.check_dimensions()
    return case


def load_catalog(source=None) -> Catalog:
    """Load and validate a catalog document (default: the shipped catalog).

    ``source`` may be a parsed JSON array, a JSON string, or a filesystem
    path.  Any schema violation, duplicate label, or dimension mismatch
    rejects the whole document, naming the offending label.
    """
    if source is None:
        text = resources.files("lieconf").joinpath("data/exceptional.json").read_text()
        document = json.loads(text)
    elif isinstance(source, (list, tuple)):
        document = list(source)
    else:
        text = str(source)
        if text.lstrip().startswith("["):
            document = json.loads(text)
        else:
            with open(text, "r", encoding="utf-8") as handle:
                document = json.load(handle)
    if not isinstance(document, list):
        raise LieError("catalog document must be a JSON array of cases")
    return Catalog(_case_from_document(entry) for entry in document)


# ---------------------------------------------------------------------------
# label resolution for the command line and the global report

_FAMILY_LABEL = re.compile(r"^(slsl|spsp|soso|spso|BB|CC|OO):(\d+),(\d+)$")
_SPSL_LABEL = re.compile(r"^spsl:(\d+)$")


def resolve_case(label: str, catalog: Optional[Catalog] = None) -> BranchingCase:
    """Resolve a built-in case label to a BranchingCase.

    Catalog labels win; otherwise family labels like ``spso:2,3`` or
    ``spsl:3`` and the fixed labels ``G2-in-B3`` / ``B3-in-D4`` construct the
    case on the fly.
    """
    if catalog is None:
        catalog = load_catalog()
    if label in catalog:
        return catalog[label]
    if label == "G2-in-B3":
        return _g2_b3_case()
    if label == "B3-in-D4":
        return _b3_d4_case()
    match = _SPSL_LABEL.match(label)
    if match:
        return _spsl_case(int(match.group(1)))
    match = _FAMILY_LABEL.match(label)
    if match:
        return dual_pair_branching(match.group(1), int(match.group(2)), int(match.group(3)))
    raise LieError(
        f"unknown case label {label!r}; known forms: a catalog label, "
        "'G2-in-B3', 'B3-in-D4', 'spsl:n', or 'family:n,m' with family in "
        f"{DUAL_PAIR_FAMILIES}"
    )


def builtin_labels(catalog: Optional[Catalog] = None) -> List[str]:
    if catalog is None:
        catalog = load_catalog()
    return catalog.labels() + ["G2-in-B3", "B3-in-D4", "spsl:<n>", "<family>:<n>,<m>"]
