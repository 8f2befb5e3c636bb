"""Quantum dimensions, twists, braiding and transparency for a specialization.

All dimension formulas multiply their numerator and denominator factors
separately in the group ring ``Z[Z/M]`` and divide once at the end, which is
far cheaper than dividing cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from .cyclotomic import CycNum, cyc_rational, group_ring_product, restrict
from .partitions import Partition, d_prime_stat, d_stat, hook_length
from .series import Composite, ConsistencyError, Generator, Root, SeriesSpec

__all__ = [
    "VanishingDenominatorError",
    "RowCountError",
    "NotAdjacentError",
    "ObjectData",
    "BranchEntry",
    "Verdict",
    "qdim_general",
    "qdim_primed",
    "qdim_specialized",
    "qdim_specialized_any",
    "qdim_column",
    "qdim_row",
    "twist",
    "twist_root",
    "braiding_coeff",
    "branching",
    "missing_neighbours",
    "is_transparent",
    "transparent_objects",
    "transparent_group_type",
    "modularizability",
    "label_qdim",
    "label_twist",
    "object_data",
    "global_dimension",
]

Label = Union[Partition, Composite]


class VanishingDenominatorError(ZeroDivisionError):
    """A hook-length bracket in a denominator vanishes at the specialization."""


class RowCountError(ValueError):
    """The row-indexed specialized formula needs at most n rows."""


class NotAdjacentError(ValueError):
    """The two diagrams do not differ by a single cell."""


# ---------------------------------------------------------------------------
# sparse factor helpers
# ---------------------------------------------------------------------------


def _term(r: Root, coeff: int = 1) -> tuple[int, int]:
    return (coeff * r.sign, r.exp)


def _bracket(s: Root, x: int) -> list[tuple[int, int]]:
    """s^x - s^-x as sparse group-ring data."""
    return [_term(s ** x), _term(s ** (-x), -1)]


def _bracket_alpha(alpha: Root, s: Root, x: int) -> list[tuple[int, int]]:
    """alpha s^x - alpha^-1 s^-x."""
    return [_term(alpha * s ** x), _term(alpha.inv() * s ** (-x), -1)]


def _zero_bracket(s: Root, x: int) -> bool:
    return (s ** (2 * x)).is_one()


def _ratio(order: int, nums: Iterable, dens: list) -> CycNum:
    dens = list(dens)
    top = group_ring_product(order, nums)
    if top.is_zero():
        return top
    bottom = group_ring_product(order, dens)
    if bottom.is_zero():
        raise VanishingDenominatorError("denominator vanishes")
    return top / bottom


# ---------------------------------------------------------------------------
# dimensions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def qdim_general(spec: SeriesSpec, lam: Partition) -> CycNum:
    """Quantum dimension from the hook-length product over all cells."""
    s, alpha, order = spec.s, spec.alpha, spec.M
    nums, dens = [], []
    for i, j in lam.cells():
        h = hook_length(lam, i, j)
        if _zero_bracket(s, h):
            raise VanishingDenominatorError(f"[{h}] = 0 for cell ({i},{j}) of {lam} at {spec}")
        dens.append(_bracket(s, h))
        if i == j:
            a = lam.row(j) - lam.col(j)
            nums.append(_bracket_alpha(alpha, s, a) + _bracket(s, h))
        else:
            nums.append(_bracket_alpha(alpha, s, d_stat(lam, i, j)))
    return _ratio(order, nums, dens)


def _half_root(r: Root, big: int) -> int:
    """Exponent e with zeta_big^e squaring to ``r``; ``big`` = 4 * r.order."""
    e = 2 * r.exp + (r.order if r.sign < 0 else 0)
    return e % big


def qdim_primed(spec: SeriesSpec, lam: Partition) -> CycNum:
    """Cross-check form with half-integer powers and the primed statistic.

    Evaluated in Q(zeta_{4M}) and restricted back to Q(zeta_M).
    """
    big = 4 * spec.M
    a = _half_root(spec.alpha, big)
    t = _half_root(spec.s, big)
    nums, dens = [], []
    for i, j in lam.cells():
        h = hook_length(lam, i, j)
        d, dp = d_stat(lam, i, j), d_prime_stat(lam, i, j)
        nums.append([(1, a + t * d), (-1, -a - t * d)])
        nums.append([(1, a + t * dp), (1, -a - t * dp)])
        dens.append([(1, t * h), (-1, -t * h)])
        dens.append([(1, t * h), (1, -t * h)])
    return restrict(_ratio(big, nums, dens), spec.M)


def _rows(spec: SeriesSpec, lam: Partition) -> list[int]:
    if len(lam) > spec.n:
        raise RowCountError(f"{lam} has more than n = {spec.n} rows")
    return list(lam.parts) + [0] * (spec.n - len(lam))


def _form(spec: SeriesSpec) -> str:
    return {"C": "C", "CB": "C", "CBneg": "C", "Bneg": "B", "BD": "B", "BDneg": "B", "D": "D"}[
        spec.series if spec.is_primary else ""
    ]


def qdim_specialized(spec: SeriesSpec, lam: Partition) -> CycNum:
    """Row-indexed product formula of the C, B or D type.

    C type covers C, CB, CBneg; B type covers Bneg, BD and, through the
    symmetry (alpha, s) -> (-alpha, -s), BDneg; D type covers D.
    """
    if not spec.is_primary:
        raise ValueError("specialized formulas are only defined for the seven primary series")
    n = spec.n
    lm = _rows(spec, lam)
    form = _form(spec)
    order = spec.M

    if form == "B":
        # work with t^2 = s_eff, brackets in t-exponents
        s_eff = -spec.s if spec.series == "BDneg" else spec.s
        big = 4 * order
        t = _half_root(s_eff, big)

        def br(x2: int):
            return [(1, t * x2), (-1, -t * x2)]

        nums, dens = [], []
        for j in range(1, n + 1):
            nums.append(br(2 * (n + lm[j - 1] - j) + 1))
            dens.append(br(2 * (n - j) + 1))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                li, lj = lm[i - 1], lm[j - 1]
                nums.append(br(2 * (2 * n + li - i + lj - j + 1)))
                nums.append(br(2 * (li - i - lj + j)))
                dens.append(br(2 * (2 * n - i - j + 1)))
                dens.append(br(2 * (j - i)))
        return restrict(_ratio(big, nums, dens), order)

    s = spec.s
    nums, dens = [], []
    if form == "C":
        sign = -1 if lam.size % 2 else 1
        nums.append([(sign, 0)])
        for j in range(1, n + 1):
            nums.append(_bracket(s, 2 * n + 2 + 2 * lm[j - 1] - 2 * j))
            dens.append(_bracket(s, 2 * n + 2 - 2 * j))
        shift = 2 * n + 2
    else:  # D
        if lm[-1] != 0:
            nums.append([(2, 0)])
        shift = 2 * n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            li, lj = lm[i - 1], lm[j - 1]
            nums.append(_bracket(s, shift + li - i + lj - j))
            nums.append(_bracket(s, li - i - lj + j))
            dens.append(_bracket(s, shift - i - j))
            dens.append(_bracket(s, j - i))
    for f in dens:
        if group_ring_product(order, [f]).is_zero():
            raise VanishingDenominatorError(f"specialized formula denominator vanishes at {spec}")
    return _ratio(order, nums, dens)


def _column_generator(spec: SeriesSpec) -> Optional[Generator]:
    return next((g for g in spec.generators if g.kind == "col"), None)


def qdim_specialized_any(spec: SeriesSpec, lam: Partition) -> CycNum:
    """Specialized formula, reflecting tall diagrams by the column generator.

    The column generator has dimension one and tensoring with it preserves
    dimensions, so a diagram with more than n rows is evaluated through its
    image, which has at most n rows.
    """
    if len(lam) <= spec.n:
        return qdim_specialized(spec, lam)
    g = _column_generator(spec)
    if g is None:
        raise RowCountError(f"{lam} has more than n = {spec.n} rows and {spec} has no column generator")
    return qdim_specialized(spec, g.act(lam))


def _factorial_dens(s: Root, j: int) -> list:
    out = []
    for m in range(1, j + 1):
        if _zero_bracket(s, m):
            raise VanishingDenominatorError(f"[{j}]! vanishes")
        out.append(_bracket(s, m))
    return out


def qdim_column(spec: SeriesSpec, j: int) -> CycNum:
    """Dimension of the column 1^j from the single-column product."""
    if j < 0:
        raise ValueError("column length must be non-negative")
    if j == 0:
        return cyc_rational(spec.M, 1)
    s, alpha = spec.s, spec.alpha
    nums = [_bracket_alpha(alpha, s, -m) for m in range(0, j - 1)]
    nums.append(_bracket_alpha(alpha, s, 1 - j) + _bracket(s, j))
    return _ratio(spec.M, nums, _factorial_dens(s, j))


def qdim_row(spec: SeriesSpec, j: int) -> CycNum:
    """Dimension of the row (j) from the single-row product."""
    if j < 0:
        raise ValueError("row length must be non-negative")
    if j == 0:
        return cyc_rational(spec.M, 1)
    s, alpha = spec.s, spec.alpha
    nums = [_bracket_alpha(alpha, s, m) for m in range(0, j - 1)]
    nums.append(_bracket_alpha(alpha, s, j - 1) + _bracket(s, j))
    return _ratio(spec.M, nums, _factorial_dens(s, j))


# ---------------------------------------------------------------------------
# twists and braiding
# ---------------------------------------------------------------------------


def twist_root(spec: SeriesSpec, lam: Partition) -> Root:
    return spec.alpha ** lam.size * spec.s ** (2 * lam.content_sum())


def twist(spec: SeriesSpec, lam: Partition) -> CycNum:
    """t_lambda = alpha^|lambda| s^(2 * content sum)."""
    return twist_root(spec, lam).value()


def _cell_between(lam: Partition, mu: Partition) -> Optional[tuple[int, int]]:
    """The cell of mu not in lam, if mu = lam + one cell."""
    if mu.size != lam.size + 1:
        return None
    for i, j in lam.addable():
        if lam.add_cell(i) == mu:
            return (i, j)
    return None


def _braid_root(spec: SeriesSpec, lam: Partition, mu: Partition, direction: str) -> Root:
    if direction == "add":
        c = _cell_between(lam, mu)
        if c is None:
            raise NotAdjacentError(f"{mu} is not {lam} plus a cell")
        return spec.s ** (2 * (c[1] - c[0]))
    if direction == "remove":
        c = _cell_between(mu, lam)
        if c is None:
            raise NotAdjacentError(f"{mu} is not {lam} minus a cell")
        return spec.alpha ** (-2) * spec.s ** (-2 * (c[1] - c[0]))
    raise ValueError(f"direction must be 'add' or 'remove', got {direction!r}")


def braiding_coeff(spec: SeriesSpec, lam: Partition, mu: Partition, direction: str) -> CycNum:
    """Double-braiding eigenvalue of lam with the fundamental object on mu."""
    return _braid_root(spec, lam, mu, direction).value()


@dataclass(frozen=True)
class BranchEntry:
    mu: Partition
    kind: str  # "add" or "remove"
    negligible: bool
    coeff: Root


def _neighbours(lam: Partition):
    for i, _ in lam.addable():
        yield lam.add_cell(i), "add"
    for i, _ in lam.removable():
        yield lam.remove_cell(i), "remove"


@lru_cache(maxsize=None)
def _branching(spec: SeriesSpec, lam: Partition) -> tuple[BranchEntry, ...]:
    labels = spec.labels
    out = []
    for mu, kind in _neighbours(lam):
        if not labels.in_bar(mu):
            continue
        negligible = mu not in labels and qdim_general(spec, mu).is_zero()
        out.append(BranchEntry(mu, kind, negligible, _braid_root(spec, lam, mu, kind)))
    return tuple(out)


def branching(spec: SeriesSpec, lam: Partition) -> list[BranchEntry]:
    """Neighbours of lam inside Gamma-bar, flagged negligible when dimension 0."""
    return list(_branching(spec, lam))


def missing_neighbours(spec: SeriesSpec, lam: Partition) -> list[Partition]:
    """Neighbours of lam outside Gamma-bar."""
    return [mu for mu, _ in _neighbours(lam) if not spec.labels.in_bar(mu)]


def is_transparent(spec: SeriesSpec, lam: Partition) -> bool:
    """All non-negligible branching coefficients equal one."""
    return all(e.coeff.is_one() for e in _branching(spec, lam) if not e.negligible)


@lru_cache(maxsize=None)
def _transparent(spec: SeriesSpec) -> tuple[Label, ...]:
    found: list[Label] = [lam for lam in spec.labels.gamma if is_transparent(spec, lam)]
    partitions = set(found)
    gens = spec.generators
    if len(gens) == 2 and all(g.partition in partitions for g in gens):
        found.append(Composite(*gens))
    return tuple(found)


def transparent_objects(spec: SeriesSpec) -> list[Label]:
    """Transparent simple objects of Gamma, closed under tensor products."""
    return list(_transparent(spec))


def transparent_group_type(spec: SeriesSpec) -> str:
    """'1', 'Z2' or 'Z2xZ2', after checking every element has order at most 2."""
    objs = transparent_objects(spec)
    gens = [g for g in spec.generators if g.partition in objs]
    for g in gens:
        if g.act(g.partition) != Partition(()):
            raise ConsistencyError(f"{g.name} does not square to the unit in {spec}")
    return {1: "1", 2: "Z2", 4: "Z2xZ2"}.get(len(objs), f"order {len(objs)}")


def label_qdim(spec: SeriesSpec, label: Label) -> CycNum:
    if isinstance(label, Composite):
        return label_qdim(spec, label.first.partition) * label_qdim(spec, label.second.partition)
    return qdim_general(spec, label)


def label_twist_root(spec: SeriesSpec, label: Label) -> Root:
    if isinstance(label, Composite):
        # transparent factors: the double braiding is trivial
        return twist_root(spec, label.first.partition) * twist_root(spec, label.second.partition)
    return twist_root(spec, label)


def label_twist(spec: SeriesSpec, label: Label) -> CycNum:
    return label_twist_root(spec, label).value()


@dataclass(frozen=True)
class Verdict:
    verdict: str  # "modular", "modularizable" or "not_modularizable"
    transparent: tuple[Label, ...]
    witnesses: tuple[tuple[Label, CycNum, CycNum], ...] = ()  # (label, qdim, twist)


def modularizability(spec: SeriesSpec) -> Verdict:
    """Apply the criterion: transparent objects need dimension 1 and twist 1."""
    objs = tuple(transparent_objects(spec))
    if len(objs) == 1:
        return Verdict("modular", objs)
    bad = []
    for t in objs:
        d, tw = label_qdim(spec, t), label_twist(spec, t)
        if d != 1 or tw != 1:
            bad.append((t, d, tw))
    if bad:
        return Verdict("not_modularizable", objs, tuple(bad))
    return Verdict("modularizable", objs)


@dataclass(frozen=True)
class ObjectData:
    label: Partition
    qdim: CycNum
    twist: CycNum


def object_data(spec: SeriesSpec) -> list[ObjectData]:
    return [ObjectData(lam, qdim_general(spec, lam), twist(spec, lam)) for lam in spec.labels.gamma]


def global_dimension(spec: SeriesSpec) -> CycNum:
    """Sum of squared dimensions over Gamma."""
    total = cyc_rational(spec.M, 0)
    for lam in spec.labels.gamma:
        d = qdim_general(spec, lam)
        total = total + d * d
    return total
