"""The seven root-of-unity specializations and their label sets.

Every specialization fixes ``s`` as a root of unity in ``Q(zeta_M)`` and
``alpha`` as a signed power of ``s``.  Both are kept as :class:`Root` values
so that dimension formulas can run on sparse exponent data; they are turned
into :class:`~bcdcat.cyclotomic.CycNum` only when needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Optional

from .cyclotomic import CycNum, signed_root
from .partitions import BoxConstraints, Partition, canonical_key, enumerate_box

__all__ = [
    "Root",
    "Generator",
    "Composite",
    "SeriesSpec",
    "LabelSet",
    "InvalidParametersError",
    "ConsistencyError",
    "SERIES",
    "CLI_NAMES",
    "make_spec",
    "label_sets",
    "level_rank_dual",
    "parse_series",
    "is_degenerate",
]

SERIES = ("C", "CB", "CBneg", "Bneg", "BD", "BDneg", "D")

# command-line spellings
CLI_NAMES = {"C": "C", "CB": "CB", "CB-": "CBneg", "B-": "Bneg", "BD": "BD", "BD-": "BDneg", "D": "D"}
_DISPLAY = {v: k for k, v in CLI_NAMES.items()}


class InvalidParametersError(ValueError):
    """Raised for parameters outside the supported range of a series."""


class ConsistencyError(AssertionError):
    """Raised when an identity that must hold exactly fails."""


def parse_series(name: str) -> str:
    if name in SERIES:
        return name
    try:
        return CLI_NAMES[name]
    except KeyError:
        raise InvalidParametersError(
            f"unknown series {name!r}; expected one of {', '.join(CLI_NAMES)}"
        ) from None


@dataclass(frozen=True)
class Root:
    """The root of unity ``sign * zeta_M^exp``.

    For even M the sign is absorbed into the exponent so that equal roots
    have equal representations.
    """

    order: int
    sign: int
    exp: int

    def __post_init__(self):
        m = self.order
        sign, e = self.sign, self.exp % m
        if sign == -1 and m % 2 == 0:
            sign, e = 1, (e + m // 2) % m
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "exp", e)

    def __mul__(self, other: "Root") -> "Root":
        return Root(self.order, self.sign * other.sign, self.exp + other.exp)

    def __pow__(self, n: int) -> "Root":
        return Root(self.order, self.sign ** (n % 2), self.exp * n)

    def __neg__(self) -> "Root":
        return Root(self.order, -self.sign, self.exp)

    def inv(self) -> "Root":
        return Root(self.order, self.sign, -self.exp)

    def is_one(self) -> bool:
        return self.sign == 1 and self.exp == 0

    def value(self) -> CycNum:
        return signed_root(self.order, self.sign, self.exp)

    def multiplicative_order(self) -> int:
        r, n = self, 1
        while not r.is_one():
            r, n = r * self, n + 1
        return n

    def __str__(self) -> str:
        sgn = "-" if self.sign < 0 else ""
        return f"{sgn}z{self.order}^{self.exp}"


@dataclass(frozen=True)
class Generator:
    """A transparent generator: the single row ``(m)`` or the column ``1^m``."""

    kind: str  # "row" or "col"
    m: int

    @property
    def partition(self) -> Partition:
        return Partition([self.m]) if self.kind == "row" else Partition([1] * self.m)

    @property
    def name(self) -> str:
        return f"({self.m})" if self.kind == "row" else f"1^{self.m}"

    def transposed(self) -> "Generator":
        return Generator("col" if self.kind == "row" else "row", self.m)

    def act(self, lam: Partition) -> Partition:
        """Complement the first column (or row) of ``lam`` to length m."""
        if self.kind == "col":
            t = lam.transpose()
            first = self.m - t.row(1)
            rest = list(t.parts[1:])
            if first < (rest[0] if rest else 0):
                raise ValueError(f"{self.name} does not act on {lam} inside a diagram")
            return Partition([first] + rest).transpose()
        first = self.m - lam.row(1)
        rest = list(lam.parts[1:])
        if first < (rest[0] if rest else 0):
            raise ValueError(f"{self.name} does not act on {lam} inside a diagram")
        return Partition([first] + rest)


@dataclass(frozen=True)
class Composite:
    """The tensor product of the two transparent generators.

    It is not a partition label: it acts on the empty diagram and is listed
    separately in the dominating set.
    """

    first: Generator
    second: Generator

    @property
    def name(self) -> str:
        col, row = (self.first, self.second) if self.first.kind == "col" else (self.second, self.first)
        return f"{col.name}x{row.name}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SeriesSpec:
    """One specialization of the Kauffman parameters at a root of unity."""

    series: str
    n: int
    k: int
    l: int
    M: int
    s: Root
    alpha: Root
    gamma_box: BoxConstraints
    gamma_bar_box: BoxConstraints
    generators: tuple[Generator, ...] = ()
    dual_of: Optional[str] = None

    @property
    def name(self) -> str:
        return f"{_DISPLAY.get(self.series, self.series)}^{{{self.n},{self.k}}}"

    @property
    def is_primary(self) -> bool:
        return self.series in SERIES and self.dual_of is None

    @cached_property
    def s_value(self) -> CycNum:
        return self.s.value()

    @cached_property
    def alpha_value(self) -> CycNum:
        return self.alpha.value()

    @cached_property
    def labels(self) -> "LabelSet":
        return label_sets(self)

    def __str__(self) -> str:
        return self.name

    def __hash__(self) -> int:
        return hash((self.series, self.n, self.k, self.s, self.alpha, self.dual_of))


@dataclass(frozen=True)
class LabelSet:
    gamma: tuple[Partition, ...]
    gamma_bar: tuple[Partition, ...]
    extra: tuple[Composite, ...] = ()

    def __contains__(self, lam: Partition) -> bool:
        return lam in self._gamma_set

    @cached_property
    def _gamma_set(self) -> frozenset:
        return frozenset(self.gamma)

    @cached_property
    def _bar_set(self) -> frozenset:
        return frozenset(self.gamma_bar)

    def in_bar(self, lam: Partition) -> bool:
        return lam in self._bar_set

    def boundary(self) -> list[Partition]:
        return [p for p in self.gamma_bar if p not in self._gamma_set]


# ---------------------------------------------------------------------------
# the specialization table
# ---------------------------------------------------------------------------


def _table(series: str, n: int, k: int):
    """Return (l, M, alpha sign, alpha exponent, second-form sign, exponent,
    Gamma box, Gamma-bar box, generators, minimal l)."""
    B = BoxConstraints
    if series == "C":
        l = 2 * n + 2 * k + 2
        return (l, 2 * l, -1, 2 * n + 1, 1, -2 * k - 1,
                B(row1=k, col1=n), B(row1=k + 1, row2=k, col1=n + 1, col2=n), (), 2 * n + 4)
    if series in ("CB", "CBneg"):
        l = 2 * n + 2 * k + 1
        m = 2 * l if series == "CB" else l
        sign2 = 1 if series == "CB" else -1
        return (l, m, -1, 2 * n + 1, sign2, -2 * k,
                B(rows12=2 * k + 1, col1=n), B(rows12=2 * k + 2, col1=n + 1, col2=n),
                (Generator("row", 2 * k + 1),), 2 * n + 3)
    if series == "Bneg":
        l = 2 * n + 2 * k
        return (l, 2 * l, 1, 2 * n, -1, -2 * k,
                B(rows12=2 * k + 1, cols12=2 * n + 1),
                B(rows12=2 * k + 2, cols12=2 * n + 2, hook11=2 * n + 2 * k),
                (Generator("row", 2 * k + 1), Generator("col", 2 * n + 1)), 2 * n + 2)
    if series in ("BD", "BDneg"):
        l = 2 * n + 2 * k - 1
        m = 2 * l if series == "BD" else l
        sign1 = 1 if series == "BD" else -1
        return (l, m, sign1, 2 * n, -1, -2 * k + 1,
                B(rows12=2 * k, cols12=2 * n + 1),
                B(rows12=2 * k + 1, cols12=2 * n + 2, hook11=l),
                (Generator("row", 2 * k), Generator("col", 2 * n + 1)), 2 * n + 1)
    if series == "D":
        l = 2 * n + 2 * k - 2
        return (l, 2 * l, 1, 2 * n - 1, -1, -2 * k + 1,
                B(rows12=2 * k, cols12=2 * n),
                B(rows12=2 * k + 1, cols12=2 * n + 1, hook11=l),
                (Generator("row", 2 * k), Generator("col", 2 * n)), 2 * n)
    raise InvalidParametersError(f"unknown series {series!r}")


def is_degenerate(alpha: Root, s: Root) -> bool:
    """True for the U(1)-type parameters alpha in {+-1, +-s, +-s^-1}."""
    one = Root(s.order, 1, 0)
    bad = (one, -one, s, -s, s.inv(), -s.inv())
    return alpha in bad


def make_spec(series: str, n: int, k: int) -> SeriesSpec:
    """Build and self-check one specialization."""
    series = parse_series(series)
    if n < 1 or k < 1:
        raise InvalidParametersError(f"n and k must be at least 1 (got n={n}, k={k})")
    l, m, a_sign, a_exp, b_sign, b_exp, g_box, gb_box, gens, l_min = _table(series, n, k)
    if l < l_min:
        raise InvalidParametersError(f"{series}: l = {l} is below the series bound {l_min}")
    s = Root(m, 1, 1)
    alpha = Root(m, a_sign, a_exp)
    if alpha != Root(m, b_sign, b_exp):
        raise ConsistencyError(f"{series}^{{{n},{k}}}: the two expressions for alpha disagree")
    if s.multiplicative_order() != m or (s * s).multiplicative_order() != l:
        raise ConsistencyError(f"{series}^{{{n},{k}}}: s has the wrong order")
    if is_degenerate(alpha, s):
        raise InvalidParametersError(
            f"{_DISPLAY[series]}^{{{n},{k}}} has alpha = {alpha}, a U(1)-type degenerate parameter "
            "(alpha in {+-1, +-s, +-s^-1}); these cases are not supported"
        )
    spec = SeriesSpec(series, n, k, l, m, s, alpha, g_box, gb_box, gens)
    # exact check of the alpha identity in the field as well
    if alpha.value() != signed_root(m, b_sign, b_exp):
        raise ConsistencyError("alpha identity fails in Q(zeta_M)")
    return spec


def label_sets(spec: SeriesSpec) -> LabelSet:
    gamma = tuple(enumerate_box(spec.gamma_box))
    gamma_bar = tuple(enumerate_box(spec.gamma_bar_box))
    extra: tuple[Composite, ...] = ()
    if len(spec.generators) == 2:
        extra = (Composite(*spec.generators),)
    return LabelSet(gamma, gamma_bar, extra)


# ---------------------------------------------------------------------------
# level-rank duality
# ---------------------------------------------------------------------------

_DUAL_TAG = {
    "C": "C",
    "D": "D",
    "CB": "BC",
    "CBneg": "BC-",
    "BD": "DB",
    "BDneg": "DB-",
    "Bneg": "-B",
}


def _transpose_box(b: BoxConstraints) -> BoxConstraints:
    return BoxConstraints(
        row1=b.col1, row2=b.col2, rows12=b.cols12,
        col1=b.row1, col2=b.row2, cols12=b.rows12, hook11=b.hook11,
    )


def level_rank_dual(spec: SeriesSpec) -> tuple[SeriesSpec, Callable[[Partition], Partition]]:
    """The transposed specialization with parameters (alpha, -s^-1).

    Returns the dual spec and the relabelling map, which is transposition.
    The dual lives in the same field as ``spec``.
    """
    s_dual = -spec.s.inv()
    dual = SeriesSpec(
        series=_DUAL_TAG.get(spec.series, spec.series) if spec.dual_of is None else spec.dual_of,
        n=spec.k,
        k=spec.n,
        l=spec.l,
        M=spec.M,
        s=s_dual,
        alpha=spec.alpha,
        gamma_box=_transpose_box(spec.gamma_box),
        gamma_bar_box=_transpose_box(spec.gamma_bar_box),
        generators=tuple(g.transposed() for g in spec.generators),
        dual_of=None if spec.dual_of is not None else spec.series,
    )
    return dual, Partition.transpose
