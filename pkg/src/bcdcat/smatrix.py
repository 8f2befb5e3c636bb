"""S-matrix and fusion rules of the symplectic series C^{n,k}.

Hopf-link values are obtained from symplectic Weyl characters evaluated at
the points ``x_j(mu) = s^(2(mu_j + n + 1 - j))``.  The construction is checked
against the Kauffman dimensions and the modularity identities every time a
matrix is built; a failure there is fatal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from .catdata import branching, qdim_general, twist
from .cyclotomic import CycNum, bracket_s, cyc_rational, group_ring_product
from .partitions import Partition
from .series import ConsistencyError, SeriesSpec

__all__ = [
    "SMatrixError",
    "NonIntegralFusionError",
    "SMatrix",
    "FusionTable",
    "character_point",
    "character_point_exponents",
    "sp_character",
    "build_smatrix",
    "fusion_from_S",
    "killing_check",
    "omega_closed_form",
    "ribbon_check",
    "branching_slice_check",
]


class SMatrixError(ConsistencyError):
    """An S-matrix postcondition failed."""


class NonIntegralFusionError(ConsistencyError):
    """A fusion coefficient is not a non-negative integer."""


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _require_c(spec: SeriesSpec) -> None:
    if spec.series != "C" or not spec.is_primary:
        raise ValueError(f"S-matrices are only built for the C series, not {spec}")


def character_point_exponents(spec: SeriesSpec, mu: Partition) -> list[int]:
    """Exponents e_j with x_j(mu) = s^(e_j)."""
    n = spec.n
    if len(mu) > n:
        raise ValueError(f"{mu} has more than {n} rows")
    return [2 * (mu.row(j) + n + 1 - j) for j in range(1, n + 1)]


def character_point(spec: SeriesSpec, mu: Partition) -> list[CycNum]:
    s = spec.s_value
    return [s ** e for e in character_point_exponents(spec, mu)]


def _det(mat: list[list[CycNum]]) -> CycNum:
    """Leibniz expansion; the matrices here are at most a few rows."""
    n = len(mat)
    order = mat[0][0].order
    total = cyc_rational(order, 0)
    for p in permutations(range(n)):
        term = cyc_rational(order, _perm_sign(p))
        for i in range(n):
            term = term * mat[i][p[i]]
            if term.is_zero():
                break
        total = total + term
    return total


def sp_character(lam: Partition, x: Sequence[CycNum]) -> CycNum:
    """Symplectic character as a ratio of alternants."""
    n = len(x)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} rows")
    if n == 0:
        raise ValueError("empty evaluation point")
    delta = [n - j for j in range(n)]
    ls = [lam.row(j + 1) + delta[j] for j in range(n)]
    inv = [xi.inv() for xi in x]

    def alt(exps):
        return _det([[x[i] ** e - inv[i] ** e for e in exps] for i in range(n)])

    den = alt(delta)
    if den.is_zero():
        raise ZeroDivisionError("Weyl denominator vanishes at this point")
    return alt(ls) / den


def _alt_exp(order: int, pts: Sequence[int], exps: Sequence[int]) -> CycNum:
    """det(zeta^(p_i e_j) - zeta^(-p_i e_j)) summed in the group ring."""
    n = len(pts)
    vec = [0] * order
    for p in permutations(range(n)):
        sign = _perm_sign(p)
        part = [0] * order
        part[0] = sign
        for i in range(n):
            a = (pts[i] * exps[p[i]]) % order
            new = [0] * order
            for idx, v in enumerate(part):
                if v:
                    new[(idx + a) % order] += v
                    new[(idx - a) % order] -= v
            part = new
        for idx, v in enumerate(part):
            vec[idx] += v
    return group_ring_product(order, [[(c, e) for e, c in enumerate(vec) if c]])


def _sp_character_exp(spec: SeriesSpec, lam: Partition, pts: Sequence[int]) -> CycNum:
    n = spec.n
    delta = [n - j for j in range(n)]
    ls = [lam.row(j + 1) + delta[j] for j in range(n)]
    den = _alt_exp(spec.M, pts, delta)
    if den.is_zero():
        raise ZeroDivisionError("Weyl denominator vanishes at this point")
    return _alt_exp(spec.M, pts, ls) / den


@dataclass(frozen=True)
class SMatrix:
    spec: SeriesSpec
    labels: tuple[Partition, ...]
    S: tuple[tuple[CycNum, ...], ...]
    Sbar: tuple[tuple[CycNum, ...], ...]
    omega: CycNum

    def index(self, lam: Partition) -> int:
        return self.labels.index(lam)

    def entry(self, lam: Partition, mu: Partition) -> CycNum:
        return self.S[self.index(lam)][self.index(mu)]


@lru_cache(maxsize=None)
def build_smatrix(spec: SeriesSpec) -> SMatrix:
    """Build S and verify symmetry, the first row and S * Sbar = <omega> I."""
    _require_c(spec)
    labels = spec.labels.gamma
    r = len(labels)
    pts = [character_point_exponents(spec, mu) for mu in labels]
    chi = [[_sp_character_exp(spec, lam, pts[b]) for b in range(r)] for lam in labels]
    S = []
    for a, lam in enumerate(labels):
        row = []
        for b, mu in enumerate(labels):
            v = chi[a][b] * chi[b][0]
            row.append(-v if (lam.size + mu.size) % 2 else v)
        S.append(tuple(row))
    S = tuple(S)
    Sbar = tuple(tuple(v.conj() for v in row) for row in S)
    where = f"at {spec}"
    dims = [qdim_general(spec, lam) for lam in labels]
    for a in range(r):
        if S[a][0] != dims[a]:
            raise SMatrixError(f"S[{labels[a]}][()] != <{labels[a]}> {where}")
        for b in range(a):
            if S[a][b] != S[b][a]:
                raise SMatrixError(f"S is not symmetric {where}")
    omega = cyc_rational(spec.M, 0)
    for d in dims:
        omega = omega + d * d
    for a in range(r):
        for b in range(r):
            acc = cyc_rational(spec.M, 0)
            for c in range(r):
                acc = acc + S[a][c] * Sbar[c][b]
            if acc != (omega if a == b else 0):
                raise SMatrixError(f"S*Sbar != <omega>I {where}")
    return SMatrix(spec, tuple(labels), S, Sbar, omega)


def omega_closed_form(spec: SeriesSpec) -> CycNum:
    """The product expression for the sum of squared dimensions of C^{n,k}."""
    _require_c(spec)
    n, k, s = spec.n, spec.k, spec.s_value
    den = cyc_rational(spec.M, 1)
    for j in range(1, n + 1):
        den = den * bracket_s(s, 2 * n + 2 - 2 * j)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            den = den * bracket_s(s, 2 * n + 2 - i - j) * bracket_s(s, j - i)
    return cyc_rational(spec.M, (-(2 * n + 2 * k + 2)) ** n) / (den * den)


def killing_check(sm: SMatrix, mu: Partition) -> CycNum:
    """Sum over lambda of <lambda> S[lambda][mu]."""
    b = sm.index(mu)
    acc = cyc_rational(sm.spec.M, 0)
    for a in range(len(sm.labels)):
        acc = acc + sm.S[a][0] * sm.S[a][b]
    return acc


@dataclass(frozen=True)
class FusionTable:
    labels: tuple[Partition, ...]
    entries: dict  # (a, b, c) index triple -> positive int

    def N(self, lam: Partition, mu: Partition, nu: Partition) -> int:
        idx = self.labels.index
        return self.entries.get((idx(lam), idx(mu), idx(nu)), 0)

    def records(self) -> list[tuple[Partition, Partition, Partition, int]]:
        return [
            (self.labels[a], self.labels[b], self.labels[c], v)
            for (a, b, c), v in sorted(self.entries.items())
        ]

    def check(self, dims: Sequence[CycNum]) -> list[str]:
        """Names of failed structural identities (empty when all hold)."""
        r = range(len(self.labels))
        N = lambda a, b, c: self.entries.get((a, b, c), 0)
        tests = {
            "commutativity": lambda: all(N(a, b, c) == N(b, a, c) for a in r for b in r for c in r),
            "unit law": lambda: all(N(a, 0, c) == (a == c) for a in r for c in r),
            "self-duality": lambda: all(N(a, b, 0) == (a == b) for a in r for b in r),
            "associativity": lambda: all(
                sum(N(a, b, e) * N(e, c, d) for e in r) == sum(N(b, c, e) * N(a, e, d) for e in r)
                for a in r for b in r for c in r for d in r
            ),
            "dimension homomorphism": lambda: all(
                sum((dims[c] * N(a, b, c) for c in r if N(a, b, c)), cyc_rational(dims[0].order, 0))
                == dims[a] * dims[b]
                for a in r for b in r
            ),
        }
        return [name for name, ok in tests.items() if not ok()]


def fusion_from_S(sm: SMatrix) -> FusionTable:
    """Fusion coefficients by diagonalising with the S-matrix."""
    S, Sbar, r = sm.S, sm.Sbar, len(sm.labels)
    oinv = sm.omega.inv()
    entries = {}
    for a in range(r):
        for b in range(a, r):
            w = [S[a][g] * S[b][g] / S[g][0] for g in range(r)]
            for c in range(r):
                acc = cyc_rational(sm.spec.M, 0)
                for g in range(r):
                    acc = acc + w[g] * Sbar[g][c]
                acc = acc * oinv
                if not acc.is_rational():
                    raise NonIntegralFusionError(
                        f"N[{sm.labels[a]}][{sm.labels[b]}][{sm.labels[c]}] is irrational at {sm.spec}"
                    )
                q = acc.to_fraction()
                if q.denominator != 1 or q < 0:
                    raise NonIntegralFusionError(
                        f"N[{sm.labels[a]}][{sm.labels[b]}][{sm.labels[c]}] = {q} at {sm.spec}"
                    )
                if q:
                    entries[(a, b, c)] = int(q)
                    entries[(b, a, c)] = int(q)
    return FusionTable(sm.labels, entries)


def ribbon_check(sm: SMatrix, fus: FusionTable) -> bool:
    """t_lam t_mu S[lam][mu] = sum_nu N t_nu <nu> for all pairs."""
    spec = sm.spec
    tw = [twist(spec, lam) for lam in sm.labels]
    dims = [sm.S[a][0] for a in range(len(sm.labels))]
    r = len(sm.labels)
    for a in range(r):
        for b in range(a, r):
            rhs = cyc_rational(spec.M, 0)
            for c in range(r):
                m = fus.entries.get((a, b, c), 0)
                if m:
                    rhs = rhs + tw[c] * dims[c] * m
            if tw[a] * tw[b] * sm.S[a][b] != rhs:
                return False
    return True


def branching_slice_check(sm: SMatrix, fus: FusionTable) -> bool:
    """Fusion with (1) equals the non-negligible branching neighbours."""
    spec = sm.spec
    box = Partition([1])
    if box not in sm.labels:
        return True
    for lam in sm.labels:
        expected = {e.mu for e in branching(spec, lam) if not e.negligible}
        got = {nu for nu in sm.labels if fus.N(lam, box, nu)}
        if expected != got or any(fus.N(lam, box, nu) != 1 for nu in got):
            return False
    return True
