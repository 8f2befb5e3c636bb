"""Exact arithmetic in the cyclotomic field Q(zeta_M).

Elements are stored in the power basis ``1, z, ..., z^(phi(M)-1)`` reduced
modulo the M-th cyclotomic polynomial, as an integer numerator vector over a
single positive denominator.  The representation is canonical, so equality
and zero tests are plain tuple comparisons.
"""

from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "CycNum",
    "OrderMismatchError",
    "cyclotomic_poly",
    "euler_phi",
    "cyc_root",
    "cyc_rational",
    "signed_root",
    "group_ring_product",
    "qint",
    "qint_alpha",
    "bracket_s",
    "embed",
    "restrict",
]

Rational = Union[int, Fraction]


class OrderMismatchError(ValueError):
    """Raised when combining elements of different cyclotomic fields."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials and per-order reduction tables
# ---------------------------------------------------------------------------

_lock = threading.Lock()
_phi_polys: dict[int, tuple[int, ...]] = {}
_tables: dict[int, "_OrderData"] = {}


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high), ``den`` monic."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the m-th cyclotomic polynomial.

    Uses x^m - 1 = prod_{d | m} Phi_d(x) and divides out the proper divisors.
    """
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    cached = _phi_polys.get(m)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    result = tuple(poly)
    with _lock:
        _phi_polys.setdefault(m, result)
    return _phi_polys[m]


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


class _OrderData:
    """Reduction table: ``red[e]`` is z^e mod Phi_M as a sparse list."""

    __slots__ = ("order", "phi", "red", "red_dense")

    def __init__(self, order: int):
        poly = cyclotomic_poly(order)
        phi = len(poly) - 1
        span = max(order, 2 * phi - 1)
        dense: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(span):
            dense.append(tuple(cur))
            # multiply by z and reduce with z^phi = -sum poly[i] z^i
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * poly[i]
        self.order = order
        self.phi = phi
        self.red_dense = dense
        self.red = [[(i, c) for i, c in enumerate(v) if c] for v in dense]


def _data(order: int) -> _OrderData:
    d = _tables.get(order)
    if d is None:
        built = _OrderData(order)
        with _lock:
            d = _tables.setdefault(order, built)
    return d


# ---------------------------------------------------------------------------
# the element type
# ---------------------------------------------------------------------------


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = den
    for x in nums:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                break
    if not any(nums):
        return tuple(0 for _ in nums), 1
    if g != 1:
        nums = [x // g for x in nums]
        den //= g
    return tuple(nums), den


class CycNum:
    """An exact element of Q(zeta_M)."""

    __slots__ = ("order", "nums", "den", "_hash")

    def __init__(self, order: int, nums: Iterable[int], den: int = 1, *, _normalized: bool = False):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        nums = list(nums)
        if len(nums) != _data(order).phi:
            raise ValueError(f"expected {_data(order).phi} coefficients for order {order}, got {len(nums)}")
        if _normalized:
            self.nums, self.den = tuple(nums), den
        else:
            self.nums, self.den = _normalize(nums, den)
        self.order = order
        self._hash = None

    # construction ----------------------------------------------------------

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Sequence[Rational]) -> "CycNum":
        """Build from a (possibly unreduced) coefficient list in powers of zeta."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        raw = [int(c * den) for c in fr]
        return cls._from_raw(order, raw, den)

    @classmethod
    def _from_raw(cls, order: int, raw: Sequence[int], den: int = 1) -> "CycNum":
        data = _data(order)
        phi = data.phi
        out = list(raw[:phi]) + [0] * max(0, phi - len(raw))
        red = data.red
        for e in range(phi, len(raw)):
            c = raw[e]
            if c:
                for i, v in red[e % order] if e >= len(red) else red[e]:
                    out[i] += c * v
        return cls(order, out, den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @property
    def phi(self) -> int:
        return len(self.nums)

    # predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.nums[0], self.den)

    def to_int(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return cyc_rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycNum(self.order, [a + b for a, b in zip(self.nums, o.nums)], self.den)
        return CycNum(
            self.order,
            [a * o.den + b * self.den for a, b in zip(self.nums, o.nums)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-a for a in self.nums], self.den, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.order, [a * q.numerator for a in self.nums], self.den * q.denominator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.nums, o.nums
        phi = len(a)
        raw = [0] * (2 * phi - 1)
        nzb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in nzb:
                    raw[i + j] += x * y
        return CycNum._from_raw(self.order, raw, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            q = Fraction(self.den, self.nums[0])
            return cyc_rational(self.order, q)
        return _poly_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            q = Fraction(other)
            return CycNum(self.order, [a * q.denominator for a in self.nums], self.den * q.numerator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inv() ** (-e)
        result = cyc_rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # Galois action ---------------------------------------------------------

    def galois(self, j: int) -> "CycNum":
        """Apply the automorphism zeta -> zeta^j (j coprime to the order)."""
        m = self.order
        if math.gcd(j, m) != 1:
            raise ValueError(f"{j} is not a unit modulo {m}")
        raw = [0] * m
        for i, x in enumerate(self.nums):
            if x:
                raw[(i * j) % m] += x
        return CycNum._from_raw(m, raw, self.den)

    def conj(self) -> "CycNum":
        return self.galois(-1)

    # comparison / display -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.order == other.order and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.nums, self.den))
        return self._hash

    def approx(self) -> complex:
        """Complex embedding zeta -> exp(2 pi i / M); display only."""
        m = self.order
        return sum(
            (x * cmath.exp(2j * math.pi * i / m) for i, x in enumerate(self.nums) if x), 0j
        ) / self.den

    def __repr__(self) -> str:
        return f"CycNum({self.order}, {self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
                terms.append(f"{c}" if i == 0 else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        z = self.approx()
        return {
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
            "approx": [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycNum":
        return cls.from_coeffs(obj["order"], [Fraction(c) for c in obj["coeffs"]])


# ---------------------------------------------------------------------------
# inversion: extended Euclid in Q[x] modulo Phi_M
# ---------------------------------------------------------------------------


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bv in enumerate(b):
            a[shift + i] -= c * bv
        a.pop()
        _trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _poly_inverse(x: CycNum) -> CycNum:
    m = x.order
    modulus = [Fraction(c) for c in cyclotomic_poly(m)]
    r0, r1 = modulus, _trim([Fraction(c) for c in x.nums])
    t0, t1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    if not r1:
        # gcd is non-constant; impossible for irreducible Phi_M and nonzero x
        raise ArithmeticError("non-invertible element")
    c = r1[0]
    coeffs = [t / c for t in t1]
    _, rem = _poly_divmod(coeffs, modulus) if len(coeffs) >= len(modulus) else (None, coeffs)
    # multiply back by the original denominator
    return CycNum.from_coeffs(m, [v * x.den for v in rem] or [0])


# ---------------------------------------------------------------------------
# constructors and quantum numbers
# ---------------------------------------------------------------------------


def cyc_rational(order: int, q: Rational) -> CycNum:
    q = Fraction(q)
    phi = _data(order).phi
    return CycNum(order, [q.numerator] + [0] * (phi - 1), q.denominator)


def cyc_root(order: int, e: int) -> CycNum:
    """zeta_M^e in canonical form."""
    data = _data(order)
    return CycNum(order, data.red_dense[e % order], 1, _normalized=True)


def signed_root(order: int, sign: int, e: int) -> CycNum:
    r = cyc_root(order, e)
    return r if sign > 0 else -r


def group_ring_product(order: int, factors: Iterable[Sequence[tuple[int, int]]]) -> CycNum:
    """Product of sparse factors, each a list of (coefficient, exponent) pairs.

    Works in Z[Z/M] with cyclic index shifts and reduces once at the end;
    much cheaper than repeated reduced multiplication for short factors.
    """
    vec = [0] * order
    vec[0] = 1
    for factor in factors:
        new = [0] * order
        for c, e in factor:
            e %= order
            if e == 0:
                for i, v in enumerate(vec):
                    if v:
                        new[i] += c * v
            else:
                for i, v in enumerate(vec):
                    if v:
                        j = i + e
                        if j >= order:
                            j -= order
                        new[j] += c * v
        vec = new
    return CycNum._from_raw(order, vec, 1)


def qint(s: CycNum, n: int) -> CycNum:
    """Quantum integer [n] = (s^n - s^-n) / (s - s^-1)."""
    sinv = s.inv()
    denom = s - sinv
    if denom.is_zero():
        raise ZeroDivisionError("s^2 = 1: quantum integers undefined")
    return (s ** n - sinv ** n) / denom


def qint_alpha(alpha: CycNum, s: CycNum, n: int) -> CycNum:
    """[n]_alpha = (alpha s^n - alpha^-1 s^-n) / (s - s^-1)."""
    sinv = s.inv()
    denom = s - sinv
    if denom.is_zero():
        raise ZeroDivisionError("s^2 = 1: quantum integers undefined")
    return (alpha * s ** n - alpha.inv() * sinv ** n) / denom


def bracket_s(s: CycNum, n: int) -> CycNum:
    """Unnormalised bracket s^n - s^-n."""
    return s ** n - s.inv() ** n


# ---------------------------------------------------------------------------
# change of field
# ---------------------------------------------------------------------------


def embed(x: CycNum, order: int) -> CycNum:
    """Image of x under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M)."""
    if order % x.order:
        raise OrderMismatchError(f"{x.order} does not divide {order}")
    step = order // x.order
    raw = [0] * order
    for i, v in enumerate(x.nums):
        if v:
            raw[i * step] += v
    return CycNum._from_raw(order, raw, x.den)


def restrict(x: CycNum, order: int) -> CycNum:
    """Inverse of :func:`embed`; raises ValueError if x is not in Q(zeta_order)."""
    big = x.order
    if big % order:
        raise OrderMismatchError(f"{order} does not divide {big}")
    phi_small = euler_phi(order)
    cols = [embed(cyc_root(order, i), big).nums for i in range(phi_small)]
    rows = len(x.nums)
    # augmented system  sum_i c_i * cols[i] = x
    mat = [[Fraction(cols[i][r]) for i in range(phi_small)] + [Fraction(x.nums[r], x.den)] for r in range(rows)]
    pivots = []
    row = 0
    for col in range(phi_small):
        piv = next((r for r in range(row, rows) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        p = mat[row][col]
        mat[row] = [v / p for v in mat[row]]
        for r in range(rows):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    if any(mat[r][-1] != 0 for r in range(row, rows)):
        raise ValueError(f"element does not lie in Q(zeta_{order})")
    sol = [Fraction(0)] * phi_small
    for r, col in enumerate(pivots):
        sol[col] = mat[r][-1]
    return CycNum.from_coeffs(order, sol)
