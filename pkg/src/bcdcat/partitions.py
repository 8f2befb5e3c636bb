"""Young diagrams and the cell statistics used by the dimension formulas.

Cells are indexed ``(i, j)`` from 1, row first.  The canonical ordering of
partitions sorts by size and then by parts in descending lexicographic order,
so ``(2) < (1, 1)`` and the empty diagram comes first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

__all__ = [
    "Partition",
    "CellError",
    "transpose",
    "content",
    "hook_length",
    "d_stat",
    "d_prime_stat",
    "BoxConstraints",
    "enumerate_box",
    "canonical_key",
]


class CellError(ValueError):
    """Raised when a cell does not belong to the diagram."""


@dataclass(frozen=True)
class Partition:
    """A Young diagram stored as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Sequence[int] = ()):
        p = tuple(int(x) for x in parts)
        while p and p[-1] == 0:
            p = p[:-1]
        if any(x <= 0 for x in p):
            raise ValueError(f"parts must be positive: {parts!r}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", p)

    # basic shape data --------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def row(self, i: int) -> int:
        """Length of row i (1-indexed); zero beyond the diagram."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """Length of column j (1-indexed); zero beyond the diagram."""
        t = self.transpose().parts
        return t[j - 1] if 1 <= j <= len(t) else 0

    @cached_property
    def _transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)])

    def transpose(self) -> "Partition":
        return self._transpose

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self.parts, start=1):
            for j in range(1, r + 1):
                yield (i, j)

    def has_cell(self, i: int, j: int) -> bool:
        return i >= 1 and j >= 1 and self.row(i) >= j

    def content_sum(self) -> int:
        return sum(j - i for i, j in self.cells())

    # neighbours in Young's lattice ------------------------------------

    def addable(self) -> list[tuple[int, int]]:
        """Cells that can be added, top to bottom."""
        out = []
        p = self.parts
        for i in range(1, len(p) + 2):
            r = self.row(i)
            if i == 1 or self.row(i - 1) > r:
                out.append((i, r + 1))
        return out

    def removable(self) -> list[tuple[int, int]]:
        """Corner cells, top to bottom."""
        p = self.parts
        return [(i, p[i - 1]) for i in range(1, len(p) + 1) if self.row(i + 1) < p[i - 1]]

    def add_cell(self, i: int) -> "Partition":
        p = list(self.parts) + [0]
        p[i - 1] += 1
        return Partition(p)

    def remove_cell(self, i: int) -> "Partition":
        p = list(self.parts)
        p[i - 1] -= 1
        return Partition(p)

    # display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "(" + ",".join(str(x) for x in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __lt__(self, other: "Partition") -> bool:
        return canonical_key(self) < canonical_key(other)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1"``, ``"(3,1)"``, ``"[3, 1]"``, ``"1^3"`` or ``""``."""
        t = text.strip().strip("()[]").replace(" ", "")
        if not t or t in ("0", "empty"):
            return cls(())
        parts: list[int] = []
        for tok in t.split(","):
            if "^" in tok:
                base, mult = tok.split("^")
                parts.extend([int(base)] * int(mult))
            else:
                parts.append(int(tok))
        return cls(parts)


def canonical_key(p: Partition) -> tuple:
    return (p.size, tuple(-x for x in p.parts))


def transpose(lam: Partition) -> Partition:
    return lam.transpose()


def content(i: int, j: int) -> int:
    if i < 1 or j < 1:
        raise CellError(f"cell indices start at 1: ({i},{j})")
    return j - i


def _check_cell(lam: Partition, i: int, j: int) -> None:
    if not lam.has_cell(i, j):
        raise CellError(f"({i},{j}) is not a cell of {lam}")


def hook_length(lam: Partition, i: int, j: int) -> int:
    _check_cell(lam, i, j)
    return lam.row(i) + lam.col(j) - i - j + 1


def d_stat(lam: Partition, i: int, j: int) -> int:
    _check_cell(lam, i, j)
    if i <= j:
        return lam.row(i) + lam.row(j) - i - j + 1
    return -lam.col(i) - lam.col(j) + i + j - 1


def d_prime_stat(lam: Partition, i: int, j: int) -> int:
    _check_cell(lam, i, j)
    if i < j:
        return lam.row(i) + lam.row(j) - i - j + 1
    return -lam.col(i) - lam.col(j) + i + j - 1


@dataclass(frozen=True)
class BoxConstraints:
    """Upper bounds on the first rows and columns; ``None`` means unbounded.

    At least one bound on rows and one on columns must be finite so that the
    enumerated set is finite.
    """

    row1: Optional[int] = None  # lambda_1
    row2: Optional[int] = None  # lambda_2
    rows12: Optional[int] = None  # lambda_1 + lambda_2
    col1: Optional[int] = None  # lambda^v_1
    col2: Optional[int] = None  # lambda^v_2
    cols12: Optional[int] = None  # lambda^v_1 + lambda^v_2
    hook11: Optional[int] = None  # lambda_1 + lambda^v_1

    def max_row(self) -> int:
        cands = [b for b in (self.row1, self.rows12, self.hook11) if b is not None]
        if not cands:
            raise ValueError("row length is unbounded")
        return max(0, min(cands))

    def max_col(self) -> int:
        cands = [b for b in (self.col1, self.cols12, self.hook11) if b is not None]
        if not cands:
            raise ValueError("column length is unbounded")
        return max(0, min(cands))

    def admits(self, lam: Partition) -> bool:
        r1, r2 = lam.row(1), lam.row(2)
        c1, c2 = lam.col(1), lam.col(2)
        checks = (
            (self.row1, r1),
            (self.row2, r2),
            (self.rows12, r1 + r2),
            (self.col1, c1),
            (self.col2, c2),
            (self.cols12, c1 + c2),
            (self.hook11, r1 + c1),
        )
        return all(b is None or v <= b for b, v in checks)


def _partitions_in_box(rows: int, width: int) -> Iterator[tuple[int, ...]]:
    """All partitions with at most ``rows`` parts, each at most ``width``."""

    def rec(prefix: list[int], cap: int, left: int):
        yield tuple(prefix)
        if left == 0:
            return
        for x in range(1, cap + 1):
            prefix.append(x)
            yield from rec(prefix, x, left - 1)
            prefix.pop()

    yield from rec([], width, rows)


def enumerate_box(constraints: BoxConstraints) -> list[Partition]:
    """Every partition satisfying ``constraints``, in canonical order."""
    width, height = constraints.max_row(), constraints.max_col()
    found = [Partition(p) for p in _partitions_in_box(height, width)]
    return sorted((p for p in found if constraints.admits(p)), key=canonical_key)
