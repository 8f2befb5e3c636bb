"""Simple objects of the modularized categories.

The transparent group acts on Gamma by tensor product.  Each orbit gives one
label in the modular category.  A fixed point with stabilizer of order two
splits into two labels of half the dimension.  In the D series a diagram
with stabilizer of order four gives either four labels (m = 4) or a single
label (m = 1); which one occurs is not known, so ``m`` is an input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from .catdata import label_qdim, label_twist, modularizability, qdim_general, twist
from .cyclotomic import CycNum, cyc_rational
from .partitions import Partition, canonical_key
from .series import Composite, ConsistencyError, Generator, SeriesSpec

__all__ = [
    "NotModularizableError",
    "InvalidGeneratorError",
    "Label",
    "TableEntry",
    "Orbit",
    "ModularTable",
    "group_elements",
    "group_action",
    "orbits_and_stabilizers",
    "modular_table",
    "QUAD_ASSUMPTION",
]

Element = Union[Partition, Composite]

QUAD_ASSUMPTION = (
    "quad labels (m = 4) are assigned dimension <lambda>/4; "
    "this value is assumed, not derived"
)


class NotModularizableError(ValueError):
    """The transparent group contains an object with twist or dimension not 1."""


class InvalidGeneratorError(ValueError):
    """The generator is not a transparent generator of the specialization."""


@dataclass(frozen=True)
class Label:
    """A simple object of a modularized category."""

    kind: str  # plain, split, quad, hat, tensor
    partition: Optional[Partition] = None
    signs: tuple[str, ...] = ()
    composite: Optional[Composite] = None

    @property
    def tag(self) -> str:
        if self.kind in ("split", "quad"):
            return self.kind + "".join(self.signs)
        return self.kind

    def __str__(self) -> str:
        if self.kind == "tensor":
            return str(self.composite)
        base = str(self.partition)
        if self.kind == "split":
            return base + self.signs[0]
        if self.kind == "quad":
            return f"{self.signs[0]}{base}{self.signs[1]}"
        if self.kind == "hat":
            return "hat" + base
        return base


@dataclass(frozen=True)
class TableEntry:
    label: Label
    qdim: CycNum
    twist: CycNum


@dataclass(frozen=True)
class Orbit:
    members: tuple[Element, ...]
    representative: Partition
    stabilizer: int


@dataclass
class ModularTable:
    spec: SeriesSpec
    labels: list[TableEntry]
    orbit_map: dict[Partition, Partition]
    orbits: list[Orbit]
    m_choices: dict[Partition, int] = field(default_factory=dict)
    undetermined: list[Partition] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.undetermined

    def dims(self) -> list[CycNum]:
        if not self.complete:
            raise ValueError("m is undetermined for " + ", ".join(map(str, self.undetermined)))
        return [e.qdim for e in self.labels]


# ---------------------------------------------------------------------------
# the group action
# ---------------------------------------------------------------------------


def _check_generator(spec: SeriesSpec, g: Generator) -> None:
    if g not in spec.generators:
        raise InvalidGeneratorError(f"{g.name} is not a transparent generator of {spec}")


def group_action(spec: SeriesSpec, g: Generator, lam: Element) -> Element:
    """Tensor product of a transparent generator with a simple object.

    On partitions this complements the first column (or row).  The product of
    the two generators is the symbolic composite label.
    """
    _check_generator(spec, g)
    if isinstance(lam, Composite):
        return lam.second.partition if lam.first == g else lam.first.partition
    others = [h for h in spec.generators if h != g]
    if others and lam == others[0].partition:
        return Composite(*spec.generators)
    if lam not in spec.labels:
        raise ValueError(f"{lam} is not in Gamma({spec})")
    out = g.act(lam)
    if out not in spec.labels:
        raise ConsistencyError(f"{g.name} maps {lam} outside Gamma({spec})")
    return out


def group_elements(spec: SeriesSpec) -> list[tuple[Generator, ...]]:
    """Group elements as words in the generators (all of order two)."""
    gens = spec.generators
    out: list[tuple[Generator, ...]] = [()]
    for g in gens:
        out += [w + (g,) for w in out]
    return out


def _apply_word(spec: SeriesSpec, word, x: Element) -> Element:
    for g in word:
        x = group_action(spec, g, x)
    return x


def _require_modularizable(spec: SeriesSpec) -> None:
    v = modularizability(spec)
    if v.verdict == "not_modularizable":
        w = ", ".join(f"{lab} (twist {tw.approx().real:+.0f})" for lab, _, tw in v.witnesses)
        raise NotModularizableError(f"{spec} is not modularizable: {w}")


def orbits_and_stabilizers(spec: SeriesSpec) -> list[Orbit]:
    """Partition Gamma (with the composite label) into orbits."""
    _require_modularizable(spec)
    words = group_elements(spec)
    seen: set = set()
    orbits = []
    for lam in spec.labels.gamma:
        if lam in seen:
            continue
        images = [_apply_word(spec, w, lam) for w in words]
        members = []
        for x in images:
            if x not in members:
                members.append(x)
        stab = sum(1 for x in images if x == lam)
        if stab * len(members) != len(words):
            raise ConsistencyError(f"orbit-stabilizer count fails at {lam} in {spec}")
        seen.update(members)
        parts = [x for x in members if isinstance(x, Partition)]
        rep = min(parts, key=canonical_key)
        members.sort(key=lambda x: (1, ()) if isinstance(x, Composite) else (0, canonical_key(x)))
        orbits.append(Orbit(tuple(members), rep, stab))
    orbits.sort(key=lambda o: canonical_key(o.representative))
    return orbits


# ---------------------------------------------------------------------------
# the modular table
# ---------------------------------------------------------------------------


def modular_table(
    spec: SeriesSpec,
    m_choices: Optional[Mapping[Partition, int]] = None,
    default_m: Optional[int] = None,
) -> ModularTable:
    """Simple objects of the modularization with dimensions and twists.

    ``m_choices`` fixes m for individual diagrams with stabilizer of order
    four; ``default_m`` applies to the rest.  Without either, those diagrams
    are reported as undetermined.
    """
    m_choices = dict(m_choices or {})
    for lam, m in list(m_choices.items()) + ([(None, default_m)] if default_m is not None else []):
        if m not in (1, 4):
            raise ValueError(f"m must be 1 or 4, got {m!r} for {lam}")
    orbits = orbits_and_stabilizers(spec)
    fours = {o.representative for o in orbits if o.stabilizer == 4}
    stray = [lam for lam in m_choices if lam not in fours]
    if stray:
        raise ValueError("m given for diagrams without stabilizer of order 4: " + ", ".join(map(str, stray)))

    entries: list[TableEntry] = []
    orbit_map: dict[Partition, Partition] = {}
    used_m: dict[Partition, int] = {}
    undetermined: list[Partition] = []
    notes: list[str] = []
    for o in orbits:
        lam = o.representative
        for x in o.members:
            if isinstance(x, Partition):
                orbit_map[x] = lam
        d, t = qdim_general(spec, lam), twist(spec, lam)
        if o.stabilizer == 1:
            entries.append(TableEntry(Label("plain", lam), d, t))
        elif o.stabilizer == 2:
            for sg in "+-":
                entries.append(TableEntry(Label("split", lam, (sg,)), d / 2, t))
        elif o.stabilizer == 4:
            m = m_choices.get(lam, default_m)
            if m is None:
                undetermined.append(lam)
                continue
            used_m[lam] = m
            if m == 4:
                for a in "+-":
                    for b in "+-":
                        entries.append(TableEntry(Label("quad", lam, (a, b)), d / 4, t))
            else:
                entries.append(TableEntry(Label("hat", lam), d / 2, t))
        else:
            raise ConsistencyError(f"unexpected stabilizer order {o.stabilizer} at {lam}")
    if any(m == 4 for m in used_m.values()):
        notes.append(QUAD_ASSUMPTION)
    if undetermined:
        notes.append("m undetermined for: " + ", ".join(map(str, undetermined)))
    table = ModularTable(spec, entries, orbit_map, orbits, used_m, undetermined, notes)
    if table.complete:
        _check_dimension_sum(table)
    return table


def _check_dimension_sum(table: ModularTable) -> None:
    """Dominating-set sum of squares equals |G| times the table sum."""
    spec = table.spec
    order = len(group_elements(spec))
    total = cyc_rational(spec.M, 0)
    for lam in spec.labels.gamma:
        d = qdim_general(spec, lam)
        total = total + d * d
    for c in spec.labels.extra:
        d = label_qdim(spec, c)
        total = total + d * d
    reduced = cyc_rational(spec.M, 0)
    for e in table.labels:
        reduced = reduced + e.qdim * e.qdim
    if total != reduced * order:
        raise ConsistencyError(f"dimension sum rule fails for the modularization of {spec}")
