"""The identity battery run by ``bcdcat check``.

Each check returns a :class:`CheckResult`; failures are collected rather
than raised so the report is complete, and nothing is ever masked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import catdata as cd
from .cyclotomic import cyc_rational
from .modularize import group_action, group_elements, modular_table, orbits_and_stabilizers
from .partitions import Partition
from .series import Composite, ConsistencyError, SeriesSpec, level_rank_dual, make_spec

__all__ = [
    "CheckResult",
    "EXPECTED_VERDICT",
    "expected_transparent",
    "expected_minus_one_twists",
    "run_checks",
]

EXPECTED_VERDICT = {
    "C": "modular",
    "CB": "modularizable",
    "BD": "modularizable",
    "D": "modularizable",
    "Bneg": "not_modularizable",
    "BDneg": "not_modularizable",
    "CBneg": "not_modularizable",
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def expected_transparent(spec: SeriesSpec) -> list:
    """Transparent objects as listed for each series."""
    out: list = [Partition(())] + [g.partition for g in spec.generators]
    if len(spec.generators) == 2:
        out.append(Composite(*spec.generators))
    return out


def expected_minus_one_twists(spec: SeriesSpec) -> set[str]:
    """Names of transparent objects with twist -1."""
    n, k = spec.n, spec.k
    return {
        "Bneg": {f"({2 * k + 1})", f"1^{2 * n + 1}x({2 * k + 1})"},
        "BDneg": {f"1^{2 * n + 1}", f"1^{2 * n + 1}x({2 * k})"},
        "CBneg": {f"({2 * k + 1})"},
    }.get(spec.series, set())


def _name(x) -> str:
    if isinstance(x, Composite):
        return x.name
    if len(x) == 1:
        return f"({x.parts[0]})"
    if x.parts and all(p == 1 for p in x.parts):
        return f"1^{len(x)}"
    return str(x)


def _guard(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
    except (ConsistencyError, ArithmeticError, ValueError) as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, ok, detail)


def _first_failure(items: Iterable, pred) -> Optional[object]:
    for x in items:
        if not pred(x):
            return x
    return None


def dimension_checks(spec: SeriesSpec) -> list[CheckResult]:
    L = spec.labels
    out = []

    def subset():
        bad = _first_failure(L.gamma, L.in_bar)
        return bad is None, "" if bad is None else f"{bad} in Gamma but not Gamma-bar"

    def closure():
        # Neighbours outside Gamma-bar are allowed only when their idempotent
        # does not exist: the (1,1) hook equals l, so [hl(1,1)] = 0.
        missing = 0
        for lam in L.gamma:
            for mu in cd.missing_neighbours(spec, lam):
                if mu.row(1) + mu.col(1) - 1 != spec.l:
                    return False, f"neighbour {mu} of {lam} is outside Gamma-bar"
                missing += 1
        return True, f"{missing} neighbours with undefined idempotent (first hook = l)"

    def nonvanishing():
        bad = _first_failure(L.gamma, lambda p: not cd.qdim_general(spec, p).is_zero())
        return bad is None, "" if bad is None else f"<{bad}> = 0"

    def vanishing():
        bad = _first_failure(L.boundary(), lambda p: cd.qdim_general(spec, p).is_zero())
        return bad is None, "" if bad is None else f"<{bad}> != 0 on the boundary"

    def specialized():
        bad = _first_failure(
            L.gamma, lambda p: cd.qdim_specialized_any(spec, p) == cd.qdim_general(spec, p)
        )
        return bad is None, "" if bad is None else f"specialized formula disagrees at {bad}"

    def single_row_column():
        for lam in L.gamma_bar:
            for kind, j, fn in (("col", len(lam), cd.qdim_column), ("row", lam.row(1), cd.qdim_row)):
                shape = Partition([1] * j) if kind == "col" else Partition([j] if j else [])
                if lam != shape:
                    continue
                try:
                    v = fn(spec, j)
                except cd.VanishingDenominatorError:
                    continue
                if v != cd.qdim_general(spec, lam):
                    return False, f"{kind} formula disagrees at {lam}"
        return True, ""

    def primed():
        checked = 0
        for lam in L.gamma:
            try:
                v = cd.qdim_primed(spec, lam)
            except cd.VanishingDenominatorError:
                continue
            checked += 1
            if v != cd.qdim_general(spec, lam):
                return False, f"primed form disagrees at {lam}"
        return True, f"{checked} diagrams compared"

    def symmetry():
        dual, relabel = level_rank_dual(spec)
        bad = _first_failure(
            L.gamma, lambda p: cd.qdim_general(dual, relabel(p)) == cd.qdim_general(spec, p)
        )
        if bad is not None:
            return False, f"<{bad}> differs from its transpose at (alpha, -1/s)"
        if set(map(relabel, L.gamma)) != set(dual.labels.gamma):
            return False, "transposition is not a bijection onto the dual Gamma"
        return True, ""

    def omega_nonzero():
        return not cd.global_dimension(spec).is_zero(), ""

    for name, fn in (
        ("Gamma is contained in Gamma-bar", subset),
        ("one-cell neighbours of Gamma lie in Gamma-bar", closure),
        ("dimensions are nonzero on Gamma", nonvanishing),
        ("dimensions vanish on Gamma-bar minus Gamma", vanishing),
        ("specialized dimension formula agrees with the hook formula", specialized),
        ("single row and column formulas agree", single_row_column),
        ("half-integer primed formula agrees", primed),
        ("dimensions are symmetric under transposition and s -> -1/s", symmetry),
        ("<omega> is nonzero", omega_nonzero),
    ):
        out.append(_guard(name, fn))
    return out


def transparency_checks(spec: SeriesSpec) -> list[CheckResult]:
    out = []

    def census():
        got = [_name(x) for x in cd.transparent_objects(spec)]
        want = [_name(x) for x in expected_transparent(spec)]
        return sorted(got) == sorted(want), f"found {got}"

    def dims_one():
        bad = _first_failure(cd.transparent_objects(spec), lambda t: cd.label_qdim(spec, t) == 1)
        return bad is None, "" if bad is None else f"<{_name(bad)}> != 1"

    def group_type():
        want = {0: "1", 1: "Z2", 2: "Z2xZ2"}[len(spec.generators)]
        got = cd.transparent_group_type(spec)
        return got == want, got

    def twists():
        minus = {
            _name(t) for t in cd.transparent_objects(spec) if cd.label_twist(spec, t) == -1
        }
        others_one = all(
            cd.label_twist(spec, t) in (1, -1) for t in cd.transparent_objects(spec)
        )
        return minus == expected_minus_one_twists(spec) and others_one, f"twist -1 on {sorted(minus)}"

    def verdict():
        v = cd.modularizability(spec).verdict
        return v == EXPECTED_VERDICT[spec.series], v

    for name, fn in (
        ("transparent objects match the expected list", census),
        ("transparent objects have dimension 1", dims_one),
        ("transparent group type", group_type),
        ("twist -1 witnesses", twists),
        ("modularizability verdict", verdict),
    ):
        out.append(_guard(name, fn))
    return out


def modularization_checks(spec: SeriesSpec) -> list[CheckResult]:
    if EXPECTED_VERDICT[spec.series] != "modularizable":
        return []
    out = []

    def action():
        for g in spec.generators:
            for lam in spec.labels.gamma:
                img = group_action(spec, g, lam)
                if group_action(spec, g, img) != lam:
                    return False, f"{g.name} is not an involution at {lam}"
                if isinstance(img, Partition) and cd.qdim_general(spec, img) != cd.qdim_general(spec, lam):
                    return False, f"{g.name} changes the dimension of {lam}"
        return True, ""

    def stabilizers():
        orbs = orbits_and_stabilizers(spec)
        k, n = spec.k, spec.n
        for o in orbs:
            lam = o.representative
            if spec.series == "CB":
                want = 1
            elif spec.series == "BD":
                want = 2 if lam.row(1) == k else 1
            else:
                want = 2 ** ((lam.row(1) == k) + (lam.col(1) == n))
            if o.stabilizer != want:
                return False, f"stabilizer {o.stabilizer} at {lam}, expected {want}"
            if lam.row(1) > k or lam.col(1) > n:
                return False, f"representative {lam} outside the reduced box"
        return True, f"{len(orbs)} orbits"

    def tables():
        ms = (1, 4) if spec.series == "D" else (None,)
        sizes = [len(modular_table(spec, default_m=m).labels) for m in ms]
        return True, f"label counts {sizes}"

    for name, fn in (
        ("transparent action is an involution preserving dimensions", action),
        ("orbit stabilizers", stabilizers),
        ("modular tables satisfy the dimension sum rule", tables),
    ):
        out.append(_guard(name, fn))
    return out


def smatrix_checks(spec: SeriesSpec, fusion_limit: int = 12) -> list[CheckResult]:
    if spec.series != "C":
        return []
    from .smatrix import (branching_slice_check, build_smatrix, fusion_from_S, killing_check,
                          omega_closed_form, ribbon_check)
    from .refine import graded_hopf_identity, refinement_verdict

    out = []
    holder: dict = {}

    def build():
        holder["sm"] = build_smatrix(spec)
        return True, "symmetric, first row = dimensions, S*Sbar = <omega>I"

    def omega():
        return holder["sm"].omega == omega_closed_form(spec), ""

    def killing():
        sm = holder["sm"]
        for mu in sm.labels:
            want = sm.omega if mu == Partition(()) else cyc_rational(spec.M, 0)
            if killing_check(sm, mu) != want:
                return False, f"fails at {mu}"
        return True, ""

    def fusion():
        sm = holder["sm"]
        if len(sm.labels) > fusion_limit:
            return True, f"skipped ({len(sm.labels)} labels > {fusion_limit})"
        fus = fusion_from_S(sm)
        failed = fus.check([row[0] for row in sm.S])
        if not ribbon_check(sm, fus):
            failed.append("ribbon identity")
        if not branching_slice_check(sm, fus):
            failed.append("branching slice")
        parity = all((a.size + b.size + c.size) % 2 == 0 for a, b, c, _ in fus.records())
        if not parity:
            failed.append("parity grading")
        return not failed, ", ".join(failed)

    def refinements():
        v = refinement_verdict(spec)
        bad = [nu for nu in (0, 1) if not graded_hopf_identity(spec, nu).holds]
        return not bad, f"verdict {v}"

    out.append(_guard("S-matrix postconditions", build))
    if "sm" in holder:
        for name, fn in (
            ("<omega> matches the product formula", omega),
            ("killing property", killing),
            ("fusion rules", fusion),
            ("refinement identities", refinements),
        ):
            out.append(_guard(name, fn))
    return out


def verlinde_checks(spec: SeriesSpec, gmax: int = 3) -> list[CheckResult]:
    from .verlinde import (generic_D_symbolic, verlinde_closed, verlinde_D_symbolic,
                           verlinde_from_table)

    if spec.series not in ("C", "CB", "BD", "D"):
        return []

    def agree():
        for g in range(gmax + 1):
            if spec.series == "D":
                if verlinde_D_symbolic(spec.n, spec.k, g) != generic_D_symbolic(spec.n, spec.k, g):
                    return False, f"symbolic forms differ at g = {g}"
                for m in (1, 4):
                    a = verlinde_closed("D", spec.n, spec.k, g, default_m=m)
                    b = verlinde_from_table("D", spec.n, spec.k, g, default_m=m)
                    if a != b:
                        return False, f"g = {g}, m = {m}: {a} != {b}"
            else:
                a = verlinde_closed(spec.series, spec.n, spec.k, g)
                b = verlinde_from_table(spec.series, spec.n, spec.k, g)
                if a != b:
                    return False, f"g = {g}: {a} != {b}"
        return True, f"g = 0..{gmax}"

    return [_guard("Verlinde closed form equals the generic formula", agree)]


def run_checks(spec: SeriesSpec, gmax: int = 3) -> list[CheckResult]:
    """Every applicable identity for one specialization."""
    return (
        dimension_checks(spec)
        + transparency_checks(spec)
        + modularization_checks(spec)
        + smatrix_checks(spec)
        + verlinde_checks(spec, gmax)
    )
