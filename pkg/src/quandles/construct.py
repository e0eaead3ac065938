"""Order-3n phase products: a base quandle crossed with a quandle structure on Z_3.

The second coordinate of (x,a) > (y,b) is f(a,b) for a 3x3 phase rule f. Two
literal case-table rules (thm31, thm32) are kept verbatim for auditing even
though they fail the axioms; the five valid rules are enumerable and named.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import permutations as _permutations

from . import properties
from .core import (
    DEFAULT_WITNESS_CAP,
    AxiomReport,
    AxiomVerdict,
    BudgetExceededError,
    NotAQuandleError,
    Quandle,
    check_axioms,
)

PHASES = (0, 1, 2)

Convention = str  # "xa" or "ax"


@dataclass(frozen=True)
class PhaseRule:
    """A 3x3 table f over Z_3 = {0,1,2}; entry(a,b) is the output phase of
    (x,a) > (y,b). A rule is valid when (Z_3, f) is itself a quandle."""

    f: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.f) != 3 or any(len(row) != 3 for row in self.f):
            raise ValueError("phase table must be 3x3")
        for a, row in enumerate(self.f):
            for b, v in enumerate(row):
                if v not in PHASES:
                    raise ValueError(f"phase entry {v!r} at ({a},{b}) out of range 0..2")

    def entry(self, a: int, b: int) -> int:
        return self.f[a][b]

    def to_quandle(self) -> Quandle:
        """The same table as an order-3 magma on {1,2,3}."""
        rows = tuple(tuple(v + 1 for v in row) for row in self.f)
        return Quandle(3, rows, name=self.name)


def rule_from_table(rows, name=None) -> PhaseRule:
    return PhaseRule(tuple(tuple(row) for row in rows), name=name)


def trivial_rule() -> PhaseRule:
    return rule_from_table([[a] * 3 for a in PHASES], name="trivial")


def dihedral_rule() -> PhaseRule:
    return rule_from_table(
        [[(2 * b - a) % 3 for b in PHASES] for a in PHASES], name="dihedral")


def swap_rule(i: int, j: int) -> PhaseRule:
    """The rule whose only non-identity column transposes phases i and j.

    Idempotency forces that column to sit at the remaining phase.
    """
    if not (0 <= i < j <= 2):
        raise ValueError("need 0 <= i < j <= 2")
    col = ({0, 1, 2} - {i, j}).pop()

    def f(a, b):
        if b != col:
            return a
        return j if a == i else i if a == j else a

    return rule_from_table([[f(a, b) for b in PHASES] for a in PHASES], name=f"swap{i}{j}")


def literal_rule_A() -> PhaseRule:
    """The first order-3n case table, verbatim: a+b+2 when (a,b) is (1,1) or
    (0,1); a when (a,b) is (2,2) or (2,1); a+b otherwise (all mod 3)."""

    def f(a, b):
        if (a, b) in ((1, 1), (0, 1)):
            return (a + b + 2) % 3
        if (a, b) in ((2, 2), (2, 1)):
            return a
        return (a + b) % 3

    return rule_from_table([[f(a, b) for b in PHASES] for a in PHASES], name="thm31")


def literal_rule_B() -> PhaseRule:
    """The second order-3n case table, verbatim: a+b+2 when (a,b) is (1,1),
    (0,1) or (2,1); a+b+1 when (a,b) is (0,2) or (1,2); a+b otherwise."""

    def f(a, b):
        if (a, b) in ((1, 1), (0, 1), (2, 1)):
            return (a + b + 2) % 3
        if (a, b) in ((0, 2), (1, 2)):
            return (a + b + 1) % 3
        return (a + b) % 3

    return rule_from_table([[f(a, b) for b in PHASES] for a in PHASES], name="thm32")


def named_rules() -> dict[str, PhaseRule]:
    return {
        "trivial": trivial_rule(),
        "dihedral": dihedral_rule(),
        "swap01": swap_rule(0, 1),
        "swap02": swap_rule(0, 2),
        "swap12": swap_rule(1, 2),
        "thm31": literal_rule_A(),
        "thm32": literal_rule_B(),
    }


def _match_rule_name(f: tuple[tuple[int, ...], ...]) -> str | None:
    for name, rule in named_rules().items():
        if rule.f == f:
            return name
    return None


def validate_rule(rule: PhaseRule, witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    """Run the table axiom checker on (Z_3, f); witnesses come back in phase
    coordinates 0..2 rather than the 1-based element coding."""
    report = check_axioms(rule.to_quandle(), witness_cap=witness_cap)
    return AxiomReport(
        idempotency=AxiomVerdict(
            report.idempotency.ok,
            tuple(x - 1 for x in report.idempotency.witnesses)),
        right_invertibility=AxiomVerdict(
            report.right_invertibility.ok,
            tuple((y - 1, x1 - 1, x2 - 1) for y, x1, x2 in report.right_invertibility.witnesses)),
        self_distributivity=AxiomVerdict(
            report.self_distributivity.ok,
            tuple((x - 1, y - 1, z - 1) for x, y, z in report.self_distributivity.witnesses)),
        witness_cap=report.witness_cap,
    )


def is_valid_rule(rule: PhaseRule) -> bool:
    return validate_rule(rule, witness_cap=1).overall


def enumerate_phase_rules() -> tuple[PhaseRule, ...]:
    """All phase rules that make (Z_3, f) a quandle, in lexicographic table order.

    Constructive: idempotency and column bijectivity force each column b to be
    a permutation of {0,1,2} fixing b, leaving 8 candidates to filter by
    self-distributivity.
    """
    columns_for = {}
    for b in PHASES:
        rest = [v for v in PHASES if v != b]
        cands = []
        for perm in _permutations(rest):
            col = [0, 0, 0]
            col[b] = b
            for pos, v in zip(rest, perm):
                col[pos] = v
            cands.append(tuple(col))
        columns_for[b] = cands

    found = []
    for c0 in columns_for[0]:
        for c1 in columns_for[1]:
            for c2 in columns_for[2]:
                f = tuple((c0[a], c1[a], c2[a]) for a in PHASES)
                rule = PhaseRule(f, name=_match_rule_name(f))
                if is_valid_rule(rule):
                    found.append(rule)
    found.sort(key=lambda r: r.f)
    return tuple(found)


def pair_to_index(convention: Convention, n: int, x: int, a: int) -> int:
    """Flatten (x, a) in {1..n} x Z_3 to {1..3n}."""
    if convention == "xa":
        return 3 * (x - 1) + a + 1
    if convention == "ax":
        return n * a + x
    raise ValueError(f"unknown convention {convention!r}")


def index_to_pair(convention: Convention, n: int, k: int) -> tuple[int, int]:
    if convention == "xa":
        return (k - 1) // 3 + 1, (k - 1) % 3
    if convention == "ax":
        return (k - 1) % n + 1, (k - 1) // n
    raise ValueError(f"unknown convention {convention!r}")


def _product_table(base: Quandle, rule: PhaseRule, convention: Convention):
    n = base.order
    n3 = 3 * n
    pairs = [index_to_pair(convention, n, k) for k in range(1, n3 + 1)]
    rows = []
    for x, a in pairs:
        brow = base.table[x - 1]
        frow = rule.f[a]
        rows.append(tuple(
            pair_to_index(convention, n, brow[y - 1], frow[b]) for y, b in pairs))
    return tuple(rows)


def product3(base: Quandle, rule: PhaseRule, convention: Convention = "xa") -> Quandle:
    """The order-3n table with (x,a) > (y,b) = (x > y, f(a,b)).

    No axiom check is performed: invalid rules are allowed so their broken
    products can be audited. Base orders below 3 are accepted with a warning,
    since the construction is stated for n >= 3.
    """
    if base.order < 3:
        warnings.warn(
            f"product base has order {base.order}; the construction is stated for n >= 3",
            stacklevel=2)
    name = None
    if base.name and rule.name:
        name = f"{base.name}*{rule.name}"
    return Quandle(3 * base.order, _product_table(base, rule, convention), name=name)


def decompose3(q: Quandle, convention: Convention = "xa"):
    """Factor q as product3(base, rule, convention) if possible, else None.

    The candidate base is read off the phase-(0,0) cells and the candidate
    rule off the x=y=1 block; an exact recomposition check then decides.
    Round trip: decompose3(product3(B, f, c), c) == (B, f).
    """
    if q.order % 3:
        raise ValueError(f"order {q.order} is not divisible by 3")
    n = q.order // 3
    base_rows = tuple(
        tuple(index_to_pair(convention, n,
                            q.table[pair_to_index(convention, n, x, 0) - 1]
                                   [pair_to_index(convention, n, y, 0) - 1])[0]
              for y in range(1, n + 1))
        for x in range(1, n + 1))
    f = tuple(
        tuple(index_to_pair(convention, n,
                            q.table[pair_to_index(convention, n, 1, a) - 1]
                                   [pair_to_index(convention, n, 1, b) - 1])[1]
              for b in PHASES)
        for a in PHASES)
    try:
        base = Quandle(n, base_rows)
        rule = PhaseRule(f, name=_match_rule_name(f))
    except ValueError:
        return None
    if _product_table(base, rule, convention) != q.table:
        return None
    return base, rule


@dataclass(frozen=True)
class PropertyTransfer:
    """Whether one property holds on the base and on the product; None means
    the evaluation was skipped (search budget)."""

    property: str
    holds_on_base: bool | None
    holds_on_product: bool | None
    claim: str = "iff"

    @property
    def agrees(self) -> bool | None:
        if self.holds_on_base is None or self.holds_on_product is None:
            return None
        return self.holds_on_base == self.holds_on_product


@dataclass(frozen=True)
class TransferReport:
    base: Quandle
    rule: PhaseRule
    convention: str
    product: Quandle
    records: tuple[PropertyTransfer, ...]

    def record(self, property_name: str) -> PropertyTransfer:
        for r in self.records:
            if r.property == property_name:
                return r
        raise KeyError(property_name)

    def disagreements(self) -> tuple[PropertyTransfer, ...]:
        return tuple(r for r in self.records if r.agrees is False)


def _phase_summary(report: AxiomReport) -> str:
    """Like AxiomReport.summary but worded in phase coordinates."""
    if report.overall:
        return "all axioms pass"
    parts = []
    if not report.idempotency.ok:
        parts.append(f"idempotency fails at a={report.idempotency.witnesses[0]}")
    if not report.right_invertibility.ok:
        b, a1, a2 = report.right_invertibility.witnesses[0]
        parts.append(f"right invertibility fails at column b={b} (rows a={a1},a={a2} collide)")
    if not report.self_distributivity.ok:
        a, b, c = report.self_distributivity.witnesses[0]
        parts.append(f"self-distributivity fails at (a,b,c)=({a},{b},{c})")
    return "; ".join(parts)


def _alexander_flag(q: Quandle, budget: int) -> bool | None:
    try:
        return properties.alexander_recognize(q, max_order=budget) is not None
    except BudgetExceededError:
        return None


def audit_transfer(base: Quandle, rule: PhaseRule, convention: Convention = "xa",
                   alexander_budget: int = 15) -> TransferReport:
    """Evaluate each transferable property on the base and on its phase product
    and record, per property, whether the two sides agree with the iff claim.

    Raises when the rule or base fails the axioms; the report in the error
    message replaces the audit in that case.
    """
    rule_report = validate_rule(rule, witness_cap=1)
    if not rule_report.overall:
        raise NotAQuandleError(f"phase rule fails axioms: {_phase_summary(rule_report)}")
    base_report = check_axioms(base, witness_cap=1)
    if not base_report.overall:
        raise NotAQuandleError(f"base fails axioms: {base_report.summary()}")

    product = product3(base, rule, convention)
    evaluators = (
        ("involutory", properties.is_involutory),
        ("conjugate identities", properties.conjugate_identities),
        ("left-distributive", properties.is_left_distributive),
        ("abelian", properties.is_abelian),
        ("alexander", lambda q: _alexander_flag(q, alexander_budget)),
        ("connected", properties.is_connected),
    )
    records = tuple(
        PropertyTransfer(name, func(base), func(product))
        for name, func in evaluators)
    return TransferReport(base=base, rule=rule, convention=convention,
                          product=product, records=records)
