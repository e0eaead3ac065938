"""Cayley-table model of finite quandles and the standard construction families.

Elements are 1-based throughout: an order-n table has entries in {1..n} and
entry(x, y) is the product x > y (row x, column y). Families defined on Z_n
are shifted onto {1..n} so printed tables can be compared cell for cell.
All values are immutable and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _permutations

DEFAULT_WITNESS_CAP = 10


class NotAQuandleError(ValueError):
    """An operation needed a table satisfying the quandle axioms and got one that does not."""


class BudgetExceededError(RuntimeError):
    """A bounded search or closure hit its cap before finishing."""


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}, stored as its image sequence: images[i-1] = sigma(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()})"

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Canonical cycle decomposition: each cycle starts at its least element,
        cycles are sorted by least element, fixed points are omitted."""
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            seen[start - 1] = True
            cyc = [start]
            x = self(start)
            while x != start:
                seen[x - 1] = True
                cyc.append(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        cycs = self.cycles()
        return math.lcm(*(len(c) for c in cycs)) if cycs else 1

    def cycle_type(self) -> tuple[int, ...]:
        """Partition of the degree by cycle length, descending, fixed points included."""
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        fixed = self.degree - sum(lengths)
        return tuple(lengths) + (1,) * fixed

    def cycle_string(self) -> str:
        """Render like ``(7,10), (8,11), (9,12)``; the identity renders as ``(1)``."""
        cycs = self.cycles()
        if not cycs:
            return "(1)"
        return ", ".join("(" + ",".join(str(e) for e in c) + ")" for c in cycs)


@dataclass(frozen=True, repr=False)
class Quandle:
    """An order-n magma as a Cayley table; entry(x, y) = x > y.

    Construction does not check the quandle axioms (see check_axioms), only
    that the table is square with entries in range, so that broken tables can
    still be represented and analyzed.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        if len(self.table) != n:
            raise ValueError(f"shape mismatch: expected {n} rows, got {len(self.table)}")
        for i, row in enumerate(self.table, start=1):
            if len(row) != n:
                raise ValueError(f"shape mismatch: row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row, start=1):
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ValueError(f"entry {v!r} at row {i}, column {j} out of range 1..{n}")

    def __repr__(self) -> str:
        label = f", name={self.name!r}" if self.name else ""
        return f"Quandle(order={self.order}{label})"

    def entry(self, x: int, y: int) -> int:
        return self.table[x - 1][y - 1]

    def elements(self) -> range:
        return range(1, self.order + 1)


def from_table(order, rows, name=None) -> Quandle:
    """Build a Quandle from any nested sequence of ints, without axiom checking."""
    table = tuple(tuple(row) for row in rows)
    return Quandle(order, table, name=name)


@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom verdicts with witness cells for every violation (up to the cap)."""

    idempotency: AxiomVerdict
    right_invertibility: AxiomVerdict
    self_distributivity: AxiomVerdict
    witness_cap: int | None = DEFAULT_WITNESS_CAP

    @property
    def overall(self) -> bool:
        return (self.idempotency.ok and self.right_invertibility.ok
                and self.self_distributivity.ok)

    def failures(self) -> tuple[str, ...]:
        out = []
        if not self.idempotency.ok:
            out.append("idempotency")
        if not self.right_invertibility.ok:
            out.append("right invertibility")
        if not self.self_distributivity.ok:
            out.append("self-distributivity")
        return tuple(out)

    def summary(self) -> str:
        if self.overall:
            return "all axioms pass"
        parts = []
        if not self.idempotency.ok:
            w = self.idempotency.witnesses[0]
            parts.append(f"idempotency fails at x={w}")
        if not self.right_invertibility.ok:
            y, x1, x2 = self.right_invertibility.witnesses[0]
            parts.append(f"right invertibility fails at column y={y} (rows {x1},{x2} collide)")
        if not self.self_distributivity.ok:
            x, y, z = self.self_distributivity.witnesses[0]
            parts.append(f"self-distributivity fails at (x,y,z)=({x},{y},{z})")
        return "; ".join(parts)


def check_axioms(q: Quandle, witness_cap: int | None = DEFAULT_WITNESS_CAP) -> AxiomReport:
    """Check idempotency, column bijectivity, and right self-distributivity.

    Witness collection stops at witness_cap per axiom; pass None for an
    exhaustive witness list. The verdicts themselves are always exact.
    """
    if witness_cap is not None and witness_cap < 1:
        raise ValueError("witness_cap must be None or >= 1")
    n, t = q.order, q.table
    cap = witness_cap

    idem = []
    for x in range(1, n + 1):
        if t[x - 1][x - 1] != x:
            idem.append(x)
            if cap is not None and len(idem) >= cap:
                break

    cols = []
    for y in range(1, n + 1):
        seen: dict[int, int] = {}
        for x in range(1, n + 1):
            v = t[x - 1][y - 1]
            if v in seen:
                cols.append((y, seen[v], x))
                break
            seen[v] = x
        if cap is not None and len(cols) >= cap:
            break

    triples = []
    done = False
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            xy = t[x - 1][y - 1]
            for z in range(1, n + 1):
                if t[xy - 1][z - 1] != t[t[x - 1][z - 1] - 1][t[y - 1][z - 1] - 1]:
                    triples.append((x, y, z))
                    if cap is not None and len(triples) >= cap:
                        done = True
                        break
            if done:
                break
        if done:
            break

    return AxiomReport(
        idempotency=AxiomVerdict(not idem, tuple(idem)),
        right_invertibility=AxiomVerdict(not cols, tuple(cols)),
        self_distributivity=AxiomVerdict(not triples, tuple(triples)),
        witness_cap=witness_cap,
    )


def _check_element(q: Quandle, v: int, argname: str) -> None:
    if not isinstance(v, int) or not 1 <= v <= q.order:
        raise ValueError(f"{argname}={v!r} out of range 1..{q.order}")


def apply(q: Quandle, x: int, y: int) -> int:
    """x > y."""
    _check_element(q, x, "x")
    _check_element(q, y, "y")
    return q.table[x - 1][y - 1]


def dual_apply(q: Quandle, x: int, y: int) -> int:
    """The dual product x >^-1 y: the unique z with z > y = x."""
    _check_element(q, x, "x")
    _check_element(q, y, "y")
    z = None
    seen = set()
    for row in range(1, q.order + 1):
        v = q.table[row - 1][y - 1]
        if v in seen:
            raise NotAQuandleError(
                f"column {y} is not a bijection; run check_axioms for right-invertibility witnesses")
        seen.add(v)
        if v == x:
            z = row
    assert z is not None  # column is a bijection, so every value is hit
    return z


def right_translation(q: Quandle, y: int) -> Permutation:
    """The permutation x -> x > y (column y read as a map on rows)."""
    _check_element(q, y, "y")
    images = tuple(q.table[x - 1][y - 1] for x in range(1, q.order + 1))
    try:
        return Permutation(images)
    except ValueError:
        seen: dict[int, int] = {}
        for x, v in enumerate(images, start=1):
            if v in seen:
                raise NotAQuandleError(
                    f"column {y} is not a bijection: rows {seen[v]} and {x} both map to {v}") from None
            seen[v] = x
        raise


@lru_cache(maxsize=None)
def translations(q: Quandle) -> tuple[Permutation, ...]:
    """All right translations R_1..R_n; raises NotAQuandleError on a non-bijective column."""
    return tuple(right_translation(q, y) for y in range(1, q.order + 1))


def trivial(n: int) -> Quandle:
    """x > y = x for all x, y."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return Quandle(n, tuple((x,) * n for x in range(1, n + 1)), name=f"trivial({n})")


def dihedral(n: int) -> Quandle:
    """x > y = 2y - x on Z_n, shifted to {1..n}."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    rows = tuple(
        tuple((2 * (y - 1) - (x - 1)) % n + 1 for y in range(1, n + 1))
        for x in range(1, n + 1))
    return Quandle(n, rows, name=f"dihedral({n})")


@dataclass(frozen=True, repr=False)
class GroupTable:
    """A finite group as a 1-based Cayley table; the group laws are checked at construction."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __repr__(self) -> str:
        label = f", name={self.name!r}" if self.name else ""
        return f"GroupTable(order={self.order}{label})"

    @staticmethod
    def from_table(rows, name=None) -> "GroupTable":
        table = tuple(tuple(row) for row in rows)
        n = len(table)
        if n < 1:
            raise ValueError("group table must be non-empty")
        for i, row in enumerate(table, start=1):
            if len(row) != n:
                raise ValueError(f"shape mismatch: row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row, start=1):
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ValueError(f"entry {v!r} at row {i}, column {j} out of range 1..{n}")
        identity = None
        for e in range(1, n + 1):
            if all(table[e - 1][x - 1] == x and table[x - 1][e - 1] == x for x in range(1, n + 1)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        inverses = []
        for x in range(1, n + 1):
            inv = next((y for y in range(1, n + 1)
                        if table[x - 1][y - 1] == identity and table[y - 1][x - 1] == identity), None)
            if inv is None:
                raise ValueError(f"element {x} has no inverse")
            inverses.append(inv)
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab - 1][c] != table[a][table[b][c] - 1]:
                        raise ValueError(f"not associative at ({a + 1},{b + 1},{c + 1})")
        return GroupTable(n, table, identity, tuple(inverses), name=name)

    def mul(self, x: int, y: int) -> int:
        return self.table[x - 1][y - 1]

    def inv(self, x: int) -> int:
        return self.inverses[x - 1]


def conjugation(g: GroupTable) -> Quandle:
    """The conjugation quandle of a group: x > y = y^-1 x y."""
    n = g.order
    rows = tuple(
        tuple(g.mul(g.mul(g.inv(y), x), y) for y in range(1, n + 1))
        for x in range(1, n + 1))
    return Quandle(n, rows, name=f"conj({g.name})" if g.name else None)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    rows = tuple(tuple((x + y - 2) % n + 1 for y in range(1, n + 1)) for x in range(1, n + 1))
    return GroupTable.from_table(rows, name=f"Z{n}")


def symmetric_group(m: int) -> GroupTable:
    """S_m on m letters; elements ordered lexicographically by image tuple. Desk scale only."""
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    elems = sorted(_permutations(range(1, m + 1)))
    index = {p: i + 1 for i, p in enumerate(elems)}
    rows = tuple(
        tuple(index[tuple(p[q[i] - 1] for i in range(m))] for q in elems)
        for p in elems)
    return GroupTable.from_table(rows, name=f"S{m}")


def dihedral_group(m: int) -> GroupTable:
    """D_m of order 2m: pairs (rotation a, flip b) with index b*m + a + 1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def idx(a, b):
        return b * m + a + 1

    rows = []
    for k in range(1, 2 * m + 1):
        a1, b1 = (k - 1) % m, (k - 1) // m
        row = []
        for j in range(1, 2 * m + 1):
            a2, b2 = (j - 1) % m, (j - 1) // m
            row.append(idx((a1 + (a2 if b1 == 0 else -a2)) % m, b1 ^ b2))
        rows.append(tuple(row))
    return GroupTable.from_table(tuple(rows), name=f"D{m}")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """Componentwise product group; pair (a, b) has index (a-1)*|h| + b."""
    n, m = g.order, h.order

    def idx(a, b):
        return (a - 1) * m + b

    rows = []
    for a1 in range(1, n + 1):
        for b1 in range(1, m + 1):
            row = []
            for a2 in range(1, n + 1):
                for b2 in range(1, m + 1):
                    row.append(idx(g.mul(a1, a2), h.mul(b1, b2)))
            rows.append(tuple(row))
    name = f"{g.name}x{h.name}" if g.name and h.name else None
    return GroupTable.from_table(tuple(rows), name=name)


@dataclass(frozen=True)
class AbelianGroupSpec:
    """Direct product of cyclic groups Z_f1 x ... x Z_fk, elements coded as
    mixed-radix tuples (last factor fastest) and addressed by indices {1..n}."""

    cyclic_factors: tuple[int, ...]

    def __post_init__(self):
        for f in self.cyclic_factors:
            if not isinstance(f, int) or f < 2:
                raise ValueError(f"cyclic factors must be ints >= 2, got {f!r}")

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_factors)

    @property
    def zero(self) -> int:
        return 1

    def describe(self) -> str:
        if not self.cyclic_factors:
            return "Z1"
        return " x ".join(f"Z{f}" for f in self.cyclic_factors)

    def tuple_of(self, index: int) -> tuple[int, ...]:
        k = index - 1
        digits = []
        for f in reversed(self.cyclic_factors):
            digits.append(k % f)
            k //= f
        return tuple(reversed(digits))

    def index_of(self, digits) -> int:
        k = 0
        for f, v in zip(self.cyclic_factors, digits):
            k = k * f + (v % f)
        return k + 1

    def add(self, i: int, j: int) -> int:
        a, b = self.tuple_of(i), self.tuple_of(j)
        return self.index_of(tuple(x + y for x, y in zip(a, b)))

    def negate(self, i: int) -> int:
        return self.index_of(tuple(-x for x in self.tuple_of(i)))

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.negate(j))

    def scale(self, k: int, i: int) -> int:
        return self.index_of(tuple(k * x for x in self.tuple_of(i)))

    def generator_indices(self) -> tuple[int, ...]:
        """Indices of the canonical generators e_1..e_k (1 in one slot, 0 elsewhere)."""
        out = []
        for pos in range(len(self.cyclic_factors)):
            digits = [0] * len(self.cyclic_factors)
            digits[pos] = 1
            out.append(self.index_of(tuple(digits)))
        return tuple(out)


def validate_automorphism(group: AbelianGroupSpec, t: Permutation) -> None:
    """Raise unless t is an additive bijection of the group (in index coding)."""
    n = group.order
    if t.degree != n:
        raise ValueError(f"map degree {t.degree} does not match group order {n}")
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if t(group.add(i, j)) != group.add(t(i), t(j)):
                raise ValueError(f"not additive at elements ({i},{j})")


def automorphism_from_images(group: AbelianGroupSpec, images) -> Permutation:
    """Extend images of the canonical generators to the full map and validate it.

    images[i] is the element index of t(e_i). Raises if some image has an
    incompatible order (the extension would not be additive) or the extended
    map is not bijective.
    """
    factors = group.cyclic_factors
    images = tuple(images)
    if len(images) != len(factors):
        raise ValueError(f"expected {len(factors)} generator images, got {len(images)}")
    for pos, (f, img) in enumerate(zip(factors, images), start=1):
        _check_index(group, img)
        if group.scale(f, img) != group.zero:
            raise ValueError(
                f"image of generator {pos} has order not dividing {f}: not additive")
    n = group.order
    full = []
    for i in range(1, n + 1):
        acc = group.zero
        for d, img in zip(group.tuple_of(i), images):
            acc = group.add(acc, group.scale(d, img))
        full.append(acc)
    if sorted(full) != list(range(1, n + 1)):
        raise ValueError("generator images do not extend to a bijection")
    return Permutation(tuple(full))


def _check_index(group: AbelianGroupSpec, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= group.order:
        raise ValueError(f"element index {i!r} out of range 1..{group.order}")


def scalar_automorphism(group: AbelianGroupSpec, r: int) -> Permutation:
    """x -> r*x; raises when r is not a unit for the group."""
    n = group.order
    images = tuple(group.scale(r, i) for i in range(1, n + 1))
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"{r} is not a unit for {group.describe()}")
    return Permutation(images)


def identity_automorphism(group: AbelianGroupSpec) -> Permutation:
    return Permutation.identity(group.order)


def negation_automorphism(group: AbelianGroupSpec) -> Permutation:
    return scalar_automorphism(group, -1)


def affine(group: AbelianGroupSpec, t: Permutation) -> Quandle:
    """The affine quandle x > y = t(x) + (1-t)(y) over an abelian group.

    t is an automorphism given as a permutation of element indices; additivity
    is verified here, bijectivity is inherent in the type.
    """
    validate_automorphism(group, t)
    n = group.order
    shear = tuple(group.sub(y, t(y)) for y in range(1, n + 1))  # (1-t)(y)
    rows = tuple(
        tuple(group.add(t(x), shear[y - 1]) for y in range(1, n + 1))
        for x in range(1, n + 1))
    return Quandle(n, rows, name=f"affine({group.describe()})")
