"""Predicates on finite quandles: involutory, medial, left-distributive,
connectivity, cyclic type, affine recognition, and centralizers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian

from .core import (
    AbelianGroupSpec,
    BudgetExceededError,
    NotAQuandleError,
    Permutation,
    Quandle,
    affine,
    automorphism_from_images,
    check_axioms,
    translations,
    validate_automorphism,
)
from .inner import orbits


@lru_cache(maxsize=None)
def _satisfies_axioms(q: Quandle) -> bool:
    return check_axioms(q, witness_cap=1).overall


def ensure_quandle(q: Quandle) -> None:
    """Reject tables that fail the axioms; the predicates below assume them."""
    if not _satisfies_axioms(q):
        report = check_axioms(q, witness_cap=1)
        label = f"{q.name} " if q.name else ""
        raise NotAQuandleError(f"table {label}fails axioms: {report.summary()}")


def is_involutory(q: Quandle) -> bool:
    """True when every right translation has order at most 2."""
    ensure_quandle(q)
    return all(p.order() <= 2 for p in translations(q))


def is_abelian(q: Quandle) -> bool:
    """The medial identity (w>x)>(y>z) = (w>y)>(x>z) over all 4-tuples."""
    ensure_quandle(q)
    t = q.table
    r = range(q.order)
    for w in r:
        rw = t[w]
        for x in r:
            a_row = t[rw[x] - 1]
            rx = t[x]
            for y in r:
                c_row = t[rw[y] - 1]
                ry = t[y]
                for z in r:
                    if a_row[ry[z] - 1] != c_row[rx[z] - 1]:
                        return False
    return True


def is_left_distributive(q: Quandle) -> bool:
    """x>(y>z) = (x>y)>(x>z) over all triples."""
    ensure_quandle(q)
    t = q.table
    r = range(q.order)
    for x in r:
        rx = t[x]
        for y in r:
            ry = t[y]
            xy_row = t[rx[y] - 1]
            for z in r:
                if rx[ry[z] - 1] != xy_row[rx[z] - 1]:
                    return False
    return True


def is_connected(q: Quandle) -> bool:
    """True when the right translations generate a transitive group (one orbit)."""
    ensure_quandle(q)
    return len(orbits(q)) == 1


def is_cyclic_type(q: Quandle) -> bool:
    """True when each translation acts on the other n-1 elements as one (n-1)-cycle."""
    ensure_quandle(q)
    n = q.order
    if n < 2:
        raise ValueError(f"cyclic type needs order >= 2, got {n}")
    for p in translations(q):
        cycs = p.cycles()
        if len(cycs) != 1 or len(cycs[0]) != n - 1:
            return False
    return True


def conjugate_identities(q: Quandle) -> bool:
    """The dual-operation inverse laws (x>y) >^-1 y = x = (x >^-1 y) > y, all pairs."""
    ensure_quandle(q)
    t = q.table
    n = q.order
    for y in range(1, n + 1):
        inv = translations(q)[y - 1].inverse()
        for x in range(1, n + 1):
            if inv(t[x - 1][y - 1]) != x or t[inv(x) - 1][y - 1] != x:
                return False
    return True


def centralizer(q: Quandle, a: int) -> tuple[int, ...]:
    """All x with x>a = a>x, ascending."""
    if not 1 <= a <= q.order:
        raise ValueError(f"a={a!r} out of range 1..{q.order}")
    t = q.table
    return tuple(x for x in range(1, q.order + 1) if t[x - 1][a - 1] == t[a - 1][x - 1])


def abelian_group_specs(n: int) -> tuple[AbelianGroupSpec, ...]:
    """All abelian groups of order n, one per isomorphism class, as invariant
    factor chains d1 | d2 | ... | dk (sorted by chain length, then lex)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")

    def chains(m, bound=None):
        if m == 1:
            return [()]
        out = []
        for d in range(2, m + 1):
            if m % d:
                continue
            if bound is not None and bound % d:
                continue
            for rest in chains(m // d, d):
                out.append(rest + (d,))
        return out

    specs = sorted(set(chains(n)), key=lambda c: (len(c), c))
    return tuple(AbelianGroupSpec(c) for c in specs)


def enumerate_automorphisms(group: AbelianGroupSpec):
    """Yield (permutation, generator_images) for every automorphism, in
    lexicographic order of the image tuple."""
    factors = group.cyclic_factors
    n = group.order
    if not factors:
        yield Permutation.identity(1), ()
        return
    candidates = [
        tuple(g for g in range(1, n + 1) if group.scale(f, g) == group.zero)
        for f in factors
    ]
    tuples = [group.tuple_of(i) for i in range(1, n + 1)]
    for images in _cartesian(*candidates):
        full = []
        for digits in tuples:
            acc = group.zero
            for d, img in zip(digits, images):
                acc = group.add(acc, group.scale(d, img))
            full.append(acc)
        if sorted(full) != list(range(1, n + 1)):
            continue
        yield Permutation(tuple(full)), images


@dataclass(frozen=True)
class AffineWitness:
    """An affine presentation of a quandle: group, automorphism (as generator
    images), and the isomorphism onto the affine table."""

    group: AbelianGroupSpec
    generator_images: tuple[int, ...]
    iso: Permutation

    def automorphism(self) -> Permutation:
        return automorphism_from_images(self.group, self.generator_images)

    def reproduces(self, q: Quandle) -> bool:
        """Replay x>y = t(x) + (1-t)(y) through the isomorphism against q's table."""
        g = self.group
        t = self.automorphism()
        iso = self.iso
        n = q.order
        if g.order != n:
            return False
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                gx, gy = iso(x), iso(y)
                if iso(q.table[x - 1][y - 1]) != g.add(t(gx), g.sub(gy, t(gy))):
                    return False
        return True


def alexander_recognize(q: Quandle, max_order: int = 15) -> AffineWitness | None:
    """Search for an affine presentation of q over some abelian group.

    Brute force over every abelian group of order n and every automorphism,
    with an isomorphism test per candidate; the first witness in (group chain,
    generator images) lexicographic order wins. Returns None when the search
    exhausts; raises BudgetExceededError when n exceeds max_order, which is
    distinct from a negative answer.
    """
    from .classify import are_isomorphic  # import here: classify uses these predicates

    ensure_quandle(q)
    if q.order > max_order:
        raise BudgetExceededError(
            f"affine recognition capped at order {max_order}, got {q.order}")
    for group in abelian_group_specs(q.order):
        for t, images in enumerate_automorphisms(group):
            result = are_isomorphic(q, affine(group, t))
            if result.isomorphic:
                return AffineWitness(group=group, generator_images=images,
                                     iso=result.mapping)
    return None


def lemma_sum_check(group: AbelianGroupSpec, t: Permutation) -> bool:
    """Verify a>b + b>a = a + b over the affine structure, for all pairs."""
    validate_automorphism(group, t)
    n = group.order
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            ab = group.add(t(a), group.sub(b, t(b)))
            ba = group.add(t(b), group.sub(a, t(a)))
            if group.add(ab, ba) != group.add(a, b):
                return False
    return True
