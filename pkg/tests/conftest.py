from itertools import permutations

import pytest

import quandles as Q


@pytest.fixture(scope="session")
def battery():
    """Axiom-checked tables exercised across the suite."""
    return {
        "trivial1": Q.trivial(1),
        "trivial2": Q.trivial(2),
        "trivial3": Q.trivial(3),
        "dihedral3": Q.dihedral(3),
        "dihedral4": Q.dihedral(4),
        "dihedral5": Q.dihedral(5),
        "table1": Q.TABLE1,
        "baseB": Q.BASE_B,
        "q1": Q.Q1,
        "q2": Q.Q2,
        "conj_s3": Q.conjugation(Q.symmetric_group(3)),
    }


@pytest.fixture(scope="session")
def group_battery():
    """Groups of order <= 8 feeding the conjugation constructor."""
    z2 = Q.cyclic_group(2)
    groups = [Q.cyclic_group(n) for n in range(1, 9)]
    groups += [
        Q.direct_product(z2, z2),
        Q.direct_product(z2, Q.direct_product(z2, z2)),
        Q.direct_product(z2, Q.cyclic_group(4)),
        Q.symmetric_group(3),
        Q.dihedral_group(4),
        QUATERNION,
    ]
    return groups


# Q8 as units {1, -1, i, -i, j, -j, k, -k} in that order.
_Q8_NAMES = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
_Q8_MULT = {
    ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
    ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
    ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
}


def _q8_mul(a, b):
    sign = 1
    if a.startswith("-"):
        sign, a = -sign, a[1:]
    if b.startswith("-"):
        sign, b = -sign, b[1:]
    if a == "1":
        out = b
    elif b == "1":
        out = a
    elif a == b:
        out = "-1"
    else:
        out = _Q8_MULT[(a, b)]
    if out.startswith("-"):
        sign, out = -sign, out[1:]
    return out if sign == 1 else "-" + out


QUATERNION = Q.GroupTable.from_table(
    [[_Q8_NAMES.index(_q8_mul(a, b)) + 1 for b in _Q8_NAMES] for a in _Q8_NAMES],
    name="Q8")


def relabel(q, sigma):
    """Conjugate the table by a permutation: entry'(x,y) = s(entry(s^-1 x, s^-1 y))."""
    inv = sigma.inverse()
    n = q.order
    rows = tuple(
        tuple(sigma(q.entry(inv(x), inv(y))) for y in range(1, n + 1))
        for x in range(1, n + 1))
    return Q.Quandle(n, rows)


def brute_isomorphic(q1, q2):
    """All-bijections oracle, independent of the backtracking search."""
    if q1.order != q2.order:
        return False
    n = q1.order
    for perm in permutations(range(1, n + 1)):
        if all(perm[q1.entry(x, y) - 1] == q2.entry(perm[x - 1], perm[y - 1])
               for x in range(1, n + 1) for y in range(1, n + 1)):
            return True
    return False
