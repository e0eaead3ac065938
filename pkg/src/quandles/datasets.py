"""Built-in reference tables, addressable from the CLI by key.

paper:table1 is an order-4 involutory quandle; paper:q1 and paper:q2 are the
order-12 products of paper:baseB with the trivial and swap01 phase rules under
the xa convention; paper:baseB is the common order-4 base block recovered by
decomposition.
"""

from __future__ import annotations

from .core import Quandle

TABLE1 = Quandle(4, (
    (1, 1, 2, 2),
    (2, 2, 1, 1),
    (4, 4, 3, 3),
    (3, 3, 4, 4),
), name="paper:table1")

BASE_B = Quandle(4, (
    (1, 1, 1, 1),
    (2, 2, 4, 3),
    (3, 4, 3, 2),
    (4, 3, 2, 4),
), name="paper:baseB")

Q1 = Quandle(12, (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2),
    (3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    (4, 4, 4, 4, 4, 4, 10, 10, 10, 7, 7, 7),
    (5, 5, 5, 5, 5, 5, 11, 11, 11, 8, 8, 8),
    (6, 6, 6, 6, 6, 6, 12, 12, 12, 9, 9, 9),
    (7, 7, 7, 10, 10, 10, 7, 7, 7, 4, 4, 4),
    (8, 8, 8, 11, 11, 11, 8, 8, 8, 5, 5, 5),
    (9, 9, 9, 12, 12, 12, 9, 9, 9, 6, 6, 6),
    (10, 10, 10, 7, 7, 7, 4, 4, 4, 10, 10, 10),
    (11, 11, 11, 8, 8, 8, 5, 5, 5, 11, 11, 11),
    (12, 12, 12, 9, 9, 9, 6, 6, 6, 12, 12, 12),
), name="paper:q1")

# Row 6, columns 10-12 hold 9,9,9: the only values under which the table has
# bijective columns, factors over paper:baseB, and matches its own translation
# listing (the widely circulated print shows 12,12,12 there, which breaks all
# three).
Q2 = Quandle(12, (
    (1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2),
    (2, 2, 1, 2, 2, 1, 2, 2, 1, 2, 2, 1),
    (3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    (4, 4, 5, 4, 4, 5, 10, 10, 11, 7, 7, 8),
    (5, 5, 4, 5, 5, 4, 11, 11, 10, 8, 8, 7),
    (6, 6, 6, 6, 6, 6, 12, 12, 12, 9, 9, 9),
    (7, 7, 8, 10, 10, 11, 7, 7, 8, 4, 4, 5),
    (8, 8, 7, 11, 11, 10, 8, 8, 7, 5, 5, 4),
    (9, 9, 9, 12, 12, 12, 9, 9, 9, 6, 6, 6),
    (10, 10, 11, 7, 7, 8, 4, 4, 5, 10, 10, 11),
    (11, 11, 10, 8, 8, 7, 5, 5, 4, 11, 11, 10),
    (12, 12, 12, 9, 9, 9, 6, 6, 6, 12, 12, 12),
), name="paper:q2")

BUILTIN_QUANDLES = {
    "paper:table1": TABLE1,
    "paper:q1": Q1,
    "paper:q2": Q2,
    "paper:baseB": BASE_B,
}


def builtin(key: str) -> Quandle:
    try:
        return BUILTIN_QUANDLES[key]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_QUANDLES))
        raise ValueError(f"unknown builtin {key!r}; known keys: {known}") from None
