"""Exact fractions and classical Farey sequences.

Concentrations are carried around as :class:`fractions.Fraction`, which is
already immutable, always reduced and backed by arbitrary-precision ints.
This module adds the validation the rest of the package relies on
(non-negative values only) and the Farey machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "FareySeq",
    "make_fraction",
    "farey_sequence",
    "farey_sequence_enumerated",
    "farey_pairs",
    "farey_pairs_enumerated",
    "farey_neighbors_check",
    "farey_length",
    "totient",
]


def make_fraction(num: int, den: int) -> Fraction:
    """Return ``num/den`` reduced.  Negative values are rejected."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    f = Fraction(num, den)
    if f < 0:
        raise ValueError(f"negative value {num}/{den} is not a concentration")
    return f


@dataclass(frozen=True)
class FareySeq:
    order: int
    elems: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]


def _check_order(m: int) -> None:
    if int(m) != m or m < 1:
        raise ValueError(f"Farey order must be a positive integer, got {m!r}")


def farey_pairs(m: int):
    """(numerator, denominator) pairs of F_m from the next-term recurrence."""
    _check_order(m)
    return list(_farey_pairs(m))


def farey_pairs_enumerated(m: int) -> list[tuple[int, int]]:
    """(numerator, denominator) pairs of F_m by enumerating and sorting."""
    _check_order(m)
    pairs = [(p, q) for q in range(1, m + 1) for p in range(q + 1) if gcd(p, q) == 1]
    # distinct members of F_m differ by at least 1/m**2, so p*m*m // q is an
    # exact integer sort key
    mm = m * m
    pairs.sort(key=lambda pq: pq[0] * mm // pq[1])
    return pairs


def _farey_pairs(m: int):
    # next-term recurrence: given a/b < c/d adjacent in F_m, the next term is
    # (k*c - a)/(k*d - b) with k = (m + b) // d
    a, b, c, d = 0, 1, 1, m
    yield a, b
    while c <= m:
        yield c, d
        if c == d:
            break
        k = (m + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b


def farey_sequence(m: int) -> FareySeq:
    """Farey sequence of order *m* built with the next-term recurrence."""
    _check_order(m)
    elems = tuple(Fraction(p, q) for p, q in _farey_pairs(m))
    return FareySeq(m, elems)


def farey_sequence_enumerated(m: int) -> FareySeq:
    """Farey sequence of order *m* by brute enumeration and sorting.

    Kept as an independent route to cross-check :func:`farey_sequence`.
    """
    return FareySeq(m, tuple(Fraction(p, q) for p, q in farey_pairs_enumerated(m)))


def farey_neighbors_check(seq: Iterable[Fraction] | FareySeq) -> bool:
    """True iff every consecutive pair p/q, r/s satisfies q*r - p*s == 1."""
    elems: Sequence[Fraction] = tuple(seq)
    return all(x.denominator * y.numerator - x.numerator * y.denominator == 1
               for x, y in zip(elems, elems[1:]))


def totient(k: int) -> int:
    """Euler's phi by trial division; fine for the orders used here."""
    result, n, p = k, k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def farey_length(m: int) -> int:
    """|F_m| = 1 + sum of phi(k) for k = 1..m."""
    _check_order(m)
    return 1 + sum(totient(k) for k in range(1, m + 1))
