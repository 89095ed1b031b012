"""Concentration lattices for an inlet ladder of accuracy ``n``.

Three lattices are built here:

* ``BS``  -- the binarized sequence ``k / 2**n``;
* ``RF``  -- the reduced Farey sequence, every ratio ``a/(a+b)`` the ladder can
  dispense with ``0 <= a, b <= 2**n - 1``;
* ``FSD`` -- ``BS`` plus, inside every half of every ``BS`` gap, the ``RF``
  element with the smallest numerator (least sample).
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from .rational import _farey_pairs

__all__ = [
    "BS",
    "RF",
    "FSD",
    "DEFAULT_MAX_N",
    "HARD_MAX_N",
    "FsdSequence",
    "TheoremCheck",
    "TheoremReport",
    "check_accuracy",
    "bs_sequence",
    "reduced_farey",
    "reduced_farey_enumerated",
    "fsd_sequence",
    "fsd_insertions",
    "min_numerator_in",
    "verify_theorems",
    "make_sequence",
]

BS = "BS"
RF = "RF"
FSD = "FSD"
KINDS = (BS, RF, FSD)

DEFAULT_MAX_N = 12
HARD_MAX_N = 16


def check_accuracy(n: int, ceiling: int = DEFAULT_MAX_N) -> int:
    """Validate an accuracy level and return it as an int."""
    if ceiling > HARD_MAX_N:
        raise ValueError(f"ceiling {ceiling} exceeds the supported maximum {HARD_MAX_N}")
    if isinstance(n, bool) or int(n) != n:
        raise ValueError(f"accuracy level must be an integer, got {n!r}")
    n = int(n)
    if not 1 <= n <= ceiling:
        raise ValueError(f"accuracy level must be in 1..{ceiling}, got {n}")
    return n


@dataclass(frozen=True)
class FsdSequence:
    """An ordered concentration lattice.

    ``elems`` is strictly increasing and runs from 0 (buffer) to 1 (sample).
    """

    kind: str
    n: int
    elems: tuple[Fraction, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.positions

    @cached_property
    def positions(self) -> dict[Fraction, int]:
        return {x: i for i, x in enumerate(self.elems)}

    @cached_property
    def pairs(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Numerators and denominators as plain int tuples, for fast scans."""
        return (tuple(x.numerator for x in self.elems),
                tuple(x.denominator for x in self.elems))

    def index_of(self, x: Fraction) -> int | None:
        return self.positions.get(Fraction(x))

    def bisect(self, x: Fraction) -> int:
        """Index of the first element ``>= x``."""
        return bisect.bisect_left(self.elems, x)

    @property
    def max_gap(self) -> Fraction:
        if len(self.elems) < 2:
            return Fraction(0)
        return max(b - a for a, b in zip(self.elems, self.elems[1:]))

    def is_strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.elems, self.elems[1:]))


def make_sequence(kind: str, n: int) -> FsdSequence:
    """Build the lattice of the given kind (``"BS"``, ``"RF"`` or ``"FSD"``)."""
    kind = kind.upper()
    if kind == BS:
        return bs_sequence(n)
    if kind == RF:
        return reduced_farey(n)
    if kind == FSD:
        return fsd_sequence(n)
    raise ValueError(f"unknown lattice kind {kind!r}; expected one of {KINDS}")


@lru_cache(maxsize=None)
def bs_sequence(n: int) -> FsdSequence:
    n = check_accuracy(n, HARD_MAX_N)
    base = 1 << n
    return FsdSequence(BS, n, tuple(Fraction(k, base) for k in range(base + 1)))


def _farey_order(n: int) -> int:
    # 2**(n+1) - 3 is 1 for n == 1, which loses 1/2 = 1/(1+1); the order has to
    # be at least 2 for the Farey route to agree with the a/(a+b) route.
    return max((1 << (n + 1)) - 3, 2)


def _rf_pairs_via_farey(n: int) -> list[tuple[int, int]]:
    limit = 1 << n
    out = [(0, 1)]
    for p, q in _farey_pairs(_farey_order(n)):
        if 0 < p < limit and 0 < q - p < limit:
            out.append((p, q))
    out.append((1, 1))
    return out


@lru_cache(maxsize=None)
def reduced_farey(n: int, verify: bool = True) -> FsdSequence:
    """Reduced Farey sequence ``RF_{2^n}``.

    Filtered out of the Farey sequence of order ``2**(n+1) - 3``: interior
    fractions need numerator and buffer part (denominator - numerator) both
    below ``2**n``.  The end points stand for pure buffer and pure sample.

    With ``verify`` the result is checked, as a set, against the direct
    enumeration of ``a/(a+b)``; an :class:`AssertionError` means the two
    routes disagree.
    """
    n = check_accuracy(n, HARD_MAX_N)
    elems = tuple(Fraction(p, q) for p, q in _rf_pairs_via_farey(n))
    if verify:
        other = reduced_farey_enumerated(n)
        assert set(elems) == set(other.elems), f"RF routes disagree for n={n}"
    return FsdSequence(RF, n, elems)


@lru_cache(maxsize=None)
def reduced_farey_enumerated(n: int) -> FsdSequence:
    """``{a/(a+b) : 0 <= a, b <= 2**n - 1, a + b > 0}``, sorted."""
    n = check_accuracy(n, HARD_MAX_N)
    top = 1 << n
    vals = {Fraction(a, a + b) for a in range(top) for b in range(top) if a + b}
    return FsdSequence(RF, n, tuple(sorted(vals)))


def min_numerator_in(lo: Fraction, hi: Fraction, n: int) -> Fraction | None:
    """Smallest-numerator RF element strictly inside ``(lo, hi)``.

    Ties on the numerator go to the smallest denominator.  Returns ``None``
    when the open interval holds no dispensable ratio.  ``hi`` must be <= 1.
    """
    limit = (1 << n) - 1
    lo_p, lo_q = lo.numerator, lo.denominator
    hi_p, hi_q = hi.numerator, hi.denominator
    if hi_p == 0:
        return None
    for phi in range(1, limit + 1):
        # smallest psi with phi/psi < hi; larger psi only moves toward lo
        psi = phi * hi_q // hi_p + 1
        if psi - phi > limit:
            continue
        if phi * lo_q > psi * lo_p:
            # min numerator => already in lowest terms
            return Fraction(phi, psi)
    return None


def fsd_insertions(n: int) -> list[tuple[Fraction, Fraction, Fraction | None]]:
    """Every half-interval of every BS gap with its chosen insertion.

    Returns ``(lo, hi, pick)`` triples in ascending order; ``pick`` is ``None``
    for half-intervals without an RF candidate.
    """
    n = check_accuracy(n, HARD_MAX_N)
    base = 1 << n
    out = []
    for y in range(base):
        left, mid, right = Fraction(y, base), Fraction(2 * y + 1, 2 * base), Fraction(y + 1, base)
        out.append((left, mid, min_numerator_in(left, mid, n)))
        out.append((mid, right, min_numerator_in(mid, right, n)))
    return out


@lru_cache(maxsize=None)
def fsd_sequence(n: int) -> FsdSequence:
    n = check_accuracy(n, HARD_MAX_N)
    picks = {x for _, _, x in fsd_insertions(n) if x is not None}
    elems = sorted(set(bs_sequence(n).elems) | picks)
    return FsdSequence(FSD, n, tuple(elems))


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    n: int
    size: int
    checks: tuple[TheoremCheck, ...]
    max_gap: Fraction
    closed_form_size: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> TheoremCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in self.checks]
        out.append(f"max adjacent gap: {self.max_gap} ({float(self.max_gap):.6g})")
        out.append(f"size {self.size}; closed form 3(2^n - 1) = {self.closed_form_size}")
        return out


def _interior(elems: Iterable[Fraction]) -> list[Fraction]:
    return [x for x in elems if 0 < x < 1]


def verify_theorems(seq: FsdSequence) -> TheoremReport:
    """Check numerator bounds, cardinality and BS inclusion on ``seq``.

    * ``T1``: every interior element p/q has ``0 < p < 2**n`` and
      ``0 < q - p < 2**n``;
    * ``T2``: ``len(seq) > len(BS_n)``;
    * ``T3``: ``seq`` contains every element of ``BS_n``.

    ``T3-proper`` additionally records whether the inclusion is strict.
    """
    if seq.kind != FSD:
        raise ValueError(f"verify_theorems expects an FSD sequence, got {seq.kind}")
    n = seq.n
    limit = 1 << n
    bad = [x for x in _interior(seq.elems)
           if not (0 < x.numerator < limit and 0 < x.denominator - x.numerator < limit)]
    t1 = TheoremCheck("T1", not bad,
                      "all interior elements within bounds" if not bad
                      else f"{len(bad)} out of bounds, first {bad[0]}")

    bs = bs_sequence(n)
    t2 = TheoremCheck("T2", len(seq) > len(bs), f"|FSD|={len(seq)} vs |BS|={len(bs)}")

    have = set(seq.elems)
    missing = [x for x in bs.elems if x not in have]
    t3 = TheoremCheck("T3", not missing,
                      "BS contained" if not missing else f"missing {', '.join(map(str, missing))}")
    proper = not missing and len(have) > len(bs)
    t3p = TheoremCheck("T3-proper", proper,
                       "strict superset" if proper else "not a strict superset")
    return TheoremReport(n, len(seq), (t1, t2, t3, t3p), seq.max_gap, 3 * (limit - 1))
