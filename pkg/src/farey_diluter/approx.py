"""Map a requested concentration to the nearest element of a lattice.

Two routes return the same answer: a linear-scan oracle and the fast
bracket-and-interpolate search.  Both break exact midpoint ties toward the
lower element, which uses less sample.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from .fsd import BS, FSD, FsdSequence, bs_sequence, check_accuracy, fsd_sequence

__all__ = [
    "TargetCF",
    "Approximation",
    "LatticeComparison",
    "parse_target",
    "find_closest_oracle",
    "find_closest_fast",
    "search_range",
    "compare_lattices",
]

log = logging.getLogger(__name__)

_NUMBER = r"[0-9]+(?:\.[0-9]*)?|\.[0-9]+"
_PERCENT_RE = re.compile(rf"^({_NUMBER})\s*%$")
_DECIMAL_RE = re.compile(rf"^({_NUMBER})$")
_RATIO_RE = re.compile(rf"^({_NUMBER})\s*/\s*({_NUMBER})$")


@dataclass(frozen=True)
class TargetCF:
    value: Fraction
    original_text: str

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError(f"target {self.original_text!r} = {self.value} is outside [0, 1]")

    @classmethod
    def of(cls, value) -> "TargetCF":
        if isinstance(value, TargetCF):
            return value
        if isinstance(value, str):
            return parse_target(value)
        return cls(Fraction(value), str(value))


@dataclass(frozen=True)
class Approximation:
    target: TargetCF
    chosen: Fraction
    error: Fraction
    lattice_kind: str
    n: int
    fallback: bool = False

    @property
    def abs_error(self) -> Fraction:
        return abs(self.error)


def parse_target(text: str) -> TargetCF:
    """Parse ``"69.3%"``, ``"0.693"``, ``"9/13"`` or ``"44.375/64"`` exactly."""
    raw = text
    s = text.strip()
    if m := _PERCENT_RE.match(s):
        value = Fraction(m.group(1)) / 100
    elif m := _DECIMAL_RE.match(s):
        value = Fraction(m.group(1))
    elif m := _RATIO_RE.match(s):
        num, den = Fraction(m.group(1)), Fraction(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in target {raw!r}")
        value = num / den
    else:
        raise ValueError(f"cannot parse target concentration {raw!r}")
    return TargetCF(value, raw)


def _closer(t: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    # lo <= t <= hi; exact ties go to lo
    return lo if t - lo <= hi - t else hi


def find_closest_oracle(target, seq: FsdSequence) -> Approximation:
    """Linear scan over ``seq`` in integer arithmetic."""
    t = TargetCF.of(target)
    if not len(seq):
        raise ValueError("empty lattice")
    a, b = t.value.numerator, t.value.denominator
    nums, dens = seq.pairs
    best = 0
    # |p/q - a/b| = |p*b - a*q| / (q*b); compare d_i/q_i across elements
    best_d, best_q = abs(nums[0] * b - a * dens[0]), dens[0]
    for i in range(1, len(nums)):
        q = dens[i]
        d = abs(nums[i] * b - a * q)
        if d * best_q < best_d * q:
            best, best_d, best_q = i, d, q
    chosen = seq.elems[best]
    return Approximation(t, chosen, chosen - t.value, seq.kind, seq.n)


def search_range(t: Fraction, seq: FsdSequence) -> tuple[int, int]:
    """Bracket ``t`` between the two neighbouring multiples of ``1/2**n``.

    Returns element positions ``(lo, hi)`` with ``seq[lo] <= t <= seq[hi]``.
    Falls back to bisection when a bracket value is not in the lattice.
    """
    base = 1 << seq.n
    scaled = t * base
    floor_k = scaled.numerator // scaled.denominator
    ceil_k = -(-scaled.numerator // scaled.denominator)
    lo = seq.index_of(Fraction(floor_k, base))
    hi = seq.index_of(Fraction(ceil_k, base))
    if lo is None or hi is None:
        i = seq.bisect(t)
        if i < len(seq) and seq[i] == t:
            return i, i
        return max(i - 1, 0), min(i, len(seq) - 1)
    return lo, hi


def find_closest_fast(target, seq: FsdSequence) -> Approximation:
    """Nearest lattice element by bracketing and false-position interpolation.

    The bracket comes from :func:`search_range`.  Each round interpolates the
    zero crossing of ``seq[i] - t`` over the index, probes that element and
    its neighbour, and either finishes or shrinks the bracket.  The search is
    capped at ``len(seq)`` rounds; hitting the cap falls back to the linear
    scan and sets ``fallback`` on the result.
    """
    t = TargetCF.of(target)
    if not len(seq):
        raise ValueError("empty lattice")
    v = t.value
    elems = seq.elems
    if v <= elems[0]:
        return Approximation(t, elems[0], elems[0] - v, seq.kind, seq.n)
    if v >= elems[-1]:
        return Approximation(t, elems[-1], elems[-1] - v, seq.kind, seq.n)

    lo, hi = search_range(v, seq)
    for _ in range(len(seq)):
        y1, y2 = elems[lo] - v, elems[hi] - v
        if y1 == 0 or lo == hi:
            chosen = elems[lo]
            break
        if y2 == 0:
            chosen = elems[hi]
            break
        if hi - lo == 1:
            chosen = _closer(v, elems[lo], elems[hi])
            break
        x = (lo * y2 - hi * y1) / (y2 - y1)
        k = min(max(x.numerator // x.denominator, lo + 1), hi - 1)
        width = hi - lo
        if elems[k] <= v:
            if v <= elems[k + 1]:
                chosen = _closer(v, elems[k], elems[k + 1])
                break
            lo = k + 1
        else:
            if elems[k - 1] <= v:
                chosen = _closer(v, elems[k - 1], elems[k])
                break
            hi = k - 1
        assert hi - lo < width, "bracket failed to shrink"
    else:
        log.warning("fast search hit its iteration cap for %s; using linear scan", v)
        res = find_closest_oracle(t, seq)
        return Approximation(t, res.chosen, res.error, seq.kind, seq.n, fallback=True)
    return Approximation(t, chosen, chosen - v, seq.kind, seq.n)


@dataclass(frozen=True)
class LatticeComparison:
    bs: Approximation
    fsd: Approximation

    @property
    def dominates(self) -> bool:
        """True when the FSD error is no larger than the BS error."""
        return self.fsd.abs_error <= self.bs.abs_error


def compare_lattices(target, n: int) -> LatticeComparison:
    n = check_accuracy(n)
    t = TargetCF.of(target)
    res = LatticeComparison(find_closest_fast(t, bs_sequence(n)),
                            find_closest_fast(t, fsd_sequence(n)))
    assert res.bs.lattice_kind == BS and res.fsd.lattice_kind == FSD
    assert res.dominates, f"FSD error exceeds BS error for {t.value}"
    return res
