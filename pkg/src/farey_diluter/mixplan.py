"""Dilution plans: unit counts, split-free mix chain and inlet port states."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fsd import check_accuracy, fsd_sequence

__all__ = [
    "SAMPLE",
    "BUFFER",
    "NotRepresentableError",
    "MixStep",
    "MixTree",
    "DilutionPlan",
    "InletStates",
    "ThroughputOption",
    "unit_counts",
    "to_bits",
    "decode_bits",
    "build_tree",
    "make_plan",
    "inlet_states",
    "throughput_options",
    "replay_tree",
]

SAMPLE = "sample"
BUFFER = "buffer"
_FLUID_CF = {SAMPLE: Fraction(1), BUFFER: Fraction(0)}


class NotRepresentableError(ValueError):
    """The concentration cannot be dispensed at this accuracy level."""


@dataclass(frozen=True)
class MixStep:
    fluid: str
    volume: int
    position: int
    accum_sample: int
    accum_total: int


@dataclass(frozen=True)
class MixTree:
    """Linear mix chain: every step merges one new inflow into the accumulator.

    There is no split operation anywhere in the chain.
    """

    steps: tuple[MixStep, ...]

    @property
    def accum_sample(self) -> int:
        return self.steps[-1].accum_sample if self.steps else 0

    @property
    def accum_total(self) -> int:
        return self.steps[-1].accum_total if self.steps else 0

    def has_split(self) -> bool:
        # a split would show up as a step that removes volume
        prev = 0
        for s in self.steps:
            if s.volume <= 0 or s.accum_total <= prev:
                return True
            prev = s.accum_total
        return False


@dataclass(frozen=True)
class DilutionPlan:
    cf: Fraction
    sample_units: int
    buffer_units: int
    n: int
    sample_bits: tuple[int, ...]
    buffer_bits: tuple[int, ...]
    tree: MixTree

    @property
    def total_units(self) -> int:
        return self.sample_units + self.buffer_units


@dataclass(frozen=True)
class InletStates:
    """Port flags per inlet, left to right (narrowest inlet first).

    ``*_mix`` ports feed the mixing channel, ``*_reuse`` ports send the fluid
    back to its reservoir; the two are always complementary.
    """

    sample_mix: tuple[bool, ...]
    sample_reuse: tuple[bool, ...]
    buffer_mix: tuple[bool, ...]
    buffer_reuse: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.sample_mix)
        if not (len(self.sample_reuse) == len(self.buffer_mix) == len(self.buffer_reuse) == n):
            raise ValueError("inlet state vectors must all have length n")
        for mix, reuse in ((self.sample_mix, self.sample_reuse),
                           (self.buffer_mix, self.buffer_reuse)):
            if any(m == r for m, r in zip(mix, reuse)):
                raise ValueError("mix and re-use ports of an inlet must be complementary")

    @classmethod
    def from_mix(cls, sample_mix, buffer_mix) -> "InletStates":
        s = tuple(bool(x) for x in sample_mix)
        b = tuple(bool(x) for x in buffer_mix)
        return cls(s, tuple(not x for x in s), b, tuple(not x for x in b))

    @property
    def n(self) -> int:
        return len(self.sample_mix)

    @property
    def sample_units(self) -> int:
        return decode_bits(self.sample_mix)

    @property
    def buffer_units(self) -> int:
        return decode_bits(self.buffer_mix)


@dataclass(frozen=True)
class ThroughputOption:
    a: int
    b: int

    @property
    def rate(self) -> int:
        return self.a + self.b

    @property
    def cf(self) -> Fraction:
        return Fraction(self.a, self.a + self.b)


def unit_counts(cf: Fraction, n: int) -> tuple[int, int]:
    """Sample and buffer units for ``cf``, checked against the inlet ladder.

    Pure buffer and pure sample use one unit through the narrowest inlet.
    """
    cf = Fraction(cf)
    if not 0 <= cf <= 1:
        raise ValueError(f"concentration {cf} outside [0, 1]")
    if cf == 0:
        return 0, 1
    if cf == 1:
        return 1, 0
    sample, buffer = cf.numerator, cf.denominator - cf.numerator
    limit = (1 << n) - 1
    if sample > limit or buffer > limit:
        raise NotRepresentableError(
            f"{cf} needs {sample} sample + {buffer} buffer units; at most {limit} each "
            f"at n={n}, re-approximate at a higher accuracy level")
    return sample, buffer


def to_bits(value: int, n: int) -> tuple[int, ...]:
    """``n``-bit expansion, least significant bit first."""
    if not 0 <= value < (1 << n):
        raise ValueError(f"{value} does not fit in {n} bits")
    return tuple((value >> i) & 1 for i in range(n))


def decode_bits(bits) -> int:
    return sum(1 << i for i, b in enumerate(bits) if b)


def build_tree(sample_bits, buffer_bits) -> MixTree:
    """Scan both bit vectors from the LSB up; sample before buffer per bit."""
    steps = []
    acc_s = acc_t = 0
    for i, (s, b) in enumerate(zip(sample_bits, buffer_bits)):
        if s:
            acc_s += 1 << i
            acc_t += 1 << i
            steps.append(MixStep(SAMPLE, 1 << i, i, acc_s, acc_t))
        if b:
            acc_t += 1 << i
            steps.append(MixStep(BUFFER, 1 << i, i, acc_s, acc_t))
    return MixTree(tuple(steps))


def make_plan(cf: Fraction, n: int, *, require_fsd: bool = True) -> DilutionPlan:
    """Plan for a concentration that is an element of ``FSD_{2^n}``.

    Pass ``require_fsd=False`` to accept any ratio the ladder can dispense.
    Raises :class:`NotRepresentableError` otherwise; callers should
    approximate first.
    """
    n = check_accuracy(n)
    cf = Fraction(cf)
    sample, buffer = unit_counts(cf, n)
    if require_fsd and cf not in fsd_sequence(n):
        raise NotRepresentableError(f"{cf} is not an element of FSD_{1 << n}")
    sbits, bbits = to_bits(sample, n), to_bits(buffer, n)
    return DilutionPlan(cf, sample, buffer, n, sbits, bbits, build_tree(sbits, bbits))


def inlet_states(plan: DilutionPlan) -> InletStates:
    return InletStates.from_mix(plan.sample_bits, plan.buffer_bits)


def throughput_options(cf: Fraction, n: int) -> list[ThroughputOption]:
    """All ``(k*sample, k*buffer)`` scalings with both parts ``<= 2**n - 1``."""
    n = check_accuracy(n)
    cf = Fraction(cf)
    sample, buffer = unit_counts(cf, n)
    limit = (1 << n) - 1
    k_max = limit // max(sample, buffer)
    return [ThroughputOption(k * sample, k * buffer) for k in range(1, k_max + 1)]


def replay_tree(tree: MixTree | list[MixStep]) -> Fraction:
    """Run the mix chain and return the concentration it produces."""
    steps = tree.steps if isinstance(tree, MixTree) else tuple(tree)
    conc = Fraction(0)
    total = 0
    for s in steps:
        if s.volume <= 0:
            raise ValueError(f"mix step with non-positive volume {s.volume}")
        conc = (conc * total + _FLUID_CF[s.fluid] * s.volume) / (total + s.volume)
        total += s.volume
    if total == 0:
        raise ValueError("mix tree dispenses no fluid")
    return conc
