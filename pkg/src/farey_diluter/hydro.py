"""Hydrodynamic sanity checks for the diluter network.

This is an algebraic checker: Reynolds numbers per channel segment and flux
bookkeeping along the mixing channel.  The characteristic length used for
the Reynolds number is the hydraulic diameter ``2wh/(w+h)`` of the local
rectangular cross-section; the channel length would give meaningless values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .mixplan import BUFFER, SAMPLE, InletStates

__all__ = [
    "LAMINAR_LIMIT",
    "FluidProps",
    "WATER_20C",
    "ChannelSpec",
    "Segment",
    "LaminarVerdict",
    "FluxProfile",
    "junction_order",
    "reynolds",
    "hydraulic_diameter",
    "channel_segments",
    "validate_laminar",
    "flux_profile",
]

LAMINAR_LIMIT = 2000.0


def _positive(**values):
    for name, v in values.items():
        if not v > 0:
            raise ValueError(f"{name} must be positive, got {v!r}")


@dataclass(frozen=True)
class FluidProps:
    density: float  # kg/m^3
    dynamic_viscosity: float  # Pa s

    def __post_init__(self):
        _positive(density=self.density, dynamic_viscosity=self.dynamic_viscosity)


WATER_20C = FluidProps(998.0, 1.002e-3)


def junction_order(n: int) -> tuple[tuple[str, int], ...]:
    """Order in which inlet arms join the mixing channel.

    The first sample/buffer pair forms the Y-junction; the remaining arms
    alternate sample, buffer along the channel in order of width.
    """
    return tuple((fluid, i) for i in range(n) for fluid in (SAMPLE, BUFFER))


@dataclass(frozen=True)
class ChannelSpec:
    n: int
    height: float = 25e-6
    unit_width: float = 20e-6
    speed: float = 1e-3  # injection speed, m/s
    inlet_widths: tuple[float, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        _positive(height=self.height, unit_width=self.unit_width, speed=self.speed)
        if not self.inlet_widths:
            object.__setattr__(self, "inlet_widths",
                               tuple(self.unit_width * (1 << i) for i in range(self.n)))
        w = self.inlet_widths
        if len(w) != self.n or any(b != 2 * a for a, b in zip(w, w[1:])):
            raise ValueError("inlet widths must double from one inlet to the next")

    def scaled(self, speed_factor: float) -> "ChannelSpec":
        return ChannelSpec(self.n, self.height, self.unit_width, self.speed * speed_factor)


def reynolds(fluid: FluidProps, u: float, l: float) -> float:
    """``rho * u * l / mu``."""
    _positive(u=u, l=l)
    return fluid.density * u * l / fluid.dynamic_viscosity


def hydraulic_diameter(width: float, height: float) -> float:
    _positive(width=width, height=height)
    return 2 * width * height / (width + height)


@dataclass(frozen=True)
class Segment:
    name: str
    width: float
    active: bool


def channel_segments(spec: ChannelSpec, states: InletStates | None = None) -> list[Segment]:
    """Inlet arms followed by the mixing-channel segments after each junction.

    A mixing segment is as wide as all arms joined so far so that the speed
    stays constant along the channel.  With ``states`` given, segments that
    carry no fluid are marked inactive.
    """
    order = junction_order(spec.n)
    open_ = {(f, i): True for f, i in order}
    if states is not None:
        if states.n != spec.n:
            raise ValueError(f"states have n={states.n}, channel has n={spec.n}")
        open_ = {(SAMPLE, i): states.sample_mix[i] for i in range(spec.n)}
        open_.update({(BUFFER, i): states.buffer_mix[i] for i in range(spec.n)})
    segs = [Segment(f"{f}[{i}]", spec.inlet_widths[i], open_[(f, i)]) for f, i in order]
    width = 0.0
    carrying = False
    for k, (f, i) in enumerate(order):
        width += spec.inlet_widths[i]
        carrying = carrying or open_[(f, i)]
        if k >= 1:
            segs.append(Segment(f"mix[{k - 1}]", width, carrying))
    return segs


@dataclass(frozen=True)
class LaminarVerdict:
    ok: bool
    max_reynolds: float
    location: str | None
    per_segment: tuple[tuple[str, float], ...]

    def describe(self) -> str:
        if not self.per_segment:
            return "ok: no fluid flows"
        state = "ok" if self.ok else "violation"
        return (f"{state}: max Reynolds {self.max_reynolds:.4g} at {self.location} "
                f"(limit {LAMINAR_LIMIT:g})")


def validate_laminar(spec: ChannelSpec, fluid: FluidProps = WATER_20C,
                     states: InletStates | None = None) -> LaminarVerdict:
    """Reynolds number of every flowing segment; ok iff all stay below 2000."""
    values = []
    for seg in channel_segments(spec, states):
        if seg.active:
            values.append((seg.name, reynolds(fluid, spec.speed,
                                              hydraulic_diameter(seg.width, spec.height))))
    if not values:
        return LaminarVerdict(True, 0.0, None, ())
    loc, worst = max(values, key=lambda kv: kv[1])
    return LaminarVerdict(worst < LAMINAR_LIMIT, worst, loc, tuple(values))


@dataclass(frozen=True)
class FluxProfile:
    """Cumulative flux, in unit fluxes, after each mixing-channel junction.

    One unit flux is what the narrowest inlet delivers: ``speed * x * h``.
    """

    cumulative: tuple[int, ...]
    sample: int
    buffer: int
    unit_flux: float  # m^3/s

    @property
    def total(self) -> int:
        return self.cumulative[-1] if self.cumulative else 0

    @property
    def output_cf(self) -> Fraction | None:
        return Fraction(self.sample, self.total) if self.total else None

    def volumetric(self) -> tuple[float, ...]:
        return tuple(c * self.unit_flux for c in self.cumulative)


def flux_profile(states: InletStates, spec: ChannelSpec) -> FluxProfile:
    if states.n != spec.n:
        raise ValueError(f"states have n={states.n}, channel has n={spec.n}")
    mix = {SAMPLE: states.sample_mix, BUFFER: states.buffer_mix}
    running = 0
    sample = 0
    cumulative = []
    for k, (fluid, i) in enumerate(junction_order(spec.n)):
        if mix[fluid][i]:
            running += 1 << i
            if fluid == SAMPLE:
                sample += 1 << i
        if k >= 1:
            cumulative.append(running)
    assert running == states.sample_units + states.buffer_units, "flux not conserved"
    assert all(a <= b for a, b in zip(cumulative, cumulative[1:]))
    return FluxProfile(tuple(cumulative), sample, running - sample,
                       spec.speed * spec.unit_width * spec.height)
