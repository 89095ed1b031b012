"""Structural model of the serpentine diluter and its two renderings.

``emit_description`` writes the model as versioned JSON (``parse_description``
reads it back); ``emit_schematic`` draws a stylized SVG with open ports in
green and closed ports in red.  Geometry in the drawing is schematic only.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .hydro import junction_order
from .mixplan import BUFFER, SAMPLE, DilutionPlan, InletStates, inlet_states

__all__ = [
    "NETWORK_SCHEMA",
    "OPEN_COLOR",
    "CLOSED_COLOR",
    "Inlet",
    "NetworkModel",
    "build_network",
    "network_from_states",
    "emit_description",
    "parse_description",
    "emit_schematic",
]

NETWORK_SCHEMA = "farey-diluter/network"
SCHEMA_VERSION = 1
OPEN_COLOR = "#2e9e44"
CLOSED_COLOR = "#d0312d"
FIN_ZONES = "ABCDEF"


@dataclass(frozen=True)
class Inlet:
    fluid: str
    index: int
    width: int  # multiple of the unit width x
    mix_open: bool
    reuse_open: bool

    def __post_init__(self):
        if self.mix_open == self.reuse_open:
            raise ValueError(f"{self.fluid} inlet {self.index}: ports must be complementary")
        if self.width != 1 << self.index:
            raise ValueError(f"{self.fluid} inlet {self.index}: width must be {1 << self.index}x")


@dataclass(frozen=True)
class NetworkModel:
    n: int
    sample_inlets: tuple[Inlet, ...]
    buffer_inlets: tuple[Inlet, ...]
    junctions: tuple[tuple[str, int], ...]
    reuse_channels: tuple[str, str] = ("sample-return", "buffer-return")
    outlet: str = "out"

    def __post_init__(self):
        if len(self.sample_inlets) != self.n or len(self.buffer_inlets) != self.n:
            raise ValueError("network needs exactly n sample and n buffer inlets")
        if sorted(self.junctions) != sorted(junction_order(self.n)):
            raise ValueError("junction list must name every inlet exactly once")
        if set(self.junctions[:2]) != {(SAMPLE, 0), (BUFFER, 0)}:
            raise ValueError("the first sample/buffer pair must form the Y-junction")

    def inlet(self, fluid: str, index: int) -> Inlet:
        return (self.sample_inlets if fluid == SAMPLE else self.buffer_inlets)[index]

    @property
    def states(self) -> InletStates:
        return InletStates.from_mix([i.mix_open for i in self.sample_inlets],
                                    [i.mix_open for i in self.buffer_inlets])

    @property
    def open_mix_ports(self) -> list[tuple[str, int]]:
        return [(i.fluid, i.index) for i in self.sample_inlets + self.buffer_inlets if i.mix_open]


def network_from_states(states: InletStates) -> NetworkModel:
    n = states.n
    sample = tuple(Inlet(SAMPLE, i, 1 << i, states.sample_mix[i], states.sample_reuse[i])
                   for i in range(n))
    buffer = tuple(Inlet(BUFFER, i, 1 << i, states.buffer_mix[i], states.buffer_reuse[i])
                   for i in range(n))
    return NetworkModel(n, sample, buffer, junction_order(n))


def build_network(plan: DilutionPlan) -> NetworkModel:
    return network_from_states(inlet_states(plan))


def emit_description(model: NetworkModel) -> str:
    doc = {
        "schema": NETWORK_SCHEMA,
        "version": SCHEMA_VERSION,
        "n": model.n,
        "inlets": [
            {"fluid": i.fluid, "index": i.index, "width": i.width,
             "mix": "on" if i.mix_open else "off",
             "reuse": "on" if i.reuse_open else "off"}
            for i in model.sample_inlets + model.buffer_inlets
        ],
        "junctions": [{"fluid": f, "index": i} for f, i in model.junctions],
        "reuse_channels": list(model.reuse_channels),
        "outlet": model.outlet,
    }
    return json.dumps(doc, indent=2) + "\n"


def _flag(value: str) -> bool:
    if value not in ("on", "off"):
        raise ValueError(f"port state must be 'on' or 'off', got {value!r}")
    return value == "on"


def parse_description(text: str) -> NetworkModel:
    doc = json.loads(text)
    if doc.get("schema") != NETWORK_SCHEMA:
        raise ValueError(f"not a network description: schema {doc.get('schema')!r}")
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported network schema version {doc.get('version')!r}")
    n = doc["n"]
    inlets = [Inlet(d["fluid"], d["index"], d["width"], _flag(d["mix"]), _flag(d["reuse"]))
              for d in doc["inlets"]]
    by_fluid = {SAMPLE: [], BUFFER: []}
    for inlet in inlets:
        by_fluid[inlet.fluid].append(inlet)
    for fluid, lst in by_fluid.items():
        lst.sort(key=lambda i: i.index)
        if [i.index for i in lst] != list(range(n)):
            raise ValueError(f"{fluid} inlets must be indexed 0..{n - 1}")
    return NetworkModel(
        n,
        tuple(by_fluid[SAMPLE]),
        tuple(by_fluid[BUFFER]),
        tuple((d["fluid"], d["index"]) for d in doc["junctions"]),
        tuple(doc["reuse_channels"]),
        doc["outlet"],
    )


# --- schematic -------------------------------------------------------------

_PITCH = 90.0  # horizontal distance between junctions
_ARM = 70.0  # arm length
_MARGIN = 60.0
_CHANNEL_Y = 170.0
_ZONE_W = 46.0


def _f(x: float) -> str:
    return f"{x:.2f}"


def _arm_width(index: int, n: int) -> float:
    # proportional to the inlet width, widest arm capped at 40 px
    return (1 << index) * min(1.5, 40.0 / (1 << (n - 1)))


def emit_schematic(model: NetworkModel) -> str:
    """Render the network as an SVG 1.1 document.

    Sample arms come in from above, buffer arms from below, each at 120
    degrees to the channel.  Arm stroke widths grow with the inlet width.
    Output depends only on the model, so it is byte-stable.
    """
    junctions = model.junctions
    # the Y pair shares the first junction point
    xs = {}
    x = _MARGIN + _ARM
    for k, key in enumerate(junctions):
        if k >= 2:
            x += _PITCH
        xs[key] = x
    last_x = x
    zones_x0 = last_x + 30.0
    outlet_x = zones_x0 + len(FIN_ZONES) * _ZONE_W + 30.0
    width = outlet_x + _MARGIN
    height = 2 * _CHANNEL_Y
    dx, dy = _ARM * math.cos(math.radians(60)), _ARM * math.sin(math.radians(60))
    reuse_top, reuse_bottom = _CHANNEL_Y - dy - 30.0, _CHANNEL_Y + dy + 30.0

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
        f"<title>Serpentine diluter, n={model.n}</title>",
        '<g id="reuse-channels" stroke="#7a7a7a" stroke-width="3" stroke-dasharray="6 4" fill="none">',
        f'<line id="{model.reuse_channels[0]}" x1="{_f(_MARGIN)}" y1="{_f(reuse_top)}" '
        f'x2="{_f(last_x + 20)}" y2="{_f(reuse_top)}"/>',
        f'<line id="{model.reuse_channels[1]}" x1="{_f(_MARGIN)}" y1="{_f(reuse_bottom)}" '
        f'x2="{_f(last_x + 20)}" y2="{_f(reuse_bottom)}"/>',
        "</g>",
    ]

    # serpentine mixing channel between consecutive junctions
    first_x = xs[junctions[0]]
    pts = [(first_x, _CHANNEL_Y)]
    ordered_x = sorted(set(xs.values()))
    for a, b in zip(ordered_x, ordered_x[1:]):
        step = (b - a) / 4
        pts += [(a + step, _CHANNEL_Y - 12), (a + 2 * step, _CHANNEL_Y + 12),
                (a + 3 * step, _CHANNEL_Y - 12), (b, _CHANNEL_Y)]
    pts.append((outlet_x, _CHANNEL_Y))
    poly = " ".join(f"{_f(px)},{_f(py)}" for px, py in pts)
    out.append(f'<polyline id="mixing-channel" points="{poly}" fill="none" '
               f'stroke="#3a6ea5" stroke-width="6" stroke-linejoin="round"/>')

    out.append('<g id="fin-zones" font-family="sans-serif" font-size="12" text-anchor="middle">')
    for z, label in enumerate(FIN_ZONES):
        zx = zones_x0 + z * _ZONE_W
        out.append(f'<rect x="{_f(zx + 3)}" y="{_f(_CHANNEL_Y - 16)}" width="{_f(_ZONE_W - 6)}" '
                   f'height="32" fill="#dfe9f5" stroke="#3a6ea5"/>')
        out.append(f'<text x="{_f(zx + _ZONE_W / 2)}" y="{_f(_CHANNEL_Y + 4)}">{label}</text>')
    out.append("</g>")

    out.append('<g id="inlets" font-family="sans-serif" font-size="11" text-anchor="middle">')
    for fluid, idx in junctions:
        inlet = model.inlet(fluid, idx)
        jx = xs[(fluid, idx)]
        sign = -1 if fluid == SAMPLE else 1
        ax, ay = jx - dx, _CHANNEL_Y + sign * dy
        reuse_y = reuse_top if fluid == SAMPLE else reuse_bottom
        mix_color = OPEN_COLOR if inlet.mix_open else CLOSED_COLOR
        reuse_color = OPEN_COLOR if inlet.reuse_open else CLOSED_COLOR
        arm_color = "#b5651d" if fluid == SAMPLE else "#5b8def"
        mx, my = jx - dx * 0.35, _CHANNEL_Y + sign * dy * 0.35
        out += [
            f'<g id="{fluid}-{idx}">',
            f'<line class="arm" x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(jx)}" y2="{_f(_CHANNEL_Y)}" '
            f'stroke="{arm_color}" stroke-width="{_f(_arm_width(idx, model.n))}" stroke-linecap="round"/>',
            f'<line class="bypass" x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(ax)}" y2="{_f(reuse_y)}" '
            f'stroke="#7a7a7a" stroke-width="2"/>',
            f'<circle class="mix-port {"open" if inlet.mix_open else "closed"}" '
            f'data-fluid="{fluid}" data-index="{idx}" cx="{_f(mx)}" cy="{_f(my)}" r="6" '
            f'fill="{mix_color}" stroke="#222"/>',
            f'<circle class="reuse-port {"open" if inlet.reuse_open else "closed"}" '
            f'data-fluid="{fluid}" data-index="{idx}" cx="{_f(ax)}" '
            f'cy="{_f((ay + reuse_y) / 2)}" r="5" fill="{reuse_color}" stroke="#222"/>',
            f'<text x="{_f(ax)}" y="{_f(ay + 14 if fluid == BUFFER else ay - 6)}">'
            f'{fluid[0].upper()}{idx} ({inlet.width}x)</text>',
            "</g>",
        ]
    out.append("</g>")
    out += [
        f'<circle id="{model.outlet}" cx="{_f(outlet_x)}" cy="{_f(_CHANNEL_Y)}" r="9" '
        f'fill="#ffffff" stroke="#3a6ea5" stroke-width="3"/>',
        f'<text x="{_f(outlet_x)}" y="{_f(_CHANNEL_Y + 28)}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle">outlet</text>',
        "</svg>",
    ]
    return "\n".join(out) + "\n"
