"""Command-line front end.

Machine-readable output (CSV/JSON tables, reports) goes to stdout or to the
files named on the command line; diagnostics go to stderr through logging.

Settings are resolved as command-line flags, then the config file (``--config``
or ``$FAREY_DILUTER_CONFIG``), then built-in defaults.  The config file holds
``key = value`` lines; ``#`` starts a comment.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from . import serialize
from .approx import compare_lattices, parse_target
from .fsd import DEFAULT_MAX_N, check_accuracy, make_sequence
from .hydro import ChannelSpec, FluidProps, flux_profile, validate_laminar
from .layout import build_network, emit_description, emit_schematic
from .mixplan import NotRepresentableError, inlet_states, make_plan, throughput_options

log = logging.getLogger("farey_diluter")

CONFIG_ENV = "FAREY_DILUTER_CONFIG"


@dataclass(frozen=True)
class Config:
    n: int = 6
    density: float = 998.0
    viscosity: float = 1.002e-3
    height: float = 25e-6
    unit_width: float = 20e-6
    speed: float = 1e-3
    output_dir: str = "."
    format: str = "csv"

    def __post_init__(self):
        check_accuracy(self.n, DEFAULT_MAX_N)
        for name in ("density", "viscosity", "height", "unit_width", "speed"):
            if not getattr(self, name) > 0:
                raise ValueError(f"config value {name} must be positive")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")

    @property
    def fluid(self) -> FluidProps:
        return FluidProps(self.density, self.viscosity)

    def channel(self, n: int | None = None) -> ChannelSpec:
        return ChannelSpec(n or self.n, self.height, self.unit_width, self.speed)

    def path(self, name: str) -> Path:
        p = Path(name)
        return p if p.is_absolute() else Path(self.output_dir) / p


_CASTS = {"n": int, "density": float, "viscosity": float, "height": float,
          "unit_width": float, "speed": float, "output_dir": str, "format": str}


def read_config(path: str | os.PathLike) -> dict:
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in _CASTS:
            raise ValueError(f"{path}:{lineno}: expected 'key = value' with key in {sorted(_CASTS)}")
        values[key] = _CASTS[key](value.strip())
    return values


def load_config(args: argparse.Namespace) -> Config:
    cfg = {}
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV)
    if path:
        cfg.update(read_config(path))
    for key in _CASTS:
        v = getattr(args, key, None)
        if v is not None:
            cfg[key] = v
    return replace(Config(), **cfg)


def _write(text: str, dest: Path | None) -> None:
    if dest is None:
        sys.stdout.write(text)
    else:
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(text)
        log.info("wrote %s", dest)


# --- commands -------------------------------------------------------------

def cmd_gen(args, cfg: Config) -> int:
    seq = make_sequence(args.kind, cfg.n)
    rendered = {"csv": serialize.sequence_csv(seq), "json": serialize.sequence_json(seq)}
    if args.output:
        dest = cfg.path(args.output)
        _write(rendered[cfg.format], dest)
        other = "json" if cfg.format == "csv" else "csv"
        _write(rendered[other], dest.with_suffix("." + other))
    else:
        _write(rendered[cfg.format], None)
    log.info("%s, n=%d: %d elements, max gap %s (%.6g)", seq.kind, cfg.n, len(seq),
             seq.max_gap, float(seq.max_gap))
    return 0


def _approx_text(c) -> str:
    lines = [f"target      {c.fsd.target.original_text} = {serialize.frac(c.fsd.target.value)}"]
    for label, a in (("fsd", c.fsd), ("bs", c.bs)):
        lines.append(f"{label:<4}chosen {serialize.frac(a.chosen):>8}   error {serialize.frac(a.error)}"
                     f" ({float(a.error):+.9f}), |error| {float(a.abs_error):.9f}")
    lines.append(f"fsd error <= bs error: {c.dominates}")
    return "\n".join(lines) + "\n"


def cmd_approx(args, cfg: Config) -> int:
    target = parse_target(args.target)
    comp = compare_lattices(target, cfg.n)
    if args.format == "json":
        text = serialize.dumps({"schema": "farey-diluter/approximation", "version": 1,
                                **serialize.comparison_dict(comp)})
    elif args.format == "csv":
        text = serialize.batch_csv([_batch_row(0, target, cfg.n, comp)])
    else:
        text = _approx_text(comp)
    _write(text, cfg.path(args.output) if args.output else None)
    return 0


def _inlet_table(states) -> str:
    n = states.n
    head = "port          " + " ".join(f"{1 << i:>4}x" for i in range(n))
    rows = [head]
    for label, flags in (("sample mix", states.sample_mix), ("sample reuse", states.sample_reuse),
                         ("buffer mix", states.buffer_mix), ("buffer reuse", states.buffer_reuse)):
        rows.append(f"{label:<14}" + " ".join(f"{'on' if f else 'off':>5}" for f in flags))
    return "\n".join(rows) + "\n"


def cmd_plan(args, cfg: Config) -> int:
    target = parse_target(args.target)
    comp = compare_lattices(target, cfg.n)
    plan = make_plan(comp.fsd.chosen, cfg.n)
    states = inlet_states(plan)
    channel = cfg.channel()
    verdict = validate_laminar(channel, cfg.fluid, states)
    flux = flux_profile(states, channel)
    model = build_network(plan)

    log.info("target %s -> %s (error %s)", target.original_text,
             serialize.frac(plan.cf), serialize.frac(comp.fsd.error))
    log.info("hydrodynamics: %s", verdict.describe())
    if not verdict.ok:
        log.warning("laminar flow is not guaranteed with these settings")

    doc = serialize.plan_document(plan, comp, verdict, flux)
    if args.format == "json":
        _write(doc, None)
    else:
        steps = ", ".join(f"{s.fluid} {s.volume}u" for s in plan.tree.steps)
        _write(f"cf {serialize.frac(plan.cf)}: {plan.sample_units} sample + "
               f"{plan.buffer_units} buffer units\nmix chain: {steps}\n"
               f"laminar: {verdict.describe()}\n" + _inlet_table(states), None)
    if args.output:
        _write(doc, cfg.path(args.output))
    if args.svg:
        _write(emit_schematic(model), cfg.path(args.svg))
    if args.description:
        _write(emit_description(model), cfg.path(args.description))
    return 0


def _batch_row(line: int, target, n: int, comp) -> dict:
    plan = make_plan(comp.fsd.chosen, n)
    return {"line": line, "target": target.original_text, "n": n,
            "bs_choice": serialize.frac(comp.bs.chosen), "bs_error": serialize.frac(comp.bs.error),
            "fsd_choice": serialize.frac(comp.fsd.chosen),
            "fsd_error": serialize.frac(comp.fsd.error),
            "sample_units": plan.sample_units, "buffer_units": plan.buffer_units,
            "dominates": str(comp.dominates).lower()}


def run_batch(lines, n: int) -> tuple[list[dict], list[str]]:
    """Approximate and plan every target line; collect per-line errors."""
    rows, errors = [], []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split(",", 1)[0].strip().strip('"')
        if not text or text.startswith("#") or (lineno == 1 and text.lower() == "target"):
            continue
        try:
            target = parse_target(text)
            rows.append(_batch_row(lineno, target, n, compare_lattices(target, n)))
        except ValueError as exc:
            errors.append(f"line {lineno}: {exc}")
    return rows, errors


def cmd_batch(args, cfg: Config) -> int:
    src = sys.stdin if args.input == "-" else open(args.input, newline="")
    with src:
        rows, errors = run_batch(src.read().splitlines(), cfg.n)
    for e in errors:
        log.error(e)
    _write(serialize.batch_csv(rows), cfg.path(args.output) if args.output else None)
    log.info("%d rows processed, %d errors", len(rows), len(errors))
    return 1 if errors else 0


def cmd_throughput(args, cfg: Config) -> int:
    target = parse_target(args.target)
    options = throughput_options(target.value, cfg.n)
    if args.format == "json":
        text = serialize.dumps({"schema": "farey-diluter/throughput", "version": 1,
                                "cf": serialize.frac(target.value), "n": cfg.n,
                                "options": [{"sample": o.a, "buffer": o.b, "rate": o.rate}
                                            for o in options]})
    else:
        text = serialize.throughput_csv(options)
    _write(text, cfg.path(args.output) if args.output else None)
    return 0


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="accuracy level: inlets per fluid (default 6)")
    common.add_argument("--config", help=f"key = value config file (default ${CONFIG_ENV})")
    common.add_argument("--output", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), help="machine output format")
    common.add_argument("--output-dir", dest="output_dir", help="base directory for outputs")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument("-q", "--quiet", action="store_true", help="errors only")
    phys = argparse.ArgumentParser(add_help=False)
    phys.add_argument("--density", type=float, help="fluid density, kg/m^3")
    phys.add_argument("--viscosity", type=float, help="dynamic viscosity, Pa s")
    phys.add_argument("--height", type=float, help="channel height, m")
    phys.add_argument("--unit-width", dest="unit_width", type=float, help="narrowest inlet width, m")
    phys.add_argument("--speed", type=float, help="injection speed, m/s")

    p = argparse.ArgumentParser(prog="farey-diluter", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a BS, RF or FSD lattice")
    g.add_argument("--kind", choices=("bs", "rf", "fsd"), default="fsd")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("approx", parents=[common], help="approximate a target CF")
    a.add_argument("--target", required=True, help='e.g. "9/13", "44.375/64", "69.3%%", "0.5"')
    a.set_defaults(func=cmd_approx)

    pl = sub.add_parser("plan", parents=[common, phys], help="synthesize a dilution plan")
    pl.add_argument("--target", required=True)
    pl.add_argument("--svg", help="write the network schematic here")
    pl.add_argument("--description", help="write the JSON network description here")
    pl.set_defaults(func=cmd_plan)

    b = sub.add_parser("batch", parents=[common], help="BS vs FSD comparison for a target list")
    b.add_argument("--input", required=True, help="one target per line ('-' for stdin)")
    b.set_defaults(func=cmd_batch)

    t = sub.add_parser("throughput", parents=[common], help="list scaled sample/buffer options")
    t.add_argument("--target", required=True)
    t.set_defaults(func=cmd_throughput)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.ERROR if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr,
                        force=True)
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except (ValueError, OSError) as exc:
        kind = "not representable" if isinstance(exc, NotRepresentableError) else "error"
        log.error("%s: %s", kind, exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
