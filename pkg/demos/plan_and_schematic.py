"""Build the dilution plan for 9/13 and write its network files.

Writes ``diluter_9_13.svg`` and ``diluter_9_13.json`` to the current
directory, then checks the flow stays laminar.
"""
from fractions import Fraction
from pathlib import Path

from farey_diluter import (ChannelSpec, build_network, emit_description, emit_schematic,
                           flux_profile, inlet_states, make_plan, replay_tree,
                           validate_laminar)

plan = make_plan(Fraction(9, 13), 6)
print(f"9/13 = {plan.sample_units} sample units + {plan.buffer_units} buffer units")
for step in plan.tree.steps:
    print(f"  add {step.volume:>2} units of {step.fluid:<6} -> "
          f"{step.accum_sample}/{step.accum_total}")
print("replayed concentration:", replay_tree(plan.tree))

states = inlet_states(plan)
print("sample mix ports:", ["on" if f else "off" for f in states.sample_mix])
print("buffer mix ports:", ["on" if f else "off" for f in states.buffer_mix])

spec = ChannelSpec(6)
print(validate_laminar(spec, states=states).describe())
flux = flux_profile(states, spec)
print("cumulative flux after each junction:", flux.cumulative)

model = build_network(plan)
Path("diluter_9_13.svg").write_text(emit_schematic(model))
Path("diluter_9_13.json").write_text(emit_description(model))
print("wrote diluter_9_13.svg and diluter_9_13.json")
