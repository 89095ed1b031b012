"""How fast can the inlets be driven before laminar flow is at risk?

Sweeps the injection speed for the default water-filled channel and a
wider, deeper variant.
"""
from farey_diluter import WATER_20C, ChannelSpec, validate_laminar

for label, spec in [("default 20um x 25um", ChannelSpec(6)),
                    ("wide 200um x 250um", ChannelSpec(6, height=250e-6, unit_width=200e-6))]:
    print(label)
    for speed in (1e-3, 1e-1, 1.0, 10.0, 100.0):
        v = validate_laminar(ChannelSpec(6, spec.height, spec.unit_width, speed), WATER_20C)
        print(f"  u = {speed:>7g} m/s  max R = {v.max_reynolds:>10.4g}  "
              f"{'laminar' if v.ok else 'NOT laminar'}")
