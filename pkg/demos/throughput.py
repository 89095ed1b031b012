"""Scaled sample/buffer ratios that keep the same concentration."""
from fractions import Fraction

from farey_diluter import throughput_options

for cf in (Fraction(1, 3), Fraction(4, 5), Fraction(9, 13)):
    opts = throughput_options(cf, 6)
    shown = ", ".join(f"({o.a},{o.b},{o.rate})" for o in opts[:5])
    print(f"{cf}: {len(opts)} options; first few {shown}; fastest {opts[-1].rate} units")
