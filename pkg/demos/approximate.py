"""Approximate a handful of target concentrations on both lattices."""
from farey_diluter import compare_lattices, parse_target

targets = ["44.375/64", "69.3%", "0.38", "1/3", "17/40"]

print(f"{'target':>10} {'BS_6':>7} {'BS error':>12} {'FSD_64':>7} {'FSD error':>12}")
for text in targets:
    c = compare_lattices(parse_target(text), 6)
    print(f"{text:>10} {str(c.bs.chosen):>7} {float(c.bs.error):>+12.7f} "
          f"{str(c.fsd.chosen):>7} {float(c.fsd.error):>+12.7f}")

# the fast search never loses to the binary lattice, so the worst case
# over many targets is a fair summary
import random
from fractions import Fraction

rng = random.Random(1)
worst_bs = worst_fsd = Fraction(0)
for _ in range(2000):
    t = Fraction(rng.randint(0, 10**5), 10**5)
    c = compare_lattices(t, 6)
    worst_bs = max(worst_bs, c.bs.abs_error)
    worst_fsd = max(worst_fsd, c.fsd.abs_error)
print(f"\nworst |error| over 2000 targets: BS {float(worst_bs):.6f}, FSD {float(worst_fsd):.6f}")
