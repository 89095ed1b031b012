"""Compare the binary lattice with the Farey-derived one.

Prints both lattices for n = 3, the sizes for larger n, and checks the
three structural properties on each FSD.
"""
from farey_diluter import bs_sequence, farey_sequence, fsd_sequence, verify_theorems


def show(seq):
    return " ".join(f"{x.numerator}/{x.denominator}" for x in seq)


print("F_5:", show(farey_sequence(5)))
print()
print("BS_3: ", show(bs_sequence(3)))
print("FSD_8:", show(fsd_sequence(3)))
print()

print(f"{'n':>2} {'|BS|':>6} {'|FSD|':>6} {'max gap BS':>12} {'max gap FSD':>12}")
for n in range(2, 9):
    bs, fsd = bs_sequence(n), fsd_sequence(n)
    print(f"{n:>2} {len(bs):>6} {len(fsd):>6} {str(bs.max_gap):>12} {str(fsd.max_gap):>12}")

print()
for line in verify_theorems(fsd_sequence(6)).lines():
    print(line)
